"""Exact symbolic engine for the q-deformed unit ball algebra, its sphere
quotient, and the numerical harness that checks the maximum principle on
truncated matrix representations."""

from .scalars import DomainError, GaussianRational, Scalar, scalar_eval
from .algebra import (
    BALL,
    SPHERE,
    AlgebraContext,
    ContextError,
    Letter,
    NCPoly,
    poly_adjoint,
    poly_mul,
)
from .rewrite import (
    canonical_monomials,
    is_canonical_word,
    is_holomorphic,
    normalize,
    normalize_by_steps,
    reduce_step,
)
from .representations import (
    BoundaryConfig,
    FockConfig,
    RepMatrices,
    TruncationError,
    boundary_block_generators,
    boundary_generators,
    certify_compression,
    fock_generators,
    relation_residual,
    rep_apply,
)
from .norms import (
    GapReport,
    MatPoly,
    NormConvergenceError,
    NormEstimate,
    ball_norm,
    boundary_norm,
    circle_grid_max,
    make_schedule,
    matrix_norm_level_k,
    max_principle_report,
    operator_norm,
    pbw_gram_min_singular,
)
from .parsing import ParseError, parse_expression, print_matrix, print_poly

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext", "BALL", "SPHERE", "BoundaryConfig", "ContextError",
    "DomainError", "FockConfig", "GapReport", "GaussianRational", "Letter",
    "MatPoly", "NCPoly", "NormConvergenceError", "NormEstimate", "ParseError",
    "RepMatrices", "Scalar", "TruncationError", "ball_norm",
    "boundary_block_generators", "boundary_generators", "boundary_norm",
    "canonical_monomials", "certify_compression", "circle_grid_max",
    "fock_generators", "is_canonical_word", "is_holomorphic", "make_schedule",
    "matrix_norm_level_k", "max_principle_report", "normalize",
    "normalize_by_steps", "operator_norm", "parse_expression",
    "pbw_gram_min_singular", "poly_adjoint", "poly_mul", "print_matrix",
    "print_poly", "reduce_step", "relation_residual", "rep_apply",
    "scalar_eval",
]
