"""The free *-algebra on generators z_1, ..., z_n.

Elements are finite sums of free words with Scalar coefficients.  No
commutation relations are applied at this layer; normal ordering lives in
qball.rewrite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Tuple, Union

from .scalars import Scalar


class ContextError(ValueError):
    """Mismatched or invalid algebra contexts."""


class Letter(NamedTuple):
    index: int          # generator index, 1-based
    starred: bool       # True for the adjoint generator z_j*

    def __str__(self) -> str:
        return f"z{self.index}" + ("'" if self.starred else "")


Word = Tuple[Letter, ...]

BALL = "ball"
SPHERE = "sphere"


@dataclass(frozen=True)
class AlgebraContext:
    n: int
    mode: str = BALL

    def __post_init__(self):
        if self.n < 1:
            raise ContextError(f"need n >= 1 generators, got {self.n}")
        if self.mode not in (BALL, SPHERE):
            raise ContextError(f"unknown mode {self.mode!r}")


def _check_word(word: Word, n: int) -> None:
    for letter in word:
        if not 1 <= letter.index <= n:
            raise ContextError(
                f"letter {letter} out of range for n={n}")


class NCPoly:
    """Finite sum of free *-words with exact Scalar coefficients.

    Immutable; the term map stores no zero coefficients, so == is exact
    structural equality of canonical sparse forms.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Word, Scalar] | None = None):
        if n < 1:
            raise ContextError(f"need n >= 1, got {n}")
        clean: Dict[Word, Scalar] = {}
        if terms:
            for word, coeff in terms.items():
                if coeff.is_zero():
                    continue
                word = tuple(word)
                _check_word(word, n)
                clean[word] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NCPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "NCPoly":
        return NCPoly(n)

    @staticmethod
    def one(n: int) -> "NCPoly":
        return NCPoly(n, {(): Scalar.one()})

    @staticmethod
    def from_scalar(n: int, s: Scalar) -> "NCPoly":
        return NCPoly(n, {(): s})

    @staticmethod
    def generator(n: int, index: int, starred: bool = False) -> "NCPoly":
        return NCPoly(n, {(Letter(index, starred),): Scalar.one()})

    @staticmethod
    def from_word(n: int, word: Word, coeff: Scalar | None = None) -> "NCPoly":
        return NCPoly(n, {tuple(word): coeff if coeff is not None else Scalar.one()})

    # -- arithmetic ---------------------------------------------------

    def _require_same_context(self, other: "NCPoly") -> None:
        if self.n != other.n:
            raise ContextError(
                f"mixed contexts: n={self.n} vs n={other.n}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._require_same_context(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            s = out.get(word)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                out.pop(word, None)
            else:
                out[word] = s
        return NCPoly(self.n, out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.n, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        """Free (concatenation) product; bilinear, no relations applied."""
        self._require_same_context(other)
        out: Dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return NCPoly(self.n, out)

    def scale(self, s: Union[Scalar, int]) -> "NCPoly":
        if isinstance(s, int):
            s = Scalar.from_rational(s)
        return NCPoly(self.n, {w: s * c for w, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "NCPoly":
        if exponent < 0:
            # only scalar monomials are invertible in the free algebra
            if list(self.terms.keys()) == [()]:
                inv = NCPoly.from_scalar(self.n, self.terms[()].inverse())
                return inv ** (-exponent)
            raise ContextError("negative powers only allowed for scalars c*q^k")
        out = NCPoly.one(self.n)
        for _ in range(exponent):
            out = out * self
        return out

    def adjoint(self) -> "NCPoly":
        """The involution: reverse words, star letters, conjugate coefficients."""
        out: Dict[Word, Scalar] = {}
        for word, coeff in self.terms.items():
            starred = tuple(
                Letter(l.index, not l.starred) for l in reversed(word))
            out[starred] = coeff.conjugate()
        return NCPoly(self.n, out)

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Length of the longest word (0 for scalars and for 0)."""
        if not self.terms:
            return 0
        return max(len(w) for w in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"NCPoly(n={self.n}, 0)"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            wtxt = "*".join(str(l) for l in word) or "1"
            parts.append(f"{self.terms[word]!r}·{wtxt}")
        return f"NCPoly(n={self.n}, " + " + ".join(parts) + ")"


def poly_mul(a: NCPoly, b: NCPoly) -> NCPoly:
    """Free-algebra product (no relations)."""
    return a * b


def poly_adjoint(a: NCPoly) -> NCPoly:
    """The *-involution."""
    return a.adjoint()
