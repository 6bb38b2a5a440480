"""Normal ordering for the twisted commutation relations.

The oriented rules push starred letters to the right and sort each block by
ascending generator index:

  R1: z_k z_j       -> q^-1 z_j z_k                       (k > j)
  R2: z_k* z_j*     -> q    z_j* z_k*                     (k > j)
  R3: z_j* z_k      -> q    z_k z_j*                      (j != k)
  R4: z_j* z_j      -> q^2 z_j z_j* + (1-q^2)(1 - sum_{k>j} z_k z_k*)

In sphere mode, canonical words with both a z_1 and a z_1* additionally lose
one such pair (rule R5) by commuting a z_1* leftward and substituting
z_1 z_1* = 1 - sum_{k>=2} z_k z_k*, so sphere normal forms satisfy
alpha_1 * beta_1 = 0.
"""

from __future__ import annotations

import random
from typing import Dict, Iterator, List, Optional, Tuple

from .algebra import BALL, SPHERE, AlgebraContext, Letter, NCPoly, Word
from .scalars import Scalar

Expansion = List[Tuple[Scalar, Word]]

_Q = Scalar.q
_ONE = Scalar.one


def find_violation(word: Word) -> Optional[int]:
    """Leftmost position with an adjacent-pair violation, or None."""
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a.starred and not b.starred:
            return i
        if a.starred == b.starred and a.index > b.index:
            return i
    return None


def _adjacent_violations(word: Word) -> List[int]:
    return [i for i in range(len(word) - 1)
            if _pair_rule(word[i], word[i + 1]) is not None]


def _pair_rule(a: Letter, b: Letter) -> Optional[str]:
    if a.starred and not b.starred:
        return "R4" if a.index == b.index else "R3"
    if not a.starred and not b.starred and a.index > b.index:
        return "R1"
    if a.starred and b.starred and a.index > b.index:
        return "R2"
    return None


def _expand_pair(a: Letter, b: Letter, n: int) -> Expansion:
    """Replacement terms for the two-letter window (a, b)."""
    rule = _pair_rule(a, b)
    if rule == "R1":
        return [(_Q(-1), (b, a))]
    if rule == "R2":
        return [(_Q(1), (b, a))]
    if rule == "R3":
        return [(_Q(1), (b, a))]
    if rule == "R4":
        j = a.index
        out: Expansion = [
            (_Q(2), (Letter(j, False), Letter(j, True))),
            (Scalar.one_minus_q2(), ()),
        ]
        for k in range(j + 1, n + 1):
            out.append((-Scalar.one_minus_q2(),
                        (Letter(k, False), Letter(k, True))))
        return out
    raise ValueError("no rule applies to this pair")


def apply_pair_rule(word: Word, pos: int, n: int) -> Expansion:
    """Apply the adjacent rule at pos, returning whole-word replacements."""
    prefix, suffix = word[:pos], word[pos + 2:]
    return [(c, prefix + mid + suffix)
            for c, mid in _expand_pair(word[pos], word[pos + 1], n)]


def word_exponents(word: Word, n: int) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(alpha, beta) multi-indices if the word is canonically ordered."""
    if find_violation(word) is not None:
        return None
    alpha = [0] * n
    beta = [0] * n
    for letter in word:
        (beta if letter.starred else alpha)[letter.index - 1] += 1
    return tuple(alpha), tuple(beta)


def exponents_word(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Word:
    word: List[Letter] = []
    for j, e in enumerate(alpha, start=1):
        word.extend([Letter(j, False)] * e)
    for j, e in enumerate(beta, start=1):
        word.extend([Letter(j, True)] * e)
    return tuple(word)


def r5_applicable(word: Word, ctx: AlgebraContext) -> bool:
    if ctx.mode != SPHERE:
        return False
    ab = word_exponents(word, ctx.n)
    if ab is None:
        return False
    alpha, beta = ab
    return alpha[0] >= 1 and beta[0] >= 1


def apply_r5(word: Word, n: int) -> Expansion:
    """Eliminate one z_1/z_1* pair from a canonical word (sphere relation)."""
    alpha, beta = word_exponents(word, n)
    shift = -sum(alpha[1:])
    head = (Letter(1, False),) * (alpha[0] - 1)
    tail_unstarred = exponents_word((0,) + alpha[1:], (0,) * n)
    tail_starred = exponents_word((0,) * n, (beta[0] - 1,) + beta[1:])
    tail = tail_unstarred + tail_starred
    out: Expansion = [(_Q(shift), head + tail)]
    for k in range(2, n + 1):
        pair = (Letter(k, False), Letter(k, True))
        out.append((-_Q(shift), head + pair + tail))
    return out


def is_canonical_word(word: Word, ctx: AlgebraContext) -> bool:
    if find_violation(word) is not None:
        return False
    return not r5_applicable(word, ctx)


# -- full normalization (leftmost, memoized) --------------------------

_NF_CACHE: Dict[Tuple[int, str, Word], Dict[Word, Scalar]] = {}


def _normalize_word(word: Word, ctx: AlgebraContext) -> Dict[Word, Scalar]:
    key = (ctx.n, ctx.mode, word)
    cached = _NF_CACHE.get(key)
    if cached is not None:
        return cached
    pos = find_violation(word)
    if pos is not None:
        expansion = apply_pair_rule(word, pos, ctx.n)
    elif r5_applicable(word, ctx):
        expansion = apply_r5(word, ctx.n)
    else:
        result = {word: Scalar.one()}
        _NF_CACHE[key] = result
        return result
    acc: Dict[Word, Scalar] = {}
    for coeff, replacement in expansion:
        for w, c in _normalize_word(replacement, ctx).items():
            s = acc.get(w)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = s
    _NF_CACHE[key] = acc
    return acc


def normalize(p: NCPoly, ctx: AlgebraContext) -> NCPoly:
    """Unique normal form: every word canonical for the given context."""
    if p.n != ctx.n:
        raise ValueError(f"polynomial has n={p.n}, context has n={ctx.n}")
    acc: Dict[Word, Scalar] = {}
    for word, coeff in p.terms.items():
        for w, c in _normalize_word(word, ctx).items():
            s = acc.get(w)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = s
    return NCPoly(ctx.n, acc)


# -- single-step reduction with pluggable strategy --------------------

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"
RANDOM = "random"

# A rule instance is (word, pos, kind): kind "pair" carries the window
# position, kind "r5" rewrites the whole word.
Instance = Tuple[Word, Optional[int], str]


def _instances(p: NCPoly, ctx: AlgebraContext) -> List[Instance]:
    out: List[Instance] = []
    for word in sorted(p.terms, key=lambda w: (len(w), w)):
        for pos in _adjacent_violations(word):
            out.append((word, pos, "pair"))
        if r5_applicable(word, ctx):
            out.append((word, None, "r5"))
    return out


def reduce_step(p: NCPoly, ctx: AlgebraContext,
                strategy: str = LEFTMOST,
                rng: Optional[random.Random] = None) -> NCPoly:
    """Apply exactly one rule instance to one word; fixed points unchanged."""
    if p.n != ctx.n:
        raise ValueError(f"polynomial has n={p.n}, context has n={ctx.n}")
    candidates = _instances(p, ctx)
    if not candidates:
        return p
    if strategy == LEFTMOST:
        word, pos, kind = candidates[0]
    elif strategy == RIGHTMOST:
        word, pos, kind = candidates[-1]
    elif strategy == RANDOM:
        if rng is None:
            raise ValueError("random strategy needs an rng")
        word, pos, kind = rng.choice(candidates)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    coeff = p.terms[word]
    if kind == "pair":
        expansion = apply_pair_rule(word, pos, ctx.n)
    else:
        expansion = apply_r5(word, ctx.n)
    delta: Dict[Word, Scalar] = {word: -coeff}
    for c, w in expansion:
        s = delta.get(w)
        s = coeff * c if s is None else s + coeff * c
        if s.is_zero():
            delta.pop(w, None)
        else:
            delta[w] = s
    return p + NCPoly(ctx.n, delta)


def normalize_by_steps(p: NCPoly, ctx: AlgebraContext,
                       strategy: str = LEFTMOST,
                       seed: Optional[int] = None,
                       max_steps: int = 200000) -> NCPoly:
    """Drive reduce_step to a fixed point (used by confluence fuzzing)."""
    rng = random.Random(seed) if strategy == RANDOM else None
    current = p
    for _ in range(max_steps):
        nxt = reduce_step(current, ctx, strategy, rng)
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError(f"no fixed point within {max_steps} steps")


# -- misc -------------------------------------------------------------

def is_holomorphic(p: NCPoly) -> bool:
    """True iff no word of p contains a starred letter."""
    return all(not letter.starred for word in p.terms for letter in word)


def canonical_monomials(n: int, max_degree: int,
                        ctx: Optional[AlgebraContext] = None) -> Iterator[Word]:
    """All canonical words of total degree <= max_degree, graded order."""
    if ctx is None:
        ctx = AlgebraContext(n, BALL)

    def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for degree in range(max_degree + 1):
        for da in range(degree + 1):
            for alpha in compositions(da, n):
                for beta in compositions(degree - da, n):
                    if ctx.mode == SPHERE and alpha[0] * beta[0] != 0:
                        continue
                    yield exponents_word(alpha, beta)
