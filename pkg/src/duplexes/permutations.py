"""Permutations under the two block-sum products and their factorizations.

A permutation of degree n is stored in one-line notation, the tuple
``(f(1), ..., f(n))``.  Besides group composition, two associative
degree-adding products are defined:

* ``sharp(f, g)`` places ``g``'s block above ``f``'s along the diagonal:
  the first ``n`` values are ``f``'s, the rest are ``g``'s shifted up by n.
* ``natural(f, g)`` places the blocks along the anti-diagonal: ``f``'s
  values are shifted up by ``g``'s degree and ``g``'s values close the tail.

Both products admit unique factorization into indecomposables, and the two
factorizations interleave into a unique expression tree over the doubly
indecomposable permutations (:func:`duplex_factorize`).
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import lru_cache, reduce

from .decorated_trees import DuplexExpr, DuplexOps, dot, eval_hom, leaf_expr, star
from .errors import BoundExceeded, DegreeMismatch, InvalidDegree, ParseError

DEFAULT_PERMUTATION_BOUND = 8


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} in one-line notation; degree n >= 1."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        _validate_images(self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return format_permutation(self)


def _validate_images(images: tuple[int, ...]) -> None:
    n = len(images)
    if n < 1:
        raise ValueError("a permutation has degree >= 1; the empty sequence is not one")
    seen = set()
    for v in images:
        if v in seen:
            raise ValueError(f"not a permutation of 1..{n}: value {v} appears more than once")
        seen.add(v)
    if seen != set(range(1, n + 1)):
        missing = min(set(range(1, n + 1)) - seen)
        stray = sorted(seen - set(range(1, n + 1)))
        detail = f"value {missing} is missing"
        if stray:
            detail += f" (found out-of-range {stray[0]})"
        raise ValueError(f"not a permutation of 1..{n}: {detail}")


class IndecKind(enum.Enum):
    """Which product a permutation should be indecomposable for."""

    SHARP = "sharp"
    NATURAL = "natural"
    S2 = "s2"  # indecomposable for both products at once


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Group composition: ``compose(f, g)(i) = f(g(i))``."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"cannot compose degrees {f.degree} and {g.degree}")
    return Permutation(tuple(f.images[j - 1] for j in g.images))


def sharp(f: Permutation, g: Permutation) -> Permutation:
    """Diagonal block sum.

    >>> str(sharp(Permutation((3, 1, 2)), Permutation((3, 2, 1))))
    '(3,1,2,6,5,4)'
    """
    n = f.degree
    return Permutation(f.images + tuple(n + v for v in g.images))


def natural(f: Permutation, g: Permutation) -> Permutation:
    """Anti-diagonal block sum.

    >>> str(natural(Permutation((3, 1, 2)), Permutation((3, 2, 1))))
    '(6,4,5,3,2,1)'
    """
    m = g.degree
    return Permutation(tuple(m + v for v in f.images) + g.images)


# convention used everywhere: sharp plays ".", natural plays "*"
PERM_OPS = DuplexOps(sharp, natural)


def omega(n: int) -> Permutation:
    """The order-reversing permutation ``i -> n + 1 - i``."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def xi(f: Permutation) -> Permutation:
    """Compose with the order reversal on the left; an involution that swaps
    the roles of the two block sums."""
    n = f.degree
    return Permutation(tuple(n + 1 - v for v in f.images))


def delta(f: Permutation) -> int:
    """Smallest i such that f maps {1..i} into itself (i = n always works)."""
    top = 0
    for i, v in enumerate(f.images, 1):
        top = max(top, v)
        if top == i:
            return i
    raise AssertionError("unreachable: i = n always satisfies the condition")


def sharp_factorize(f: Permutation) -> tuple[Permutation, ...]:
    """The unique factorization of ``f`` under the diagonal block sum.

    Splits at every prefix {1..i} that f maps into itself; each block,
    shifted back down, is indecomposable, and re-multiplying with
    :func:`sharp` restores ``f``.

    >>> [str(g) for g in sharp_factorize(Permutation((3, 1, 2, 6, 5, 4)))]
    ['(3,1,2)', '(3,2,1)']
    """
    factors: list[Permutation] = []
    start = 0
    top = 0
    for i, v in enumerate(f.images, 1):
        top = max(top, v)
        if top == i:
            factors.append(Permutation(tuple(v - start for v in f.images[start:i])))
            start = i
    return tuple(factors)


def natural_factorize(f: Permutation) -> tuple[Permutation, ...]:
    """Unique factorization under the anti-diagonal block sum, obtained by
    transporting the sharp factorization through :func:`xi`."""
    return tuple(xi(g) for g in sharp_factorize(xi(f)))


def is_indecomposable(f: Permutation, kind: IndecKind) -> bool:
    """Whether ``f`` admits no nontrivial factorization of the given kind.

    Degree 1 is indecomposable of every kind.  Uses running prefix extrema,
    so each test is linear in the degree.
    """
    if kind is IndecKind.SHARP:
        return _sharp_indecomposable(f.images)
    if kind is IndecKind.NATURAL:
        return _natural_indecomposable(f.images)
    return _sharp_indecomposable(f.images) and _natural_indecomposable(f.images)


def _sharp_indecomposable(images: tuple[int, ...]) -> bool:
    # f({1..i}) inside {1..i} for i < n <=> running max equals i
    top = 0
    for i, v in enumerate(images[:-1], 1):
        top = max(top, v)
        if top == i:
            return False
    return True


def _natural_indecomposable(images: tuple[int, ...]) -> bool:
    # f({1..i}) inside {n-i+1..n} for i < n <=> running min exceeds n - i
    n = len(images)
    low = n + 1
    for i, v in enumerate(images[:-1], 1):
        low = min(low, v)
        if low > n - i:
            return False
    return True


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def enumerate_permutations(n: int, bound: int = DEFAULT_PERMUTATION_BOUND) -> tuple[Permutation, ...]:
    """All degree-n permutations in lexicographic one-line order."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the enumeration bound {bound}")
    return _all_permutations(n)


def enumerate_indecomposable(
    n: int, kind: IndecKind, bound: int = DEFAULT_PERMUTATION_BOUND
) -> tuple[Permutation, ...]:
    """All degree-n indecomposables of the given kind, in lexicographic order."""
    return _indecomposables(n, kind, bound)


@lru_cache(maxsize=None)
def _indecomposables(n: int, kind: IndecKind, bound: int) -> tuple[Permutation, ...]:
    return tuple(f for f in enumerate_permutations(n, bound) if is_indecomposable(f, kind))


def duplex_factorize(f: Permutation) -> DuplexExpr:
    """Normal form of ``f`` as an expression over the doubly indecomposables.

    A doubly indecomposable permutation is a leaf.  Otherwise exactly one of
    the two products factors ``f`` nontrivially; the full factorization on
    that side is taken and each factor is factored recursively, the results
    joined with ``.`` for the diagonal product and ``*`` for the
    anti-diagonal one.  :func:`multiply_out` inverts this.
    """
    if is_indecomposable(f, IndecKind.S2):
        return leaf_expr(f)
    if not _sharp_indecomposable(f.images):
        return reduce(dot, (duplex_factorize(g) for g in sharp_factorize(f)))
    return reduce(star, (duplex_factorize(g) for g in natural_factorize(f)))


def multiply_out(x: DuplexExpr) -> Permutation:
    """Evaluate an expression whose labels are permutations, using the
    diagonal product for ``.`` and the anti-diagonal one for ``*``."""
    return eval_hom(x, {lab: lab for lab in set(x.labels)}, PERM_OPS)


def format_permutation(f: Permutation) -> str:
    return "(" + ",".join(str(v) for v in f.images) + ")"


_PERM_TEXT = re.compile(r"\(\s*\d+\s*(?:,\s*\d+\s*)*\)")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"(3,1,2)"``; whitespace is insignificant.  Rejects sequences
    that are not bijections, naming the repeated or missing value."""
    stripped = text.strip()
    if not _PERM_TEXT.fullmatch(stripped):
        raise ParseError(f"expected a parenthesized list of integers, got {text!r}")
    values = tuple(int(v) for v in stripped[1:-1].split(","))
    try:
        return Permutation(values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
