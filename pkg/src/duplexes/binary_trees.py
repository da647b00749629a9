"""Planar binary trees with the degree-preserving over/under products.

Elements are the trees whose every internal vertex has exactly two
children, graded by internal-vertex count.  The bare leaf ``STUB`` is not
an element; it only pads the recursion (a degree-n element has n+1 stubs).

``over(u, v)`` identifies the root of ``u`` with the leftmost leaf of
``v``; ``under(u, v)`` identifies the root of ``v`` with the rightmost leaf
of ``u``.  Both are associative and satisfy ``over(a, under(b, c)) ==
under(over(a, b), c)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .decorated_trees import DuplexOps
from .errors import BoundExceeded, InvalidDegree, ParseError, StubNotSplittable
from .planar_trees import LEAF, PlanarTree, sort_key

DEFAULT_BINARY_BOUND = 10


@dataclass(frozen=True)
class BinaryTree:
    """A binary tree; both branches are None exactly for the stub."""

    left: BinaryTree | None = None
    right: BinaryTree | None = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a node needs both branches; a stub has neither")

    @property
    def is_stub(self) -> bool:
        return self.left is None

    def __str__(self) -> str:
        return format_binary(self)


STUB = BinaryTree()
SINGLE_NODE = BinaryTree(STUB, STUB)  # the degree-1 element; generates everything


def node(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return BinaryTree(left, right)


def degree(u: BinaryTree) -> int:
    """Number of internal vertices."""
    if u.is_stub:
        return 0
    return 1 + degree(u.left) + degree(u.right)


def over(u: BinaryTree, v: BinaryTree) -> BinaryTree:
    """Graft ``u`` onto the leftmost leaf of ``v``; stubs act neutrally."""
    if v.is_stub:
        return u
    if u.is_stub:
        return v
    return BinaryTree(over(u, v.left), v.right)


def under(u: BinaryTree, v: BinaryTree) -> BinaryTree:
    """Graft ``v`` onto the rightmost leaf of ``u``; stubs act neutrally."""
    if u.is_stub:
        return v
    if v.is_stub:
        return u
    return BinaryTree(u.left, under(u.right, v))


BINARY_OPS = DuplexOps(over, under)


def split(u: BinaryTree) -> tuple[BinaryTree, BinaryTree]:
    """The unique pair of branches under the root."""
    if u.is_stub:
        raise StubNotSplittable("the stub has no root to split")
    return u.left, u.right


def eval_duplexes1(u: BinaryTree, a, ops: DuplexOps):
    """Image of ``u`` under the canonical homomorphism sending the one-node
    tree to ``a``.

    Recursion: a node maps to ``(image(left) . a) * image(right)``, stub
    branches dropping their side.  This is the unique extension whenever the
    target satisfies ``(x.y)*z = x.(y*z)``.
    """
    if u.is_stub:
        raise StubNotSplittable("the stub is not an element and has no image")

    def run(t: BinaryTree):
        if t.is_stub:
            return None
        lv = run(t.left)
        rv = run(t.right)
        mid = a if lv is None else ops.dot(lv, a)
        return mid if rv is None else ops.star(mid, rv)

    return run(u)


@lru_cache(maxsize=None)
def _all_binary(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (STUB,)
    found = [
        BinaryTree(l, r)
        for i in range(n)
        for l in _all_binary(i)
        for r in _all_binary(n - 1 - i)
    ]
    return tuple(sorted(found, key=lambda u: sort_key(to_planar(u))))


def enumerate_binary(n: int, bound: int = DEFAULT_BINARY_BOUND) -> tuple[BinaryTree, ...]:
    """All degree-n binary trees in canonical order; never includes the stub."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the enumeration bound {bound}")
    return _all_binary(n)


def catalan(n: int) -> int:
    """(2n)! / (n! (n+1)!) — the size of the degree-n slice."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def to_planar(u: BinaryTree) -> PlanarTree:
    if u.is_stub:
        return LEAF
    return PlanarTree((to_planar(u.left), to_planar(u.right)))


def from_planar(t: PlanarTree) -> BinaryTree:
    if t.is_leaf:
        return STUB
    if len(t.children) != 2:
        raise ParseError(f"not a binary tree: a vertex has {len(t.children)} children")
    return BinaryTree(from_planar(t.children[0]), from_planar(t.children[1]))


def format_binary(u: BinaryTree) -> str:
    from .planar_trees import format_tree

    return format_tree(to_planar(u))


def parse_binary(text: str) -> BinaryTree:
    from .planar_trees import parse_tree

    return from_planar(parse_tree(text))
