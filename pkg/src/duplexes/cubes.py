"""Cube vertices: sign sequences under two concatenation products.

A degree-n element is a sequence of n-1 signs from {-1, +1}; the degree-1
element is the empty sequence.  Each product concatenates the operands
around a separator sign: ``-1`` for ``.`` and ``+1`` for ``*``.  Both
products are associative and satisfy both mixed-bracketing identities,
so any word in the two operations evaluates independently of
parenthesization.

Text format: ``e`` for degree 1, otherwise ``<-1,+1,...>``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .decorated_trees import DuplexOps, Tag
from .errors import BoundExceeded, InvalidDegree, ParseError

DEFAULT_CUBE_BOUND = 16


@dataclass(frozen=True)
class CubeVertex:
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        for s in self.signs:
            if s not in (-1, 1):
                raise ValueError(f"signs must be -1 or +1, got {s}")

    @property
    def degree(self) -> int:
        return len(self.signs) + 1

    def __str__(self) -> str:
        return format_cube(self)


SINGLETON = CubeVertex()

_SEPARATOR = {Tag.DOT: -1, Tag.STAR: 1}


def cube_product(a: CubeVertex, b: CubeVertex, op: Tag) -> CubeVertex:
    """Concatenate with a ``-1`` (dot) or ``+1`` (star) separator."""
    return CubeVertex(a.signs + (_SEPARATOR[op],) + b.signs)


def cube_dot(a: CubeVertex, b: CubeVertex) -> CubeVertex:
    return cube_product(a, b, Tag.DOT)


def cube_star(a: CubeVertex, b: CubeVertex) -> CubeVertex:
    return cube_product(a, b, Tag.STAR)


CUBE_OPS = DuplexOps(cube_dot, cube_star)


def cube_word(a: CubeVertex) -> tuple[Tag, ...]:
    """The operation word spelling ``a`` from degree-1 elements: position i
    reads dot for sign -1 and star for +1."""
    return tuple(Tag.DOT if s == -1 else Tag.STAR for s in a.signs)


def word_to_cube(word: Sequence[Tag]) -> CubeVertex:
    """Inverse of :func:`cube_word`; the common value of every bracketing of
    the word product."""
    return CubeVertex(tuple(_SEPARATOR[op] for op in word))


def enumerate_cubes(n: int, bound: int = DEFAULT_CUBE_BOUND) -> tuple[CubeVertex, ...]:
    """All 2**(n-1) degree-n vertices, in lexicographic sign order."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the enumeration bound {bound}")
    return tuple(CubeVertex(signs) for signs in itertools.product((-1, 1), repeat=n - 1))


def format_cube(a: CubeVertex) -> str:
    if not a.signs:
        return "e"
    return "<" + ",".join("+1" if s == 1 else "-1" for s in a.signs) + ">"


_CUBE_TEXT = re.compile(r"<\s*[+-]?1\s*(?:,\s*[+-]?1\s*)*>")


def parse_cube(text: str) -> CubeVertex:
    stripped = text.strip()
    if stripped == "e":
        return SINGLETON
    if not _CUBE_TEXT.fullmatch(stripped):
        raise ParseError(f"expected 'e' or a sign list like '<-1,+1>', got {text!r}")
    return CubeVertex(tuple(int(part) for part in stripped[1:-1].split(",")))
