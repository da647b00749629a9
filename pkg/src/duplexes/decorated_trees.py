"""Decorated planar trees: the free two-operation structure.

A decorated tree is a planar tree whose internal vertices carry alternating
``.`` / ``*`` signs by level parity.  Only the sign class of the root is
stored (the tag); every other vertex sign is derived, so an inconsistent
decoration cannot be built.  The single leaf tree is untagged and plays the
role of the generator.

The two products join trees under a fresh root and then contract the root
edges of exactly those arguments whose root already carries the sign being
applied.  Both products are associative, and every tagged tree factors
uniquely into arguments of the opposite class, which is what makes
evaluation into any other two-operation structure well defined
(:func:`eval_hom`).

Expressions (``DuplexExpr``) pair a decorated tree with one generator label
per leaf.  The text grammar accepts chains of a single operation without
parentheses (``e.e.e``) and requires parentheses to mix operations, e.g.
``(e.e.e)*(e.(e*e))``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    BoundExceeded,
    ExprSyntaxError,
    InvalidDegree,
    MixedChainError,
    UnboundGenerator,
    UnknownGenerator,
)
from .planar_trees import LEAF, PlanarTree, graft_contract, leaf_count

DEFAULT_DECORATED_BOUND = 8


class Tag(enum.Enum):
    """Sign class of a decorated tree's root."""

    DOT = "."
    STAR = "*"

    @property
    def other(self) -> "Tag":
        return Tag.STAR if self is Tag.DOT else Tag.DOT


@dataclass(frozen=True)
class DuplexOps:
    """A pair of associative binary operations on some carrier."""

    dot: Callable[[Any, Any], Any]
    star: Callable[[Any, Any], Any]


@dataclass(frozen=True)
class DecoratedTree:
    """A planar tree with derived vertex signs; untagged iff it is the leaf."""

    shape: PlanarTree
    tag: Tag | None

    def __post_init__(self):
        if self.shape.is_leaf != (self.tag is None):
            raise ValueError("exactly the leaf tree carries no tag")

    @property
    def degree(self) -> int:
        return leaf_count(self.shape)


GENERATOR_TREE = DecoratedTree(LEAF, None)


def sign_at_level(root_tag: Tag, level: int) -> Tag:
    """Derived sign of a vertex: the root tag on even levels, flipped on odd."""
    return root_tag if level % 2 == 0 else root_tag.other


def _product(tag: Tag, t1: DecoratedTree, t2: DecoratedTree) -> DecoratedTree:
    contract = tuple(i for i, t in enumerate((t1, t2), 1) if t.tag is tag)
    return DecoratedTree(graft_contract(contract, (t1.shape, t2.shape)), tag)


def tree_dot(t1: DecoratedTree, t2: DecoratedTree) -> DecoratedTree:
    """The ``.`` product: graft and absorb dot-rooted arguments into the root."""
    return _product(Tag.DOT, t1, t2)


def tree_star(t1: DecoratedTree, t2: DecoratedTree) -> DecoratedTree:
    """The ``*`` product: graft and absorb star-rooted arguments into the root."""
    return _product(Tag.STAR, t1, t2)


DECORATED_OPS = DuplexOps(tree_dot, tree_star)


def tree_components(t: DecoratedTree) -> tuple[DecoratedTree, ...]:
    """Unique factorization of a tagged tree over the opposite sign class.

    The root's children, read as stand-alone decorated trees, carry the
    opposite tag (they sat at level 1); folding them back with the root's
    operation reproduces the tree.
    """
    if t.tag is None:
        raise ValueError("the leaf tree has no factorization")
    opposite = t.tag.other
    return tuple(
        DecoratedTree(c, None if c.is_leaf else opposite) for c in t.shape.children
    )


@lru_cache(maxsize=None)
def _all_decorated(n: int) -> tuple[DecoratedTree, ...]:
    from .planar_trees import _all_trees

    if n == 1:
        return (GENERATOR_TREE,)
    return tuple(
        DecoratedTree(shape, tag) for shape in _all_trees(n) for tag in (Tag.DOT, Tag.STAR)
    )


def enumerate_decorated(n: int, bound: int = DEFAULT_DECORATED_BOUND) -> tuple[DecoratedTree, ...]:
    """All decorated trees of degree ``n``: each shape with each tag (2 per
    shape for n >= 2), shapes in canonical order with ``.`` before ``*``."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the enumeration bound {bound}")
    return _all_decorated(n)


@dataclass(frozen=True)
class DuplexExpr:
    """A decorated tree with one generator label per leaf.

    ``alphabet`` is the declared label set; ``None`` leaves the label domain
    open (used when the labels are algebraic objects rather than names).
    """

    tree: DecoratedTree
    labels: tuple[Hashable, ...]
    alphabet: frozenset | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        n = self.tree.degree
        if len(self.labels) != n:
            raise ValueError(f"expected {n} labels, got {len(self.labels)}")
        if self.alphabet is not None:
            object.__setattr__(self, "alphabet", frozenset(self.alphabet))
            stray = [lab for lab in self.labels if lab not in self.alphabet]
            if stray:
                raise ValueError(f"labels {stray!r} not in the declared alphabet")

    @property
    def degree(self) -> int:
        return self.tree.degree

    def __str__(self) -> str:
        return format_expr(self)


def leaf_expr(label: Hashable, alphabet: Iterable | None = None) -> DuplexExpr:
    """Degree-1 expression: the generator ``label``."""
    return DuplexExpr(GENERATOR_TREE, (label,), None if alphabet is None else frozenset(alphabet))


def _combine(tag: Tag, x: DuplexExpr, y: DuplexExpr) -> DuplexExpr:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"cannot combine alphabets {x.alphabet!r} and {y.alphabet!r}")
    return DuplexExpr(_product(tag, x.tree, y.tree), x.labels + y.labels, x.alphabet)


def dot(x: DuplexExpr, y: DuplexExpr) -> DuplexExpr:
    return _combine(Tag.DOT, x, y)


def star(x: DuplexExpr, y: DuplexExpr) -> DuplexExpr:
    return _combine(Tag.STAR, x, y)


EXPR_OPS = DuplexOps(dot, star)


def expr_components(x: DuplexExpr) -> tuple[DuplexExpr, ...]:
    """Factor a composite expression into the components of its root product,
    splitting the label sequence by leaf counts left to right."""
    parts = tree_components(x.tree)
    out: list[DuplexExpr] = []
    offset = 0
    for part in parts:
        n = part.degree
        out.append(DuplexExpr(part, x.labels[offset : offset + n], x.alphabet))
        offset += n
    return tuple(out)


def eval_hom(x: DuplexExpr, assignment: Mapping, ops: DuplexOps):
    """Image of ``x`` under the homomorphism sending each generator to its
    assigned value.

    Well defined because a tagged tree factors uniquely over the opposite
    sign class; the components are evaluated and folded with the root's
    operation.
    """
    if x.tree.tag is None:
        label = x.labels[0]
        try:
            return assignment[label]
        except KeyError:
            raise UnboundGenerator(f"no value assigned to generator {label!r}") from None
    values = [eval_hom(part, assignment, ops) for part in expr_components(x)]
    op = ops.dot if x.tree.tag is Tag.DOT else ops.star
    return reduce(op, values)


# --- text format ------------------------------------------------------------

_IDENT = re.compile(r"[a-z][a-z0-9]*")
_TOKEN = re.compile(r"\s*(?:(?P<ident>[a-z][a-z0-9]*)|(?P<op>[.*])|(?P<open>\()|(?P<close>\)))")


def format_expr(x: DuplexExpr, format_label: Callable[[Any], str] = str) -> str:
    """Render as expression text; parses back to an equal value when the
    labels are grammar identifiers."""
    return _format(x, format_label, top=True)


def _format(x: DuplexExpr, format_label, top: bool) -> str:
    if x.tree.tag is None:
        return format_label(x.labels[0])
    op = x.tree.tag.value
    body = op.join(_format(part, format_label, top=False) for part in expr_components(x))
    return body if top else f"({body})"


def parse_expr(text: str, alphabet: Iterable) -> DuplexExpr:
    """Parse expression text over the given generator alphabet.

    Unparenthesized chains must stick to one operation; ``·`` is accepted
    for ``.``.
    """
    alphabet = frozenset(alphabet)
    tokens = _tokenize(text.replace("·", "."))
    expr, pos = _parse_chain(tokens, 0, alphabet)
    if pos != len(tokens):
        raise ExprSyntaxError(f"unexpected {tokens[pos][0]!r}", tokens[pos][1])
    return expr


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        token = m.group().lstrip()
        tokens.append((token, m.end() - len(token)))
        pos = m.end()
    return tokens


def _parse_chain(tokens, pos, alphabet) -> tuple[DuplexExpr, int]:
    first, pos = _parse_atom(tokens, pos, alphabet)
    parts = [first]
    chain_op: str | None = None
    while pos < len(tokens) and tokens[pos][0] in (".", "*"):
        op, at = tokens[pos]
        if chain_op is None:
            chain_op = op
        elif op != chain_op:
            raise MixedChainError("cannot mix '.' and '*' without parentheses", at)
        nxt, pos = _parse_atom(tokens, pos + 1, alphabet)
        parts.append(nxt)
    combine = dot if chain_op == "." else star
    return reduce(combine, parts), pos


def _parse_atom(tokens, pos, alphabet) -> tuple[DuplexExpr, int]:
    if pos >= len(tokens):
        raise ExprSyntaxError("unexpected end of expression", tokens[-1][1] + 1 if tokens else 0)
    tok, at = tokens[pos]
    if tok == "(":
        inner, pos = _parse_chain(tokens, pos + 1, alphabet)
        if pos >= len(tokens) or tokens[pos][0] != ")":
            raise ExprSyntaxError("missing ')'", at)
        return inner, pos + 1
    if _IDENT.fullmatch(tok):
        if tok not in alphabet:
            raise UnknownGenerator(f"generator {tok!r} not in alphabet", at)
        return leaf_expr(tok, alphabet), pos + 1
    raise ExprSyntaxError(f"unexpected {tok!r}", at)


# --- machine format ---------------------------------------------------------

_TAG_LETTER = {Tag.DOT: "d", Tag.STAR: "s", None: "-"}
_LETTER_TAG = {v: k for k, v in _TAG_LETTER.items()}


def expr_to_machine(x: DuplexExpr, format_label: Callable[[Any], str] = str) -> tuple[str, str, list[str]]:
    """(tree text, tag letter, label list) form; round-trips via
    :func:`expr_from_machine`."""
    from .planar_trees import format_tree

    return format_tree(x.tree.shape), _TAG_LETTER[x.tree.tag], [format_label(l) for l in x.labels]


def expr_from_machine(
    triple: Sequence,
    parse_label: Callable[[str], Hashable] = str,
    alphabet: Iterable | None = None,
) -> DuplexExpr:
    from .planar_trees import parse_tree

    tree_text, tag_letter, labels = triple
    tag = _LETTER_TAG[tag_letter]
    tree = DecoratedTree(parse_tree(tree_text), tag)
    return DuplexExpr(
        tree,
        tuple(parse_label(l) for l in labels),
        None if alphabet is None else frozenset(alphabet),
    )
