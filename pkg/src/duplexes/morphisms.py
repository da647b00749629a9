"""Canonical homomorphisms between the concrete carriers.

All four maps are determined by where the degree-1 generator goes:

* :func:`alpha` — expressions to permutations, generator to ``(1)``;
* :func:`rho`  — expressions to binary trees, generator to the one-node tree;
* :func:`phi`  — binary trees to cube vertices, generator to ``e``;
* :func:`leaf_sign_vector` — the direct description of ``phi(rho(x))`` read
  off the decorated tree itself.
"""
from __future__ import annotations

from .binary_trees import BINARY_OPS, SINGLE_NODE, BinaryTree, eval_duplexes1
from .cubes import CUBE_OPS, SINGLETON, CubeVertex
from .decorated_trees import DuplexExpr, Tag, eval_hom, sign_at_level
from .errors import DegreeTooSmall
from .permutations import PERM_OPS, Permutation
from .planar_trees import PlanarTree, leaf_count


def _single_generator_assignment(x: DuplexExpr, value) -> dict:
    labels = set(x.labels)
    if len(labels) != 1:
        raise ValueError(f"expected a single-generator expression, found labels {sorted(map(str, labels))}")
    return {labels.pop(): value}


def alpha(x: DuplexExpr) -> Permutation:
    """Evaluate in permutations with the generator at ``(1)`` (``.`` as the
    diagonal block sum, ``*`` as the anti-diagonal one).  Degree preserving."""
    return eval_hom(x, _single_generator_assignment(x, Permutation((1,))), PERM_OPS)


def rho(x: DuplexExpr) -> BinaryTree:
    """Evaluate in binary trees with the generator at the one-node tree;
    surjective degree for degree."""
    return eval_hom(x, _single_generator_assignment(x, SINGLE_NODE), BINARY_OPS)


def phi(u: BinaryTree) -> CubeVertex:
    """Collapse a binary tree to its cube vertex; the quotient map induced by
    the extra mixed-bracketing identity that cube vertices satisfy."""
    return eval_duplexes1(u, SINGLETON, CUBE_OPS)


def leaf_sign_vector(x: DuplexExpr) -> CubeVertex:
    """Signs read between consecutive leaves of the decorated tree.

    Entry i is the derived sign of the vertex where the edges from leaves i
    and i+1 meet (the lower end of the full straight edge rising to leaf
    i+1): ``+1`` for ``*``, ``-1`` for ``.``.  Equals ``phi(rho(x))``.
    """
    n = x.degree
    if n < 2:
        raise DegreeTooSmall("the sign vector needs degree >= 2")
    root_tag = x.tree.tag
    assert root_tag is not None
    boundary_signs: dict[int, Tag] = {}

    def walk(shape: PlanarTree, level: int, first_leaf: int) -> None:
        sign = sign_at_level(root_tag, level)
        position = first_leaf
        for index, child in enumerate(shape.children):
            if index > 0:
                boundary_signs[position] = sign
            if not child.is_leaf:
                walk(child, level + 1, position)
            position += leaf_count(child)

    walk(x.tree.shape, 0, 1)
    return CubeVertex(tuple(1 if boundary_signs[i] is Tag.STAR else -1 for i in range(2, n + 1)))
