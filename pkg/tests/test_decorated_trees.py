import itertools
from functools import reduce

import pytest

from conftest import compositions
from duplexes.cubes import CUBE_OPS, CubeVertex, SINGLETON
from duplexes.decorated_trees import (
    DecoratedTree,
    DuplexExpr,
    GENERATOR_TREE,
    Tag,
    dot,
    enumerate_decorated,
    eval_hom,
    expr_components,
    expr_from_machine,
    expr_to_machine,
    format_expr,
    leaf_expr,
    parse_expr,
    sign_at_level,
    star,
    tree_components,
    tree_dot,
    tree_star,
)
from duplexes.errors import (
    AlphabetMismatch,
    BoundExceeded,
    ExprSyntaxError,
    MixedChainError,
    UnboundGenerator,
    UnknownGenerator,
)
from duplexes.permutations import PERM_OPS, Permutation
from duplexes.planar_trees import LEAF, graft, graft_contract, super_catalan

E = leaf_expr("e", {"e"})


def expr(text):
    return parse_expr(text, {"e"})


def decorated(n):
    return enumerate_decorated(n)


# --- the product case table -----------------------------------------------------


def test_products_of_two_leaves():
    two = graft([LEAF, LEAF])
    assert tree_dot(GENERATOR_TREE, GENERATOR_TREE) == DecoratedTree(two, Tag.DOT)
    assert tree_star(GENERATOR_TREE, GENERATOR_TREE) == DecoratedTree(two, Tag.STAR)


def test_products_same_class_merge_roots():
    d2 = tree_dot(GENERATOR_TREE, GENERATOR_TREE)
    s2 = tree_star(GENERATOR_TREE, GENERATOR_TREE)
    # same class: both root edges contract; opposite pairing grafts whole
    assert tree_dot(d2, d2) == DecoratedTree(
        graft_contract({1, 2}, [d2.shape, d2.shape]), Tag.DOT
    )
    assert tree_star(d2, d2) == DecoratedTree(graft([d2.shape, d2.shape]), Tag.STAR)
    assert tree_star(s2, s2) == DecoratedTree(
        graft_contract({1, 2}, [s2.shape, s2.shape]), Tag.STAR
    )
    assert tree_dot(s2, s2) == DecoratedTree(graft([s2.shape, s2.shape]), Tag.DOT)


def test_products_mixed_classes_contract_matching_side():
    d2 = tree_dot(GENERATOR_TREE, GENERATOR_TREE)
    s2 = tree_star(GENERATOR_TREE, GENERATOR_TREE)
    assert tree_star(d2, s2) == DecoratedTree(graft_contract({2}, [d2.shape, s2.shape]), Tag.STAR)
    assert tree_dot(d2, s2) == DecoratedTree(graft_contract({1}, [d2.shape, s2.shape]), Tag.DOT)
    assert tree_star(s2, d2) == DecoratedTree(graft_contract({1}, [s2.shape, d2.shape]), Tag.STAR)
    assert tree_dot(s2, d2) == DecoratedTree(graft_contract({2}, [s2.shape, d2.shape]), Tag.DOT)


def test_dot_chain_gives_corolla():
    x = dot(dot(E, E), E)
    assert x.tree == DecoratedTree(graft([LEAF, LEAF, LEAF]), Tag.DOT)
    assert x == dot(E, dot(E, E))


def test_dot_of_mixed_expressions():
    x = dot(dot(E, E), star(E, E))
    assert x.tree.shape == graft([LEAF, LEAF, graft([LEAF, LEAF])])
    assert x.tree.tag is Tag.DOT


def test_star_corolla():
    x = star(star(E, E), star(E, E))
    assert x.tree == DecoratedTree(graft([LEAF] * 4), Tag.STAR)


def test_displayed_six_leaf_tree():
    x = star(dot(dot(E, E), E), dot(E, star(E, E)))
    u1 = graft([LEAF, LEAF, LEAF])
    u2 = graft([LEAF, graft([LEAF, LEAF])])
    assert x.tree.shape == graft([u1, u2])
    assert x.tree.tag is Tag.STAR
    # root is starred, its children dotted, the deepest vertex starred again
    assert sign_at_level(x.tree.tag, 0) is Tag.STAR
    assert sign_at_level(x.tree.tag, 1) is Tag.DOT
    assert sign_at_level(x.tree.tag, 2) is Tag.STAR
    assert format_expr(x) == "(e.e.e)*(e.(e*e))"


# --- associativity and unique factorization ------------------------------------


def test_associativity_exhaustive():
    for total in range(3, 7):
        for d1, d2, d3 in compositions(total, 3):
            for a in decorated(d1):
                for b in decorated(d2):
                    for c in decorated(d3):
                        assert tree_dot(tree_dot(a, b), c) == tree_dot(a, tree_dot(b, c))
                        assert tree_star(tree_star(a, b), c) == tree_star(a, tree_star(b, c))


def test_components_refold():
    for n in range(2, 7):
        for t in decorated(n):
            parts = tree_components(t)
            assert len(parts) >= 2
            opposite = t.tag.other
            assert all(p.tag in (None, opposite) for p in parts)
            op = tree_dot if t.tag is Tag.DOT else tree_star
            assert reduce(op, parts) == t


def test_free_semigroup_on_opposite_class():
    # folding sequences from {leaf} + dot-class is a bijection onto star-class
    for n in range(2, 8):
        built = {}
        for k in range(2, n + 1):
            for comp in compositions(n, k):
                pools = []
                for m in comp:
                    if m == 1:
                        pools.append((GENERATOR_TREE,))
                    else:
                        pools.append(tuple(t for t in decorated(m) if t.tag is Tag.DOT))
                for seq in itertools.product(*pools):
                    value = reduce(tree_star, seq)
                    assert value not in built, "two sequences folded to one tree"
                    built[value] = seq
        assert set(built) == {t for t in decorated(n) if t.tag is Tag.STAR}


# --- enumeration ------------------------------------------------------------------


def test_enumerate_counts():
    assert decorated(1) == (GENERATOR_TREE,)
    assert len(decorated(2)) == 2
    assert len(decorated(4)) == 22
    for n in range(2, 7):
        assert len(decorated(n)) == 2 * super_catalan(n)


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        enumerate_decorated(9)
    assert len(enumerate_decorated(9, bound=9)) == 2 * super_catalan(9)


# --- expressions: labels, evaluation ------------------------------------------------


def test_expr_label_validation():
    with pytest.raises(ValueError, match="labels"):
        DuplexExpr(GENERATOR_TREE, ("e", "e"))
    with pytest.raises(ValueError, match="alphabet"):
        DuplexExpr(GENERATOR_TREE, ("x",), frozenset({"e"}))


def test_combining_distinct_alphabets_fails():
    with pytest.raises(AlphabetMismatch):
        dot(leaf_expr("a", {"a"}), leaf_expr("b", {"b"}))


def test_labels_concatenate():
    x = star(dot(leaf_expr("a", "ab"), leaf_expr("b", "ab")), leaf_expr("a", "ab"))
    assert x.labels == ("a", "b", "a")


def test_expr_components_split_labels():
    x = star(dot(leaf_expr("a", "ab"), leaf_expr("b", "ab")), leaf_expr("a", "ab"))
    parts = expr_components(x)
    assert [p.labels for p in parts] == [("a", "b"), ("a",)]


def test_eval_hom_examples():
    one = Permutation((1,))
    assert eval_hom(expr("e.e"), {"e": one}, PERM_OPS) == Permutation((1, 2))
    assert eval_hom(expr("e*(e.e)"), {"e": one}, PERM_OPS) == Permutation((3, 1, 2))
    assert eval_hom(expr("e.e"), {"e": SINGLETON}, CUBE_OPS) == CubeVertex((-1,))


def test_eval_hom_unbound():
    with pytest.raises(UnboundGenerator):
        eval_hom(expr("e.e"), {}, PERM_OPS)


def test_eval_hom_is_a_homomorphism():
    from duplexes.binary_trees import BINARY_OPS, SINGLE_NODE

    targets = [
        (Permutation((1,)), PERM_OPS),
        (SINGLE_NODE, BINARY_OPS),
        (SINGLETON, CUBE_OPS),
    ]
    for total in range(2, 6):
        for d1 in range(1, total):
            for a in decorated(d1):
                for b in decorated(total - d1):
                    x = DuplexExpr(a, ("e",) * d1, frozenset("e"))
                    y = DuplexExpr(b, ("e",) * (total - d1), frozenset("e"))
                    for value, ops in targets:
                        env = {"e": value}
                        vx = eval_hom(x, env, ops)
                        vy = eval_hom(y, env, ops)
                        assert eval_hom(dot(x, y), env, ops) == ops.dot(vx, vy)
                        assert eval_hom(star(x, y), env, ops) == ops.star(vx, vy)


def test_generator_closure_reaches_everything():
    layers = {1: {GENERATOR_TREE}}
    for total in range(2, 7):
        layer = set()
        for d1 in range(1, total):
            for a in layers[d1]:
                for b in layers[total - d1]:
                    layer.add(tree_dot(a, b))
                    layer.add(tree_star(a, b))
        layers[total] = layer
        assert layer == set(decorated(total))


def test_labeled_slice_sizes():
    # degree-n expressions over s generators number (decorated trees) * s^n
    for s, alphabet in ((1, "e"), (2, "ab")):
        for n in range(1, 6):
            count = len(decorated(n)) * s**n
            built = {
                DuplexExpr(t, labels, frozenset(alphabet))
                for t in decorated(n)
                for labels in itertools.product(alphabet, repeat=n)
            }
            assert len(built) == count


# --- text and machine formats ---------------------------------------------------------


def test_parse_examples():
    x = expr("(e.e.e)*(e.(e*e))")
    assert x == star(dot(dot(E, E), E), dot(E, star(E, E)))
    assert expr("e") == E
    with pytest.raises(MixedChainError):
        expr("e.e*e")


def test_parse_accepts_middle_dot_and_space():
    assert expr("e·e") == dot(E, E)
    assert expr(" e . e ") == dot(E, E)


def test_parse_errors():
    with pytest.raises(UnknownGenerator):
        expr("x")
    with pytest.raises(ExprSyntaxError):
        expr("e.")
    with pytest.raises(ExprSyntaxError):
        expr("(e.e")
    with pytest.raises(ExprSyntaxError):
        expr("e)e")
    with pytest.raises(ExprSyntaxError):
        expr("E")
    err = None
    try:
        expr("e.e*e")
    except MixedChainError as exc:
        err = exc
    assert err is not None and err.position == 3


def test_format_parse_round_trip():
    for n in range(1, 6):
        for t in decorated(n):
            x = DuplexExpr(t, ("e",) * n, frozenset("e"))
            assert parse_expr(format_expr(x), {"e"}) == x


def test_machine_format_round_trip():
    for n in range(1, 5):
        for t in decorated(n):
            x = DuplexExpr(t, ("e",) * n, frozenset("e"))
            triple = expr_to_machine(x)
            assert expr_from_machine(triple, alphabet={"e"}) == x


def test_machine_format_example():
    x = expr("(e.e.e)*(e.(e*e))")
    assert expr_to_machine(x) == ("((|||)(|(||)))", "s", ["e"] * 6)


def test_decorated_tree_tag_invariant():
    with pytest.raises(ValueError):
        DecoratedTree(LEAF, Tag.DOT)
    with pytest.raises(ValueError):
        DecoratedTree(graft([LEAF, LEAF]), None)
