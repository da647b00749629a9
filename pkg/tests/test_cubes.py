import itertools

import pytest

from conftest import compositions
from duplexes.cubes import (
    CUBE_OPS,
    SINGLETON,
    CubeVertex,
    cube_dot,
    cube_product,
    cube_star,
    cube_word,
    enumerate_cubes,
    format_cube,
    parse_cube,
    word_to_cube,
)
from duplexes.decorated_trees import Tag
from duplexes.errors import BoundExceeded, InvalidDegree, ParseError

E = SINGLETON


def V(*signs):
    return CubeVertex(signs)


def test_all_eight_defining_products():
    a = V(1, -1)
    b = V(-1)
    assert cube_dot(E, E) == V(-1)
    assert cube_star(E, E) == V(1)
    assert cube_dot(E, a) == V(-1, 1, -1)
    assert cube_dot(a, E) == V(1, -1, -1)
    assert cube_star(E, a) == V(1, 1, -1)
    assert cube_star(a, E) == V(1, -1, 1)
    assert cube_dot(a, b) == V(1, -1, -1, -1)
    assert cube_star(a, b) == V(1, -1, 1, -1)


def test_cube_product_dispatch():
    assert cube_product(E, E, Tag.DOT) == V(-1)
    assert cube_product(V(-1), V(1), Tag.DOT) == V(-1, -1, 1)
    assert cube_product(E, E, Tag.STAR) == V(1)


def test_degrees_add():
    assert cube_dot(V(1, 1), V(-1)).degree == 5
    assert E.degree == 1


def test_sign_validation():
    with pytest.raises(ValueError):
        CubeVertex((0,))


def test_words():
    assert cube_word(V(-1, 1)) == (Tag.DOT, Tag.STAR)
    assert cube_word(E) == ()
    assert word_to_cube((Tag.STAR, Tag.STAR, Tag.DOT)) == V(1, 1, -1)
    for n in range(1, 6):
        for a in enumerate_cubes(n):
            assert word_to_cube(cube_word(a)) == a


def _bracketing_values(word):
    # evaluate e op1 e op2 ... under every bracketing
    if not word:
        return {E}
    values = set()
    for i, op in enumerate(word):
        for left in _bracketing_values(word[:i]):
            for right in _bracketing_values(word[i + 1 :]):
                values.add(cube_product(left, right, op))
    return values


def test_bracketing_independence():
    for length in range(1, 6):
        for word in itertools.product((Tag.DOT, Tag.STAR), repeat=length):
            assert _bracketing_values(word) == {word_to_cube(word)}


def test_both_mixed_identities_small():
    for total in range(3, 7):
        for d1, d2, d3 in compositions(total, 3):
            for a in enumerate_cubes(d1):
                for b in enumerate_cubes(d2):
                    for c in enumerate_cubes(d3):
                        assert cube_star(cube_dot(a, b), c) == cube_dot(a, cube_star(b, c))
                        assert cube_dot(cube_star(a, b), c) == cube_star(a, cube_dot(b, c))
                        assert cube_dot(cube_dot(a, b), c) == cube_dot(a, cube_dot(b, c))
                        assert cube_star(cube_star(a, b), c) == cube_star(a, cube_star(b, c))


def test_generation_counts():
    layers = {1: {E}}
    for total in range(2, 8):
        layer = set()
        for d1 in range(1, total):
            for x in layers[d1]:
                for y in layers[total - d1]:
                    layer.add(CUBE_OPS.dot(x, y))
                    layer.add(CUBE_OPS.star(x, y))
        layers[total] = layer
        assert layer == set(enumerate_cubes(total))
        assert len(layer) == 2 ** (total - 1)


def test_enumerate():
    assert enumerate_cubes(1) == (E,)
    assert enumerate_cubes(2) == (V(-1), V(1))
    assert len(enumerate_cubes(6)) == 32
    with pytest.raises(InvalidDegree):
        enumerate_cubes(0)
    with pytest.raises(BoundExceeded):
        enumerate_cubes(17)


def test_text_format():
    assert format_cube(E) == "e"
    assert format_cube(V(-1, 1)) == "<-1,+1>"
    assert parse_cube("e") == E
    assert parse_cube("<-1,+1>") == V(-1, 1)
    assert parse_cube("<1,-1>") == V(1, -1)
    for n in range(1, 5):
        for a in enumerate_cubes(n):
            assert parse_cube(format_cube(a)) == a
    with pytest.raises(ParseError):
        parse_cube("<-1,0>")
    with pytest.raises(ParseError):
        parse_cube("1,-1")
