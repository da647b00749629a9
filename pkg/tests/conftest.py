import itertools

from hypothesis import strategies as st

from duplexes.permutations import Permutation
from duplexes.planar_trees import LEAF, PlanarTree


def compositions(total, parts):
    """Ordered decompositions of ``total`` into ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def permutation_strategy(max_degree=6):
    return (
        st.integers(min_value=1, max_value=max_degree)
        .flatmap(lambda n: st.permutations(list(range(1, n + 1))))
        .map(lambda images: Permutation(tuple(images)))
    )


def planar_tree_strategy(max_leaves=8):
    return st.recursive(
        st.just(LEAF),
        lambda children: st.lists(children, min_size=2, max_size=4).map(
            lambda kids: PlanarTree(tuple(kids))
        ),
        max_leaves=max_leaves,
    )
