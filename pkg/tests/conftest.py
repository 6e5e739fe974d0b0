import random
from fractions import Fraction

import pytest

from cabletrench import generators as gen
from cabletrench.graph import RootedGraph, SpanningTree, wedge


def unit_triangle() -> RootedGraph:
    # r=0, a=1, b=2; edge ids 0:(r,a) 1:(a,b) 2:(r,b)
    return RootedGraph(3, [(0, 1, 1, 1), (1, 2, 1, 1), (0, 2, 1, 1)], 0)


def worked_square() -> RootedGraph:
    """r=0, a=1, v=2, b=3 with ids 0:(r,a) 1:(a,v) 2:(v,b) 3:(r,b)."""
    return RootedGraph(
        4,
        [(0, 1, 1, 1), (1, 2, 1, 10), (2, 3, Fraction(3, 2), 1), (0, 3, 1, 1)],
        0,
    )


def path_graph(gammas, taus=None) -> RootedGraph:
    taus = taus if taus is not None else [0] * len(gammas)
    n = len(gammas) + 1
    return RootedGraph(n, [(i, i + 1, g, t) for i, (g, t) in enumerate(zip(gammas, taus))], 0)


def with_star(g: RootedGraph, v: int, h: int):
    """``g`` with a unit star of ``h`` leaves wedged at ``v``."""
    return wedge(g, v, gen.star(h))[0]


def rational(rng: random.Random, hi: int = 12) -> Fraction:
    return Fraction(rng.randint(0, hi), rng.randint(1, 4))


def restrict_cost(g_host: RootedGraph, offset: int, h: RootedGraph, tree: SpanningTree) -> Fraction:
    """Cost, inside ``h`` alone, of the part of ``tree`` lying on ``h``'s edges.

    ``h``'s edges occupy ids ``offset ...`` of the host, as produced by ``wedge``.
    """
    from cabletrench.graph import tree_cost

    local = frozenset(e - offset for e in tree.edges if e >= offset)
    return tree_cost(h, SpanningTree(h, local)).total


@pytest.fixture
def triangle():
    return unit_triangle()


@pytest.fixture
def square():
    return worked_square()
