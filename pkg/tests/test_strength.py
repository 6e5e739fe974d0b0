import random
from fractions import Fraction

import pytest

from cabletrench import generators as gen
from cabletrench.cycle import cycle_ctp, cycle_wedge_ctp, switch_margin
from cabletrench.graph import GraphError, RootedGraph, SpanningTree, root_path
from cabletrench.oracle import brute_force_ctp
from cabletrench.strength import (
    INF,
    edge_strength,
    strength_from_margin,
    vertex_strength,
    wedge_decision,
)

from conftest import with_star


def sweep_strength(g, v, e1, e2, limit=60):
    """Largest h whose wedged margin keeps e1, by direct evaluation; None if never broken."""
    for h in range(limit + 1):
        if switch_margin(g, v, e1, e2, h) < 0:
            return h - 1
    return None


@pytest.mark.parametrize(
    "delta, slope, want",
    [(Fraction(17, 2), Fraction(-1, 2), 17), (5, -2, 2), (4, -2, 2), (0, -1, 0), (3, 0, INF), (3, 1, INF)],
)
def test_strength_from_margin(delta, slope, want):
    assert strength_from_margin(Fraction(delta), Fraction(slope)) == want


def test_worked_square(square):
    rep = vertex_strength(square, 2)
    assert rep.internal_edge == 1
    assert rep.per_edge == {2: 17, 3: 22}
    assert rep.vertex_strength == 17
    assert rep.breaking_edge == 2
    assert square.edges[2].u == 2 and square.edges[2].v == 3  # the edge (v, b)
    assert wedge_decision(rep, 17) == 1
    assert wedge_decision(rep, 18) == 2


def test_per_edge_matches_sweep():
    rng = random.Random(2)
    checked = 0
    for _ in range(80):
        g = gen.cycle(rng.randint(3, 9), seed=rng.randrange(10**9), shuffle=True)
        e1 = next(iter(cycle_ctp(g).deleted))
        for v in range(g.vertex_count):
            if v == g.root:
                continue
            r1 = root_path(SpanningTree.without(g, [e1]), v)
            for e2 in r1.edges:
                s = edge_strength(g, v, e2)
                want = sweep_strength(g, v, e1, e2)
                if want is None:
                    assert s == INF or s >= 60
                else:
                    assert s == want
                checked += 1
    assert checked > 200


def test_flip_happens_exactly_after_strength():
    rng = random.Random(8)
    done = 0
    while done < 40:
        g = gen.cycle(rng.randint(3, 8), seed=rng.randrange(10**9), shuffle=True)
        v = rng.choice([x for x in range(g.vertex_count) if x != g.root])
        rep = vertex_strength(g, v)
        if rep.vertex_strength == INF or rep.vertex_strength > 40:
            continue
        sigma = rep.vertex_strength
        at = brute_force_ctp(with_star(g, v, sigma))
        past = brute_force_ctp(with_star(g, v, sigma + 1))
        keep = cycle_wedge_ctp(g, v, sigma)
        assert keep.deleted == {rep.internal_edge}
        assert keep.total + 2 * sigma == at.total
        flip = cycle_wedge_ctp(g, v, sigma + 1)
        assert flip.deleted != {rep.internal_edge}
        assert flip.total + 2 * (sigma + 1) == past.total
        done += 1


def test_infinite_strength_when_route_is_short():
    # unit triangle: the internal deletion already sends v along its cheaper side
    g = gen.cycle(3, weights="unit")
    for v in (1, 2):
        rep = vertex_strength(g, v)
        assert rep.vertex_strength == INF
        assert rep.breaking_edge is None
        assert wedge_decision(rep, 10**6) == rep.internal_edge
        assert set(rep.to_dict()["per_edge"].values()) <= {"inf"}


def test_strength_zero_flips_at_one():
    rng = random.Random(21)
    found = 0
    for _ in range(400):
        g = gen.cycle(rng.randint(3, 7), seed=rng.randrange(10**9), shuffle=True)
        v = rng.choice([x for x in range(g.vertex_count) if x != g.root])
        rep = vertex_strength(g, v)
        if rep.vertex_strength != 0:
            continue
        assert cycle_wedge_ctp(g, v, 0).deleted == {rep.internal_edge}
        assert cycle_wedge_ctp(g, v, 1).deleted != {rep.internal_edge}
        found += 1
    assert found > 0


def test_to_dict_encodes_infinity(square):
    d = vertex_strength(square, 2).to_dict()
    assert d == {
        "vertex": 2,
        "internal_edge": 1,
        "per_edge": {"2": 17, "3": 22},
        "vertex_strength": 17,
        "breaking_edge": 2,
    }


def test_rejects_bad_edges(square):
    with pytest.raises(GraphError):
        edge_strength(square, 2, 1)  # the internal edge itself
    with pytest.raises(GraphError):
        edge_strength(square, 2, 0)  # not on the route avoiding edge 1
    with pytest.raises(GraphError):
        vertex_strength(square, 0)
