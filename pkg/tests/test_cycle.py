import random
from fractions import Fraction

import pytest

from cabletrench import generators as gen
from cabletrench.cycle import (
    NotACycle,
    WedgePoint,
    cycle_ctp,
    cycle_order,
    cycle_wedge_ctp,
    decompose_cycle,
    deletion_costs,
    multi_wedge_ctp,
    switch_margin,
    switch_margin_closed_form,
    wedge_roots_solve,
)
from cabletrench.graph import GraphError, SpanningTree, cabling_length, root_path, tree_cost, wedge
from cabletrench.oracle import brute_force_ctp

from conftest import unit_triangle, with_star, worked_square


def random_cycle(rng, lo=3, hi=10):
    return gen.cycle(rng.randint(lo, hi), seed=rng.randrange(10**9), shuffle=True)


def test_cycle_order_walks_every_edge(square):
    verts, edges = cycle_order(square)
    assert verts == [0, 1, 2, 3]
    assert edges == [0, 1, 2, 3]
    with pytest.raises(NotACycle):
        cycle_order(gen.theta(2, 2, 2))


def test_deletion_costs_match_tree_cost():
    rng = random.Random(1)
    for _ in range(200):
        g = random_cycle(rng)
        verts, cyc = cycle_order(g)
        costs = deletion_costs([g.edges[e].gamma for e in cyc], [g.edges[e].tau for e in cyc], [1] * len(cyc))
        for j, e in enumerate(cyc):
            assert costs[j] == tree_cost(g, SpanningTree.without(g, [e])).total


def test_worked_square_trees(square):
    totals = {e: tree_cost(square, SpanningTree.without(square, [e])).total for e in range(4)}
    assert totals == {0: 19, 1: Fraction(15, 2), 2: 16, 3: Fraction(37, 2)}


def test_worked_square_cycle_optimum(square):
    res = cycle_ctp(square)
    assert res.deleted == {1}
    assert res.total == Fraction(15, 2)
    assert res.optimal_count == 1


def test_symmetric_unit_square_has_two_optima():
    g = gen.cycle(4, weights="unit")
    res = cycle_ctp(g)
    assert res.total == 7
    assert res.optimal_count == 2 == brute_force_ctp(g).optimal_count
    # ties go to the lexicographically smaller tree, i.e. the larger deleted id
    assert res.deleted == {2}


def test_cycle_ctp_matches_brute_force():
    rng = random.Random(7)
    for _ in range(500):
        g = random_cycle(rng, 3, 12)
        res, ref = cycle_ctp(g), brute_force_ctp(g)
        assert res.total == ref.total
        assert res.tree.edges == ref.tree.edges
        assert res.optimal_count == ref.optimal_count


def test_decomposition_partitions_the_cycle():
    rng = random.Random(3)
    for _ in range(60):
        g = random_cycle(rng)
        for v in range(g.vertex_count):
            if v == g.root:
                continue
            for e in range(g.edge_count):
                d = decompose_cycle(g, e, v)
                parts = [set(d.p.edges), set(d.q.edges), set(d.r.edges)]
                assert set().union(*parts) == set(range(g.edge_count))
                assert sum(map(len, parts)) == g.edge_count
                assert d.p.edges[-1] == e
                assert d.q.start == d.p.end and d.q.end == v and d.r.end == v
                tree = SpanningTree.without(g, [e])
                assert root_path(tree, v).edges == d.r.edges


def test_decomposition_examples(square):
    d = decompose_cycle(square, 1, 2)
    assert (d.p.edges, d.q.edges, d.r.edges) == ((0, 1), (), (3, 2))
    d = decompose_cycle(square, 0, 2)
    assert (d.p.edges, d.q.edges, d.r.edges) == ((0,), (1,), (3, 2))
    d = decompose_cycle(square, 3, 1)
    assert (d.p.edges, d.q.edges, d.r.edges) == ((3,), (2, 1), (0,))
    with pytest.raises(GraphError):
        decompose_cycle(square, 1, 0)


@pytest.mark.parametrize("h, deleted, total", [(0, 1, Fraction(15, 2)), (17, 1, 50), (18, 2, 52)])
def test_worked_square_wedge(square, h, deleted, total):
    res = cycle_wedge_ctp(square, 2, h)
    assert res.deleted == {deleted}
    assert res.total == total
    # star oracle: the wedged graph solved outright
    star = gen.star(h)
    ref = brute_force_ctp(with_star(square, 2, h))
    assert ref.total == total + brute_force_ctp(star).total


def wedged_instances(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_cycle(rng, 3, 10)
        k = rng.randint(1, 3)
        verts = rng.sample([x for x in range(g.vertex_count) if x != g.root], min(k, g.vertex_count - 1))
        hs = []
        for v in verts:
            size = rng.randint(1, 8)
            hs.append(gen.star(size - 1, weights="random", seed=rng.randrange(10**6)) if rng.random() < 0.5
                      else gen.tree(size, seed=rng.randrange(10**6)))
        yield g, verts, hs


def materialize(g, verts, hs):
    host = g
    for v, h in zip(verts, hs):
        host, _ = wedge(host, v, h)
    return host


def test_wedge_solvers_match_brute_force():
    for g, verts, hs in wedged_instances(200, seed=5):
        ref = brute_force_ctp(materialize(g, verts, hs))
        points = [WedgePoint(v, h.vertex_count - 1, brute_force_ctp(h).total) for v, h in zip(verts, hs)]
        multi = multi_wedge_ctp(g, points)
        assert multi.total == ref.total
        # cycle edges keep their ids in the wedge, and wedged trees are bridges
        assert multi.deleted == ref.deleted
        if len(verts) == 1:
            single = cycle_wedge_ctp(g, verts[0], points[0].size, points[0].internal_cost)
            assert single.total == ref.total


def test_cycle_wedge_keeps_internal_optimum_on_ties():
    g = gen.cycle(4, weights="unit")
    # at h = 0 both deletions adjacent to vertex 2 are optimal
    base = next(iter(cycle_ctp(g).deleted))
    assert next(iter(cycle_wedge_ctp(g, 1, 0).deleted)) == base


def test_multi_wedge_unit_hexagon():
    g = gen.cycle(6, weights="unit")
    points = [WedgePoint(2, 2), WedgePoint(4, 3)]
    host = materialize(g, [2, 4], [gen.star(2), gen.star(3)])
    ref = brute_force_ctp(host)
    res = multi_wedge_ctp(g, [WedgePoint(p.vertex, p.size, 2 * p.size) for p in points])
    assert res.total == ref.total
    assert res.deleted == ref.deleted
    with pytest.raises(GraphError):
        multi_wedge_ctp(g, [WedgePoint(2, 1), WedgePoint(2, 1)])


def test_wedge_point_rejects_negative_size():
    with pytest.raises(ValueError):
        WedgePoint(1, -1)


def test_wedge_roots_solve_is_additive():
    rng = random.Random(4)
    for _ in range(40):
        g, h = random_cycle(rng, 3, 6), random_cycle(rng, 3, 6)
        res = wedge_roots_solve(cycle_ctp(g), cycle_ctp(h))
        joined, _ = wedge(g, g.root, h)
        ref = brute_force_ctp(joined)
        assert res.total == ref.total
        assert res.optimal_count == ref.optimal_count


def test_closed_form_equals_direct_margin():
    rng = random.Random(11)
    for _ in range(150):
        g = random_cycle(rng, 3, 9)
        for v in range(g.vertex_count):
            if v == g.root:
                continue
            h = rng.randint(0, 20)
            for e1 in range(g.edge_count):
                for e2 in range(g.edge_count):
                    if e1 != e2:
                        assert switch_margin_closed_form(g, v, e1, e2, h) == switch_margin(g, v, e1, e2, h)


def test_closed_form_on_worked_square(square):
    assert switch_margin(square, 2, 1, 2, 17) == 0
    assert switch_margin_closed_form(square, 2, 1, 2, 17) == 0
    assert switch_margin(square, 2, 1, 2, 18) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        switch_margin(square, 2, 1, 1, 3)


def test_edges_off_the_route_never_win():
    rng = random.Random(13)
    violations = 0
    for _ in range(80):
        g = random_cycle(rng, 3, 10)
        e1 = next(iter(cycle_ctp(g).deleted))
        for v in range(g.vertex_count):
            if v == g.root:
                continue
            r1 = root_path(SpanningTree.without(g, [e1]), v)
            others = [e for e in range(g.edge_count) if e != e1 and e not in r1.edges]
            for h in range(0, 21):
                violations += sum(1 for e2 in others if switch_margin(g, v, e1, e2, h) < 0)
    assert violations == 0


def test_wedge_total_is_monotone_in_h():
    rng = random.Random(17)
    for _ in range(100):
        g = random_cycle(rng)
        v = rng.choice([x for x in range(g.vertex_count) if x != g.root])
        totals = [cycle_wedge_ctp(g, v, h).total for h in range(15)]
        assert totals == sorted(totals)
        res = cycle_wedge_ctp(g, v, 6)
        tree_route = cabling_length(root_path(res.tree, v))
        assert res.external == 6 * tree_route


def test_rejects_root_and_non_cycle(triangle):
    with pytest.raises(GraphError):
        cycle_wedge_ctp(triangle, 0, 3)
    with pytest.raises(ValueError):
        cycle_wedge_ctp(triangle, 1, -1)
    with pytest.raises(NotACycle):
        cycle_ctp(gen.tree(4))
    assert cycle_ctp(unit_triangle()).total == 4
    assert worked_square().edge_count == 4


def test_margin_from_path_pieces():
    """Per-deletion pieces: T_i costs tau(E) - tau(e_i) + C(P_i) - L(P_i) + C(R_i)
    + L(R_i)|Q_i| + C(Q_i walked back from v), plus L(R_i) h for the wedge."""
    from cabletrench.graph import cabling_cost

    rng = random.Random(19)
    for _ in range(120):
        g = random_cycle(rng, 4, 9)
        e1 = next(iter(cycle_ctp(g).deleted))
        for v in range(g.vertex_count):
            if v == g.root:
                continue
            d1 = decompose_cycle(g, e1, v)
            for e2 in d1.r.edges:
                d2 = decompose_cycle(g, e2, v)
                h = rng.randint(0, 10)

                def piece(d):
                    c, ln = cabling_cost, cabling_length
                    return (
                        -g.edges[d.edge].tau
                        + c(d.p) - ln(d.p)
                        + c(d.r)
                        + ln(d.r) * (len(d.q) + h)
                        + c(d.q.reversed())
                    )

                assert piece(d2) - piece(d1) == switch_margin(g, v, e1, e2, h)
