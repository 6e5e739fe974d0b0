import itertools
import random

import pytest

from cabletrench import generators as gen
from cabletrench.graph import RootedGraph, SpanningTree, tree_cost
from cabletrench.oracle import (
    CapExceeded,
    brute_force_ctp,
    enumerate_spanning_trees,
    greedy_heuristic,
    induced_subtree_check,
    spanning_tree_count,
)

from conftest import unit_triangle


def filter_oracle(g):
    """Spanning trees as the (n-1)-subsets of edges that are acyclic."""
    out = []
    for combo in itertools.combinations(range(g.edge_count), g.vertex_count - 1):
        parent = list(range(g.vertex_count))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for eid in combo:
            a, b = find(g.edges[eid].u), find(g.edges[eid].v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            out.append(combo)
    return out


def corpus(count=60, seed=0):
    rng = random.Random(seed)
    for i in range(count):
        kind = rng.choice(["cycle", "theta", "cactus", "grid", "tree"])
        if kind == "cycle":
            yield gen.cycle(rng.randint(3, 8), seed=i, shuffle=True)
        elif kind == "theta":
            yield gen.theta(rng.randint(1, 3), rng.randint(2, 3), rng.randint(2, 3), seed=i, shuffle=True)
        elif kind == "cactus":
            yield gen.cactus(rng.randint(1, 9), seed=i)
        elif kind == "grid":
            yield gen.grid(2, rng.randint(1, 4), seed=i, weights="random")
        else:
            yield gen.tree(rng.randint(1, 7), seed=i)


def test_enumeration_matches_subset_filter():
    for g in corpus():
        got = [tuple(sorted(t.edges)) for t in enumerate_spanning_trees(g)]
        want = filter_oracle(g)
        assert got == want  # same set, same lexicographic order
        assert spanning_tree_count(g) == len(want)


@pytest.mark.parametrize(
    "g, count",
    [
        (unit_triangle(), 3),
        (gen.tree(6, seed=1), 1),
        (gen.grid(2, 3), 15),
        (gen.grid(3, 3), 192),
        (gen.theta(2, 2, 2), 12),
        (RootedGraph(1), 1),
    ],
)
def test_known_counts(g, count):
    assert spanning_tree_count(g) == count
    assert sum(1 for _ in enumerate_spanning_trees(g)) == count


def test_complete_graph_count_is_cayley():
    for n in range(2, 7):
        g = RootedGraph(n, [(a, b, 1, 1) for a, b in itertools.combinations(range(n), 2)], 0)
        assert spanning_tree_count(g) == n ** (n - 2)


def test_grid_counts_more_than_double():
    counts = [spanning_tree_count(gen.grid(2, m)) for m in range(2, 11)]
    assert counts == [4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]
    assert all(b >= 2 * a for a, b in zip(counts, counts[1:]))


def test_cap_guard():
    g = gen.grid(2, 4)
    with pytest.raises(CapExceeded) as info:
        brute_force_ctp(g, cap=10)
    assert info.value.count == 56 and info.value.cap == 10
    with pytest.raises(CapExceeded):
        list(enumerate_spanning_trees(g, cap=10))
    assert brute_force_ctp(g, cap=56).optimal_count >= 1


def test_brute_force_is_min_and_first_lexicographic():
    for g in corpus(80, seed=3):
        trees = list(enumerate_spanning_trees(g))
        costs = [tree_cost(g, t).total for t in trees]
        best = min(costs)
        res = brute_force_ctp(g)
        assert res.total == best
        assert res.optimal_count == costs.count(best)
        first = min(tuple(sorted(t.edges)) for t, c in zip(trees, costs) if c == best)
        assert tuple(sorted(res.tree.edges)) == first


def test_triangle_optimum():
    res = brute_force_ctp(unit_triangle())
    assert res.total == 4
    assert res.tree.edges == frozenset({0, 2})
    assert res.optimal_count == 1


def test_induced_subtree_check():
    g = gen.grid(2, 3)
    sub = [0, 1, 3, 4]  # the left 2x2 block
    seen = {True: 0, False: 0}
    for t in enumerate_spanning_trees(g):
        seen[induced_subtree_check(g, t, sub)] += 1
    assert seen[True] > 0 and seen[False] > 0


def test_greedy_is_feasible_and_never_beats_optimum():
    for g in corpus(80, seed=9):
        res = greedy_heuristic(g)
        assert isinstance(res.tree, SpanningTree)
        assert res.optimal_count is None
        assert res.total == tree_cost(g, res.tree).total
        assert res.total >= brute_force_ctp(g).total


def test_greedy_can_be_suboptimal():
    # a cheap-looking first hop that forces expensive cabling later
    found = False
    for g in corpus(200, seed=11):
        if greedy_heuristic(g).total > brute_force_ctp(g).total:
            found = True
            break
    assert found
