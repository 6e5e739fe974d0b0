"""Ground truth: exhaustive spanning-tree search and supporting tools."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .graph import (
    CtpCost,
    RootedGraph,
    SpanningTree,
    scaled_tree_total,
    tree_cost,
)

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"graph has {count} spanning trees, above the cap of {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class SolveResult:
    """A solver's chosen tree and its exact cost.

    ``external`` holds cost paid outside ``tree.graph``: pre-cabling of graphs
    wedged onto it plus their own internal cost.  It is zero for plain solves.
    ``optimal_count`` is ``None`` when the method gives no optimality claim.
    """

    tree: SpanningTree
    cost: CtpCost
    optimal_count: int | None
    method: str
    external: Fraction = Fraction(0)

    @property
    def total(self) -> Fraction:
        return self.cost.total + self.external

    @property
    def deleted(self) -> frozenset[int]:
        return self.tree.deleted


def spanning_tree_count(g: RootedGraph) -> int:
    """Kirchhoff count: determinant of the Laplacian with the root row/column removed."""
    n = g.vertex_count
    if n == 1:
        return 1
    idx = [v for v in range(n) if v != g.root]
    pos = {v: i for i, v in enumerate(idx)}
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for e in g.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if a in pos:
                m[pos[a]][pos[a]] += 1
                if b in pos:
                    m[pos[a]][pos[b]] -= 1
    return _bareiss_det(m)


def _bareiss_det(m: list[list[int]]) -> int:
    # fraction-free Gaussian elimination; every division is exact
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _iter_tree_edge_sets(g: RootedGraph) -> Iterator[tuple[int, ...]]:
    """Contraction/deletion search over edges in id order, include-branch first.

    Every branch keeps the chosen edges acyclic and the chosen-plus-undecided
    edges connected, so every leaf is a spanning tree and no branch dies.
    Include-first on ascending ids yields trees in lexicographic order.
    """
    n, m = g.vertex_count, g.edge_count
    if n == 1:
        yield ()
        return
    ends = [(e.u, e.v) for e in g.edges]
    parent = list(range(n))
    size = [1] * n
    chosen: list[int] = []
    excluded = [False] * m

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connected(i: int) -> bool:
        # is the graph minus excluded edges minus edge i still connected?
        p = list(range(n))

        def f(x: int) -> int:
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = n
        for eid in range(m):
            if eid == i or excluded[eid]:
                continue
            a, b = f(ends[eid][0]), f(ends[eid][1])
            if a != b:
                p[a] = b
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        u, v = ends[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv
        if still_connected(i):
            excluded[i] = True
            yield from rec(i + 1)
            excluded[i] = False

    yield from rec(0)


def enumerate_spanning_trees(g: RootedGraph, cap: int = DEFAULT_CAP) -> Iterator[SpanningTree]:
    """Every spanning tree of ``g`` exactly once, in lexicographic order."""
    count = spanning_tree_count(g)
    if count > cap:
        raise CapExceeded(count, cap)
    for edges in _iter_tree_edge_sets(g):
        yield SpanningTree(g, frozenset(edges))


def brute_force_ctp(g: RootedGraph, cap: int = DEFAULT_CAP) -> SolveResult:
    """Exact optimum by exhaustive enumeration.

    The first minimum in lexicographic order is kept, which is exactly the
    global tie-break rule.
    """
    count = spanning_tree_count(g)
    if count > cap:
        raise CapExceeded(count, cap)
    best = None
    best_edges: tuple[int, ...] = ()
    ties = 0
    for edges in _iter_tree_edge_sets(g):
        total = scaled_tree_total(g, edges)
        if best is None or total < best:
            best, best_edges, ties = total, edges, 1
        elif total == best:
            ties += 1
    tree = SpanningTree(g, frozenset(best_edges))
    return SolveResult(tree, tree_cost(g, tree), ties, "brute")


def induced_subtree_check(g: RootedGraph, t: SpanningTree, component_vertices: Iterable[int]) -> bool:
    """Whether ``t`` restricted to the subgraph induced by the vertices is a spanning tree of it."""
    verts = set(component_vertices)
    inside = [eid for eid in t.edges if g.edges[eid].u in verts and g.edges[eid].v in verts]
    if len(inside) != len(verts) - 1:
        return False
    parent = {v: v for v in verts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in inside:
        a, b = find(g.edges[eid].u), find(g.edges[eid].v)
        if a == b:
            return False
        parent[a] = b
    return True


def greedy_heuristic(g: RootedGraph) -> SolveResult:
    """Prim/Dijkstra hybrid: grow from the root by cheapest marginal cost.

    Attaching ``w`` through tree vertex ``u`` adds ``tau(u, w)`` of trench and
    ``dist(u) + gamma(u, w)`` of cable; the frontier edge minimising that sum
    is taken next, smallest edge id first on ties.  Not optimal in general.
    """
    dist: dict[int, Fraction] = {g.root: Fraction(0)}
    chosen: list[int] = []
    frontier: list[tuple[Fraction, int, int]] = []

    def push(u: int) -> None:
        for w, eid in g.adjacency[u]:
            if w not in dist:
                e = g.edges[eid]
                heapq.heappush(frontier, (e.tau + dist[u] + e.gamma, eid, w))

    push(g.root)
    while frontier:
        _, eid, w = heapq.heappop(frontier)
        if w in dist:
            continue
        u = g.edges[eid].other(w)
        dist[w] = dist[u] + g.edges[eid].gamma
        chosen.append(eid)
        push(w)
    tree = SpanningTree(g, frozenset(chosen))
    return SolveResult(tree, tree_cost(g, tree), None, "heuristic")
