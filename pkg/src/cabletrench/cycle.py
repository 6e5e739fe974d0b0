"""Exact cable-trench solutions on cycles, with graphs wedged at cycle vertices.

A spanning tree of an n-cycle is the cycle minus one edge, so every solver
here is a search over deleted edges.  Costs for all n deletions are obtained
in one O(n) sweep by :func:`deletion_costs`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import (
    GraphError,
    OrientedPath,
    RootedGraph,
    SpanningTree,
    cabling_cost,
    cabling_length,
    root_path,
    tree_cost,
)
from .oracle import SolveResult


class NotACycle(GraphError):
    pass


@dataclass(frozen=True)
class WedgePoint:
    vertex: int
    size: int
    internal_cost: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"wedge size must be nonnegative, got {self.size}")
        object.__setattr__(self, "internal_cost", Fraction(self.internal_cost))


@dataclass(frozen=True)
class CycleDecomposition:
    """Split of a cycle for deleted edge ``edge`` and wedge vertex ``vertex``.

    ``p`` runs root to ``edge`` (ending with it), ``q`` continues from there
    to ``vertex``, and ``r`` is the root-to-``vertex`` route avoiding ``edge``.
    """

    edge: int
    vertex: int
    p: OrientedPath
    q: OrientedPath
    r: OrientedPath


def is_cycle(g: RootedGraph) -> bool:
    return g.vertex_count >= 3 and g.edge_count == g.vertex_count and all(
        g.degree(v) == 2 for v in range(g.vertex_count)
    )


def cycle_order(g: RootedGraph) -> tuple[list[int], list[int]]:
    """Vertices ``c0 = root, c1, ...`` and edges ``f_i = (c_i, c_{i+1 mod n})``.

    The walk leaves the root along its smaller-id edge.
    """
    if not is_cycle(g):
        raise NotACycle("graph is not a simple cycle")
    verts = [g.root]
    edges = []
    prev_edge = None
    x = g.root
    for _ in range(g.vertex_count):
        y, eid = next((y, eid) for y, eid in g.adjacency[x] if eid != prev_edge)
        edges.append(eid)
        verts.append(y)
        prev_edge, x = eid, y
    verts.pop()
    return verts, edges


def deletion_costs(gam: Sequence, tau: Sequence, weight: Sequence) -> list:
    """Cost of the tree obtained by deleting each ``f_j`` of a cycle.

    ``gam[i]``, ``tau[i]`` are the weights of ``f_i``; ``weight[i]`` is the
    number of cables that end at or beyond ``c_i`` (one for ``c_i`` itself
    plus everything wedged there).  ``weight[0]`` belongs to the root and is
    ignored.  Works with ints or Fractions.
    """
    k = len(gam)
    zero = gam[0] * 0
    trench = sum(tau, zero)
    # fwd[j]: cable cost of c_1..c_j reached along f_0..f_{j-1}
    fwd = [zero] * k
    dist = zero
    for i in range(1, k):
        dist += gam[i - 1]
        fwd[i] = fwd[i - 1] + dist * weight[i]
    # bwd[j]: cable cost of c_{j+1}..c_{k-1} reached backwards via f_{k-1}
    bwd = [zero] * k
    dist = zero
    for i in range(k - 1, 0, -1):
        dist += gam[i]
        bwd[i - 1] = bwd[i] + dist * weight[i]
    return [trench - tau[j] + fwd[j] + bwd[j] for j in range(k)]


def _pick(costs: list, cyc: list[int]) -> tuple[int, int]:
    """Winning position and number of optimal deletions.

    Deleting a larger edge id leaves a lexicographically smaller tree, so on
    equal cost the largest deleted id wins.
    """
    best = min(costs)
    winners = [j for j, c in enumerate(costs) if c == best]
    return max(winners, key=lambda j: cyc[j]), len(winners)


def cycle_ctp(g: RootedGraph) -> SolveResult:
    """Best single-edge deletion of a rooted cycle."""
    verts, cyc = cycle_order(g)
    scale, gam, tau = g.integer_weights
    costs = deletion_costs([gam[e] for e in cyc], [tau[e] for e in cyc], [1] * len(cyc))
    j, count = _pick(costs, cyc)
    tree = SpanningTree.without(g, [cyc[j]])
    return SolveResult(tree, tree_cost(g, tree), count, "cycle")


def wedge_roots_solve(g_result: SolveResult, h_result: SolveResult) -> SolveResult:
    """Combine solutions of two graphs glued at their common root.

    The two problems are independent, so the union of the optimal trees is
    optimal for the wedge.  Vertex relabelling follows :func:`graph.wedge`.
    """
    from .graph import wedge

    g, h = g_result.tree.graph, h_result.tree.graph
    joined, _ = wedge(g, g.root, h)
    offset = g.edge_count
    edges = set(g_result.tree.edges) | {offset + e for e in h_result.tree.edges}
    tree = SpanningTree(joined, frozenset(edges))
    count = None
    if g_result.optimal_count is not None and h_result.optimal_count is not None:
        count = g_result.optimal_count * h_result.optimal_count
    return SolveResult(
        tree,
        tree_cost(joined, tree),
        count,
        "wedge-roots",
        g_result.external + h_result.external,
    )


def _check_wedge_vertex(g: RootedGraph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range")
    if v == g.root:
        raise GraphError("wedge vertex equals the root; solve the two parts separately with wedge_roots_solve")


def decompose_cycle(g: RootedGraph, e: int, v: int) -> CycleDecomposition:
    _check_wedge_vertex(g, v)
    verts, cyc = cycle_order(g)
    if e not in cyc:
        raise GraphError(f"edge id {e} out of range")
    k = len(cyc)
    pos_v = verts.index(v)
    j = cyc.index(e)
    if j < pos_v:
        # e lies on the forward route c0 -> c_pos_v
        p = OrientedPath(g, g.root, tuple(cyc[: j + 1]))
        q = OrientedPath(g, p.end, tuple(cyc[j + 1 : pos_v]))
        r = OrientedPath(g, g.root, tuple(reversed(cyc[pos_v:])))
    else:
        back = list(reversed(cyc))  # f_{k-1}, f_{k-2}, ... leaving the root backwards
        jb = k - 1 - j
        p = OrientedPath(g, g.root, tuple(back[: jb + 1]))
        q = OrientedPath(g, p.end, tuple(back[jb + 1 : k - pos_v]))
        r = OrientedPath(g, g.root, tuple(cyc[:pos_v]))
    return CycleDecomposition(e, v, p, q, r)


def _wedged_cost(g: RootedGraph, deleted: int, v: int, h_size: int) -> Fraction:
    tree = SpanningTree.without(g, [deleted])
    return tree_cost(g, tree).total + cabling_length(root_path(tree, v)) * h_size


def cycle_wedge_ctp(g: RootedGraph, v: int, h_size: int, h_internal: Fraction | int = 0) -> SolveResult:
    """Best deletion of a cycle carrying one wedged graph at ``v``.

    Starts from the cycle's own optimum ``e1`` and only challenges it with
    edges on ``R1``, the root-to-``v`` route that avoids ``e1``: any other
    edge shares ``R1`` with ``e1`` and pays the same pre-cabling, so it can
    never win.  ``e1`` is kept on ties.
    """
    _check_wedge_vertex(g, v)
    if h_size < 0:
        raise ValueError("h_size must be nonnegative")
    h_internal = Fraction(h_internal)
    e1 = next(iter(cycle_ctp(g).deleted))
    r1 = root_path(SpanningTree.without(g, [e1]), v)
    best_cost = _wedged_cost(g, e1, v, h_size)
    challengers = [(_wedged_cost(g, e2, v, h_size), -e2) for e2 in r1.edges]
    winner = e1
    if challengers:
        c, neg = min(challengers)
        if c < best_cost:
            best_cost, winner = c, -neg

    verts, cyc = cycle_order(g)
    scale, gam, tau = g.integer_weights
    weight = [1 + (h_size if x == v else 0) for x in verts]
    costs = deletion_costs([gam[e] for e in cyc], [tau[e] for e in cyc], weight)
    count = sum(1 for c in costs if c == min(costs))

    tree = SpanningTree.without(g, [winner])
    pre = cabling_length(root_path(tree, v)) * h_size
    return SolveResult(tree, tree_cost(g, tree), count, "cycle-wedge", pre + h_internal)


def switch_margin(g: RootedGraph, v: int, e1: int, e2: int, h_size: int) -> Fraction:
    """``cost(T2 ^ H) - cost(T1 ^ H)``; nonpositive means deleting ``e2`` is at least as good."""
    _check_wedge_vertex(g, v)
    if e1 == e2:
        raise ValueError("e1 and e2 must differ")
    return _wedged_cost(g, e2, v, h_size) - _wedged_cost(g, e1, v, h_size)


def switch_margin_closed_form(g: RootedGraph, v: int, e1: int, e2: int, h_size: int) -> Fraction:
    """The same margin, assembled from the path pieces of the two deletions.

    With both edges removed the cycle falls into a root arc and a free arc
    ``Q`` lying between them.  ``P_i`` is the route from the root through
    ``e_i`` that avoids the other edge; ``Q+`` runs from the far end of
    ``e2`` to the far end of ``e1`` and ``Q-`` the other way.  Then

        cost(T1^H) - cost(T2^H) = tau(e2) - tau(e1) + (L(P2) - L(P1)) (1 + |Q|)
                                  + C(Q+) - C(Q-) + (L(R1) - L(R2)) h

    and the margin is its negation.
    """
    _check_wedge_vertex(g, v)
    if e1 == e2:
        raise ValueError("e1 and e2 must differ")
    verts, cyc = cycle_order(g)
    k = len(cyc)
    j1, j2 = cyc.index(e1), cyc.index(e2)
    a, b = min(j1, j2), max(j1, j2)
    fwd_p = OrientedPath(g, g.root, tuple(cyc[: a + 1]))
    bwd_p = OrientedPath(g, g.root, tuple(reversed(cyc[b:])))
    free = OrientedPath(g, verts[a + 1], tuple(cyc[a + 1 : b]))
    if j2 == a:
        p2, p1, q_plus = fwd_p, bwd_p, free
    else:
        p2, p1, q_plus = bwd_p, fwd_p, free.reversed()
    q_minus = q_plus.reversed()

    pos_v = verts.index(v)

    def route_len(j: int) -> Fraction:
        if pos_v <= j:
            return cabling_length(OrientedPath(g, g.root, tuple(cyc[:pos_v])))
        return cabling_length(OrientedPath(g, g.root, tuple(reversed(cyc[pos_v:]))))

    tau1, tau2 = g.edges[e1].tau, g.edges[e2].tau
    rhs = (
        tau2
        - tau1
        + (cabling_length(p2) - cabling_length(p1)) * (1 + len(free))
        + cabling_cost(q_plus)
        - cabling_cost(q_minus)
        + (route_len(j1) - route_len(j2)) * h_size
    )
    return -rhs


def multi_wedge_ctp(g: RootedGraph, wedges: Sequence[WedgePoint]) -> SolveResult:
    """Best deletion of a cycle carrying several wedged graphs.

    Every deletion is scored as its tree cost plus, for each wedge point,
    the pre-cabling ``L(root -> v) * size`` through the cycle.  The wedged
    graphs' own costs are constants added on top.
    """
    seen = set()
    for w in wedges:
        _check_wedge_vertex(g, w.vertex)
        if w.vertex in seen:
            raise GraphError(f"duplicate wedge vertex {w.vertex}")
        seen.add(w.vertex)
    verts, cyc = cycle_order(g)
    sizes = {w.vertex: w.size for w in wedges}
    scale, gam, tau = g.integer_weights
    weight = [1 + sizes.get(x, 0) for x in verts]
    costs = deletion_costs([gam[e] for e in cyc], [tau[e] for e in cyc], weight)
    j, count = _pick(costs, cyc)
    tree = SpanningTree.without(g, [cyc[j]])
    cost = tree_cost(g, tree)
    external = sum(
        (cabling_length(root_path(tree, w.vertex)) * w.size + w.internal_cost for w in wedges),
        Fraction(0),
    )
    return SolveResult(tree, cost, count, "multi-wedge", external)
