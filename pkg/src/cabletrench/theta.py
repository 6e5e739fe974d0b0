"""Theta graphs: a root and an apex joined by three internally disjoint paths.

A spanning tree deletes one edge from each of two paths and keeps the third
intact, so the apex is always reached along the intact path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cycle import WedgePoint, multi_wedge_ctp
from .graph import (
    GraphError,
    OrientedPath,
    RootedGraph,
    SpanningTree,
    cabling_cost,
    cabling_length,
    scaled_tree_total,
    tree_cost,
    trench_length,
)
from .oracle import SolveResult
from .strength import INF, Strength, strength_from_margin


class NotATheta(GraphError):
    pass


@dataclass(frozen=True)
class ThetaGraph:
    graph: RootedGraph
    apex: int
    paths: tuple[OrientedPath, OrientedPath, OrientedPath]

    @property
    def root(self) -> int:
        return self.graph.root

    def path_of(self, eid: int) -> int:
        for i, p in enumerate(self.paths):
            if eid in p.edges:
                return i
        raise GraphError(f"edge {eid} is not on the theta graph")


@dataclass(frozen=True)
class ThetaStrengths:
    """First and second strengths at the apex.

    ``per_edge`` maps each edge of the intact path to its
    ``(first, second)`` pair.
    """

    sigma1: Strength
    sigma2: Strength
    per_edge: dict[int, tuple[Strength, Strength]] = field(hash=False)
    internal_pair: tuple[int, int]
    intact_path: int


def as_theta(g: RootedGraph) -> ThetaGraph:
    """Recognise ``g`` as a theta graph whose root is one of the branch vertices."""
    n = g.vertex_count
    if g.edge_count != n + 1:
        raise NotATheta("a theta graph has one more edge than vertices")
    if g.degree(g.root) != 3:
        raise NotATheta("root must be a branch vertex of degree 3")
    branch = [x for x in range(n) if g.degree(x) == 3]
    if len(branch) != 2 or any(g.degree(x) not in (2, 3) for x in range(n)):
        raise NotATheta("a theta graph has exactly two degree-3 vertices and all others of degree 2")
    apex = branch[0] if branch[1] == g.root else branch[1]
    paths = []
    for first_nbr, first_edge in g.adjacency[g.root]:
        edges = [first_edge]
        prev, x = first_edge, first_nbr
        while x != apex:
            if x == g.root:
                raise NotATheta("path returns to the root without meeting the apex")
            prev, x = next((eid, y) for y, eid in g.adjacency[x] if eid != prev)
            edges.append(prev)
        paths.append(OrientedPath(g, g.root, tuple(edges)))
    if sum(len(p) for p in paths) != g.edge_count:
        raise NotATheta("paths do not cover the graph")
    return ThetaGraph(g, apex, tuple(paths))


def is_theta(g: RootedGraph) -> bool:
    try:
        as_theta(g)
    except NotATheta:
        return False
    return True


def _scored_pairs(tg: ThetaGraph, h_size: int):
    """``(scaled wedged total, tree key, (e_i, e_j), intact path)`` for every tree."""
    g = tg.graph
    _, gam, _ = g.integer_weights
    out = []
    for (i, pi), (j, pj) in combinations(enumerate(tg.paths), 2):
        k = 3 - i - j
        pre = sum(gam[e] for e in tg.paths[k].edges) * h_size
        for ei in pi.edges:
            for ej in pj.edges:
                kept = tuple(e for e in range(g.edge_count) if e != ei and e != ej)
                out.append((scaled_tree_total(g, kept) + pre, kept, (ei, ej), k))
    return out


def theta_wedge_ctp(tg: ThetaGraph, h_size: int, h_internal: Fraction | int = 0, vertex: int | None = None) -> SolveResult:
    """Optimal tree of a theta graph with ``h_size`` cables wedged at the apex."""
    if vertex is not None and vertex != tg.apex:
        raise GraphError("wedging is only supported at the apex of a theta graph")
    if h_size < 0:
        raise ValueError("h_size must be nonnegative")
    g = tg.graph
    scored = _scored_pairs(tg, h_size)
    best = min(scored, key=lambda s: (s[0], s[1]))
    count = sum(1 for s in scored if s[0] == best[0])
    tree = SpanningTree(g, frozenset(best[1]))
    pre = cabling_length(tg.paths[best[3]]) * h_size
    method = "theta" if h_size == 0 and h_internal == 0 else "theta-wedge"
    return SolveResult(tree, tree_cost(g, tree), count, method, pre + Fraction(h_internal))


def theta_ctp(tg: ThetaGraph) -> SolveResult:
    return theta_wedge_ctp(tg, 0)


def theta_ctp_by_reduction(tg: ThetaGraph, h_size: int = 0, h_internal: Fraction | int = 0) -> Fraction:
    """Optimal total via the cycle machinery, as an independent cross-check.

    Fixing the deleted edge on one path leaves a pendant path at the root
    (independent by root additivity) and a pendant path at the apex, which
    is just more weight wedged onto the cycle formed by the other two paths.
    Doing this for two of the three paths covers every spanning tree.
    """
    g = tg.graph
    h_internal = Fraction(h_internal)
    best = None
    for f in (2, 1):
        xf = tg.paths[f]
        a, b = [tg.paths[i] for i in range(3) if i != f]
        cycle, apex = _cycle_of(g, a, b, tg.apex)
        for t in range(len(xf)):
            near = OrientedPath(g, g.root, xf.edges[:t])
            far = OrientedPath(g, tg.apex, tuple(reversed(xf.edges[t + 1 :])))
            near_cost = trench_length(near) + cabling_cost(near)
            far_cost = trench_length(far) + cabling_cost(far)
            res = multi_wedge_ctp(cycle, [WedgePoint(apex, len(far) + h_size, far_cost + h_internal)])
            total = res.total + near_cost
            if best is None or total < best:
                best = total
    return best


def _cycle_of(g: RootedGraph, a: OrientedPath, b: OrientedPath, apex: int) -> tuple[RootedGraph, int]:
    relabel = {g.root: 0}
    for x in a.vertices + b.vertices:
        relabel.setdefault(x, len(relabel))
    edges = []
    for eid in a.edges + b.edges:
        e = g.edges[eid]
        edges.append((relabel[e.u], relabel[e.v], e.gamma, e.tau))
    return RootedGraph(len(relabel), tuple(edges), 0), relabel[apex]


def theta_strengths(tg: ThetaGraph) -> ThetaStrengths:
    """First and second strengths of the apex against each edge of the intact path.

    For a candidate ``e3`` on the intact path, each rival class (which other
    path keeps its edges) is represented by its cheapest member with ``e3``
    deleted.  Its margin over the internal optimum is linear in ``h``; the
    first strength is where the earlier of the two margins turns negative,
    the second where the later one does.
    """
    g = tg.graph
    scale, gam, _ = g.integer_weights
    scored = _scored_pairs(tg, 0)
    best = min(scored, key=lambda s: (s[0], s[1]))
    opt_total, (ea, eb), c = best[0], best[2], best[3]
    pa, pb = tg.path_of(ea), tg.path_of(eb)
    length = [sum(gam[e] for e in p.edges) for p in tg.paths]

    per_edge: dict[int, tuple[Strength, Strength]] = {}
    for e3 in tg.paths[c].edges:
        thresholds = []
        for rival, kept in ((pa, pb), (pb, pa)):
            # rival class deletes from `rival` and from the intact path; `kept` stays whole
            cheapest = min(s[0] for s in scored if e3 in s[2] and s[3] == kept)
            thresholds.append(
                strength_from_margin(Fraction(cheapest - opt_total, scale), Fraction(length[kept] - length[c], scale))
            )
        per_edge[e3] = (min(thresholds), max(thresholds))
    sigma1 = min((s[0] for s in per_edge.values()), default=INF)
    sigma2 = min((s[1] for s in per_edge.values()), default=INF)
    return ThetaStrengths(sigma1, sigma2, per_edge, (ea, eb), c)


def theta_same_class_stability(tg: ThetaGraph, h_size: int) -> bool:
    """True unless the wedge optimum deletes from the same two paths as the
    internal optimum but picks different edges there."""
    internal = theta_ctp(tg).deleted
    wedged = theta_wedge_ctp(tg, h_size).deleted
    if {tg.path_of(e) for e in wedged} != {tg.path_of(e) for e in internal}:
        return True
    return wedged == internal
