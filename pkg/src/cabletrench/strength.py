"""Strength indices of a cycle: how large a wedged graph the cycle tolerates.

Wedging ``h`` extra cables at ``v`` changes the cost of deleting ``e`` by
``L(root -> v avoiding e) * h``.  Comparing the cycle's own optimum ``e1``
with a challenger ``e2`` on ``R1`` therefore gives a margin linear in ``h``,
and the switch point can be read off exactly without sweeping ``h``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .cycle import cycle_ctp, cycle_wedge_ctp
from .graph import (
    GraphError,
    RootedGraph,
    SpanningTree,
    cabling_length,
    root_path,
    tree_cost,
)

INF = math.inf
Strength = Union[int, float]  # a nonnegative int, or math.inf


def strength_from_margin(delta: Fraction, slope: Fraction) -> Strength:
    """Largest ``h >= 0`` with ``delta + slope * h >= 0``, given ``delta >= 0``.

    Equality keeps the incumbent, so an exact division counts.
    """
    if slope >= 0:
        return INF
    return math.floor(delta / -slope)


@dataclass(frozen=True)
class StrengthReport:
    graph: RootedGraph
    vertex: int
    internal_edge: int
    per_edge: dict[int, Strength] = field(hash=False)
    vertex_strength: Strength
    breaking_edge: int | None

    def to_dict(self) -> dict:
        def enc(s: Strength):
            return "inf" if s == INF else s

        return {
            "vertex": self.vertex,
            "internal_edge": self.internal_edge,
            "per_edge": {str(e): enc(s) for e, s in sorted(self.per_edge.items())},
            "vertex_strength": enc(self.vertex_strength),
            "breaking_edge": self.breaking_edge,
        }


def _internal(g: RootedGraph, v: int):
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range")
    if v == g.root:
        raise GraphError("strength is undefined at the root")
    base = cycle_ctp(g)
    e1 = next(iter(base.deleted))
    r1 = root_path(base.tree, v)
    return base, e1, r1


def edge_strength(g: RootedGraph, v: int, e2: int) -> Strength:
    base, e1, r1 = _internal(g, v)
    if e2 == e1:
        raise GraphError("e2 is the internally deleted edge")
    if e2 not in r1.edges:
        raise GraphError(f"edge {e2} is not on the root-to-{v} route avoiding edge {e1}")
    return _edge_strength(g, v, base, r1, e2)


def _edge_strength(g, v, base, r1, e2) -> Strength:
    t2 = SpanningTree.without(g, [e2])
    delta = tree_cost(g, t2).total - base.cost.total
    slope = cabling_length(root_path(t2, v)) - cabling_length(r1)
    return strength_from_margin(delta, slope)


def vertex_strength(g: RootedGraph, v: int) -> StrengthReport:
    """Minimum edge strength over ``R1`` and the edge attaining it.

    The breaking edge is the smallest id among those attaining a finite
    minimum, and absent when the vertex strength is infinite.
    """
    base, e1, r1 = _internal(g, v)
    per_edge = {e2: _edge_strength(g, v, base, r1, e2) for e2 in r1.edges}
    sigma = min(per_edge.values(), default=INF)
    breaking = None
    if sigma != INF:
        breaking = min(e for e, s in per_edge.items() if s == sigma)
    return StrengthReport(g, v, e1, per_edge, sigma, breaking)


def wedge_decision(report: StrengthReport, h_size: int) -> int:
    """Edge to delete from the cycle once ``h_size`` cables hang at the vertex.

    Up to the vertex strength the internal optimum stands.  Past it the
    breaking edge is only known to be the first challenger to win, so the
    wedge problem is solved outright.
    """
    if report.vertex_strength == INF or h_size <= report.vertex_strength:
        return report.internal_edge
    res = cycle_wedge_ctp(report.graph, report.vertex, h_size)
    return next(iter(res.deleted))
