"""Doubly-weighted rooted graphs, oriented paths and the cable-trench cost calculus.

Every edge carries a cable weight ``gamma`` (paid once per root path that
traverses the edge) and a trench weight ``tau`` (paid once if the edge is
used at all).  Weights are exact nonnegative rationals.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

WeightLike = Union[int, str, Fraction]


class GraphError(ValueError):
    """Raised for structurally invalid graphs, paths or trees."""


def as_weight(value: WeightLike) -> Fraction:
    """Coerce ``value`` to an exact nonnegative rational.

    Strings may be integers, decimals (``"0.25"``) or ``"p/q"``.  Floats are
    refused because they usually carry representation error.
    """
    if isinstance(value, float):
        raise GraphError(f"float weight {value!r}: pass a str or Fraction instead")
    if isinstance(value, bool):
        raise GraphError(f"invalid weight {value!r}")
    try:
        w = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise GraphError(f"invalid weight {value!r}") from exc
    if w < 0:
        raise GraphError(f"negative weight {value!r}")
    return w


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    gamma: Fraction
    tau: Fraction

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an endpoint of {self}")

    def __iter__(self):
        return iter((self.u, self.v, self.gamma, self.tau))


@dataclass(frozen=True)
class RootedGraph:
    """Simple connected undirected graph with a distinguished root.

    ``edges`` may be given as ``(u, v, gamma, tau)`` tuples; edge ids are the
    positions in this sequence and never change.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    root: int = 0

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex_count must be a positive integer, got {n!r}")
        if not 0 <= self.root < n:
            raise GraphError(f"root {self.root} out of range 0..{n - 1}")
        edges = []
        seen: dict[frozenset, int] = {}
        for eid, raw in enumerate(self.edges):
            u, v, gamma, tau = raw
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid} ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise GraphError(f"edge {eid} is a self-loop at {u}")
            pair = frozenset((u, v))
            if pair in seen:
                raise GraphError(f"edge {eid} duplicates edge {seen[pair]} ({u}, {v})")
            seen[pair] = eid
            edges.append(Edge(u, v, as_weight(gamma), as_weight(tau)))
        object.__setattr__(self, "edges", tuple(edges))
        if not self._connected():
            raise GraphError("graph is not connected")

    def _connected(self) -> bool:
        adj = self.adjacency
        seen = {self.root}
        stack = [self.root]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbour, edge id)`` pairs sorted by edge id."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, e in enumerate(self.edges):
            adj[e.u].append((e.v, eid))
            adj[e.v].append((e.u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _pair_index(self) -> dict[frozenset, int]:
        return {frozenset((e.u, e.v)): eid for eid, e in enumerate(self.edges)}

    def edge_between(self, u: int, v: int) -> int | None:
        return self._pair_index.get(frozenset((u, v)))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def integer_weights(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        """``(scale, gammas, taus)`` with every weight multiplied by ``scale``.

        Integer arithmetic is far cheaper than Fraction arithmetic; dividing a
        scaled result by ``scale`` recovers the exact rational value.
        """
        scale = 1
        for e in self.edges:
            scale = math.lcm(scale, e.gamma.denominator, e.tau.denominator)
        gam = tuple(int(e.gamma * scale) for e in self.edges)
        tau = tuple(int(e.tau * scale) for e in self.edges)
        return scale, gam, tau

    def with_root(self, root: int) -> "RootedGraph":
        return RootedGraph(self.vertex_count, self.edges, root)


@dataclass(frozen=True, eq=False)
class OrientedPath:
    """A simple path given by its start vertex and ordered edge ids."""

    graph: RootedGraph
    start: int
    edges: tuple[int, ...] = ()
    vertices: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        g = self.graph
        if not 0 <= self.start < g.vertex_count:
            raise GraphError(f"start vertex {self.start} out of range")
        edges = tuple(self.edges)
        verts = [self.start]
        for eid in edges:
            if not 0 <= eid < g.edge_count:
                raise GraphError(f"edge id {eid} out of range")
            verts.append(g.edges[eid].other(verts[-1]))
        if len(set(verts)) != len(verts):
            raise GraphError(f"path {edges} from {self.start} is not simple")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "vertices", tuple(verts))

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedPath):
            return NotImplemented
        return self.graph is other.graph and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((id(self.graph), self.vertices, self.edges))

    def reversed(self) -> "OrientedPath":
        return OrientedPath(self.graph, self.end, self.edges[::-1])

    def __add__(self, other: "OrientedPath") -> "OrientedPath":
        if other.graph is not self.graph:
            raise GraphError("cannot concatenate paths from different graphs")
        if other.start != self.end:
            raise GraphError(f"path ending at {self.end} cannot be followed by a path starting at {other.start}")
        return OrientedPath(self.graph, self.start, self.edges + other.edges)

    def gammas(self) -> list[Fraction]:
        return [self.graph.edges[e].gamma for e in self.edges]


def trench_length(p: OrientedPath) -> Fraction:
    return sum((p.graph.edges[e].tau for e in p.edges), Fraction(0))


def cabling_length(p: OrientedPath) -> Fraction:
    return sum(p.gammas(), Fraction(0))


def cabling_cost(p: OrientedPath) -> Fraction:
    """Sum of the gamma prefix sums along ``p`` in its stated orientation.

    This is the cable bill for laying one cable from ``p.start`` to every
    other vertex of the path.
    """
    total = Fraction(0)
    prefix = Fraction(0)
    for g in p.gammas():
        prefix += g
        total += prefix
    return total


def concat_cabling_cost(a: OrientedPath, b: OrientedPath) -> Fraction:
    """Cabling cost of ``a`` followed by ``b`` via pre-cabling.

    ``C(ab) = C(a) + L(a) * |b| + C(b)``: each of the ``|b|`` cables bound
    for ``b`` first runs the whole of ``a``.
    """
    # validates composability and simplicity of the concatenation
    a + b
    return cabling_cost(a) + cabling_length(a) * len(b) + cabling_cost(b)


@dataclass(frozen=True)
class CtpCost:
    trench: Fraction
    cable: Fraction

    @property
    def total(self) -> Fraction:
        return self.trench + self.cable


@dataclass(frozen=True, eq=False)
class SpanningTree:
    graph: RootedGraph
    edges: frozenset[int]

    def __post_init__(self) -> None:
        g = self.graph
        edges = frozenset(self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != g.vertex_count - 1:
            raise GraphError(f"a spanning tree of {g.vertex_count} vertices needs {g.vertex_count - 1} edges, got {len(edges)}")
        parent = list(range(g.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for eid in edges:
            if not 0 <= eid < g.edge_count:
                raise GraphError(f"edge id {eid} out of range")
            a, b = find(g.edges[eid].u), find(g.edges[eid].v)
            if a == b:
                raise GraphError(f"edge {eid} closes a cycle")
            parent[a] = b

    @classmethod
    def without(cls, graph: RootedGraph, deleted: Iterable[int]) -> "SpanningTree":
        """The tree made of every edge of ``graph`` except ``deleted``."""
        gone = set(deleted)
        return cls(graph, frozenset(e for e in range(graph.edge_count) if e not in gone))

    @property
    def key(self) -> tuple[int, ...]:
        """Sorted edge ids; the lexicographically smallest key wins ties."""
        return tuple(sorted(self.edges))

    @property
    def deleted(self) -> frozenset[int]:
        return frozenset(range(self.graph.edge_count)) - self.edges

    @cached_property
    def parent_edge(self) -> tuple[int | None, ...]:
        """Edge joining each vertex to its parent (``None`` at the root)."""
        g = self.graph
        parent: list[int | None] = [None] * g.vertex_count
        seen = [False] * g.vertex_count
        seen[g.root] = True
        queue = deque([g.root])
        while queue:
            x = queue.popleft()
            for y, eid in g.adjacency[x]:
                if eid in self.edges and not seen[y]:
                    seen[y] = True
                    parent[y] = eid
                    queue.append(y)
        return tuple(parent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.graph == other.graph and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)


def root_path(t: SpanningTree, w: int) -> OrientedPath:
    """The unique root-to-``w`` path of ``t``, oriented away from the root."""
    g = t.graph
    chain = []
    x = w
    while x != g.root:
        eid = t.parent_edge[x]
        chain.append(eid)
        x = g.edges[eid].other(x)
    return OrientedPath(g, g.root, tuple(reversed(chain)))


def root_distances(t: SpanningTree) -> list[Fraction]:
    """Gamma distance from the root to every vertex inside ``t``."""
    g = t.graph
    dist = [Fraction(0)] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[g.root] = True
    queue = deque([g.root])
    while queue:
        x = queue.popleft()
        for y, eid in g.adjacency[x]:
            if eid in t.edges and not seen[y]:
                seen[y] = True
                dist[y] = dist[x] + g.edges[eid].gamma
                queue.append(y)
    return dist


def tree_cost(g: RootedGraph, t: SpanningTree) -> CtpCost:
    if t.graph is not g and t.graph != g:
        raise GraphError("tree belongs to a different graph")
    trench = sum((g.edges[e].tau for e in t.edges), Fraction(0))
    cable = sum(root_distances(t), Fraction(0))
    return CtpCost(trench, cable)


def scaled_tree_total(g: RootedGraph, tree_edges: Sequence[int] | frozenset[int]) -> int:
    """Total cost of a spanning tree, multiplied by ``g.integer_weights[0]``.

    Fast path for enumeration loops; the caller guarantees ``tree_edges`` is
    a spanning tree.
    """
    _, gam, tau = g.integer_weights
    inside = set(tree_edges)
    adj = g.adjacency
    dist = [0] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[g.root] = True
    stack = [g.root]
    total = sum(tau[e] for e in inside)
    while stack:
        x = stack.pop()
        dx = dist[x]
        for y, eid in adj[x]:
            if eid in inside and not seen[y]:
                seen[y] = True
                dy = dx + gam[eid]
                dist[y] = dy
                total += dy
                stack.append(y)
    return total


def wedge(g: RootedGraph, v_g: int, h: RootedGraph) -> tuple[RootedGraph, dict[int, int]]:
    """Glue ``h`` onto ``g`` by identifying ``h.root`` with ``v_g``.

    ``g`` keeps its vertex and edge ids; the non-root vertices of ``h`` take
    the next ids in their original order and ``h``'s edges follow ``g``'s.
    Returns the wedge (rooted at ``g.root``) and the relabelling of ``h``.
    """
    if not 0 <= v_g < g.vertex_count:
        raise GraphError(f"wedge vertex {v_g} out of range")
    mapping: dict[int, int] = {}
    nxt = g.vertex_count
    for x in range(h.vertex_count):
        if x == h.root:
            mapping[x] = v_g
        else:
            mapping[x] = nxt
            nxt += 1
    edges = list(g.edges) + [(mapping[e.u], mapping[e.v], e.gamma, e.tau) for e in h.edges]
    return RootedGraph(nxt, tuple(edges), g.root), mapping


def wedge_size(h: RootedGraph) -> int:
    """Number of cables internal to ``h`` that get pre-cabled through a host."""
    return h.vertex_count - 1
