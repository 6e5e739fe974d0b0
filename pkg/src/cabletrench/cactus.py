"""Cactus graphs: every edge lies on at most one cycle.

The blocks of a cactus are bridges and simple cycles and any two share at
most one vertex.  Hanging the blocks from the root gives a tree of blocks;
each cycle block is then a cycle with graphs wedged at its non-entry
vertices, and only the sizes of those graphs affect which edge it drops.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycle import deletion_costs
from .graph import GraphError, RootedGraph, SpanningTree, tree_cost
from .oracle import SolveResult


class NotACactus(GraphError):
    pass


@dataclass(frozen=True)
class Block:
    """A bridge or a cycle.

    ``vertices[0]`` is the entry vertex (closest to the root).  For a cycle,
    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]`` cyclically.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def entry(self) -> int:
        return self.vertices[0]


@dataclass(frozen=True)
class CactusDecomposition:
    graph: RootedGraph
    blocks: tuple[Block, ...]
    hang: tuple[int, ...]
    """Per vertex, the number of vertices strictly below it in the block tree."""

    def children(self) -> dict[int, list[int]]:
        """Block indices grouped by entry vertex."""
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            out.setdefault(b.entry, []).append(i)
        return out


def _dfs(g: RootedGraph):
    """Iterative DFS from the root: preorder, parent vertex/edge, back edges."""
    n = g.vertex_count
    parent = [-1] * n
    parent_edge = [-1] * n
    order = [-1] * n
    back: list[tuple[int, int, int]] = []  # (lower vertex, ancestor, edge)
    counter = 0
    order[g.root] = counter
    counter += 1
    stack = [(g.root, iter(g.adjacency[g.root]))]
    while stack:
        x, it = stack[-1]
        for y, eid in it:
            if eid == parent_edge[x]:
                continue
            if order[y] == -1:
                order[y] = counter
                counter += 1
                parent[y] = x
                parent_edge[y] = eid
                stack.append((y, iter(g.adjacency[y])))
                break
            if order[y] < order[x]:
                back.append((x, y, eid))
        else:
            stack.pop()
    return order, parent, parent_edge, back


def _blocks(g: RootedGraph) -> tuple[list[Block], list[int]] | None:
    order, parent, parent_edge, back = _dfs(g)
    covered = [False] * g.vertex_count  # covered[x]: tree edge above x lies on a cycle
    blocks = []
    for low, top, eid in back:
        chain = [low]
        x = low
        while x != top:
            if covered[x]:
                return None
            covered[x] = True
            x = parent[x]
            chain.append(x)
        chain.reverse()  # top ... low
        edges = tuple(parent_edge[y] for y in chain[1:]) + (eid,)
        blocks.append(Block("cycle", tuple(chain), edges))
    for x in range(g.vertex_count):
        if x != g.root and not covered[x]:
            blocks.append(Block("bridge", (parent[x], x), (parent_edge[x],)))
    return blocks, order


def is_cactus(g: RootedGraph) -> bool:
    return _blocks(g) is not None


def decompose_cactus(g: RootedGraph) -> CactusDecomposition:
    found = _blocks(g)
    if found is None:
        raise NotACactus("some edge lies on two cycles")
    blocks, order = found
    hang = [0] * g.vertex_count
    # a block's non-entry vertices all come after its entry in DFS preorder,
    # so deepest entries first means every hang[] is final before it is read
    for b in sorted(blocks, key=lambda b: -order[b.entry]):
        hang[b.entry] += sum(1 + hang[x] for x in b.vertices[1:])
    blocks.sort(key=lambda b: min(b.edges))
    return CactusDecomposition(g, tuple(blocks), tuple(hang))


def block_deletion(decomp: CactusDecomposition, block: Block) -> tuple[int, int]:
    """Edge a cycle block should drop, and how many choices tie for best.

    The block is a cycle rooted at its entry with ``hang[x]`` cables wedged
    at each other vertex ``x``.  Cables to everything below the entry also
    traverse the path from the root to the entry, but that cost is the same
    whichever edge the block drops.
    """
    g = decomp.graph
    _, gam, tau = g.integer_weights
    weight = [1 + decomp.hang[x] for x in block.vertices]
    costs = deletion_costs([gam[e] for e in block.edges], [tau[e] for e in block.edges], weight)
    best = min(costs)
    winners = [block.edges[j] for j, c in enumerate(costs) if c == best]
    # deleting the larger id leaves the lexicographically smaller tree
    return max(winners), len(winners)


def cactus_ctp(g: RootedGraph, order: Sequence[int] | None = None) -> SolveResult:
    """Exact optimum for a cactus, one independent decision per cycle block.

    ``order`` optionally fixes the sequence in which blocks are decided; the
    result does not depend on it.
    """
    decomp = decompose_cactus(g)
    blocks = decomp.blocks
    sequence: Iterable[int] = range(len(blocks)) if order is None else order
    deleted = []
    count = 1
    for i in sequence:
        b = blocks[i]
        if b.kind != "cycle":
            continue
        e, ties = block_deletion(decomp, b)
        deleted.append(e)
        count *= ties
    tree = SpanningTree.without(g, deleted)
    return SolveResult(tree, tree_cost(g, tree), count, "cactus")
