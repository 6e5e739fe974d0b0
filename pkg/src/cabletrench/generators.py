"""Seeded instance generators for tests, benchmarks and the ``gen`` command."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .graph import RootedGraph

Weigher = Callable[[random.Random], tuple[Fraction, Fraction]]


def random_weights(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Small random rationals, zero included, denominators up to 4."""
    return (
        Fraction(rng.randint(0, 12), rng.randint(1, 4)),
        Fraction(rng.randint(0, 12), rng.randint(1, 4)),
    )


def unit_weights(rng: random.Random) -> tuple[Fraction, Fraction]:
    return Fraction(1), Fraction(1)


def _build(n, pairs, root, rng, weigher, shuffle) -> RootedGraph:
    if shuffle:
        perm = list(range(n))
        rng.shuffle(perm)
        pairs = [(perm[u], perm[v]) for u, v in pairs]
        rng.shuffle(pairs)
        root = perm[root]
    edges = [(u, v, *weigher(rng)) for u, v in pairs]
    return RootedGraph(n, tuple(edges), root)


def _weigher(weights: str) -> Weigher:
    if weights == "random":
        return random_weights
    if weights == "unit":
        return unit_weights
    raise ValueError(f"unknown weight scheme {weights!r}")


def cycle(n: int, seed: int = 0, weights: str = "random", shuffle: bool = False) -> RootedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    rng = random.Random(seed)
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return _build(n, pairs, 0, rng, _weigher(weights), shuffle)


def theta(a: int, b: int, c: int, seed: int = 0, weights: str = "random", shuffle: bool = False) -> RootedGraph:
    """Root 0 and apex 1 joined by paths of ``a``, ``b`` and ``c`` edges."""
    lengths = (a, b, c)
    if min(lengths) < 1:
        raise ValueError("theta paths need at least one edge each")
    if sorted(lengths)[1] < 2:
        raise ValueError("at most one theta path may be a single edge")
    rng = random.Random(seed)
    n = 2
    pairs = []
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            pairs.append((prev, n))
            prev = n
            n += 1
        pairs.append((prev, 1))
    return _build(n, pairs, 0, rng, _weigher(weights), shuffle)


def tree(n: int, seed: int = 0, weights: str = "random", shuffle: bool = False) -> RootedGraph:
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = random.Random(seed)
    pairs = [(rng.randrange(i), i) for i in range(1, n)]
    return _build(n, pairs, 0, rng, _weigher(weights), shuffle)


def star(leaves: int, weights: str = "unit", seed: int = 0) -> RootedGraph:
    """Root 0 with ``leaves`` pendant vertices."""
    rng = random.Random(seed)
    return _build(leaves + 1, [(0, i) for i in range(1, leaves + 1)], 0, rng, _weigher(weights), False)


def grid(rows: int, cols: int, seed: int = 0, weights: str = "unit") -> RootedGraph:
    """The ``rows x cols`` grid; vertex ``(r, c)`` is ``r * cols + c`` and the root is 0."""
    if rows < 1 or cols < 1 or rows * cols < 1:
        raise ValueError("grid dimensions must be positive")
    rng = random.Random(seed)
    pairs = []
    for r in range(rows):
        for c in range(cols):
            x = r * cols + c
            if c + 1 < cols:
                pairs.append((x, x + 1))
            if r + 1 < rows:
                pairs.append((x, x + cols))
    return _build(rows * cols, pairs, 0, rng, _weigher(weights), False)


def cactus(
    n: int,
    seed: int = 0,
    weights: str = "random",
    min_cycle: int = 3,
    max_cycle: int = 6,
    cycle_prob: float = 0.6,
    shuffle: bool = True,
) -> RootedGraph:
    """Random cactus grown by wedging cycles and pendant edges onto random vertices.

    With ``shuffle`` the labels, edge order and root are randomised, so the
    root may sit inside a cycle, on a bridge or at an articulation vertex.
    """
    if n < 1:
        raise ValueError("a cactus needs at least one vertex")
    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    count = 1
    while count < n:
        room = n - count
        anchor = rng.randrange(count)
        if room >= min_cycle - 1 and rng.random() < cycle_prob:
            k = rng.randint(min_cycle, min(max_cycle, room + 1))
            ring = [anchor] + list(range(count, count + k - 1))
            pairs += [(ring[i], ring[(i + 1) % k]) for i in range(k)]
            count += k - 1
        else:
            pairs.append((anchor, count))
            count += 1
    root = rng.randrange(n) if shuffle else 0
    return _build(n, pairs, root, rng, _weigher(weights), shuffle)


def chain_cactus(n: int, cycle_len: int = 5, seed: int = 0, weights: str = "random") -> RootedGraph:
    """Cycles of ``cycle_len`` strung in a line, each glued to the previous one
    at a single vertex; a pendant path pads the vertex count to exactly ``n``."""
    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    count = 1
    joint = 0
    while n - count >= cycle_len - 1:
        ring = [joint] + list(range(count, count + cycle_len - 1))
        pairs += [(ring[i], ring[(i + 1) % cycle_len]) for i in range(cycle_len)]
        joint = ring[cycle_len // 2]
        count += cycle_len - 1
    while count < n:
        pairs.append((joint, count))
        joint = count
        count += 1
    return _build(n, pairs, 0, rng, _weigher(weights), False)


KINDS = ("cycle", "theta", "cactus", "grid", "tree", "chain")


def generate(kind: str, seed: int = 0, **params) -> RootedGraph:
    """Dispatch by name; ``params`` are the keyword arguments of the generator."""
    table = {
        "cycle": cycle,
        "theta": theta,
        "cactus": cactus,
        "grid": grid,
        "tree": tree,
        "chain": chain_cactus,
    }
    if kind not in table:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return table[kind](seed=seed, **params)
