"""Random instance and formula generators.  Everything is driven by a
seeded ``random.Random``, so a fixed seed reproduces the output exactly.
"""

from __future__ import annotations

import heapq
import random

from .core import Graph, ListInstance, UsageError
from .hardness import Cnf1in3

PLANTED_SHAPES = ("tree", "cycle", "interval", "deg2")


def _tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((min(a, b), max(a, b)))
    return edges


def _cycle_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n < 3:
        raise UsageError("a cycle needs at least 3 vertices")
    return [(v, (v + 1) % n) for v in range(n)]


def _deg2_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """A random disjoint union of paths and cycles covering n vertices."""
    edges = []
    start = 0
    while start < n:
        size = rng.randint(1, min(n - start, max(3, n // 2)))
        block = list(range(start, start + size))
        for a, b in zip(block, block[1:]):
            edges.append((a, b))
        if size >= 3 and rng.random() < 0.5:
            edges.append((block[0], block[-1]))
        start += size
    return edges


def _interval_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Intersection graph of n random integer intervals."""
    spans = []
    for _ in range(n):
        a = rng.randrange(2 * n)
        b = rng.randrange(2 * n)
        spans.append((min(a, b), max(a, b)))
    events = sorted(
        [(lo, 0, v) for v, (lo, _) in enumerate(spans)]
        + [(hi, 1, v) for v, (_, hi) in enumerate(spans)]
    )
    active: set[int] = set()
    edges = []
    for _, kind, v in events:
        if kind == 0:
            for u in active:
                edges.append((min(u, v), max(u, v)))
            active.add(v)
        else:
            active.discard(v)
    return sorted(set(edges))


_BUILDERS = {
    "tree": _tree_edges,
    "cycle": _cycle_edges,
    "interval": _interval_edges,
    "deg2": _deg2_edges,
}


def gen_planted(
    shape: str, n: int, seed: int, list_width: int, noise: float = 0.0
) -> ListInstance:
    """An instance with a hidden isomorphism ``sigma``.

    ``h`` is a relabeled copy of the generated graph and every list
    contains ``sigma(u)`` plus ``list_width - 1`` random decoys, so the
    answer is Yes by construction.  With ``noise`` > 0, that fraction of
    lists loses its planted image and the guarantee is off.
    """
    if shape not in _BUILDERS:
        raise UsageError(f"unknown shape {shape!r}; pick one of {PLANTED_SHAPES}")
    if n < 1:
        raise UsageError("n must be at least 1")
    if list_width < 1:
        raise UsageError("list_width must be at least 1")
    if not 0.0 <= noise <= 1.0:
        raise UsageError("noise must lie in [0, 1]")
    rng = random.Random(seed)
    g = Graph(n, _BUILDERS[shape](n, rng))
    sigma = list(range(n))
    rng.shuffle(sigma)
    h = g.relabeled(sigma)
    lists = []
    width = min(list_width, n)
    for u in range(n):
        entries = {sigma[u]}
        while len(entries) < width:
            entries.add(rng.randrange(n))
        if noise > 0 and rng.random() < noise:
            entries.discard(sigma[u])
        lists.append(sorted(entries))
    return ListInstance(g, h, lists)


def gen_sat_formula(num_vars: int, num_clauses: int, seed: int) -> Cnf1in3:
    """A random positive 1-in-3 formula with distinct-variable clauses."""
    if num_vars < 3:
        raise UsageError("at least 3 variables are needed for a clause")
    if num_clauses < 0:
        raise UsageError("clause count must be nonnegative")
    rng = random.Random(seed)
    clauses = [tuple(rng.sample(range(num_vars), 3)) for _ in range(num_clauses)]
    return Cnf1in3(num_vars, clauses)
