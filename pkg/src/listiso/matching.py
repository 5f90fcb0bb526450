"""Bipartite maximum matching (Hopcroft-Karp), the workhorse subroutine.

Phases do BFS layering followed by DFS augmentation along shortest paths;
vertices are always scanned in ascending index order, so the result is
deterministic for a fixed input.  The augmenting DFS is iterative to
survive very deep paths on large inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import InstanceError

_INF = -1


class BipartiteGraph:
    """Bipartite graph given by per-left-vertex sorted right neighbor lists."""

    __slots__ = ("nl", "nr", "edges")

    def __init__(self, nl: int, nr: int, edges: Sequence[Iterable[int]]):
        if nl < 0 or nr < 0:
            raise InstanceError("side sizes must be nonnegative")
        if len(edges) != nl:
            raise InstanceError(f"expected {nl} edge lists, got {len(edges)}")
        clean = []
        for u, targets in enumerate(edges):
            ts = sorted(targets)
            for v in ts:
                if not (0 <= v < nr):
                    raise InstanceError(f"edge endpoint {v} out of range at left vertex {u}")
            if len(set(ts)) != len(ts):
                raise InstanceError(f"duplicate edge at left vertex {u}")
            clean.append(tuple(ts))
        self.nl = nl
        self.nr = nr
        self.edges = tuple(clean)


@dataclass(frozen=True)
class Matching:
    """Mutually inverse partial injections between the two sides."""

    pair_left: tuple[int | None, ...]
    pair_right: tuple[int | None, ...]

    @property
    def size(self) -> int:
        return sum(1 for v in self.pair_left if v is not None)


def max_bipartite_matching(b: BipartiteGraph) -> Matching:
    """A maximum-cardinality matching of ``b``."""
    matching, _ = _hopcroft_karp(b)
    return matching


def has_perfect_matching(b: BipartiteGraph) -> bool:
    """True iff a matching saturates both sides (so nl == nr is required)."""
    if b.nl != b.nr:
        return False
    return max_bipartite_matching(b).size == b.nl


def _hopcroft_karp(b: BipartiteGraph) -> tuple[Matching, int]:
    """Run the algorithm; also report the number of phases for diagnostics."""
    nl, adj = b.nl, b.edges
    pair_l: list[int] = [_INF] * nl
    pair_r: list[int] = [_INF] * b.nr
    dist: list[int] = [0] * nl
    phases = 0
    while True:
        goal = _bfs_layer(adj, pair_l, pair_r, dist)
        if goal == _INF:
            break
        phases += 1
        for u in range(nl):
            if pair_l[u] == _INF:
                _dfs_augment(adj, pair_l, pair_r, dist, goal, u)
    left = tuple(v if v != _INF else None for v in pair_l)
    right = tuple(u if u != _INF else None for u in pair_r)
    return Matching(left, right), phases


def _bfs_layer(adj, pair_l, pair_r, dist) -> int:
    """Layer left vertices by alternating distance; return the shortest
    augmenting-path length found, or _INF if none exists."""
    queue: deque[int] = deque()
    for u in range(len(pair_l)):
        if pair_l[u] == _INF:
            dist[u] = 0
            queue.append(u)
        else:
            dist[u] = _INF
    goal = _INF
    while queue:
        u = queue.popleft()
        if goal != _INF and dist[u] >= goal:
            continue
        for v in adj[u]:
            w = pair_r[v]
            if w == _INF:
                if goal == _INF:
                    goal = dist[u] + 1
            elif dist[w] == _INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return goal


def _dfs_augment(adj, pair_l, pair_r, dist, goal, root) -> bool:
    """Find one shortest augmenting path from ``root`` and flip it."""
    stack: list[tuple[int, int]] = [(root, 0)]
    chosen: list[int] = []
    while stack:
        u, i = stack[-1]
        advanced = False
        while i < len(adj[u]):
            v = adj[u][i]
            i += 1
            w = pair_r[v]
            if w == _INF:
                if dist[u] + 1 == goal:
                    stack[-1] = (u, i)
                    chosen.append(v)
                    for (lu, _), rv in zip(stack, chosen):
                        pair_l[lu] = rv
                        pair_r[rv] = lu
                    return True
            elif dist[w] == dist[u] + 1:
                stack[-1] = (u, i)
                chosen.append(v)
                stack.append((w, 0))
                advanced = True
                break
        if not advanced:
            dist[u] = _INF
            stack.pop()
            if chosen:
                chosen.pop()
    return False
