"""Graphs, list instances, shared pruning passes, and the answer verifier.

Vertices are dense 0-based integers.  All values are immutable after
construction, so they can be shared freely across threads; every operation
in this package is a pure function over them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class UsageError(ValueError):
    """An operation was invoked outside its documented precondition.

    Distinct from a solver answering No: a usage error means the caller
    handed an engine an instance outside the class it is specified for.
    """


class InstanceError(ValueError):
    """A graph or instance violates a structural invariant."""


@dataclass(frozen=True)
class Infeasible:
    """Certified negative outcome of a pruning pass.

    ``rule`` names the rule that fired: ``"degree"`` (no degree-compatible
    image left), ``"empty-list"`` (neighborhood intersection emptied a
    list), or ``"injectivity"`` (two vertices forced onto one image).
    """

    rule: str


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is kept as per-vertex sorted tuples; no self-loops, no
    parallel edges.  ``m`` counts each edge once.
    """

    __slots__ = ("n", "m", "adj", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InstanceError("vertex count must be nonnegative")
        neighbors: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"edge [{u}, {v}] out of range for n={n}")
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InstanceError(f"duplicate edge [{key[0]}, {key[1]}]")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(ns)) for ns in neighbors)
        self._adjsets = tuple(frozenset(ns) for ns in neighbors)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """The graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is the i-th smallest input."""
        verts = sorted(vertices)
        rank = {v: i for i, v in enumerate(verts)}
        edges = [
            (rank[u], rank[v])
            for u in verts
            for v in self.adj[u]
            if u < v and v in rank
        ]
        return Graph(len(verts), edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class ListInstance:
    """A pair (g, h) plus, for each vertex of g, a candidate set in V(h).

    Lists are stored as sorted duplicate-free tuples so intersections are
    linear scans.  ``total_list_size`` is the usual instance-size parameter.
    """

    __slots__ = ("g", "h", "lists", "list_sets")

    def __init__(self, g: Graph, h: Graph, lists: Sequence[Iterable[int]]):
        if len(lists) != g.n:
            raise InstanceError(f"expected {g.n} lists, got {len(lists)}")
        clean = []
        for u, entries in enumerate(lists):
            unique = sorted(set(entries))
            for w in unique:
                if not (isinstance(w, int) and 0 <= w < h.n):
                    raise InstanceError(f"list entry {w} out of range for vertex {u}")
            clean.append(tuple(unique))
        self.g = g
        self.h = h
        self.lists = tuple(clean)
        self.list_sets = tuple(frozenset(entries) for entries in clean)

    @property
    def total_list_size(self) -> int:
        return sum(len(entries) for entries in self.lists)

    def with_lists(self, lists: Sequence[Iterable[int]]) -> "ListInstance":
        return ListInstance(self.g, self.h, lists)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ListInstance)
            and self.g == other.g
            and self.h == other.h
            and self.lists == other.lists
        )

    def __repr__(self) -> str:
        return f"ListInstance(n={self.g.n}, m={self.g.m}, l={self.total_list_size})"


@dataclass(frozen=True)
class SolveResult:
    """Either No, or Yes carrying a total mapping pi : V(g) -> V(h).

    A Yes produced by any engine in this package passes
    :func:`verify_list_iso`.  ``reason`` is a diagnostic tag on No answers.
    """

    mapping: tuple[int, ...] | None
    reason: str | None = None

    @staticmethod
    def yes(mapping: Sequence[int]) -> "SolveResult":
        return SolveResult(tuple(mapping))

    @staticmethod
    def no(reason: str | None = None) -> "SolveResult":
        return SolveResult(None, reason)

    @property
    def is_yes(self) -> bool:
        return self.mapping is not None


def verify_list_iso(inst: ListInstance, pi: Sequence[int]) -> bool:
    """True iff pi is a list-compatible isomorphism from g to h.

    Pure predicate: malformed mappings return False rather than raising.
    """
    g, h = inst.g, inst.h
    if g.n != h.n or g.m != h.m:
        return False
    try:
        if len(pi) != g.n:
            return False
        seen = set()
        for u in range(g.n):
            w = pi[u]
            if not (isinstance(w, int) and 0 <= w < h.n) or w in seen:
                return False
            seen.add(w)
            if w not in inst.list_sets[u]:
                return False
    except TypeError:
        return False
    # Injectivity plus m(g) == m(h) makes one direction of edge
    # preservation imply the other.
    for u in range(g.n):
        pu = pi[u]
        for v in g.adj[u]:
            if u < v and not h.has_edge(pu, pi[v]):
                return False
    return True


def degree_prune(inst: ListInstance) -> ListInstance | Infeasible:
    """Drop every candidate whose degree differs from its vertex's degree."""
    g, h = inst.g, inst.h
    pruned = []
    for u, entries in enumerate(inst.lists):
        if not entries:
            return Infeasible("empty-list")
        du = g.degree(u)
        kept = tuple(w for w in entries if h.degree(w) == du)
        if not kept:
            return Infeasible("degree")
        pruned.append(kept)
    return inst.with_lists(pruned)


def propagate_singletons(inst: ListInstance) -> ListInstance | Infeasible:
    """Run the forced-image rule to a fixpoint.

    Whenever a list is the singleton {w}, neighbors' lists are intersected
    with N(w) and w is removed from every other list.  Idempotent.
    """
    g, h = inst.g, inst.h
    lists = [set(entries) for entries in inst.lists]
    holders: dict[int, set[int]] = {}
    for u, entries in enumerate(lists):
        if not entries:
            return Infeasible("empty-list")
        for w in entries:
            holders.setdefault(w, set()).add(u)
    queue = deque(u for u, entries in enumerate(lists) if len(entries) == 1)
    processed: set[int] = set()

    def remove(u: int, w: int) -> str | None:
        lists[u].discard(w)
        holders[w].discard(u)
        if not lists[u]:
            return "empty"
        if len(lists[u]) == 1 and u not in processed:
            queue.append(u)
        return None

    while queue:
        u = queue.popleft()
        if u in processed or len(lists[u]) != 1:
            continue
        processed.add(u)
        (w,) = lists[u]
        for v in g.adj[u]:
            hw = h.neighbor_set(w)
            for t in [t for t in lists[v] if t not in hw]:
                if remove(v, t) is not None:
                    return Infeasible("empty-list")
        for other in [x for x in holders.get(w, ()) if x != u]:
            was_singleton = len(lists[other]) == 1
            if remove(other, w) is not None:
                return Infeasible("injectivity" if was_singleton else "empty-list")
    return inst.with_lists([sorted(entries) for entries in lists])


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    blocks = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        block = []
        while queue:
            u = queue.popleft()
            block.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        blocks.append(sorted(block))
    return blocks


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_cycle_graph(g: Graph) -> bool:
    """True iff g is a single cycle (connected, 2-regular, n >= 3)."""
    return (
        g.n >= 3
        and all(len(ns) == 2 for ns in g.adj)
        and is_connected(g)
    )


def is_path_graph(g: Graph) -> bool:
    """True iff g is a single path, including K1 and K2."""
    if g.n == 0 or not is_connected(g):
        return False
    return g.m == g.n - 1 and g.max_degree() <= 2


def classify_instance(inst: ListInstance) -> str:
    """Pick the cheapest applicable engine, in fixed priority order.

    Returns one of ``"lists2"``, ``"deg2"``, ``"tree"``, ``"interval"``,
    ``"oracle"``.  The treewidth engine is never auto-selected: it needs an
    explicit width parameter.
    """
    if all(len(entries) <= 2 for entries in inst.lists):
        return "lists2"
    g, h = inst.g, inst.h
    if g.max_degree() <= 2 and h.max_degree() <= 2:
        return "deg2"
    if is_forest(g) and is_forest(h):
        return "tree"
    if _all_components_interval(g) and _all_components_interval(h):
        return "interval"
    return "oracle"


def _all_components_interval(g: Graph) -> bool:
    from .intervals import recognize_interval

    return all(
        recognize_interval(g.induced(comp)) is not None
        for comp in connected_components(g)
    )
