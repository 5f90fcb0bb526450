"""Bottom-up list dynamic programming for trees.

Both trees are rooted at their centers (subdividing a central edge when
needed), and a per-vertex feasible-image set is computed upward: an image
survives when the children's feasible sets admit a perfect matching onto
the image's children.  Everything is iterative, so paths of a hundred
thousand vertices are fine.
"""

from __future__ import annotations

from collections import deque

from .core import (
    Graph,
    ListInstance,
    SolveResult,
    UsageError,
    is_tree,
    verify_list_iso,
)
from .matching import BipartiteGraph, has_perfect_matching, max_bipartite_matching


def find_center(g: Graph) -> int | tuple[int, int]:
    """Center of a tree by leaf peeling: a vertex, or a central edge (u, v)
    with u < v."""
    if not is_tree(g):
        raise UsageError("find_center expects a tree")
    if g.n == 1:
        return 0
    degree = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in g.adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    if remaining == 1:
        return layer[0]
    a, b = sorted(layer)
    return (a, b)


def _subdivide_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    u, v = edge
    edges = [e for e in g.edges() if e != (u, v)]
    mid = g.n
    edges += [(u, mid), (v, mid)]
    return Graph(g.n + 1, edges)


def _rooted_order(g: Graph, root: int) -> tuple[list[int], list[int], list[list[int]]]:
    """BFS order, parent array, and children arrays for g rooted at root."""
    parent = [-1] * g.n
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    children: list[list[int]] = [[] for _ in range(g.n)]
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                children[u].append(v)
                order.append(v)
                queue.append(v)
    return order, parent, children


def _children_matching(
    kids_g: list[int],
    kids_h: list[int],
    feasible: list[set[int]],
) -> list[int] | None:
    """Perfect matching of g-children onto h-children along feasible sets,
    or None when none exists.  Returns the matched h child per g child."""
    k = len(kids_g)
    pos = {w: idx for idx, w in enumerate(kids_h)}
    edges = [
        sorted(pos[w] for w in feasible[u] if w in pos) for u in kids_g
    ]
    bip = BipartiteGraph(k, k, edges)
    matching = max_bipartite_matching(bip)
    if matching.size != k:
        return None
    return [kids_h[matching.pair_left[idx]] for idx in range(k)]


def _bottom_up_feasible(
    work_g: Graph,
    work_h: Graph,
    lists: list[tuple[int, ...]],
    root_g: int,
    root_h: int,
) -> list[set[int]]:
    """Per-vertex sets of images compatible with the whole subtree below.

    An image w survives for u when it is listed, degrees and child counts
    agree, and the children's feasible sets admit a perfect matching onto
    w's children.
    """
    order_g, _, children_g = _rooted_order(work_g, root_g)
    _, parent_h, children_h = _rooted_order(work_h, root_h)

    feasible: list[set[int]] = [set() for _ in range(work_g.n)]
    for u in reversed(order_g):
        kids = children_g[u]
        k = len(kids)
        if k == 0:
            feasible[u] = {
                w
                for w in lists[u]
                if not children_h[w] and work_h.degree(w) == work_g.degree(u)
            }
            continue
        # Group the children's feasible images by their parent in h, so
        # each candidate w only sees the edges that matter to it.
        by_parent: dict[int, list[tuple[int, int]]] = {}
        for idx, child in enumerate(kids):
            for w in feasible[child]:
                p = parent_h[w]
                if p != -1:
                    by_parent.setdefault(p, []).append((idx, w))
        for w in lists[u]:
            kids_h = children_h[w]
            if len(kids_h) != k or work_h.degree(w) != work_g.degree(u):
                continue
            slots = by_parent.get(w)
            if slots is None or len(slots) < k:
                continue
            pos = {x: i for i, x in enumerate(kids_h)}
            edges: list[list[int]] = [[] for _ in range(k)]
            for idx, x in slots:
                edges[idx].append(pos[x])
            for row in edges:
                row.sort()
            if has_perfect_matching(BipartiteGraph(k, k, edges)):
                feasible[u].add(w)
    return feasible


def solve_tree(inst: ListInstance) -> SolveResult:
    """Decide a ListIso instance on two trees.

    Forests belong to :func:`listiso.basic.solve_disconnected`; handing one
    to this function is a usage error.
    """
    g, h = inst.g, inst.h
    if not is_tree(g) or not is_tree(h):
        raise UsageError("solve_tree expects trees")
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")

    center_g, center_h = find_center(g), find_center(h)
    if isinstance(center_g, int) != isinstance(center_h, int):
        return SolveResult.no("center-mismatch")

    original_n = g.n
    lists = list(inst.lists)
    if isinstance(center_g, int):
        root_g, root_h = center_g, center_h
        work_g, work_h = g, h
    else:
        # Subdivide both central edges; the fresh vertices reference only
        # each other, which pins the roots together.
        work_g = _subdivide_edge(g, center_g)
        work_h = _subdivide_edge(h, center_h)
        root_g, root_h = g.n, h.n
        lists.append((root_h,))

    _, _, children_g = _rooted_order(work_g, root_g)
    _, _, children_h = _rooted_order(work_h, root_h)
    feasible = _bottom_up_feasible(work_g, work_h, lists, root_g, root_h)

    if root_h not in feasible[root_g]:
        return SolveResult.no("root-infeasible")

    # Rebuild the mapping top-down, re-running the matching at each chosen
    # pair; membership in the feasible set guarantees one exists.
    pi = [-1] * work_g.n
    pi[root_g] = root_h
    stack = [(root_g, root_h)]
    while stack:
        u, w = stack.pop()
        kids = children_g[u]
        if not kids:
            continue
        matched = _children_matching(kids, children_h[w], feasible)
        assert matched is not None
        for child, target in zip(kids, matched):
            pi[child] = target
            stack.append((child, target))

    mapping = tuple(pi[:original_n])
    result = SolveResult.yes(mapping)
    assert verify_list_iso(inst, result.mapping)
    return result
