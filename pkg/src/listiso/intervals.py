"""Interval graphs: recognition, MPQ-trees with sections, and the solver.

Recognition runs at desk scale: Lex-BFS gives a perfect elimination
ordering (chordality test), maximal cliques fall out of it, and a
consecutive arrangement of the cliques is found by an exact backtracking
search with memoized dead ends.  The MPQ-tree is then derived from the
arrangement directly: for every vertex the cliques containing it form an
interval of positions, and the laminar structure of those intervals is
exactly the P/Q skeleton.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    Graph,
    ListInstance,
    SolveResult,
    UsageError,
    is_connected,
    verify_list_iso,
)
from .matching import BipartiteGraph, max_bipartite_matching


@dataclass(frozen=True)
class CliqueOrdering:
    """Maximal cliques arranged so each vertex occupies consecutive ones."""

    cliques: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.cliques)


class MpqNode:
    """One node of an MPQ-tree.

    Leaf and P nodes carry a single section (a vertex tuple); a Q node
    carries one section per child.  ``span`` is the interval of clique
    positions the subtree covers in the arrangement the tree was built
    from.
    """

    __slots__ = ("kind", "children", "sections", "span", "code")

    def __init__(self, kind, children, sections, span, code):
        self.kind = kind
        self.children = children
        self.sections = sections
        self.span = span
        self.code = code

    def __repr__(self) -> str:
        return f"MpqNode({self.kind}, span={self.span})"


@dataclass
class MpqTree:
    root: MpqNode
    clique_count: int

    def nodes(self) -> list[MpqNode]:
        """All nodes, children before parents."""
        out: list[MpqNode] = []
        stack: list[tuple[MpqNode, bool]] = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                out.append(node)
                continue
            stack.append((node, True))
            for child in node.children:
                stack.append((child, False))
        return out


def _lex_bfs(g: Graph) -> list[int]:
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        stamp = n - step
        for w in g.adj[best]:
            if not visited[w]:
                labels[w].append(stamp)
    return order


def _elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when g is not chordal."""
    order = _lex_bfs(g)
    elim = order[::-1]
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if later:
            anchor = min(later, key=lambda x: pos[x])
            for u in later:
                if u != anchor and not g.has_edge(anchor, u):
                    return None
    return elim


def _maximal_cliques(g: Graph, elim: list[int]) -> list[frozenset[int]]:
    pos = {v: i for i, v in enumerate(elim)}
    candidates = []
    for v in elim:
        clique = frozenset([v] + [u for u in g.adj[v] if pos[u] > pos[v]])
        candidates.append(clique)
    candidates.sort(key=lambda c: (-len(c), sorted(c)))
    kept: list[frozenset[int]] = []
    for cand in candidates:
        if not any(cand <= other for other in kept):
            kept.append(cand)
    kept.sort(key=sorted)
    return kept


def _consecutive_arrangement(cliques: list[frozenset[int]]) -> list[int] | None:
    """An order of clique indices in which every vertex's cliques are
    consecutive, or None if no such order exists.

    Exact depth-first search: the next clique must contain exactly the
    vertices whose runs are open, which forces the order almost everywhere
    on interval graphs.  Failed prefixes are memoized as vertex sets.
    """
    q = len(cliques)
    if q <= 1:
        return list(range(q))
    total: dict[int, int] = {}
    for clique in cliques:
        for v in clique:
            total[v] = total.get(v, 0) + 1
    seen = {v: 0 for v in total}
    open_verts: set[int] = set()
    placed: list[int] = []
    placed_ids: set[int] = set()
    failed: set[frozenset[int]] = set()

    def push(c: int) -> None:
        placed.append(c)
        placed_ids.add(c)
        for v in cliques[c]:
            seen[v] += 1
            if seen[v] == total[v]:
                open_verts.discard(v)
            else:
                open_verts.add(v)

    def pop() -> None:
        c = placed.pop()
        placed_ids.discard(c)
        for v in cliques[c]:
            seen[v] -= 1
            if seen[v] == 0:
                open_verts.discard(v)
            else:
                open_verts.add(v)

    def search() -> bool:
        if len(placed) == q:
            return True
        key = frozenset(placed_ids)
        if key in failed:
            return False
        for c in range(q):
            if c in placed_ids:
                continue
            clique = cliques[c]
            if not open_verts <= clique:
                continue
            if any(seen[v] > 0 and v not in open_verts for v in clique):
                continue
            push(c)
            if search():
                return True
            pop()
        failed.add(key)
        return False

    return placed[:] if search() else None


def _runs_consecutive(cliques: tuple[frozenset[int], ...], n: int) -> bool:
    spans: dict[int, list[int]] = {}
    for i, clique in enumerate(cliques):
        for v in clique:
            spans.setdefault(v, []).append(i)
    if len(spans) != n:
        return False
    return all(ps[-1] - ps[0] + 1 == len(ps) for ps in spans.values())


def recognize_interval(g: Graph) -> CliqueOrdering | None:
    """A consecutive clique arrangement of g, or None when g is not an
    interval graph.  Not-interval is a clean outcome, not an error."""
    if g.n == 0:
        return CliqueOrdering(())
    if not is_connected(g):
        raise UsageError("recognize_interval expects a connected graph")
    elim = _elimination_order(g)
    if elim is None:
        return None
    cliques = _maximal_cliques(g, elim)
    arrangement = _consecutive_arrangement(cliques)
    if arrangement is None:
        return None
    ordered = tuple(cliques[i] for i in arrangement)
    assert _runs_consecutive(ordered, g.n)
    return CliqueOrdering(ordered)


def _properly_overlap(a: tuple[int, int], b: tuple[int, int]) -> bool:
    if a[1] < b[0] or b[1] < a[0]:
        return False
    if b[0] <= a[0] and a[1] <= b[1]:
        return False
    if a[0] <= b[0] and b[1] <= a[1]:
        return False
    return True


def build_mpq(g: Graph, ordering: CliqueOrdering) -> MpqTree:
    """Derive the MPQ-tree from a consecutive clique arrangement.

    Vertices whose position interval spans a whole subproblem sit in that
    node's section; gaps no interval crosses split a P-node; otherwise the
    maximal proper sub-intervals that no vertex interval straddles become
    the ordered children of a Q-node.  Children of P-nodes are sorted by a
    canonical subtree signature so equal builds come out identical.
    """
    cliques = ordering.cliques
    q = len(cliques)
    if q == 0:
        raise UsageError("an empty graph has no MPQ-tree")
    if not _runs_consecutive(cliques, g.n):
        raise UsageError("clique ordering violates the consecutive-ones property")
    itv: dict[int, tuple[int, int]] = {}
    for i, clique in enumerate(cliques):
        for v in clique:
            lo, _ = itv.get(v, (i, i))
            itv[v] = (lo, i)

    def build(lo: int, hi: int, verts: list[int]) -> MpqNode:
        if lo == hi:
            section = tuple(sorted(verts))
            return MpqNode("leaf", (), section, (lo, hi), ("L", len(section)))
        universal = sorted(v for v in verts if itv[v] == (lo, hi))
        inner = [v for v in verts if itv[v] != (lo, hi)]
        crossed = [False] * (hi - lo)
        for v in inner:
            l, r = itv[v]
            for b in range(l, r):
                crossed[b - lo] = True
        blocks: list[tuple[int, int]] = []
        start = lo
        for b in range(lo, hi):
            if not crossed[b - lo]:
                blocks.append((start, b))
                start = b + 1
        blocks.append((start, hi))

        if len(blocks) >= 2:
            children = []
            for blo, bhi in blocks:
                kid_verts = [v for v in inner if blo <= itv[v][0] and itv[v][1] <= bhi]
                children.append(build(blo, bhi, kid_verts))
            children.sort(key=lambda node: node.code)
            section = tuple(universal)
            code = ("P", len(section), tuple(node.code for node in children))
            return MpqNode("p", tuple(children), section, (lo, hi), code)

        # One block: a Q-node.  Children are the maximal proper position
        # intervals no inner vertex interval straddles.
        inner_itvs = [itv[v] for v in inner]
        modules: list[tuple[int, int]] = []
        start = lo
        while start <= hi:
            best = start
            for end in range(start, hi + 1):
                if (start, end) == (lo, hi):
                    break
                cand = (start, end)
                if all(not _properly_overlap(iv, cand) for iv in inner_itvs):
                    best = end
            modules.append((start, best))
            start = best + 1
        assert len(modules) >= 3, "Q-node split must produce at least 3 children"

        children = []
        spanners = list(universal)
        for v in inner:
            l, r = itv[v]
            inside = any(mlo <= l and r <= mhi for mlo, mhi in modules)
            if not inside:
                spanners.append(v)
        for mlo, mhi in modules:
            kid_verts = [
                v for v in inner if mlo <= itv[v][0] and itv[v][1] <= mhi
            ]
            children.append(build(mlo, mhi, kid_verts))
        starts = {mlo for mlo, _ in modules}
        ends = {mhi for _, mhi in modules}
        for v in spanners:
            l, r = itv[v]
            assert l in starts and r in ends, "section must align with Q children"
        sections = tuple(
            tuple(sorted(v for v in spanners if itv[v][0] <= mlo and mhi <= itv[v][1]))
            for mlo, mhi in modules
        )
        sizes = tuple(len(section) for section in sections)
        fwd = (tuple(node.code for node in children), sizes)
        rev = (tuple(node.code for node in reversed(children)), sizes[::-1])
        code = ("Q", min(fwd, rev))
        return MpqNode("q", tuple(children), sections, (lo, hi), code)

    root = build(0, q - 1, sorted(itv))
    tree = MpqTree(root, q)
    _check_sections(tree, g.n)
    return tree


def _check_sections(tree: MpqTree, n: int) -> None:
    assigned: set[int] = set()
    leaves = 0
    for node in tree.nodes():
        if node.kind == "leaf":
            leaves += 1
            groups = [node.sections]
        elif node.kind == "p":
            assert len(node.children) >= 2
            groups = [node.sections]
        else:
            assert len(node.children) >= 3
            groups = list(node.sections)
            locals_seen: dict[int, list[int]] = {}
            for i, section in enumerate(groups):
                for v in section:
                    locals_seen.setdefault(v, []).append(i)
            for positions in locals_seen.values():
                assert positions == list(range(positions[0], positions[-1] + 1))
        here = {v for section in groups for v in section}
        assert not (here & assigned)
        assigned |= here
    assert leaves == tree.clique_count
    assert assigned == set(range(n)), "every vertex sits in exactly one node"


def _section_match(
    inst: ListInstance, verts_g: tuple[int, ...], verts_h: tuple[int, ...]
) -> list[int] | None:
    """Match same-section vertices by lists; None when impossible.

    Sections induce complete subgraphs on both sides, so lists are the
    only constraint."""
    if len(verts_g) != len(verts_h):
        return None
    pos = {w: i for i, w in enumerate(verts_h)}
    rows = [
        sorted(pos[w] for w in inst.list_sets[u] if w in pos) for u in verts_g
    ]
    matching = max_bipartite_matching(
        BipartiteGraph(len(verts_g), len(verts_h), rows)
    )
    if matching.size != len(verts_g):
        return None
    return [verts_h[matching.pair_left[i]] for i in range(len(verts_g))]


def _q_groups(node: MpqNode) -> dict[tuple[int, int], tuple[int, ...]]:
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, section in enumerate(node.sections):
        for v in section:
            first.setdefault(v, i)
            last[v] = i
    groups: dict[tuple[int, int], list[int]] = {}
    for v, f in first.items():
        groups.setdefault((f, last[v]), []).append(v)
    return {span: tuple(sorted(vs)) for span, vs in groups.items()}


class _IntervalMatcher:
    """Bottom-up node-pair feasibility over two MPQ-trees."""

    def __init__(self, inst: ListInstance, tg: MpqTree, th: MpqTree):
        self.inst = inst
        self.nodes_g = tg.nodes()
        self.nodes_h = th.nodes()
        self.index_g = {id(node): i for i, node in enumerate(self.nodes_g)}
        self.index_h = {id(node): i for i, node in enumerate(self.nodes_h)}
        self.feas: dict[tuple[int, int], bool] = {}
        self.root_g = tg.root
        self.root_h = th.root

    def run(self) -> bool:
        for gi, ng in enumerate(self.nodes_g):
            for hi, nh in enumerate(self.nodes_h):
                self.feas[(gi, hi)] = self._pair(ng, nh)
        return self.ok(self.root_g, self.root_h)

    def ok(self, ng: MpqNode, nh: MpqNode) -> bool:
        return self.feas[(self.index_g[id(ng)], self.index_h[id(nh)])]

    def _pair(self, ng: MpqNode, nh: MpqNode) -> bool:
        if ng.kind != nh.kind:
            return False
        if ng.kind == "leaf":
            return _section_match(self.inst, ng.sections, nh.sections) is not None
        if ng.kind == "p":
            if len(ng.children) != len(nh.children):
                return False
            if self._children_matching(ng.children, nh.children) is None:
                return False
            return _section_match(self.inst, ng.sections, nh.sections) is not None
        if len(ng.children) != len(nh.children):
            return False
        return (
            self._q_orientation(ng, nh, reverse=False)
            or self._q_orientation(ng, nh, reverse=True)
        )

    def _children_matching(
        self, kids_g: tuple[MpqNode, ...], kids_h: tuple[MpqNode, ...]
    ) -> list[int] | None:
        k = len(kids_g)
        rows = []
        for cg in kids_g:
            rows.append(
                sorted(j for j, ch in enumerate(kids_h) if self.ok(cg, ch))
            )
        matching = max_bipartite_matching(BipartiteGraph(k, k, rows))
        if matching.size != k:
            return None
        return list(matching.pair_left)

    def _q_orientation(self, ng: MpqNode, nh: MpqNode, reverse: bool) -> bool:
        k = len(ng.children)
        for i in range(k):
            j = k - 1 - i if reverse else i
            if not self.ok(ng.children[i], nh.children[j]):
                return False
        groups_g = _q_groups(ng)
        groups_h = _q_groups(nh)
        mapped = {}
        for (a, b), verts in groups_g.items():
            span = (k - 1 - b, k - 1 - a) if reverse else (a, b)
            mapped[span] = verts
        if set(mapped) != set(groups_h):
            return False
        return all(
            _section_match(self.inst, mapped[span], groups_h[span]) is not None
            for span in mapped
        )

    def rebuild(self) -> list[int]:
        pi = [-1] * self.inst.g.n
        stack = [(self.root_g, self.root_h)]
        while stack:
            ng, nh = stack.pop()
            if ng.kind == "leaf":
                self._assign_sections(ng.sections, nh.sections, pi)
                continue
            if ng.kind == "p":
                self._assign_sections(ng.sections, nh.sections, pi)
                matched = self._children_matching(ng.children, nh.children)
                assert matched is not None
                for i, j in enumerate(matched):
                    stack.append((ng.children[i], nh.children[j]))
                continue
            reverse = not self._q_orientation(ng, nh, reverse=False)
            k = len(ng.children)
            groups_g = _q_groups(ng)
            groups_h = _q_groups(nh)
            for (a, b), verts in groups_g.items():
                span = (k - 1 - b, k - 1 - a) if reverse else (a, b)
                self._assign_sections(verts, groups_h[span], pi)
            for i in range(k):
                j = k - 1 - i if reverse else i
                stack.append((ng.children[i], nh.children[j]))
        return pi

    def _assign_sections(self, verts_g, verts_h, pi) -> None:
        matched = _section_match(self.inst, verts_g, verts_h)
        assert matched is not None
        for u, w in zip(verts_g, matched):
            pi[u] = w


def solve_interval(inst: ListInstance) -> SolveResult:
    """Decide a ListIso instance on two connected interval graphs.

    Disconnected interval graphs belong to
    :func:`listiso.basic.solve_disconnected` with this engine as the
    component solver.
    """
    g, h = inst.g, inst.h
    if g.n == 0 and h.n == 0:
        return SolveResult.yes(())
    if not is_connected(g) or not is_connected(h):
        raise UsageError("solve_interval expects connected graphs")
    ordering_g = recognize_interval(g)
    ordering_h = recognize_interval(h)
    if ordering_g is None or ordering_h is None:
        raise UsageError("solve_interval expects interval graphs")
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")
    matcher = _IntervalMatcher(inst, build_mpq(g, ordering_g), build_mpq(h, ordering_h))
    if not matcher.run():
        return SolveResult.no("root-infeasible")
    result = SolveResult.yes(matcher.rebuild())
    assert verify_list_iso(inst, result.mapping)
    return result
