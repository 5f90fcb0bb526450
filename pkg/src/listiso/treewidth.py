"""Treewidth machinery: the recursive partial-k-tree test and the XP
dynamic program over (border, component) states.

States are generated on demand inside the recursion rather than
precomputed; memo keys are the sorted border/component sets on both sides
plus the border bijection.  This favors clarity over constant factors and
is meant for desk-scale instances.
"""

from __future__ import annotations

from functools import partial

from .basic import solve_disconnected
from .core import (
    Graph,
    ListInstance,
    SolveResult,
    UsageError,
    connected_components,
    is_connected,
    verify_list_iso,
)
from .matching import BipartiteGraph, max_bipartite_matching


def _components_within(g: Graph, allowed: frozenset[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if v in allowed and v not in seen:
                    seen.add(v)
                    stack.append(v)
        out.append(frozenset(comp))
    return out


def _border(g: Graph, comp: frozenset[int], cut: frozenset[int]) -> frozenset[int]:
    touched: set[int] = set()
    for v in comp:
        touched.update(g.adj[v])
    return frozenset(touched & cut)


class _TreewidthChecker:
    """Memoized recursion deciding whether G[border + component] has
    treewidth at most k relative to the border set."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.memo: dict[tuple[frozenset[int], frozenset[int]], bool] = {}

    def ok(self, border: frozenset[int], comp: frozenset[int]) -> bool:
        if len(border) + len(comp) <= self.k + 1:
            return True
        key = (border, comp)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        result = False
        for v in sorted(comp):
            if self.splits_ok(border, comp, v):
                result = True
                break
        self.memo[key] = result
        return result

    def splits_ok(self, border: frozenset[int], comp: frozenset[int], v: int) -> bool:
        """True when removing v leaves only parts whose cut back into
        border+{v} stays within k and recursively has small treewidth."""
        grown = border | {v}
        for part in _components_within(self.g, comp - {v}):
            cut = _border(self.g, part, grown)
            if len(cut) > self.k or not self.ok(cut, part):
                return False
        return True


def check_treewidth(g: Graph, k: int) -> bool:
    """True iff g has treewidth at most k."""
    if k < 1:
        raise UsageError("treewidth bound k must be at least 1")
    checker = _TreewidthChecker(g, k)
    return all(
        checker.ok(frozenset(), frozenset(comp))
        for comp in connected_components(g)
    )


class _XpSolver:
    """List-compatible isomorphism between two connected graphs of
    treewidth at most k, by recursion over matched border states."""

    def __init__(self, inst: ListInstance, k: int):
        self.inst = inst
        self.g = inst.g
        self.h = inst.h
        self.k = k
        self.tw = _TreewidthChecker(inst.g, k)
        self.memo: dict[tuple, bool] = {}
        self.wit: dict[tuple, tuple] = {}

    def solve(self) -> SolveResult:
        g, h = self.g, self.h
        if g.n != h.n or g.m != h.m:
            return SolveResult.no("size-mismatch")
        if g.n == 0:
            return SolveResult.yes(())
        whole_g = frozenset(range(g.n))
        whole_h = frozenset(range(h.n))
        start = (frozenset(), whole_g, frozenset(), whole_h, ())
        if not self.equiv(*start):
            return SolveResult.no("no-extension")
        pi = [-1] * g.n
        self._rebuild(start, pi)
        result = SolveResult.yes(pi)
        assert verify_list_iso(self.inst, result.mapping)
        return result

    def equiv(
        self,
        border_g: frozenset[int],
        comp_g: frozenset[int],
        border_h: frozenset[int],
        comp_h: frozenset[int],
        f: tuple[tuple[int, int], ...],
    ) -> bool:
        """Does a list-compatible isomorphism G[border+comp] -> H[...]
        extending the border bijection f exist?"""
        key = (border_g, comp_g, border_h, comp_h, f)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        result = self._equiv_uncached(key)
        self.memo[key] = result
        return result

    def _equiv_uncached(self, key: tuple) -> bool:
        border_g, comp_g, border_h, comp_h, f = key
        if len(comp_g) != len(comp_h):
            return False
        if not comp_g:
            return True
        fmap = dict(f)
        g, h = self.g, self.h
        if len(comp_g) == 1:
            (v,) = comp_g
            (w,) = comp_h
            if w not in self.inst.list_sets[v]:
                return False
            if any(g.has_edge(v, c) != h.has_edge(w, fmap[c]) for c in border_g):
                return False
            self.wit[key] = ("leaf", v, w)
            return True

        v, parts = self._pick_vertex(border_g, comp_g)
        grown = border_g | {v}
        part_borders = [_border(g, part, grown) for part in parts]
        for w in sorted(comp_h & self.inst.list_sets[v]):
            if any(g.has_edge(v, c) != h.has_edge(w, fmap[c]) for c in border_g):
                continue
            f2 = dict(fmap)
            f2[v] = w
            hparts = _components_within(h, comp_h - {w})
            if len(hparts) != len(parts):
                continue
            grown_h = border_h | {w}
            hborders = [_border(h, part, grown_h) for part in hparts]
            pairing = self._pair_parts(parts, part_borders, hparts, hborders, f2)
            if pairing is None:
                continue
            self.wit[key] = ("split", v, w, pairing)
            return True
        return False

    def _pick_vertex(
        self, border: frozenset[int], comp: frozenset[int]
    ) -> tuple[int, list[frozenset[int]]]:
        """First vertex whose removal splits the component into parts with
        small borders of small recursive treewidth; one always exists for
        states reachable under the precondition."""
        for v in sorted(comp):
            if self.tw.splits_ok(border, comp, v):
                return v, _components_within(self.g, comp - {v})
        raise AssertionError("no valid split vertex; treewidth precondition broken")

    def _pair_parts(self, parts, part_borders, hparts, hborders, f2):
        """Perfect matching of g-parts onto h-parts under exact border
        correspondence and recursive equivalence; None when impossible."""
        count = len(parts)
        child_keys: dict[tuple[int, int], tuple] = {}
        rows: list[list[int]] = []
        for p in range(count):
            mapped_border = frozenset(f2[c] for c in part_borders[p])
            row = []
            for q in range(count):
                if len(parts[p]) != len(hparts[q]):
                    continue
                if mapped_border != hborders[q]:
                    continue
                f_child = tuple(sorted((c, f2[c]) for c in part_borders[p]))
                child = (part_borders[p], parts[p], hborders[q], hparts[q], f_child)
                if self.equiv(*child):
                    row.append(q)
                    child_keys[(p, q)] = child
            rows.append(sorted(row))
        matching = max_bipartite_matching(BipartiteGraph(count, count, rows))
        if matching.size != count:
            return None
        return [
            child_keys[(p, matching.pair_left[p])] for p in range(count)
        ]

    def _rebuild(self, key: tuple, pi: list[int]) -> None:
        stack = [key]
        while stack:
            state = stack.pop()
            if not state[1]:
                continue
            record = self.wit[state]
            if record[0] == "leaf":
                _, v, w = record
                pi[v] = w
                continue
            _, v, w, pairing = record
            pi[v] = w
            stack.extend(pairing)


def solve_treewidth_xp(inst: ListInstance, k: int) -> SolveResult:
    """Decide ListIso for graphs of treewidth at most k (XP in k).

    Raises a usage error when either graph exceeds the bound; disconnected
    inputs are composed per component.
    """
    if k < 1:
        raise UsageError("treewidth parameter k must be at least 1")
    g, h = inst.g, inst.h
    if not check_treewidth(g, k) or not check_treewidth(h, k):
        raise UsageError(f"input treewidth exceeds k={k}")
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")
    if is_connected(g) and is_connected(h):
        return _XpSolver(inst, k).solve()
    return solve_disconnected(inst, partial(_solve_connected, k=k))


def _solve_connected(inst: ListInstance, k: int) -> SolveResult:
    return _XpSolver(inst, k).solve()
