"""Brute-force reference solver and counter.

This is the ground truth the engines are audited against, so it shares
nothing with them beyond the instance types: no pruning passes, no
matching, just plain backtracking with forward checking.  Intended for
n up to roughly 12.
"""

from __future__ import annotations

from typing import Sequence

from .core import ListInstance, SolveResult


def _search(inst: ListInstance, order: Sequence[int], count_all: bool):
    g, h = inst.g, inst.h
    n = g.n
    pi = [-1] * n
    used = [False] * h.n
    assigned: list[int] = []
    found = 0
    witness: tuple[int, ...] | None = None

    def extend(depth: int) -> bool:
        nonlocal found, witness
        if depth == n:
            found += 1
            if witness is None:
                witness = tuple(pi)
            return not count_all
        u = order[depth]
        for w in inst.lists[u]:
            if used[w]:
                continue
            ok = True
            for v in assigned:
                if g.has_edge(u, v) != h.has_edge(w, pi[v]):
                    ok = False
                    break
            if not ok:
                continue
            pi[u] = w
            used[w] = True
            assigned.append(u)
            if extend(depth + 1):
                return True
            assigned.pop()
            used[w] = False
            pi[u] = -1
        return False

    extend(0)
    return found, witness


def _default_order(inst: ListInstance) -> list[int]:
    g = inst.g
    return sorted(range(g.n), key=lambda u: (-g.degree(u), u))


def brute_solve(inst: ListInstance, order: Sequence[int] | None = None) -> SolveResult:
    """Complete backtracking search; No really means no mapping exists.

    ``order`` overrides the descending-degree exploration order; the
    answer does not depend on it.
    """
    if inst.g.n != inst.h.n:
        return SolveResult.no("size-mismatch")
    if order is None:
        order = _default_order(inst)
    _, witness = _search(inst, order, count_all=False)
    if witness is None:
        return SolveResult.no("exhausted")
    return SolveResult.yes(witness)


def count_list_isos(inst: ListInstance, order: Sequence[int] | None = None) -> int:
    """Exact number of list-compatible isomorphisms from g to h."""
    if inst.g.n != inst.h.n:
        return 0
    if order is None:
        order = _default_order(inst)
    found, _ = _search(inst, order, count_all=True)
    return found
