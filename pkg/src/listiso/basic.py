"""Baseline engines: problem interreductions, the lists-of-size-two engine,
single cycles and paths, maximum degree 2, and the generic composition of
per-component answers through bipartite matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import (
    Graph,
    Infeasible,
    ListInstance,
    SolveResult,
    UsageError,
    connected_components,
    degree_prune,
    is_cycle_graph,
    is_path_graph,
    propagate_singletons,
    verify_list_iso,
)
from .matching import BipartiteGraph, has_perfect_matching, max_bipartite_matching
from .twosat import TwoSatFormula, solve_2sat

ComponentSolver = Callable[[ListInstance], SolveResult]


def reduce_iso_to_aut(inst: ListInstance) -> ListInstance:
    """Encode a ListIso instance as ListAut on the disjoint union g + h.

    Vertices of the h copy are offset by n(g); their lists allow all of
    V(g), while g's lists are shifted into the copy.  The output has a
    list-compatible automorphism iff the input has a list-compatible
    isomorphism.
    """
    g, h = inst.g, inst.h
    offset = g.n
    edges = g.edges() + [(u + offset, v + offset) for u, v in h.edges()]
    union = Graph(offset + h.n, edges)
    lists = [tuple(w + offset for w in inst.lists[u]) for u in range(g.n)]
    lists += [tuple(range(offset))] * h.n
    return ListInstance(union, union, lists)


def reduce_aut_to_iso(aut_inst: ListInstance) -> ListInstance:
    """ListAut to ListIso: h becomes a fresh copy of g, lists unchanged."""
    if aut_inst.g != aut_inst.h:
        raise UsageError("reduce_aut_to_iso expects an instance with h equal to g")
    g = aut_inst.g
    copy = Graph(g.n, g.edges())
    return ListInstance(g, copy, aut_inst.lists)


def solve_lists_le2(inst: ListInstance) -> SolveResult:
    """Decide instances in which every list has at most two candidates.

    After degree pruning and singleton propagation the residual choice per
    vertex is binary; injectivity and neighborhood constraints become a
    2-SAT formula.  The extracted mapping is verified before returning.
    """
    if any(len(entries) > 2 for entries in inst.lists):
        raise UsageError("solve_lists_le2 expects every list to have size at most 2")
    g, h = inst.g, inst.h
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")

    pruned = degree_prune(inst)
    if isinstance(pruned, Infeasible):
        return SolveResult.no(pruned.rule)
    pruned = propagate_singletons(pruned)
    if isinstance(pruned, Infeasible):
        return SolveResult.no(pruned.rule)
    lists = pruned.lists

    # One boolean per two-candidate vertex: x_u true picks lists[u][1].
    var_of: dict[int, int] = {}
    for u, entries in enumerate(lists):
        if len(entries) == 2:
            var_of[u] = len(var_of)

    def forbid(u: int, j: int):
        # The literal saying "u is not mapped to lists[u][j]".
        return (var_of[u], j == 0)

    clauses = []

    # Injectivity: overlapping candidates among the binary vertices.
    # Propagation already removed every forced image from other lists.
    holders: dict[int, list[tuple[int, int]]] = {}
    for u in var_of:
        for j in (0, 1):
            holders.setdefault(lists[u][j], []).append((u, j))
    for spots in holders.values():
        for a in range(len(spots)):
            for b in range(a + 1, len(spots)):
                clauses.append((forbid(*spots[a]), forbid(*spots[b])))

    # Neighborhoods: mapping u to w forces every neighbor into N(w).
    for u in var_of:
        for j in (0, 1):
            w = lists[u][j]
            nw = h.neighbor_set(w)
            for v in g.adj[u]:
                if not any(t in nw for t in lists[v]):
                    lit = forbid(u, j)
                    clauses.append((lit, lit))
                    break
                if v in var_of:
                    for b in (0, 1):
                        if lists[v][b] not in nw:
                            clauses.append((forbid(u, j), forbid(v, b)))

    assignment = solve_2sat(TwoSatFormula(len(var_of), clauses))
    if assignment is None:
        return SolveResult.no("2sat-unsat")
    pi = [0] * g.n
    for u, entries in enumerate(lists):
        if u in var_of:
            pi[u] = entries[1] if assignment[var_of[u]] else entries[0]
        else:
            pi[u] = entries[0]
    result = SolveResult.yes(pi)
    assert verify_list_iso(inst, result.mapping)
    return result


def _linear_shape(g: Graph) -> str | None:
    if is_cycle_graph(g):
        return "cycle"
    if is_path_graph(g):
        return "path"
    return None


def _walk_from(g: Graph, start: int, second: int) -> list[int]:
    order = [start, second]
    prev, cur = start, second
    while len(order) < g.n:
        nxt = [x for x in g.adj[cur] if x != prev][0]
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _path_order(g: Graph) -> list[int]:
    if g.n == 1:
        return [0]
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    start = min(ends)
    return _walk_from(g, start, g.adj[start][0])


def solve_cycle_or_path(inst: ListInstance) -> SolveResult:
    """Decide instances where both graphs are a single cycle, or both a
    single path (including one-vertex paths).

    A cycle admits at most two isomorphisms per anchor image (the two
    orientations), a path at most two in total, so all candidates are
    tested directly.  Candidates are tried with the anchor's images
    ascending and the forward orientation before the reversed one.
    """
    g, h = inst.g, inst.h
    shape_g, shape_h = _linear_shape(g), _linear_shape(h)
    if shape_g is None or shape_h is None:
        raise UsageError("solve_cycle_or_path expects single paths or single cycles")
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")
    if shape_g != shape_h:
        return SolveResult.no("shape-mismatch")

    candidates: list[list[int]] = []
    if shape_g == "cycle":
        anchor = min(range(g.n), key=lambda u: (len(inst.lists[u]), u))
        g_order = _walk_from(g, anchor, g.adj[anchor][0])
        for v in inst.lists[anchor]:
            for second in h.adj[v]:
                h_order = _walk_from(h, v, second)
                candidates.append([0] * g.n)
                for pos, u in enumerate(g_order):
                    candidates[-1][u] = h_order[pos]
    else:
        g_order = _path_order(g)
        h_order = _path_order(h)
        for oriented in (h_order, h_order[::-1]):
            candidates.append([0] * g.n)
            for pos, u in enumerate(g_order):
                candidates[-1][u] = oriented[pos]

    for pi in candidates:
        if verify_list_iso(inst, pi):
            return SolveResult.yes(pi)
    return SolveResult.no("no-orientation")


def solve_max_deg2(inst: ListInstance) -> SolveResult:
    """Decide instances whose graphs are disjoint unions of paths and cycles."""
    if inst.g.max_degree() > 2 or inst.h.max_degree() > 2:
        raise UsageError("solve_max_deg2 expects maximum degree at most 2")
    if inst.g.n != inst.h.n or inst.g.m != inst.h.m:
        return SolveResult.no("size-mismatch")
    return solve_disconnected(inst, solve_cycle_or_path)


def restrict_instance(
    inst: ListInstance, g_verts: Iterable[int], h_verts: Iterable[int]
) -> ListInstance:
    """Sub-instance induced on the given vertex sets, lists clipped to the
    h side and relabeled to local indices (rank order on both sides)."""
    gv = sorted(g_verts)
    hv = sorted(h_verts)
    h_rank = {w: i for i, w in enumerate(hv)}
    lists = [
        tuple(h_rank[w] for w in inst.lists[u] if w in h_rank) for u in gv
    ]
    return ListInstance(inst.g.induced(gv), inst.h.induced(hv), lists)


@dataclass
class ComponentFeasibility:
    """Which component pairs admit a list-compatible isomorphism.

    ``graph`` has one left vertex per component of g and one right vertex
    per component of h; an edge carries a witness mapping (in global vertex
    labels) proving the pair feasible.
    """

    g_components: list[list[int]]
    h_components: list[list[int]]
    graph: BipartiteGraph
    witnesses: dict[tuple[int, int], dict[int, int]]


def _signature(g: Graph, comp: Sequence[int]) -> tuple:
    degs = sorted(g.degree(v) for v in comp)
    return (len(comp), sum(degs) // 2, tuple(degs))


def component_feasibility(
    inst: ListInstance, component_solver: ComponentSolver
) -> ComponentFeasibility:
    """Probe all component pairs that survive the shape and list screens.

    The solver is only invoked on pairs whose size, edge count, and degree
    multiset agree and where every g-vertex has at least one candidate
    inside the h component.
    """
    g, h = inst.g, inst.h
    g_comps = connected_components(g)
    h_comps = connected_components(h)
    h_sigs = [_signature(h, comp) for comp in h_comps]
    h_sets = [frozenset(comp) for comp in h_comps]
    edges: list[list[int]] = [[] for _ in g_comps]
    witnesses: dict[tuple[int, int], dict[int, int]] = {}
    for i, comp_g in enumerate(g_comps):
        sig = _signature(g, comp_g)
        for j, comp_h in enumerate(h_comps):
            if h_sigs[j] != sig:
                continue
            if any(inst.list_sets[u].isdisjoint(h_sets[j]) for u in comp_g):
                continue
            sub = restrict_instance(inst, comp_g, comp_h)
            result = component_solver(sub)
            if result.is_yes:
                edges[i].append(j)
                witnesses[(i, j)] = {
                    comp_g[u]: comp_h[w] for u, w in enumerate(result.mapping)
                }
    bip = BipartiteGraph(len(g_comps), len(h_comps), edges)
    return ComponentFeasibility(g_comps, h_comps, bip, witnesses)


def solve_disconnected(
    inst: ListInstance, component_solver: ComponentSolver
) -> SolveResult:
    """Compose per-component answers: feasible pairs form a bipartite graph,
    and the instance is a Yes exactly when it has a perfect matching.

    The global mapping is assembled from the witness mappings cached along
    the matched pairs, so no pair is ever solved twice.
    """
    g, h = inst.g, inst.h
    if g.n != h.n or g.m != h.m:
        return SolveResult.no("size-mismatch")
    feas = component_feasibility(inst, component_solver)
    if len(feas.g_components) != len(feas.h_components):
        return SolveResult.no("component-count")
    if not has_perfect_matching(feas.graph):
        return SolveResult.no("component-matching")
    matching = max_bipartite_matching(feas.graph)
    pi = [-1] * g.n
    for i, j in enumerate(matching.pair_left):
        assert j is not None
        for gu, hw in feas.witnesses[(i, j)].items():
            pi[gu] = hw
    result = SolveResult.yes(pi)
    assert verify_list_iso(inst, result.mapping)
    return result
