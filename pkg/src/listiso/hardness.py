"""Hardness toolkit: the reduction from positive 1-in-3 SAT to ListAut,
its certificate converters, and list liftings of two classic
vertex-gadget GI-hardness reductions (bipartite subdivision, split/chordal
clique completion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Graph,
    InstanceError,
    ListInstance,
    UsageError,
    is_cycle_graph,
)


class Cnf1in3:
    """Positive 1-in-3 SAT formula: every clause is a triple of distinct
    variables, satisfied when exactly one of them is true."""

    __slots__ = ("var_count", "clauses")

    def __init__(self, var_count: int, clauses: Sequence[Sequence[int]]):
        if var_count < 0:
            raise InstanceError("variable count must be nonnegative")
        clean = []
        for idx, clause in enumerate(clauses):
            triple = tuple(clause)
            if len(triple) != 3:
                raise InstanceError(f"clause {idx} must have exactly 3 variables")
            for var in triple:
                if not (0 <= var < var_count):
                    raise InstanceError(f"clause {idx} variable {var} out of range")
            if len(set(triple)) != 3:
                raise UsageError(
                    f"clause {idx} repeats a variable; gadget edges would be parallel"
                )
            clean.append(triple)
        self.var_count = var_count
        self.clauses = tuple(clean)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cnf1in3)
            and self.var_count == other.var_count
            and self.clauses == other.clauses
        )


def _u(i: int, j: int) -> int:
    return 4 * i + j


def _u_prime(i: int, j: int) -> int:
    return 4 * i + 3 - j


def _rotation(i: int) -> dict[int, int]:
    base = 4 * i
    return {base: base + 2, base + 1: base + 3, base + 2: base, base + 3: base + 1}


def _reflection(i: int) -> dict[int, int]:
    base = 4 * i
    return {base: base + 3, base + 1: base + 2, base + 2: base + 1, base + 3: base}


@dataclass
class GadgetInstance:
    """The ListAut instance built from a formula plus index tables locating
    the gadget vertices inside the flat vertex numbering.

    Variable i occupies vertices 4i..4i+3, laid out around its 4-cycle in
    the order u_i(0), u_i(1), u'_i(1), u'_i(0); clause j occupies the eight
    vertices after the variable block.
    """

    instance: ListInstance
    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def u(self, i: int, j: int) -> int:
        return _u(i, j)

    def u_prime(self, i: int, j: int) -> int:
        return _u_prime(i, j)

    def clause_vertex(self, j: int, k: int) -> int:
        return 4 * self.var_count + 8 * j + k

    def rotation(self, i: int) -> dict[int, int]:
        """The 180-degree rotation of variable gadget i (truth value 1)."""
        return _rotation(i)

    def reflection(self, i: int) -> dict[int, int]:
        """The reflection of variable gadget i (truth value 0)."""
        return _reflection(i)


def cnf_1in3_to_listaut(f: Cnf1in3) -> GadgetInstance:
    """Build the gadget graph along with its lists.

    Each variable contributes a 4-cycle whose vertices may only move by
    the rotation or the reflection; each clause contributes eight vertices
    wired to the variable gadgets by the bits of their index, with lists
    allowing exactly the single-bit flips.
    """
    nv = f.var_count
    total = 4 * nv + 8 * len(f.clauses)
    edges: list[tuple[int, int]] = []
    lists: list[tuple[int, ...]] = [()] * total

    def clause_vertex(j: int, k: int) -> int:
        return 4 * nv + 8 * j + k

    for i in range(nv):
        base = 4 * i
        edges += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3), (base, base + 3)]
        rot = _rotation(i)
        refl = _reflection(i)
        for v in range(base, base + 4):
            lists[v] = tuple(sorted({rot[v], refl[v]}))

    for j, (qv, rv, sv) in enumerate(f.clauses):
        for k in range(8):
            c = clause_vertex(j, k)
            a, b, cbit = (k >> 2) & 1, (k >> 1) & 1, k & 1
            edges += [
                (_u(qv, a), c),
                (_u_prime(qv, a), c),
                (_u(rv, b), c),
                (_u_prime(rv, b), c),
                (_u(sv, cbit), c),
                (_u_prime(sv, cbit), c),
            ]
            lists[c] = tuple(
                sorted({clause_vertex(j, k ^ 4), clause_vertex(j, k ^ 2), clause_vertex(j, k ^ 1)})
            )

    graph = Graph(total, edges)
    instance = ListInstance(graph, graph, lists)
    return GadgetInstance(instance, nv, f.clauses)


def assignment_to_automorphism(gadget: GadgetInstance, t: Sequence[int]) -> tuple[int, ...]:
    """The unique automorphism extending the per-variable choice in ``t``
    (1 picks the rotation, 0 the reflection).

    The result is always a graph automorphism; it is list-compatible
    exactly when ``t`` satisfies one-in-three on every clause.
    """
    if len(t) != gadget.var_count:
        raise UsageError(f"assignment must have {gadget.var_count} entries")
    values = [1 if x else 0 for x in t]
    n = gadget.instance.g.n
    pi = [0] * n
    for i in range(gadget.var_count):
        images = gadget.rotation(i) if values[i] else gadget.reflection(i)
        for src, dst in images.items():
            pi[src] = dst
    for j, (qv, rv, sv) in enumerate(gadget.clauses):
        flip = (values[qv] << 2) | (values[rv] << 1) | values[sv]
        for k in range(8):
            pi[gadget.clause_vertex(j, k)] = gadget.clause_vertex(j, k ^ flip)
    return tuple(pi)


def automorphism_to_assignment(gadget: GadgetInstance, pi: Sequence[int]) -> tuple[int, ...]:
    """Read the truth assignment off an automorphism that restricts to the
    rotation or the reflection on every variable gadget."""
    if len(pi) != gadget.instance.g.n:
        raise UsageError("mapping length does not match the gadget instance")
    values = []
    for i in range(gadget.var_count):
        base = 4 * i
        segment = tuple(pi[base : base + 4])
        rot = gadget.rotation(i)
        refl = gadget.reflection(i)
        if segment == tuple(rot[v] for v in range(base, base + 4)):
            values.append(1)
        elif segment == tuple(refl[v] for v in range(base, base + 4)):
            values.append(0)
        else:
            raise UsageError(
                f"mapping is neither the rotation nor the reflection on variable {i}"
            )
    return tuple(values)


def _subdivided(g: Graph, clique_on_originals: bool) -> Graph:
    edges = []
    for index, (u, v) in enumerate(g.edges()):
        mid = g.n + index
        edges += [(u, mid), (v, mid)]
    if clique_on_originals:
        edges += [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    return Graph(g.n + g.m, edges)


def _lifted_lists(inst: ListInstance) -> list[tuple[int, ...]]:
    # Identity vertex-gadgets: originals keep their lists, subdivision
    # vertices may go to any subdivision vertex of the other side.
    subdividers = tuple(range(inst.h.n, inst.h.n + inst.h.m))
    return list(inst.lists) + [subdividers] * inst.g.m


def lift_bipartite_subdivision(inst: ListInstance) -> ListInstance:
    """Subdivide every edge of both graphs, lifting the lists.

    The output graphs are bipartite and the answer is unchanged.  Cycles
    are rejected: their subdivision vertices cannot be told apart from the
    originals.
    """
    if is_cycle_graph(inst.g) or is_cycle_graph(inst.h):
        raise UsageError("lift_bipartite_subdivision is undefined on cycles")
    return ListInstance(
        _subdivided(inst.g, clique_on_originals=False),
        _subdivided(inst.h, clique_on_originals=False),
        _lifted_lists(inst),
    )


def lift_split_clique(inst: ListInstance) -> ListInstance:
    """Subdivide every edge, then complete the original vertices into a
    clique; the output graphs are split (hence chordal), the answer is
    unchanged."""
    return ListInstance(
        _subdivided(inst.g, clique_on_originals=True),
        _subdivided(inst.h, clique_on_originals=True),
        _lifted_lists(inst),
    )
