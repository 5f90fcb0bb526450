"""Linear-time 2-SAT via the implication graph and its strongly connected
components.  Both the SCC pass and the graph walk are iterative so large
formulas cannot hit the recursion limit.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import InstanceError

# A literal is (variable index, polarity); polarity True means the plain
# variable, False its negation.
Literal = tuple[int, bool]


class TwoSatFormula:
    """Conjunction of two-literal clauses.  Encode a unit clause as (l, l)."""

    __slots__ = ("var_count", "clauses")

    def __init__(self, var_count: int, clauses: Iterable[Sequence[Literal]]):
        if var_count < 0:
            raise InstanceError("variable count must be nonnegative")
        clean = []
        for clause in clauses:
            if len(clause) != 2:
                raise InstanceError("every clause needs exactly two literals")
            for var, polarity in clause:
                if not (0 <= var < var_count):
                    raise InstanceError(f"literal variable {var} out of range")
                if not isinstance(polarity, bool):
                    raise InstanceError("literal polarity must be a bool")
            clean.append(((clause[0][0], clause[0][1]), (clause[1][0], clause[1][1])))
        self.var_count = var_count
        self.clauses = tuple(clean)


def _node(lit: Literal) -> int:
    var, polarity = lit
    return 2 * var + (0 if polarity else 1)


def implication_arcs(f: TwoSatFormula) -> list[tuple[int, int]]:
    """The 2|clauses| arcs of the implication graph on 2*var_count nodes.

    Node 2v stands for the literal v, node 2v+1 for its negation.
    """
    arcs = []
    for a, b in f.clauses:
        arcs.append((_node(a) ^ 1, _node(b)))
        arcs.append((_node(b) ^ 1, _node(a)))
    return arcs


def solve_2sat(f: TwoSatFormula) -> list[bool] | None:
    """A satisfying assignment, or None when the formula is unsatisfiable."""
    node_count = 2 * f.var_count
    adj: list[list[int]] = [[] for _ in range(node_count)]
    for src, dst in implication_arcs(f):
        adj[src].append(dst)
    comp = _tarjan_scc(node_count, adj)
    assignment = []
    for var in range(f.var_count):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        # Tarjan numbers components sink-first; a literal is true when its
        # component sits on the sink side of its negation's component.
        assignment.append(pos < neg)
    return assignment


def _tarjan_scc(n: int, adj: list[list[int]]) -> list[int]:
    """Component ids per node; components are numbered in completion order,
    which is reverse topological order of the condensation."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    comp_count = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, edge_pos = work[-1]
            if edge_pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(edge_pos, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp
