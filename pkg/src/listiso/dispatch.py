"""Engine dispatch: routing an instance to the right solver, including the
forest and disconnected-interval wrappers around the connected engines.
"""

from __future__ import annotations

from .basic import solve_disconnected, solve_lists_le2, solve_max_deg2
from .core import (
    ListInstance,
    SolveResult,
    UsageError,
    classify_instance,
    connected_components,
    is_connected,
    is_forest,
)
from .intervals import recognize_interval, solve_interval
from .oracle import brute_solve
from .treewidth import solve_treewidth_xp
from .trees import solve_tree

ALGORITHMS = ("auto", "oracle", "lists2", "deg2", "tree", "interval", "treewidth")


def solve_forest(inst: ListInstance) -> SolveResult:
    """Tree engine entry point: single trees directly, forests composed
    per component."""
    if not is_forest(inst.g) or not is_forest(inst.h):
        raise UsageError("the tree engine expects forests")
    if is_connected(inst.g) and is_connected(inst.h):
        return solve_tree(inst)
    return solve_disconnected(inst, solve_tree)


def _all_components_interval(inst: ListInstance) -> bool:
    for graph in (inst.g, inst.h):
        for comp in connected_components(graph):
            if recognize_interval(graph.induced(comp)) is None:
                return False
    return True


def solve_interval_any(inst: ListInstance) -> SolveResult:
    """Interval engine entry point; disconnected inputs are composed per
    component."""
    if not _all_components_interval(inst):
        raise UsageError("the interval engine expects interval graphs")
    if is_connected(inst.g) and is_connected(inst.h):
        return solve_interval(inst)
    return solve_disconnected(inst, solve_interval)


def solve_with(inst: ListInstance, algo: str = "auto", k: int | None = None) -> SolveResult:
    """Run the named engine; ``auto`` picks by classification.

    An explicit ``algo`` bypasses classification, so handing an engine an
    out-of-class instance raises the engine's usage error.
    """
    if algo == "auto":
        return solve_with(inst, classify_instance(inst), k)
    if algo == "oracle":
        return brute_solve(inst)
    if algo == "lists2":
        return solve_lists_le2(inst)
    if algo == "deg2":
        return solve_max_deg2(inst)
    if algo == "tree":
        return solve_forest(inst)
    if algo == "interval":
        return solve_interval_any(inst)
    if algo == "treewidth":
        if k is None:
            raise UsageError("the treewidth engine needs an explicit width bound k")
        return solve_treewidth_xp(inst, k)
    raise UsageError(f"unknown algorithm {algo!r}; pick one of {ALGORITHMS}")
