"""listiso: graph isomorphism restricted by per-vertex candidate lists.

One polynomial engine per tractable graph class (bounded lists, maximum
degree 2, trees, interval graphs, bounded treewidth), a hardness-reduction
toolkit, a brute-force oracle, generators, and JSON/CLI plumbing.
"""

from .basic import (
    ComponentFeasibility,
    component_feasibility,
    reduce_aut_to_iso,
    reduce_iso_to_aut,
    restrict_instance,
    solve_cycle_or_path,
    solve_disconnected,
    solve_lists_le2,
    solve_max_deg2,
)
from .core import (
    Graph,
    Infeasible,
    InstanceError,
    ListInstance,
    SolveResult,
    UsageError,
    classify_instance,
    connected_components,
    degree_prune,
    propagate_singletons,
    verify_list_iso,
)
from .dispatch import ALGORITHMS, solve_forest, solve_interval_any, solve_with
from .generate import gen_planted, gen_sat_formula
from .hardness import (
    Cnf1in3,
    GadgetInstance,
    assignment_to_automorphism,
    automorphism_to_assignment,
    cnf_1in3_to_listaut,
    lift_bipartite_subdivision,
    lift_split_clique,
)
from .intervals import (
    CliqueOrdering,
    MpqNode,
    MpqTree,
    build_mpq,
    recognize_interval,
    solve_interval,
)
from .matching import (
    BipartiteGraph,
    Matching,
    has_perfect_matching,
    max_bipartite_matching,
)
from .oracle import brute_solve, count_list_isos
from .serialize import (
    ParseError,
    emit_formula,
    emit_instance,
    emit_result,
    parse_formula,
    parse_instance,
    parse_mapping,
)
from .treewidth import check_treewidth, solve_treewidth_xp
from .trees import find_center, solve_tree
from .twosat import TwoSatFormula, implication_arcs, solve_2sat

__all__ = [
    "ALGORITHMS",
    "BipartiteGraph",
    "CliqueOrdering",
    "Cnf1in3",
    "ComponentFeasibility",
    "GadgetInstance",
    "Graph",
    "Infeasible",
    "InstanceError",
    "ListInstance",
    "Matching",
    "MpqNode",
    "MpqTree",
    "ParseError",
    "SolveResult",
    "TwoSatFormula",
    "UsageError",
    "assignment_to_automorphism",
    "automorphism_to_assignment",
    "brute_solve",
    "build_mpq",
    "check_treewidth",
    "classify_instance",
    "cnf_1in3_to_listaut",
    "component_feasibility",
    "connected_components",
    "count_list_isos",
    "degree_prune",
    "emit_formula",
    "emit_instance",
    "emit_result",
    "find_center",
    "gen_planted",
    "gen_sat_formula",
    "has_perfect_matching",
    "implication_arcs",
    "lift_bipartite_subdivision",
    "lift_split_clique",
    "max_bipartite_matching",
    "parse_formula",
    "parse_instance",
    "parse_mapping",
    "propagate_singletons",
    "recognize_interval",
    "reduce_aut_to_iso",
    "reduce_iso_to_aut",
    "restrict_instance",
    "solve_2sat",
    "solve_cycle_or_path",
    "solve_disconnected",
    "solve_forest",
    "solve_interval",
    "solve_interval_any",
    "solve_lists_le2",
    "solve_max_deg2",
    "solve_tree",
    "solve_treewidth_xp",
    "solve_with",
    "verify_list_iso",
]
