"""Rainbow vertex-connection toolkit.

Verifiers and exact solvers for rainbow vertex-connected colorings, the
requested-pairs variant, and the gadget constructions that tie the two
problems to proper coloring.
"""

from .graphs import (
    EMPTY_PAIRS,
    INFINITY,
    Graph,
    PairSet,
    VertexColoring,
    all_vertex_pairs,
    coloring,
    diameter,
    distance,
    graph_from_edges,
    is_complete,
    is_connected,
    normalize_pair,
    pair_set,
    remove_edges,
    simple_paths,
)
from .rainbow import (
    PathWitness,
    exists_rainbow_path,
    is_rainbow_path,
    is_rainbow_vertex_connected,
    is_subset_rainbow_vc,
    path_budget,
    search_stats,
)
from .solver import (
    SolveResult,
    chromatic_decision,
    decide_rvc_le_k,
    decide_subset_rvc,
    rvc_exact,
)
from .gadgets import (
    GadgetGraph,
    PendantInstance,
    build_gadget,
    lift_coloring,
    pendant_lift,
    pendant_project,
    pendant_reduction,
    project_coloring,
)
from .families import (
    complete_graph,
    connected_graphs,
    connected_graphs_of_order,
    cycle_graph,
    path_graph,
    star_graph,
)
from .harness import (
    ClaimReport,
    check_lift_validity,
    check_nonpair_distances,
    check_pair_distances,
    check_path_confinement,
    check_pendant_equivalence,
    check_reduction_equivalence,
    corrupt_base_cut,
    corrupt_shortcut,
    corrupt_unhook,
    run_check,
    run_suite,
    run_sweep,
)
from .io import (
    InstanceFormatError,
    emit_dot,
    emit_gadget,
    emit_instance,
    parse_gadget,
    parse_instance,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY_PAIRS",
    "INFINITY",
    "Graph",
    "PairSet",
    "VertexColoring",
    "all_vertex_pairs",
    "coloring",
    "diameter",
    "distance",
    "graph_from_edges",
    "is_complete",
    "is_connected",
    "normalize_pair",
    "pair_set",
    "remove_edges",
    "simple_paths",
    "PathWitness",
    "exists_rainbow_path",
    "is_rainbow_path",
    "is_rainbow_vertex_connected",
    "is_subset_rainbow_vc",
    "path_budget",
    "search_stats",
    "SolveResult",
    "chromatic_decision",
    "decide_rvc_le_k",
    "decide_subset_rvc",
    "rvc_exact",
    "GadgetGraph",
    "PendantInstance",
    "build_gadget",
    "lift_coloring",
    "pendant_lift",
    "pendant_project",
    "pendant_reduction",
    "project_coloring",
    "complete_graph",
    "connected_graphs",
    "connected_graphs_of_order",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "ClaimReport",
    "check_lift_validity",
    "check_nonpair_distances",
    "check_pair_distances",
    "check_path_confinement",
    "check_pendant_equivalence",
    "check_reduction_equivalence",
    "corrupt_base_cut",
    "corrupt_shortcut",
    "corrupt_unhook",
    "run_check",
    "run_suite",
    "run_sweep",
    "InstanceFormatError",
    "emit_dot",
    "emit_gadget",
    "emit_instance",
    "parse_gadget",
    "parse_instance",
]
