"""Tree decompositions measured by independence number.

Exact desk-scale solvers for the tree-independence number, Max Weight
Independent Set over (refined) tree decompositions of bounded residual
independence number, and Max Weight Independent Packing of connected
subgraphs via the derived conflict graph.
"""

from .chordal import clique_tree, is_chordal
from .decomposition import (
    RefinedTreeDecomposition,
    ValidationReport,
    Violation,
    compose_clique_cutset,
    independence_number,
    make_decomposition,
    residual_independence_number,
    trivial_decomposition,
    validate,
    width,
)
from .errors import (
    CapExceededError,
    GraphError,
    InvalidDecompositionError,
    ParseError,
    ResidualBoundViolation,
)
from .exact import alpha_exact, alpha_of_subset, omega_exact, ramsey_binding_bound
from .generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_join,
    generate,
    path_graph,
    sharpness_gadget,
)
from .graph import (
    Graph,
    build_graph,
    contract_edge,
    induced_subgraph,
    is_independent,
)
from .mwis import (
    BagIndependentFamily,
    DPTable,
    compute_tables,
    enumerate_bag_independent_sets,
    solve_mwis,
    solve_mwis_plain,
)
from .nice import NiceRefinedTreeDecomposition, make_nice, nice_violations
from .oracle import brute_force_mwis, elimination_bag, tin_exact, treewidth_exact
from .packing import (
    PackingInstance,
    SubgraphFamily,
    blob_family,
    brute_force_packing,
    derived_decomposition,
    derived_graph,
    dissociation_set,
    enumerate_F_subgraphs,
    induced_matching,
    k_separator,
    make_family,
    make_instance,
    pattern_by_name,
    solve_packing,
)
from .weights import WeightMap

__version__ = "0.1.0"

__all__ = [
    "BagIndependentFamily",
    "CapExceededError",
    "DPTable",
    "Graph",
    "GraphError",
    "InvalidDecompositionError",
    "NiceRefinedTreeDecomposition",
    "PackingInstance",
    "ParseError",
    "RefinedTreeDecomposition",
    "ResidualBoundViolation",
    "SubgraphFamily",
    "ValidationReport",
    "Violation",
    "WeightMap",
    "alpha_exact",
    "alpha_of_subset",
    "blob_family",
    "brute_force_mwis",
    "brute_force_packing",
    "build_graph",
    "clique_tree",
    "complete_bipartite",
    "complete_graph",
    "compose_clique_cutset",
    "compute_tables",
    "contract_edge",
    "cycle_graph",
    "derived_decomposition",
    "derived_graph",
    "dissociation_set",
    "double_join",
    "elimination_bag",
    "enumerate_F_subgraphs",
    "enumerate_bag_independent_sets",
    "generate",
    "independence_number",
    "induced_matching",
    "induced_subgraph",
    "is_chordal",
    "is_independent",
    "k_separator",
    "make_decomposition",
    "make_family",
    "make_instance",
    "make_nice",
    "nice_violations",
    "omega_exact",
    "path_graph",
    "pattern_by_name",
    "ramsey_binding_bound",
    "residual_independence_number",
    "sharpness_gadget",
    "solve_mwis",
    "solve_mwis_plain",
    "solve_packing",
    "tin_exact",
    "treewidth_exact",
    "trivial_decomposition",
    "validate",
    "width",
]
