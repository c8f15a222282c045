"""Exact-arithmetic toolkit for adinkra-candidate valise graphs.

Core pipeline: build or load an edge-colored signed bipartite graph,
extract its L/R matrices over int64, verify the garden relations,
screen with candidacy filters, and search for feasible dashings or
whole topologies by gauge-reduced exhaustive enumeration.
"""

from .catalog import (
    TopologyId,
    BUILTIN_NAMES,
    bow_tie,
    build,
    builtin,
    cube,
    diamond,
    hypercube,
    lift,
    lifted_rd,
    rd_from_tesseract_deletion,
    rhombic_dodecahedron,
    rhombic_icosahedron,
    tesseract,
)
from .dashings import (
    DEFAULT_BUDGET,
    DashingAssignment,
    DashingSearchResult,
    apply_dashing,
    gauge_fix,
    odd_quad_check,
    resolve_budget,
    search_dashings,
    vertex_flip,
)
from .dot import to_dot
from .errors import AdinkraError, BudgetError, GraphFormatError
from .filters import (
    BiColorComponent,
    CandidacyReport,
    bicolor_components,
    bicolor_cycles,
    candidacy,
    check_bicolor_quads,
    check_color_coverage,
    check_equal_counts,
    quads,
)
from .fixtures import (
    compare_products,
    fixture_text,
    load_fixture,
    load_graph_fixture,
)
from .garden import (
    GardenReport,
    Violation,
    color_pairs,
    format_matrix,
    garden_check,
    multiply,
    product_tables,
    transpose,
)
from .graph import (
    Edge,
    Statistics,
    ValiseGraph,
    Vertex,
    connected_components,
    dump,
    from_json,
    from_matrices,
    is_connected,
    load,
    to_json,
    to_json_obj,
    to_matrices,
    validate,
)
from .isomorphism import (
    Isomorphism,
    find_isomorphism,
    find_isomorphisms,
    is_isomorphic,
)
from .search import (
    SearchOutcome,
    SearchSpec,
    TopologyClass,
    TOPOLOGY_BUDGET,
    canonical_form,
    enumerate_topologies,
    is_fpf_involution,
    run_search,
    topology_graph,
    topology_of,
)

__version__ = "0.1.0"

__all__ = [
    "AdinkraError",
    "BUILTIN_NAMES",
    "BiColorComponent",
    "BudgetError",
    "CandidacyReport",
    "DEFAULT_BUDGET",
    "DashingAssignment",
    "DashingSearchResult",
    "Edge",
    "GardenReport",
    "GraphFormatError",
    "Isomorphism",
    "SearchOutcome",
    "SearchSpec",
    "Statistics",
    "TOPOLOGY_BUDGET",
    "TopologyClass",
    "TopologyId",
    "ValiseGraph",
    "Vertex",
    "Violation",
    "apply_dashing",
    "bicolor_components",
    "bicolor_cycles",
    "bow_tie",
    "build",
    "builtin",
    "candidacy",
    "canonical_form",
    "check_bicolor_quads",
    "check_color_coverage",
    "check_equal_counts",
    "color_pairs",
    "compare_products",
    "connected_components",
    "cube",
    "diamond",
    "dump",
    "enumerate_topologies",
    "find_isomorphism",
    "find_isomorphisms",
    "fixture_text",
    "format_matrix",
    "from_json",
    "from_matrices",
    "garden_check",
    "gauge_fix",
    "hypercube",
    "is_connected",
    "is_fpf_involution",
    "is_isomorphic",
    "lift",
    "lifted_rd",
    "load",
    "load_fixture",
    "load_graph_fixture",
    "multiply",
    "odd_quad_check",
    "product_tables",
    "quads",
    "rd_from_tesseract_deletion",
    "resolve_budget",
    "rhombic_dodecahedron",
    "rhombic_icosahedron",
    "run_search",
    "search_dashings",
    "tesseract",
    "to_dot",
    "to_json",
    "to_json_obj",
    "to_matrices",
    "topology_graph",
    "topology_of",
    "transpose",
    "validate",
    "vertex_flip",
]
