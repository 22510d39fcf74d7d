"""Exact fault-tolerant metric dimension toolkit.

Core pieces: immutable graphs with cached exact distances, subset-search
solvers for resolving-set invariants, point-attached composites with
anchored invariants, and composition rules that predict composite values
from per-piece data, each cross-checkable against the exact search.
"""

from .attach import (
    C1Check,
    Decomposition,
    check_C1,
    check_C2,
    decomposition_from_json,
    decomposition_to_json,
    fdim_star,
    fdim_star_closed_form,
    is_attaching_ft_resolving,
    point_attach,
)
from .compose import (
    RootedPiece,
    RootedProductSpec,
    TheoremResult,
    VerifyReport,
    block_graph_fdim,
    cor5_fdim,
    cor8_check,
    corollary3_fdim,
    decomposition_suite,
    prop1_lower_bound,
    prop7_fdim,
    prop9_bounds,
    random_decomposition,
    rooted_product,
    rooted_spec_from_json,
    rooted_spec_to_json,
    theorem2_fdim,
    uniform_rooted_spec,
    verify,
)
from .errors import (
    AnchorReuseWithinPiece,
    DisconnectedInput,
    DisconnectedResult,
    DuplicateEdge,
    FtmdError,
    GraphBuildError,
    IllegalParameter,
    InputFormatError,
    NonTreeAttachment,
    OrderCapExceeded,
    OrderTooSmall,
    OverlapError,
    PreconditionFailed,
    SelfLoop,
    UnsupportedConfiguration,
    VertexOutOfRange,
)
from .families import (
    FamilySpec,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    figure2_decomposition,
    generate,
    hypercube_graph,
    path_graph,
    paw_graph,
    star_graph,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    eccentricity_and_diameter,
    format_edge_list,
    graph_from_json_dict,
    graph_to_json_dict,
    is_even_graph,
    is_path_graph,
    is_vertex_transitive,
    parse_edge_list,
    twin_classes,
)
from .resolve import (
    DEFAULT_LATTICE_CAP,
    DEFAULT_ORACLE_CAP,
    FtReport,
    enumerate_ft_bases,
    fdim,
    fdim_plus,
    in_some_ft_basis,
    is_ft_resolving,
    is_resolving,
    metric_dimension,
    theta,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorReuseWithinPiece",
    "C1Check",
    "DEFAULT_LATTICE_CAP",
    "DEFAULT_ORACLE_CAP",
    "Decomposition",
    "DisconnectedInput",
    "DisconnectedResult",
    "DistanceMatrix",
    "DuplicateEdge",
    "FamilySpec",
    "FtReport",
    "FtmdError",
    "Graph",
    "GraphBuildError",
    "IllegalParameter",
    "InputFormatError",
    "NonTreeAttachment",
    "OrderCapExceeded",
    "OrderTooSmall",
    "OverlapError",
    "PreconditionFailed",
    "RootedPiece",
    "RootedProductSpec",
    "SelfLoop",
    "TheoremResult",
    "UnsupportedConfiguration",
    "VerifyReport",
    "VertexOutOfRange",
    "all_pairs_distances",
    "block_graph_fdim",
    "bowtie_graph",
    "build_graph",
    "check_C1",
    "check_C2",
    "complete_graph",
    "cor5_fdim",
    "cor8_check",
    "corollary3_fdim",
    "cycle_graph",
    "decomposition_from_json",
    "decomposition_suite",
    "decomposition_to_json",
    "eccentricity_and_diameter",
    "enumerate_ft_bases",
    "fdim",
    "fdim_plus",
    "fdim_star",
    "fdim_star_closed_form",
    "figure2_decomposition",
    "format_edge_list",
    "generate",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "hypercube_graph",
    "in_some_ft_basis",
    "is_attaching_ft_resolving",
    "is_even_graph",
    "is_ft_resolving",
    "is_path_graph",
    "is_resolving",
    "is_vertex_transitive",
    "metric_dimension",
    "parse_edge_list",
    "path_graph",
    "paw_graph",
    "point_attach",
    "prop1_lower_bound",
    "prop7_fdim",
    "prop9_bounds",
    "random_decomposition",
    "rooted_product",
    "rooted_spec_from_json",
    "rooted_spec_to_json",
    "star_graph",
    "theorem2_fdim",
    "theta",
    "twin_classes",
    "uniform_rooted_spec",
    "verify",
]
