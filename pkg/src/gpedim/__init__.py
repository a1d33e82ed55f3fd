"""Exact edge metric dimension of graphs, with generalized Petersen graph closed forms."""
from .errors import (
    CardinalityCapExceeded,
    Disconnected,
    DuplicateEdge,
    GpedimError,
    InternalCoverageError,
    InvalidSpec,
    OutOfScope,
    ParseError,
    SelfLoop,
    TooSmall,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_generalized_petersen,
    build_named,
    degree_summary,
    line_graph,
    load_edge_list,
)
from .resolve import (
    edge_representation,
    edge_vertex_distance,
    is_edge_metric_generator,
    is_metric_generator,
    lower_bound_edge_dim,
    prune_candidates,
)
from .solver import SolveKind, SolveOptions, SolveResult, solve, verify_basis

__version__ = "0.1.0"
