"""Enumeration of minimal resolving, geodetic and strong resolving sets.

The core engine enumerates minimal transversals of hypergraphs; the metric
layer recasts resolving, geodetic and strong-resolving questions as
transversal or vertex-cover questions; the reductions layer goes the other
way, embedding transversal enumeration into metric gadget graphs.
"""

from .bitset import bit, from_iter, iter_bits, to_frozenset
from .engine import (
    EngineChoice,
    SolutionStream,
    enumerate_maximal_independent_sets,
    enumerate_minimal_transversals,
    enumerate_minimal_vertex_covers,
    regularize_delay,
)
from .errors import (
    DecodeFailure,
    DisconnectedError,
    EmptyEdgeError,
    MetricEnumError,
    ParseError,
    PreconditionViolation,
    SizeLimitError,
    TrivialInstanceError,
    VerificationError,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    SplitPartition,
    TwinClass,
    all_pairs_distances,
    graph_from_edges,
    is_connected,
    on_shortest_path,
    parse_graph,
    split_partition_max_I,
    twin_classes,
    write_graph_text,
)
from .hypergraphs import (
    MINIMAL_TRANSVERSAL,
    NOT_TRANSVERSAL,
    TRANSVERSAL_NOT_MINIMAL,
    Hypergraph,
    TransversalClass,
    classify_transversal,
    hypergraph_from_edges,
    pad_for_ext_resolving_reduction,
    pad_for_resolving_reduction,
    parse_hypergraph,
    peel_universal_vertices,
    reconstruct_peeled,
    sperner_reduce,
    write_hypergraph_text,
)
from .metric import (
    MINIMAL,
    NOT_SOLUTION,
    SOLUTION_NOT_MINIMAL,
    PairHypergraph,
    SolutionClass,
    classify_geodetic,
    classify_resolving,
    classify_strong_resolving,
    distinguishing_hypergraph,
    enumerate_minimal_geodetic_sets,
    enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets,
    is_consistent,
    mmd_graph,
    pair_cover_hypergraph,
    split_geodetic_hypergraph,
)
from .reductions import (
    EXT_GEODETIC,
    EXT_RESOLVING,
    GARBAGE_GEODETIC,
    GARBAGE_RESOLVING,
    GEODETIC_SPLIT,
    RESOLVING,
    TRANSVERSAL_GEODETIC,
    TRANSVERSAL_RESOLVING,
    DecodedSolution,
    ExtAnswer,
    ExtInstance,
    ReductionArtifact,
    build_ext_geodetic_instance,
    build_ext_resolving_instance,
    build_mingeodetic_instance,
    build_minresolving_instance,
    decode_mingeodetic_solution,
    decode_minresolving_solution,
    ext_check,
    transenum_via_mingeodetic,
    transenum_via_minresolving,
    write_dot,
    write_roles_text,
)

__version__ = "0.1.0"
