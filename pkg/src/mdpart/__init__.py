"""Degree-constrained partitions of multigraphs."""

from .errors import (
    EnumerationCapError,
    GenerationError,
    InputError,
    InvariantError,
    MdpartError,
    ParseError,
    StateError,
)
from .multigraph import IsolatedVertexWarning, Multigraph, VertexSet
from .edgelist import format_edge_list, graph_digest, parse_edge_list, read_edge_list
from .niceness import (
    DegreeFunction,
    is_degenerate,
    is_meager,
    is_nice,
    maximal_nice_subset,
    meager_violator,
    minimal_nice_subset,
)
from .partition_engine import (
    MoveRecord,
    PartitionState,
    SearchTrace,
    extend_feasible_pair,
    move_to_A,
    move_to_B,
    partition_weight,
)
from .theorem_general import (
    PartitionResult,
    PreconditionReport,
    check_theorem1_precondition,
    theorem1_partition,
)
from .theorem_k4free import check_theorem3_precondition, edge_budget_preprocess, theorem3_partition
from .multiway import check_multiway_precondition, corollary_constant, multiway_partition

__all__ = [
    "DegreeFunction",
    "EnumerationCapError",
    "GenerationError",
    "InputError",
    "InvariantError",
    "IsolatedVertexWarning",
    "MdpartError",
    "MoveRecord",
    "Multigraph",
    "ParseError",
    "PartitionResult",
    "PartitionState",
    "PreconditionReport",
    "SearchTrace",
    "StateError",
    "VertexSet",
    "check_multiway_precondition",
    "check_theorem1_precondition",
    "check_theorem3_precondition",
    "corollary_constant",
    "edge_budget_preprocess",
    "extend_feasible_pair",
    "format_edge_list",
    "graph_digest",
    "is_degenerate",
    "is_meager",
    "is_nice",
    "maximal_nice_subset",
    "meager_violator",
    "minimal_nice_subset",
    "move_to_A",
    "move_to_B",
    "multiway_partition",
    "parse_edge_list",
    "partition_weight",
    "read_edge_list",
    "theorem1_partition",
    "theorem3_partition",
]
