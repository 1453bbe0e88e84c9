"""Metric dimension of vertex- and edge-amalgamations of graph blocks."""

from .amalgam import (
    AmalgamLabeling,
    BlockSpec,
    canonical_terminal,
    edge_amalgamate,
    family_block,
    vertex_amalgamate,
)
from .errors import BudgetExceeded, InvalidParameter, NotConnected, ParseError, SingleBlockError
from .graph_core import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    is_connected,
    make_complete,
    make_cycle,
    make_path,
    make_prism,
)
from .resolving import (
    class_lower_bound,
    distance_similar_partition,
    find_collision,
    forced_vertices,
    is_resolving,
    representation,
)
from .solver import SolveResult, greedy_upper_bound, metric_dimension_exact, metric_dimension_naive

__version__ = "0.1.0"
