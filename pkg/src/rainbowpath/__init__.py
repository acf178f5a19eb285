"""Long rainbow paths in edge-colored graphs."""

from rainbowpath.constructive import (
    NotMaximalError,
    RotationState,
    SolveResult,
    StallCertificate,
    build_restricted_subgraph,
    compute_rotation_sets,
    escape_cycle,
    greedy_extend,
    rotate_to_cycle,
    solve,
    verify_rotation_inequalities,
)
from rainbowpath.ecg import ParseError, parse_ecg, serialize_ecg
from rainbowpath.graph import (
    BoundReport,
    EdgeColoredGraph,
    GraphError,
    RainbowCycle,
    RainbowPath,
    bounds,
    build_graph,
    color_degree,
    is_rainbow_cycle,
    is_rainbow_path,
    min_color_degree,
)
from rainbowpath.oracle import (
    BACKEND,
    OracleLimitError,
    OracleResult,
    find_rainbow_cycle_of_length,
    max_rainbow_path,
    max_rainbow_path_from,
)

__version__ = "0.1.0"
