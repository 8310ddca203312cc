"""Exact matching-cut decision: general solvers, the P5-free algorithm, and
the gadget reduction from restricted positive 1-in-3-SAT."""

from .coloring import (
    BLUE,
    RED,
    MatchingCut,
    cut_from_coloring,
    is_good,
    is_strong,
    verify_matching_cut,
)
from .exact import Indeterminate, SolveOutcome, count_colorings, solve_branch, solve_bruteforce
from .graph import Graph, InducedKind, components, parse_graph, serialize_graph
from .p5free import (
    DominatingStructure,
    enumerate_good_colorings,
    find_dominating_structure,
    is_pt_free,
    longest_induced_path,
    solve_p5free,
)
from .reduction import (
    Formula,
    assignment_to_cut,
    cut_to_assignment,
    reduce_to_graph,
    reduction_stats,
    sat_oracle_1in3,
    validate_restricted,
)

__version__ = "0.1.0"
