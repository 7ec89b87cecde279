"""Maximum rooted connected expansion: exact, approximate and interval solvers."""

from .graph import (
    FeasibilityError,
    GraphError,
    RootedGraph,
    Solution,
    closed_neighborhood,
    enumerate_connected_supersets,
    evaluate,
    is_connected_containing_root,
    max_degree_plus_one_bound,
)
from .oracle import CapacityError, peel_least_contribution, solve_exact, surveillance_lower_bound
from .split import SplitPartition, approximate_split, lift_to_clique, recognize_and_partition
from .general import augment_with_leaves, greedy_dominating_set, greedy_mrce
from .steiner import SteinerTree, exact_rqst_oracle, rqst_2apx
from .interval import IntervalRealization, canonicalize_realization, solve_interval

__all__ = [
    "CapacityError", "FeasibilityError", "GraphError", "IntervalRealization", "RootedGraph",
    "Solution", "SplitPartition", "SteinerTree", "approximate_split", "augment_with_leaves",
    "canonicalize_realization", "closed_neighborhood", "enumerate_connected_supersets",
    "evaluate", "exact_rqst_oracle", "greedy_dominating_set", "greedy_mrce",
    "is_connected_containing_root", "lift_to_clique", "max_degree_plus_one_bound",
    "peel_least_contribution", "recognize_and_partition", "rqst_2apx", "solve_exact",
    "solve_interval", "surveillance_lower_bound",
]
