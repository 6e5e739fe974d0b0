"""Exact solvers for the generalized cable-trench problem on trees, cycles,
theta graphs and cactus graphs."""
from .cactus import cactus_ctp, decompose_cactus, is_cactus
from .cycle import (
    WedgePoint,
    cycle_ctp,
    cycle_wedge_ctp,
    decompose_cycle,
    multi_wedge_ctp,
    switch_margin,
    wedge_roots_solve,
)
from .graph import (
    CtpCost,
    GraphError,
    OrientedPath,
    RootedGraph,
    SpanningTree,
    cabling_cost,
    cabling_length,
    concat_cabling_cost,
    root_path,
    tree_cost,
    trench_length,
    wedge,
)
from .instance import format_instance, parse_instance
from .milp import build_milp, encode_tree, write_lp
from .oracle import (
    SolveResult,
    brute_force_ctp,
    enumerate_spanning_trees,
    greedy_heuristic,
    induced_subtree_check,
    spanning_tree_count,
)
from .strength import edge_strength, vertex_strength, wedge_decision
from .theta import as_theta, theta_ctp, theta_strengths, theta_wedge_ctp

__version__ = "0.1.0"
