"""Pack-or-hit for long holes (induced cycles on at least six vertices) in
C4-free graphs, and for all holes, with verifiable certificates."""

from .engine import EPOutcome, solve, solve_holes, solve_long_holes, verify_outcome
from .graph import CyclePos, Graph, parse_edge_list, to_edge_list
from .holes import HoleCertificate, shortest_hole, shortest_long_hole
from .profile import PAPER, ConstantsProfile, parse_profile, toy_profile

__all__ = [
    "PAPER",
    "ConstantsProfile",
    "CyclePos",
    "EPOutcome",
    "Graph",
    "HoleCertificate",
    "parse_edge_list",
    "parse_profile",
    "shortest_hole",
    "shortest_long_hole",
    "solve",
    "solve_holes",
    "solve_long_holes",
    "to_edge_list",
    "toy_profile",
    "verify_outcome",
]
