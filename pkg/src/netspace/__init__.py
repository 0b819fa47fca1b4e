"""Toolkit for representing data as a space of weighted graphs, simulating
linear-threshold cascades on realized graphs, scoring realizations by
probability-mass loss, and finding small seed sets that reproduce observed
node labels."""

from .cascade import CascadeTrace, SeedSet, lt_run, realizes
from .errors import GuardExceeded, InputError, InstanceFormatError
from .formats import (FORMAT_VERSION, parse_graph_file, parse_instance,
                      parse_solution, write_graph_file, write_instance,
                      write_loss_report, write_solution, write_trace)
from .generate import (LABEL_RULES, PlantedWitness, generate_instance,
                       plant_cascade)
from .loss import LOSS_TOL, LossReport, edge_loss, graph_loss
from .solvers import (BRUTE_FORCE_MAX_LABELED, Infeasible, InfeasibleReason,
                      Solution, SolveOutcome, brute_force_min_seeds,
                      local_search_improve, solve_budgeted, solve_trivial,
                      solve_unconstrained, verify_solution)
from .space import (POINT_MASS_ZERO, EdgeDistribution, GraphSpace, Pair,
                    RealizedGraph, mle_graph, neighbors, ordered_pair,
                    sample_graph)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_MAX_LABELED",
    "CascadeTrace",
    "EdgeDistribution",
    "FORMAT_VERSION",
    "GraphSpace",
    "GuardExceeded",
    "Infeasible",
    "InfeasibleReason",
    "InputError",
    "InstanceFormatError",
    "LABEL_RULES",
    "LOSS_TOL",
    "LossReport",
    "POINT_MASS_ZERO",
    "Pair",
    "PlantedWitness",
    "RealizedGraph",
    "SeedSet",
    "Solution",
    "SolveOutcome",
    "brute_force_min_seeds",
    "edge_loss",
    "generate_instance",
    "graph_loss",
    "local_search_improve",
    "lt_run",
    "mle_graph",
    "neighbors",
    "ordered_pair",
    "parse_graph_file",
    "parse_instance",
    "parse_solution",
    "plant_cascade",
    "realizes",
    "sample_graph",
    "solve_budgeted",
    "solve_trivial",
    "solve_unconstrained",
    "verify_solution",
    "write_graph_file",
    "write_instance",
    "write_loss_report",
    "write_solution",
    "write_trace",
]
