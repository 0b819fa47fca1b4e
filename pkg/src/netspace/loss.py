"""Per-edge and whole-graph likelihood loss for realized weights.

The loss of assigning weight w to a pair is the gap between the probability
mass of the distribution's mode and the mass of w, so the modal weight costs
0 and an off-support weight costs the full modal mass. A graph's loss is the
sum over unordered pairs, each counted once.
"""

import math
from dataclasses import dataclass

from .errors import InputError
from .space import POINT_MASS_ZERO, EdgeDistribution, GraphSpace, Pair, RealizedGraph

LOSS_TOL = 1e-9


@dataclass(frozen=True)
class LossReport:
    """Total loss plus the per-pair breakdown (zero-loss pairs omitted)."""

    per_edge: dict[Pair, float]
    total: float


def edge_loss(dist: EdgeDistribution, w: float) -> float:
    """Modal mass minus the mass of ``w``; always in [0, 1]."""
    w = float(w)
    if not 0.0 <= w <= 1.0:
        raise InputError(f"weight {w} outside [0, 1]")
    return dist.max_mass - dist.mass(w)


def graph_loss(space: GraphSpace, graph: RealizedGraph) -> LossReport:
    """Sum of edge losses over every pair named by either the space or the graph.

    Pairs absent from both sides hold the implicit point mass at 0 and a
    weight of 0, contributing nothing.
    """
    if graph.n != space.n:
        raise InputError(f"graph has {graph.n} nodes but space has {space.n}")
    per_edge: dict[Pair, float] = {}
    for pair in sorted(set(space.dists) | set(graph.weights)):
        dist = space.dists.get(pair, POINT_MASS_ZERO)
        loss = edge_loss(dist, graph.weights.get(pair, 0.0))
        if loss != 0.0:
            per_edge[pair] = loss
    return LossReport(per_edge, math.fsum(per_edge.values()))
