"""Deterministic synthetic-instance generation.

Two labeling rules are supported: ``random_p`` labels each node
independently, while ``planted_cascade`` samples a graph from the space,
runs the threshold cascade from a random seed set, and takes the fixed
point as the labels. Planted instances are therefore always solvable: the
sampled graph and planted seeds witness feasibility at a budget equal to
that graph's loss.
"""

from dataclasses import dataclass

import numpy as np

from .cascade import lt_run
from .errors import InputError
from .loss import graph_loss
from .space import EdgeDistribution, GraphSpace, RealizedGraph, sample_graph

LABEL_RULES = ("random_p", "planted_cascade")

# Support values are drawn from this lattice; its size caps support_size.
SUPPORT_GRID = tuple(float(round(v, 2)) for v in np.linspace(0.0, 1.0, 21))


def _check_args(n, edge_density, support_size, seed):
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer (got {n!r})")
    if not 0.0 <= edge_density <= 1.0:
        raise InputError(f"edge density {edge_density} outside [0, 1]")
    if not isinstance(support_size, int) or not 1 <= support_size <= len(SUPPORT_GRID):
        raise InputError(f"support size must be in [1, {len(SUPPORT_GRID)}] (got {support_size!r})")
    if not isinstance(seed, int) or seed < 0:
        raise InputError(f"seed must be a nonnegative integer (got {seed!r})")


def _random_dists(rng: np.random.Generator, n: int, edge_density: float,
                  support_size: int) -> dict:
    dists = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_density:
                idx = np.sort(rng.choice(len(SUPPORT_GRID), size=support_size, replace=False))
                raw = rng.random(support_size) + 0.05
                probs = raw / raw.sum()
                dists[(i, j)] = EdgeDistribution(
                    tuple(SUPPORT_GRID[k] for k in idx), tuple(probs))
    return dists


@dataclass(frozen=True)
class PlantedWitness:
    """A planted instance together with the graph and seeds that solve it."""

    space: GraphSpace
    seeds: frozenset[int]
    graph: RealizedGraph
    loss_total: float


def plant_cascade(n: int, edge_density: float, support_size: int, seed: int) -> PlantedWitness:
    """Build a space whose labels are the fixed point of a simulated cascade."""
    _check_args(n, edge_density, support_size, seed)
    space_child, plant_child = np.random.SeedSequence(seed).spawn(2)
    rng = np.random.default_rng(space_child)
    thresholds = tuple(rng.random(n))
    dists = _random_dists(rng, n, edge_density, support_size)

    plant_rng = np.random.default_rng(plant_child)
    sample_seed = int(plant_rng.integers(0, 2**32))
    count = int(plant_rng.integers(1, max(n // 4, 1) + 1))
    seeds = frozenset(int(v) for v in plant_rng.choice(n, size=count, replace=False))

    base = GraphSpace(n, thresholds, (0,) * n, dists)
    graph = sample_graph(base, sample_seed)
    trace = lt_run(graph, thresholds, seeds)
    labels = tuple(1 if v in trace.final_active else 0 for v in range(n))
    space = GraphSpace(n, thresholds, labels, dists)
    return PlantedWitness(space, seeds, graph, graph_loss(space, graph).total)


def generate_instance(n: int, edge_density: float, support_size: int, label_rule: str,
                      seed: int, label_p: float = 0.5) -> GraphSpace:
    """Deterministic random space; equal arguments yield equal spaces."""
    if label_rule not in LABEL_RULES:
        raise InputError(f"label rule must be one of {LABEL_RULES} (got {label_rule!r})")
    if label_rule == "planted_cascade":
        return plant_cascade(n, edge_density, support_size, seed).space
    _check_args(n, edge_density, support_size, seed)
    if not 0.0 <= label_p <= 1.0:
        raise InputError(f"label probability {label_p} outside [0, 1]")
    space_child, label_child = np.random.SeedSequence(seed).spawn(2)
    rng = np.random.default_rng(space_child)
    thresholds = tuple(rng.random(n))
    dists = _random_dists(rng, n, edge_density, support_size)
    label_rng = np.random.default_rng(label_child)
    labels = tuple(int(u < label_p) for u in label_rng.random(n))
    return GraphSpace(n, thresholds, labels, dists)
