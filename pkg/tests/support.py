"""Shared builders and independent oracles for the test suite."""

from pathlib import Path

import numpy as np

from netspace import EdgeDistribution, GraphSpace, generate_instance

FIXTURES = Path(__file__).parent / "fixtures"
STAR_FIXTURE = FIXTURES / "star4.json"

# Dyadic lattice: sums of these values are exact in float64, so threshold
# comparisons are reproducible across kernels and oracle implementations.
DYADIC = [i / 64 for i in range(65)]


def point_mass(w: float) -> EdgeDistribution:
    return EdgeDistribution((float(w),), (1.0,))


def star_counterexample_space() -> GraphSpace:
    """4-node star: unlabeled center 0, labeled periphery, unit-mass edges."""
    dists = {(0, j): point_mass(1.0) for j in (1, 2, 3)}
    return GraphSpace.with_global_threshold(4, 0.5, (0, 1, 1, 1), dists)


def random_space(seed: int, max_n: int = 12, min_n: int = 1) -> GraphSpace:
    """Deterministic random space; instance parameters vary with the seed."""
    rng = np.random.default_rng(900_000_000 + seed)
    n = int(rng.integers(min_n, max_n + 1))
    density = float(rng.uniform(0.1, 0.9))
    support_size = int(rng.integers(1, 4))
    label_p = float(rng.uniform(0.1, 0.9))
    return generate_instance(n, density, support_size, "random_p", seed, label_p=label_p)


def python_cascade(n, weights, thresholds, seeds):
    """Set-based reference simulator, independent of the array kernels.

    Returns (rounds, final_active) with round 0 equal to the seed set and no
    trailing empty round.
    """
    adjacency = {v: [] for v in range(n)}
    for (i, j), w in weights.items():
        if w != 0.0:
            adjacency[i].append((j, w))
            adjacency[j].append((i, w))
    active = set(seeds)
    rounds = [set(seeds)]
    while True:
        newly = set()
        for v in range(n):
            if v in active:
                continue
            total = sum(w for u, w in adjacency[v] if u in active)
            if total > 0.0 and total >= thresholds[v]:
                newly.add(v)
        if not newly:
            return rounds, active
        rounds.append(newly)
        active |= newly


def loss_oracle(space: GraphSpace, graph) -> float:
    """Naive pair-by-pair re-summation of the graph loss."""
    total = 0.0
    for i in range(space.n):
        for j in range(i + 1, space.n):
            if (i, j) in space.dists:
                support = space.dists[(i, j)].support
                probs = space.dists[(i, j)].probs
            else:
                support, probs = (0.0,), (1.0,)
            w = graph.weights.get((i, j), 0.0)
            mass_w = probs[support.index(w)] if w in support else 0.0
            total += max(probs) - mass_w
    return total
