"""Synchronous threshold-cascade simulation and label-realization checking.

Activation is permanent (susceptible-infected dynamics): seeds are active in
round 0, and an inactive node activates in a round exactly when the weight
sum of its currently-active neighbors is positive and is >= its threshold.
All eligible nodes commit simultaneously, so a run is deterministic and
finishes in at most n rounds.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError
from .kernels import cascade_rounds
from .space import GraphSpace, RealizedGraph

SeedSet = frozenset[int]


@dataclass(frozen=True)
class CascadeTrace:
    """Per-round newly-activated node sets; round 0 is the seed set."""

    rounds: tuple[frozenset[int], ...]
    final_active: frozenset[int]


def _seed_mask(n: int, seeds: Iterable[int]) -> np.ndarray:
    mask = np.zeros(n, dtype=np.bool_)
    for v in seeds:
        if not 0 <= v < n:
            raise InputError(f"seed {v} out of range [0, {n})")
        mask[v] = True
    return mask


def _thresholds_array(thresholds: Sequence[float], n: int) -> np.ndarray:
    arr = np.asarray(thresholds, dtype=np.float64)
    if arr.shape != (n,):
        raise InputError(f"expected {n} thresholds, got shape {arr.shape}")
    if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
        raise InputError("thresholds must lie in [0, 1]")
    return arr


def final_activation(dense: np.ndarray, thresholds: np.ndarray, seed_mask: np.ndarray) -> np.ndarray:
    """Boolean mask of nodes active at the fixed point (kernel fast path)."""
    return cascade_rounds(dense, thresholds, seed_mask) >= 0


def lt_run(graph: RealizedGraph, thresholds: Sequence[float], seeds: Iterable[int]) -> CascadeTrace:
    """Run the cascade from ``seeds`` and return its full round-by-round trace."""
    thr = _thresholds_array(thresholds, graph.n)
    seed_set = frozenset(int(v) for v in seeds)
    mask = _seed_mask(graph.n, seed_set)
    round_of = cascade_rounds(graph.dense, thr, mask)
    rounds = [seed_set]
    last = int(round_of.max())
    for r in range(1, last + 1):
        rounds.append(frozenset(int(v) for v in np.flatnonzero(round_of == r)))
    final = frozenset(int(v) for v in np.flatnonzero(round_of >= 0))
    return CascadeTrace(tuple(rounds), final)


def realizes(graph: RealizedGraph, space: GraphSpace, seeds: Iterable[int]) -> bool:
    """True iff the cascade from ``seeds`` activates exactly the label-1 nodes.

    Seeds must carry label 1: a label-0 seed contradicts the permanence of
    activation and is rejected as a contract violation.
    """
    if graph.n != space.n:
        raise InputError(f"graph has {graph.n} nodes but space has {space.n}")
    seed_set = frozenset(int(v) for v in seeds)
    mask = _seed_mask(space.n, seed_set)
    for v in sorted(seed_set):
        if space.labels[v] != 1:
            raise InputError(f"seed {v} is unlabeled; it can never reproduce the labels")
    final = final_activation(graph.dense, space.thresholds_array, mask)
    return bool(np.array_equal(final, space.labels_mask))
