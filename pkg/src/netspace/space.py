"""Core data model: distributions over edge weights, graph spaces, realized graphs.

A graph space assigns every unordered node pair a finite probability mass
function over weight values in [0, 1]; pairs without a stored distribution
carry an implicit point mass at weight 0. A realized graph is one concrete
weight assignment, which may place a pair off its distribution's support
(such a weight simply has mass 0 there).
"""

import math
import operator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import InputError

Pair = tuple[int, int]

PROB_SUM_TOL = 1e-9


def ordered_pair(i: int, j: int) -> Pair:
    """Canonical (min, max) key for the unordered pair {i, j}."""
    if i == j:
        raise InputError(f"self-pair ({i}, {j}) is not allowed")
    return (i, j) if i < j else (j, i)


def _node_pair(pair, n: int) -> Pair:
    try:
        i, j = pair
        i = operator.index(i)
        j = operator.index(j)
    except (TypeError, ValueError):
        raise InputError(f"pair {pair!r} must be a tuple of two integer node ids") from None
    if not 0 <= i < j < n:
        raise InputError(f"pair {pair!r} must satisfy 0 <= i < j < {n}")
    return (i, j)


@dataclass(frozen=True)
class EdgeDistribution:
    """Finite PMF over edge-weight values in [0, 1].

    Support values are strictly increasing; probabilities are strictly
    positive and sum to 1 within 1e-9. The mode is the smallest support
    value of maximal probability, so it is deterministic under ties.
    """

    support: tuple[float, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        support = tuple(float(w) for w in self.support)
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)
        if not support:
            raise InputError("distribution support must be nonempty")
        if len(probs) != len(support):
            raise InputError("support and probs must have the same length")
        for w in support:
            if not 0.0 <= w <= 1.0:
                raise InputError(f"support value {w} outside [0, 1]")
        for a, b in zip(support, support[1:]):
            if not a < b:
                raise InputError("support values must be strictly increasing")
        for p in probs:
            if not p > 0.0:
                raise InputError(f"probability {p} is not > 0")
        total = math.fsum(probs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise InputError(f"probabilities must sum to 1 (got {total!r})")

    @cached_property
    def _mass_by_value(self) -> dict[float, float]:
        return dict(zip(self.support, self.probs))

    @cached_property
    def max_mass(self) -> float:
        return max(self.probs)

    @cached_property
    def mode(self) -> float:
        """Smallest support value attaining the maximal probability."""
        return self.support[self.probs.index(self.max_mass)]

    def mass(self, w: float) -> float:
        """PMF value at w; off-support weights have mass 0."""
        return self._mass_by_value.get(float(w), 0.0)

    def sample(self, u: float) -> float:
        """Inverse-CDF draw for a uniform variate u in [0, 1)."""
        acc = 0.0
        for w, p in zip(self.support, self.probs):
            acc += p
            if u < acc:
                return w
        return self.support[-1]


POINT_MASS_ZERO = EdgeDistribution((0.0,), (1.0,))


@dataclass(frozen=True)
class GraphSpace:
    """Node thresholds and binary labels plus a weight PMF per node pair.

    ``dists`` maps canonical pairs (i, j) with i < j to distributions; any
    absent pair is treated as a point mass at weight 0. Instances are
    immutable and safe to share between workers.
    """

    n: int
    thresholds: tuple[float, ...]
    labels: tuple[int, ...]
    dists: Mapping[Pair, EdgeDistribution] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"node count must be a positive integer (got {self.n!r})")
        thresholds = tuple(float(a) for a in self.thresholds)
        if len(thresholds) != self.n:
            raise InputError(f"expected {self.n} thresholds, got {len(thresholds)}")
        labels_in = tuple(self.labels)
        if len(labels_in) != self.n:
            raise InputError(f"expected {self.n} labels, got {len(labels_in)}")
        for v, a in enumerate(thresholds):
            if not 0.0 <= a <= 1.0:
                raise InputError(f"threshold of node {v} is {a}, outside [0, 1]")
        for v, l in enumerate(labels_in):
            if l not in (0, 1):
                raise InputError(f"label of node {v} must be 0 or 1 (got {l!r})")
        labels = tuple(int(l) for l in labels_in)
        dists = {}
        for pair, dist in self.dists.items():
            key = _node_pair(pair, self.n)
            if not isinstance(dist, EdgeDistribution):
                raise InputError(f"pair {pair!r} maps to {type(dist).__name__}, not EdgeDistribution")
            dists[key] = dist
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dists", dists)

    @classmethod
    def with_global_threshold(cls, n: int, alpha: float, labels: Iterable[int],
                              dists: Mapping[Pair, EdgeDistribution]) -> "GraphSpace":
        """Space in which every node shares the single threshold ``alpha``."""
        return cls(n, (float(alpha),) * n, tuple(labels), dists)

    def dist(self, i: int, j: int) -> EdgeDistribution:
        """Distribution for the pair {i, j}; absent pairs are a point mass at 0."""
        return self.dists.get(ordered_pair(i, j), POINT_MASS_ZERO)

    def labeled_nodes(self) -> list[int]:
        return [v for v in range(self.n) if self.labels[v] == 1]

    @cached_property
    def thresholds_array(self) -> np.ndarray:
        arr = np.asarray(self.thresholds, dtype=np.float64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def labels_mask(self) -> np.ndarray:
        arr = np.asarray(self.labels, dtype=np.int64) == 1
        arr.flags.writeable = False
        return arr


@dataclass(frozen=True)
class RealizedGraph:
    """A concrete weight per pair; zero-weight pairs are stored implicitly."""

    n: int
    weights: Mapping[Pair, float] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"node count must be a positive integer (got {self.n!r})")
        weights = {}
        for pair, w in self.weights.items():
            key = _node_pair(pair, self.n)
            w = float(w)
            if not 0.0 <= w <= 1.0:
                raise InputError(f"weight {w} of pair {pair!r} outside [0, 1]")
            if w != 0.0:
                weights[key] = w
        object.__setattr__(self, "weights", weights)

    def weight(self, i: int, j: int) -> float:
        return self.weights.get(ordered_pair(i, j), 0.0)

    def replace(self, i: int, j: int, w: float) -> "RealizedGraph":
        """Copy of this graph with the pair {i, j} set to weight ``w``."""
        pair = ordered_pair(i, j)
        weights = dict(self.weights)
        weights.pop(pair, None)
        if w != 0.0:
            weights[pair] = w
        return RealizedGraph(self.n, weights)

    @cached_property
    def dense(self) -> np.ndarray:
        """Symmetric float64 weight matrix, cached for the cascade kernels."""
        mat = np.zeros((self.n, self.n), dtype=np.float64)
        for (i, j), w in self.weights.items():
            mat[i, j] = w
            mat[j, i] = w
        mat.flags.writeable = False
        return mat


def mle_graph(space: GraphSpace) -> RealizedGraph:
    """Realized graph assigning every pair the mode of its distribution."""
    weights = {pair: d.mode for pair, d in space.dists.items() if d.mode != 0.0}
    return RealizedGraph(space.n, weights)


def sample_graph(space: GraphSpace, seed: int) -> RealizedGraph:
    """Draw each pair's weight independently from its distribution.

    Identical (space, seed) arguments produce identical graphs; every drawn
    weight lies on the pair's support.
    """
    rng = np.random.default_rng(seed)
    weights = {}
    for pair in sorted(space.dists):
        w = space.dists[pair].sample(rng.random())
        if w != 0.0:
            weights[pair] = w
    return RealizedGraph(space.n, weights)


def neighbors(graph: RealizedGraph, v: int) -> list[tuple[int, float]]:
    """Positive-weight neighbors of ``v`` with their weights, ascending by node id."""
    if not 0 <= v < graph.n:
        raise InputError(f"node {v} out of range [0, {graph.n})")
    out = []
    for (i, j), w in graph.weights.items():
        if i == v:
            out.append((j, w))
        elif j == v:
            out.append((i, w))
    out.sort()
    return out
