"""Seed-set solvers: constructive, budget-aware greedy, exhaustive oracle, local search.

All solvers pick seeds among labeled nodes only (an unlabeled seed would be
active from round 0 and immediately contradict the target labels) and report
infeasibility as a value, not an error: an ``Infeasible`` result means the
solver exhausted its declared search space.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .cascade import final_activation, realizes
from .errors import GuardExceeded, InputError
from .loss import LOSS_TOL, edge_loss, graph_loss
from .space import GraphSpace, RealizedGraph, ordered_pair

BRUTE_FORCE_MAX_LABELED = 20


class InfeasibleReason(Enum):
    NO_SOLUTION_AT_BUDGET = "NO_SOLUTION_AT_BUDGET"
    NO_LABELED_SEED_POSSIBLE = "NO_LABELED_SEED_POSSIBLE"


@dataclass(frozen=True)
class Infeasible:
    """Outcome of a complete search that found no valid solution."""

    reason: InfeasibleReason


@dataclass(frozen=True)
class Solution:
    """A realized graph plus a seed set that reproduces the labels on it."""

    graph: RealizedGraph
    seeds: frozenset[int]
    k: int
    loss_total: float


SolveOutcome = Union[Solution, Infeasible]


def _within_budget(total: float, budget: float) -> bool:
    return total <= budget + LOSS_TOL


class _UnionFind:
    def __init__(self, items):
        self.parent = {v: v for v in items}

    def find(self, v):
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def _components(nodes, edges) -> list[list[int]]:
    """Connected components of ``nodes`` under ``edges``, each sorted, ordered by minimum."""
    uf = _UnionFind(nodes)
    for i, j in edges:
        uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for v in nodes:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _greedy_component_seeds(dense: np.ndarray, thresholds: np.ndarray, comp: list[int]) -> list[int]:
    """Marginal-gain seed picks until every node of ``comp`` is active.

    Each step seeds the node whose addition activates the most
    currently-inactive component nodes, breaking ties toward the lowest
    index. Cascades from inside a component cannot leave it when the
    component is isolated, so other components need no bookkeeping here.
    """
    n = thresholds.shape[0]
    comp_idx = np.asarray(comp, dtype=np.int64)
    seeds: list[int] = []
    seed_mask = np.zeros(n, dtype=np.bool_)
    active = np.zeros(n, dtype=np.bool_)
    while not active[comp_idx].all():
        best_v = -1
        best_gain = 0
        for v in comp:
            if active[v]:
                continue
            seed_mask[v] = True
            reached = final_activation(dense, thresholds, seed_mask)
            seed_mask[v] = False
            gain = int(np.count_nonzero(reached[comp_idx] & ~active[comp_idx]))
            if gain > best_gain:
                best_gain = gain
                best_v = v
        seeds.append(best_v)
        seed_mask[best_v] = True
        active = final_activation(dense, thresholds, seed_mask)
    return seeds


def _greedy_seed_selection(space: GraphSpace, graph: RealizedGraph) -> frozenset[int] | None:
    """Union of per-component greedy seed sets; None if it fails to realize the labels.

    Components are taken over positive-weight pairs between labeled nodes.
    On graphs whose unlabeled nodes have positive incident weights the
    assembled seeds can overshoot, hence the final realization check.
    """
    labels = space.labels
    labeled = space.labeled_nodes()
    pos_edges = [(i, j) for (i, j), w in graph.weights.items()
                 if w > 0.0 and labels[i] == 1 and labels[j] == 1]
    seeds: list[int] = []
    for comp in _components(labeled, pos_edges):
        seeds.extend(_greedy_component_seeds(graph.dense, space.thresholds_array, comp))
    seed_set = frozenset(seeds)
    if realizes(graph, space, seed_set):
        return seed_set
    return None


def solve_trivial(space: GraphSpace) -> Solution:
    """Seed every labeled node on the modal graph with unlabeled pairs zeroed.

    The labels are realized at initialization: nothing can spread to an
    unlabeled node because all its incident weights are 0.
    """
    labels = space.labels
    weights = {pair: d.mode for pair, d in space.dists.items()
               if d.mode != 0.0 and labels[pair[0]] == 1 and labels[pair[1]] == 1}
    graph = RealizedGraph(space.n, weights)
    seeds = frozenset(space.labeled_nodes())
    return Solution(graph, seeds, len(seeds), graph_loss(space, graph).total)


def solve_unconstrained(space: GraphSpace) -> Solution:
    """Single-seed star construction, ignoring any loss budget.

    The lowest-index labeled node becomes the hub with weight-1 edges to all
    other labeled nodes; a weight of 1 meets every threshold in [0, 1], so
    the whole labeled set activates in one round regardless of thresholds.
    With no labeled node the empty graph and empty seed set realize the
    all-zero labels.
    """
    labeled = space.labeled_nodes()
    if not labeled:
        graph = RealizedGraph(space.n, {})
        return Solution(graph, frozenset(), 0, graph_loss(space, graph).total)
    hub = labeled[0]
    weights = {ordered_pair(hub, v): 1.0 for v in labeled[1:]}
    graph = RealizedGraph(space.n, weights)
    return Solution(graph, frozenset({hub}), 1, graph_loss(space, graph).total)


def solve_budgeted(space: GraphSpace, budget: float) -> SolveOutcome:
    """Binary-weight approximation for seed minimization under a loss budget.

    Pipeline: zero every pair incident to an unlabeled node, binarize each
    labeled-labeled pair to whichever of {0, 1} costs less (ties to 0), seed
    each connected component of the weight-1 graph by greedy marginal gain,
    and, if the result exceeds the budget, greedily revert assignments back
    to their modal values (largest per-edge loss first) whenever the seed
    set still realizes the labels. An infinite budget reduces to the
    unconstrained star construction.
    """
    budget = float(budget)
    if math.isnan(budget) or budget < 0.0:
        raise InputError(f"budget must be >= 0 or infinity (got {budget})")
    if math.isinf(budget):
        return solve_unconstrained(space)

    labels = space.labels
    weights = {}
    for pair, dist in space.dists.items():
        if labels[pair[0]] == 1 and labels[pair[1]] == 1:
            if edge_loss(dist, 1.0) < edge_loss(dist, 0.0):
                weights[pair] = 1.0
    graph = RealizedGraph(space.n, weights)

    seeds = _greedy_seed_selection(space, graph)
    # On the binarized graph unlabeled nodes are isolated, so greedy cannot fail.
    assert seeds is not None
    report = graph_loss(space, graph)
    if _within_budget(report.total, budget):
        return Solution(graph, seeds, len(seeds), report.total)

    # Budget repair: restore modal weights where realization survives.
    seed_mask = np.zeros(space.n, dtype=np.bool_)
    seed_mask[list(seeds)] = True
    target = space.labels_mask
    for _, pair in sorted(((l, p) for p, l in report.per_edge.items()),
                          key=lambda t: (-t[0], t[1])):
        trial = graph.replace(*pair, space.dists[pair].mode)
        final = final_activation(trial.dense, space.thresholds_array, seed_mask)
        if np.array_equal(final, target):
            graph = trial
    total = graph_loss(space, graph).total
    if _within_budget(total, budget):
        return Solution(graph, seeds, len(seeds), total)
    return Infeasible(InfeasibleReason.NO_SOLUTION_AT_BUDGET)


def brute_force_min_seeds(graph: RealizedGraph, space: GraphSpace) -> SolveOutcome:
    """Smallest realizing seed set on a fixed graph, by exhaustive enumeration.

    Subsets of the labeled nodes are tried in increasing size and, within a
    size, in lexicographic order, so the returned set is deterministic.
    Guarded to at most 20 labeled nodes.
    """
    if graph.n != space.n:
        raise InputError(f"graph has {graph.n} nodes but space has {space.n}")
    labeled = space.labeled_nodes()
    if len(labeled) > BRUTE_FORCE_MAX_LABELED:
        raise GuardExceeded(
            f"{len(labeled)} labeled nodes exceed the enumeration guard of {BRUTE_FORCE_MAX_LABELED}")
    dense = graph.dense
    thresholds = space.thresholds_array
    target = space.labels_mask
    loss_total = graph_loss(space, graph).total
    seed_mask = np.zeros(space.n, dtype=np.bool_)
    for k in range(len(labeled) + 1):
        for combo in itertools.combinations(labeled, k):
            seed_mask[:] = False
            for v in combo:
                seed_mask[v] = True
            if np.array_equal(final_activation(dense, thresholds, seed_mask), target):
                return Solution(graph, frozenset(combo), k, loss_total)
    return Infeasible(InfeasibleReason.NO_LABELED_SEED_POSSIBLE)


def _best_seed_set(graph: RealizedGraph, space: GraphSpace) -> frozenset[int] | None:
    """Minimal seeds via the oracle when within its guard, greedy otherwise."""
    if len(space.labeled_nodes()) <= BRUTE_FORCE_MAX_LABELED:
        outcome = brute_force_min_seeds(graph, space)
        return outcome.seeds if isinstance(outcome, Solution) else None
    return _greedy_seed_selection(space, graph)


def local_search_improve(space: GraphSpace, start: Solution, budget: float,
                         max_iters: int) -> Solution:
    """Hill-climb over single-pair weight moves, chasing a strictly smaller seed count.

    A move rewrites one labeled-labeled pair to one of its support values or
    to 0 or 1. It is accepted only when the rewritten graph stays within the
    budget and admits a strictly smaller seed set; the first improving move
    of a scan is taken. Stops after ``max_iters`` accepted moves or a full
    scan without one, so the result is never worse than ``start``.
    """
    problems = verify_solution(space, start, budget)
    if problems:
        raise InputError("start solution is invalid: " + "; ".join(problems))
    labeled = space.labeled_nodes()
    pairs = [(i, j) for a, i in enumerate(labeled) for j in labeled[a + 1:]]
    current = start
    for _ in range(max_iters):
        improved = False
        for pair in pairs:
            dist = space.dist(*pair)
            cur_w = current.graph.weight(*pair)
            for w in sorted(set(dist.support) | {0.0, 1.0}):
                if w == cur_w:
                    continue
                trial = current.graph.replace(*pair, w)
                total = graph_loss(space, trial).total
                if not _within_budget(total, budget):
                    continue
                seeds = _best_seed_set(trial, space)
                if seeds is not None and len(seeds) < current.k:
                    current = Solution(trial, seeds, len(seeds), total)
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    return current


def verify_solution(space: GraphSpace, solution: Solution, budget: float = math.inf) -> list[str]:
    """Independent re-check of a solution; returns problem descriptions (empty = valid).

    Realization and loss are re-derived from the graph, never taken from the
    solver's own bookkeeping.
    """
    problems = []
    graph = solution.graph
    if graph.n != space.n:
        return [f"graph has {graph.n} nodes but space has {space.n}"]
    if solution.k != len(solution.seeds):
        problems.append(f"k is {solution.k} but the seed set has {len(solution.seeds)} nodes")
    bad_seeds = sorted(v for v in solution.seeds
                       if not (0 <= v < space.n) or space.labels[v] != 1)
    if bad_seeds:
        problems.append(f"seeds {bad_seeds} are out of range or unlabeled")
    elif not realizes(graph, space, solution.seeds):
        problems.append("cascade from the seed set does not reproduce the labels")
    total = graph_loss(space, graph).total
    if abs(total - solution.loss_total) > LOSS_TOL:
        problems.append(f"recorded loss {solution.loss_total!r} differs from recomputed {total!r}")
    if not _within_budget(total, budget):
        problems.append(f"loss {total!r} exceeds the budget {budget!r}")
    return problems
