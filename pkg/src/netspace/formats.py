"""Versioned JSON file formats: instances, realized graphs, solutions, traces.

All formats carry the version string "netspace-1", reject unknown fields,
and enforce the numeric invariants of the in-memory types at parse time
with a field-precise diagnostic. Writers emit sorted keys and sorted edge
lists, so equal values serialize to identical bytes.
"""

import json
import math
from typing import Any

from .cascade import CascadeTrace
from .errors import InstanceFormatError
from .loss import LossReport
from .solvers import Solution
from .space import PROB_SUM_TOL, EdgeDistribution, GraphSpace, RealizedGraph

FORMAT_VERSION = "netspace-1"


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _loads(data: bytes | str, what: str) -> dict:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InstanceFormatError(f"{what}: not valid UTF-8 ({e})") from None
    try:
        obj = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"{what}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{what}: top level must be a JSON object")
    return obj


def _reject_constant(name: str):
    raise InstanceFormatError(f"non-finite number {name} is not allowed")


def _check_fields(obj: dict, where: str, required: tuple, optional: tuple = ()):
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise InstanceFormatError(f"{where}: unknown fields {unknown}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise InstanceFormatError(f"{where}: missing fields {missing}")


def _check_version(obj: dict, where: str):
    version = obj["version"]
    if version != FORMAT_VERSION:
        raise InstanceFormatError(
            f"{where}.version: expected {FORMAT_VERSION!r}, got {version!r}")


def _as_int(value, where: str) -> int:
    if type(value) is not int:
        raise InstanceFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _as_number(value, where: str) -> float:
    if type(value) not in (int, float):
        raise InstanceFormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _as_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise InstanceFormatError(f"{where}: expected a list, got {value!r}")
    return value


def _as_object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise InstanceFormatError(f"{where}: expected an object, got {value!r}")
    return value


def _unit_interval(value, where: str) -> float:
    x = _as_number(value, where)
    if not 0.0 <= x <= 1.0:
        raise InstanceFormatError(f"{where}: value {x} outside [0, 1]")
    return x


def _node_id(value, n: int, where: str) -> int:
    v = _as_int(value, where)
    if not 0 <= v < n:
        raise InstanceFormatError(f"{where}: node {v} out of range [0, {n})")
    return v


def _edge_endpoints(rec: dict, n: int, where: str) -> tuple[int, int]:
    u = _node_id(rec["u"], n, f"{where}.u")
    v = _node_id(rec["v"], n, f"{where}.v")
    if u >= v:
        raise InstanceFormatError(f"{where}: u must be < v (got u={u}, v={v})")
    return u, v


def _parse_dist(obj: dict, where: str) -> EdgeDistribution:
    _check_fields(obj, where, ("support", "probs"))
    support_raw = _as_list(obj["support"], f"{where}.support")
    probs_raw = _as_list(obj["probs"], f"{where}.probs")
    if not support_raw:
        raise InstanceFormatError(f"{where}.support: must be nonempty")
    if len(probs_raw) != len(support_raw):
        raise InstanceFormatError(
            f"{where}: support has {len(support_raw)} values but probs has {len(probs_raw)}")
    support = [_unit_interval(w, f"{where}.support[{k}]") for k, w in enumerate(support_raw)]
    for a, b in zip(support, support[1:]):
        if not a < b:
            raise InstanceFormatError(f"{where}.support: values must be strictly increasing")
    probs = []
    for k, p in enumerate(probs_raw):
        p = _as_number(p, f"{where}.probs[{k}]")
        if not p > 0.0:
            raise InstanceFormatError(f"{where}.probs[{k}]: probability {p} is not > 0")
        probs.append(p)
    total = math.fsum(probs)
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise InstanceFormatError(f"{where}.probs: probabilities must sum to 1 (got {total!r})")
    return EdgeDistribution(tuple(support), tuple(probs))


def parse_instance(data: bytes | str) -> GraphSpace:
    """Parse and validate an instance file into a graph space."""
    obj = _loads(data, "instance")
    _check_fields(obj, "instance", ("version", "n", "thresholds", "labels", "edges"))
    _check_version(obj, "instance")
    n = _as_int(obj["n"], "instance.n")
    if n < 1:
        raise InstanceFormatError(f"instance.n: must be >= 1 (got {n})")
    thresholds_raw = _as_list(obj["thresholds"], "instance.thresholds")
    if len(thresholds_raw) != n:
        raise InstanceFormatError(
            f"instance.thresholds: expected {n} values, got {len(thresholds_raw)}")
    thresholds = tuple(_unit_interval(a, f"instance.thresholds[{k}]")
                       for k, a in enumerate(thresholds_raw))
    labels_raw = _as_list(obj["labels"], "instance.labels")
    if len(labels_raw) != n:
        raise InstanceFormatError(f"instance.labels: expected {n} values, got {len(labels_raw)}")
    labels = []
    for k, l in enumerate(labels_raw):
        l = _as_int(l, f"instance.labels[{k}]")
        if l not in (0, 1):
            raise InstanceFormatError(f"instance.labels[{k}]: must be 0 or 1 (got {l})")
        labels.append(l)
    dists = {}
    for idx, rec in enumerate(_as_list(obj["edges"], "instance.edges")):
        where = f"instance.edges[{idx}]"
        rec = _as_object(rec, where)
        _check_fields(rec, where, ("u", "v", "dist"))
        pair = _edge_endpoints(rec, n, where)
        if pair in dists:
            raise InstanceFormatError(f"{where}: duplicate pair {pair}")
        dists[pair] = _parse_dist(_as_object(rec["dist"], f"{where}.dist"), f"{where}.dist")
    return GraphSpace(n, thresholds, tuple(labels), dists)


def write_instance(space: GraphSpace) -> str:
    edges = [{"u": i, "v": j,
              "dist": {"support": list(d.support), "probs": list(d.probs)}}
             for (i, j), d in sorted(space.dists.items())]
    return _dumps({"version": FORMAT_VERSION, "n": space.n,
                   "thresholds": list(space.thresholds),
                   "labels": list(space.labels), "edges": edges})


def _parse_weight_edges(records: list, n: int, where: str) -> dict:
    weights = {}
    for idx, rec in enumerate(records):
        rec_where = f"{where}[{idx}]"
        rec = _as_object(rec, rec_where)
        _check_fields(rec, rec_where, ("u", "v", "weight"))
        pair = _edge_endpoints(rec, n, rec_where)
        if pair in weights:
            raise InstanceFormatError(f"{rec_where}: duplicate pair {pair}")
        weights[pair] = _unit_interval(rec["weight"], f"{rec_where}.weight")
    return weights


def _weight_edge_records(graph: RealizedGraph) -> list:
    return [{"u": i, "v": j, "weight": w} for (i, j), w in sorted(graph.weights.items())]


def parse_graph_file(data: bytes | str) -> RealizedGraph:
    """Parse a realized-graph file."""
    obj = _loads(data, "graph")
    _check_fields(obj, "graph", ("version", "n", "edges"))
    _check_version(obj, "graph")
    n = _as_int(obj["n"], "graph.n")
    if n < 1:
        raise InstanceFormatError(f"graph.n: must be >= 1 (got {n})")
    weights = _parse_weight_edges(_as_list(obj["edges"], "graph.edges"), n, "graph.edges")
    return RealizedGraph(n, weights)


def write_graph_file(graph: RealizedGraph) -> str:
    return _dumps({"version": FORMAT_VERSION, "n": graph.n,
                   "edges": _weight_edge_records(graph)})


def parse_solution(data: bytes | str) -> tuple[Solution, CascadeTrace | None]:
    """Parse a solution file; returns the solution and its optional trace."""
    obj = _loads(data, "solution")
    _check_fields(obj, "solution",
                  ("version", "n", "seeds", "k", "loss_total", "edges"), ("trace",))
    _check_version(obj, "solution")
    n = _as_int(obj["n"], "solution.n")
    if n < 1:
        raise InstanceFormatError(f"solution.n: must be >= 1 (got {n})")
    seeds = []
    for idx, v in enumerate(_as_list(obj["seeds"], "solution.seeds")):
        seeds.append(_node_id(v, n, f"solution.seeds[{idx}]"))
    seed_set = frozenset(seeds)
    if len(seed_set) != len(seeds):
        raise InstanceFormatError("solution.seeds: duplicate entries")
    k = _as_int(obj["k"], "solution.k")
    if k != len(seed_set):
        raise InstanceFormatError(f"solution.k: is {k} but there are {len(seed_set)} seeds")
    loss_total = _as_number(obj["loss_total"], "solution.loss_total")
    if loss_total < 0.0:
        raise InstanceFormatError(f"solution.loss_total: must be >= 0 (got {loss_total})")
    weights = _parse_weight_edges(_as_list(obj["edges"], "solution.edges"), n, "solution.edges")
    solution = Solution(RealizedGraph(n, weights), seed_set, k, loss_total)

    trace = None
    if "trace" in obj:
        rounds = []
        seen: set[int] = set()
        for r, nodes in enumerate(_as_list(obj["trace"], "solution.trace")):
            where = f"solution.trace[{r}]"
            members = frozenset(_node_id(v, n, f"{where}[{idx}]")
                                for idx, v in enumerate(_as_list(nodes, where)))
            if members & seen:
                raise InstanceFormatError(f"{where}: rounds must be pairwise disjoint")
            seen |= members
            rounds.append(members)
        if not rounds or rounds[0] != seed_set:
            raise InstanceFormatError("solution.trace: round 0 must equal the seed set")
        trace = CascadeTrace(tuple(rounds), frozenset(seen))
    return solution, trace


def write_solution(solution: Solution, trace: CascadeTrace | None = None) -> str:
    obj = {"version": FORMAT_VERSION, "n": solution.graph.n,
           "seeds": sorted(solution.seeds), "k": solution.k,
           "loss_total": solution.loss_total,
           "edges": _weight_edge_records(solution.graph)}
    if trace is not None:
        obj["trace"] = [sorted(r) for r in trace.rounds]
    return _dumps(obj)


def write_trace(trace: CascadeTrace) -> str:
    return _dumps({"version": FORMAT_VERSION,
                   "rounds": [sorted(r) for r in trace.rounds],
                   "final_active": sorted(trace.final_active)})


def write_loss_report(report: LossReport) -> str:
    per_edge = [{"u": i, "v": j, "loss": l} for (i, j), l in sorted(report.per_edge.items())]
    return _dumps({"version": FORMAT_VERSION, "total": report.total, "per_edge": per_edge})
