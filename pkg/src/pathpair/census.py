"""Reproducible check sweeps over graph families.

A census runs a list of checks over a parameter range of a family and
emits one JSON-ready record per (graph, check). Records embed the graph
in canonical edge-list form so reports double as regression fixtures;
with the same seed and flags the serialized report is byte-identical
across runs (timings are opt-in precisely because they are not).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from .conditions import cut_condition, faudree_consistency
from .errors import SizeCapExceeded
from .families import complete, complete_bipartite, k_t_q, star, triangle_hub
from .graphs import Pairing, SimpleGraph, max_degree
from .routing import route
from .serialize import emit_graph
from .solver import DEFAULT_BUDGET
from .verifier import PairabilityStatus, full_pairings, is_path_pairable

SCHEMA_VERSION = 1

ROUTE_RANDOM_SAMPLES = 1000

FAMILIES: dict[str, Callable[[int], SimpleGraph]] = {
    "triangle_hub": lambda k: triangle_hub(k).graph,
    "star": star,
    "complete": complete,
    "complete_bipartite": lambda p: complete_bipartite(p, p),
    "k_t_q": lambda p: k_t_q(p, p),
}

CHECKS = ("route-all", "route-random", "verify-pp", "cut", "faudree")


def _random_full_pairing(n: int, rng: random.Random) -> Pairing:
    vs = list(range(n))
    rng.shuffle(vs)
    if n % 2:
        vs.pop()
    return Pairing.from_pairs(zip(vs[0::2], vs[1::2]))


def _check_route_all(family: str, param: int, seed: int, budget: int) -> dict[str, Any]:
    if family != "triangle_hub":
        return {"verdict": "not-applicable"}
    hub = triangle_hub(param)
    count = 0
    for pairing in full_pairings(range(hub.n)):
        route(hub, pairing)
        route(hub, pairing, case4_high=True)
        count += 1
    return {"verdict": "ok", "pairings_routed": count}


def _check_route_random(family: str, param: int, seed: int, budget: int) -> dict[str, Any]:
    if family != "triangle_hub":
        return {"verdict": "not-applicable"}
    hub = triangle_hub(param)
    rng = random.Random(seed)
    for _ in range(ROUTE_RANDOM_SAMPLES):
        route(hub, _random_full_pairing(hub.n, rng))
    return {"verdict": "ok", "pairings_routed": ROUTE_RANDOM_SAMPLES}


def _check_verify_pp(family: str, param: int, seed: int, budget: int) -> dict[str, Any]:
    g = FAMILIES[family](param)
    if g.n % 2:
        return {"verdict": "not-applicable", "reason": "odd vertex count"}
    verdict = is_path_pairable(g, budget=budget)
    out: dict[str, Any] = {
        "verdict": verdict.status.value,
        "pairings_checked": verdict.checked,
        "pairings_total": verdict.total,
    }
    if verdict.counterexample is not None:
        out["witness"] = [list(p) for p in verdict.counterexample.pairs]
    return out


def _check_cut(family: str, param: int, seed: int, budget: int) -> dict[str, Any]:
    g = FAMILIES[family](param)
    report = cut_condition(g)
    out: dict[str, Any] = {"verdict": "holds" if report.holds else "violated"}
    if not report.holds:
        out["witness"] = sorted(report.violating_set)
        out["cut_size"] = report.cut_size
    return out


def _check_faudree(family: str, param: int, seed: int, budget: int) -> dict[str, Any]:
    g = FAMILIES[family](param)
    delta = max_degree(g)
    ok = faudree_consistency(g.n, delta) if g.n >= 2 and delta >= 1 else True
    return {"verdict": "consistent" if ok else "violated", "n": g.n, "max_degree": delta}


_CHECK_RUNNERS = {
    "route-all": _check_route_all,
    "route-random": _check_route_random,
    "verify-pp": _check_verify_pp,
    "cut": _check_cut,
    "faudree": _check_faudree,
}


def build_record(args: tuple[str, int, str, int, int, bool]) -> dict[str, Any]:
    family, param, check, seed, budget, timings = args
    g = FAMILIES[family](param)
    record: dict[str, Any] = {
        "family": family,
        "param": param,
        "n": g.n,
        "edges": g.edge_count,
        "graph": emit_graph(g),
        "check": check,
    }
    start = time.perf_counter()
    try:
        record.update(_CHECK_RUNNERS[check](family, param, seed, budget))
    except SizeCapExceeded as exc:
        record["verdict"] = "cap-exceeded"
        record["error"] = str(exc)
    if timings:
        record["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return record


def run_census(
    families: list[str],
    sizes: range,
    checks: list[str],
    seed: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    timings: bool = False,
) -> dict[str, Any]:
    """One record per (family, param, check), in input order.

    Unknown families or checks are usage errors; per-record cap overruns
    are recorded, not fatal. Deterministic in (families, sizes, checks,
    seed) unless timings are requested.
    """
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}, choose from {sorted(FAMILIES)}")
    for check in checks:
        if check not in _CHECK_RUNNERS:
            raise ValueError(f"unknown check {check!r}, choose from {sorted(_CHECK_RUNNERS)}")

    tasks = [
        (family, param, check, seed, budget, timings)
        for family in families
        for param in sizes
        for check in checks
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(build_record, tasks))
    else:
        records = [build_record(t) for t in tasks]
    return {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "families": list(families),
        "sizes": [sizes.start, sizes.stop],
        "checks": list(checks),
        "records": records,
    }


def census_exit_code(report: dict[str, Any], expect_counterexample: bool = False) -> int:
    """0 all passed, 1 a counterexample was found (inverted when one is
    expected), 3 a cap or budget was exceeded."""
    verdicts = [r.get("verdict") for r in report["records"]]
    if any(v in ("cap-exceeded", PairabilityStatus.BUDGET_EXCEEDED.value) for v in verdicts):
        return 3
    failing = any(v in ("violated", PairabilityStatus.NOT_PAIRABLE.value) for v in verdicts)
    if expect_counterexample:
        return 0 if failing else 1
    return 1 if failing else 0
