"""Command-line harness wiring the generators, router, solver, verifier,
condition checkers, and proof machinery into reproducible experiments.

Exit codes: 0 all checks passed, 1 a counterexample was found, 2 usage
error, 3 a budget or size cap was exceeded. The PATHPAIR_CAP_OVERRIDE
environment variable raises the desk-scale size caps (at your own risk).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .caps import CAP_ENV_VAR
from .census import CHECKS, FAMILIES, census_exit_code, run_census
from .conditions import cut_condition, faudree_consistency, planar_degree_floor
from .errors import GraphFormatError, SizeCapExceeded
from .families import complete, complete_bipartite, k_t_q, star, triangle_hub
from .graphs import Pairing, max_degree
from .lemmalab import (
    classify_bad_edges,
    degree_partition,
    fact1_check,
    fact1_sides,
    hub_multigraph,
    lemma3_trichotomy,
    lemma5_check,
    refine_partition,
    weak_reachability,
)
from .routing import route
from .serialize import (
    emit_dot,
    emit_graph,
    emit_multigraph,
    emit_roles,
    parse_graph,
    parse_multigraph,
    parse_pairing,
)
from .solver import DEFAULT_BUDGET, SolveStatus, find_disjoint_paths
from .verifier import PairabilityStatus, is_k_path_pairable, is_path_pairable


def _write_json(payload: dict[str, Any], path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def _vertex_list(raw: str) -> list[int]:
    if not raw.strip():
        return []
    return [int(tok) for tok in raw.replace(",", " ").split()]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_generate(args) -> int:
    family = args.family
    params = args.params
    arity = {"star": 1, "complete": 1, "triangle_hub": 1, "complete_bipartite": 2, "k_t_q": 2}
    if family not in arity:
        print(f"unknown family {family!r}", file=sys.stderr)
        return 2
    if len(params) != arity[family]:
        print(f"{family} takes {arity[family]} parameter(s)", file=sys.stderr)
        return 2
    roles = None
    if family == "triangle_hub":
        hub = triangle_hub(params[0])
        g, roles = hub.graph, hub.roles()
    else:
        builder = {
            "star": star,
            "complete": complete,
            "complete_bipartite": complete_bipartite,
            "k_t_q": k_t_q,
        }[family]
        g = builder(*params)
    if args.dot:
        sys.stdout.write(emit_dot(g, roles if args.roles else None))
        return 0
    sys.stdout.write(emit_graph(g))
    if args.roles and roles:
        sys.stdout.write(emit_roles(roles))
    return 0


def _cmd_route(args) -> int:
    hub = triangle_hub(args.k)
    if args.pairing.startswith("random:"):
        rng = random.Random(int(args.pairing.split(":", 1)[1]))
        vs = list(range(hub.n))
        rng.shuffle(vs)
        pairing = Pairing.from_pairs(zip(vs[0::2], vs[1::2]))
    else:
        pairing = parse_pairing(Path(args.pairing).read_text())
    system = route(hub, pairing)
    for path in system.paths:
        print(" ".join(str(v) for v in path))
    print("disjoint: true")
    if args.json is not None:
        _write_json(
            {
                "k": args.k,
                "pairing": [list(p) for p in pairing.pairs],
                "paths": [list(p) for p in system.paths],
                "disjoint": True,
            },
            args.json,
        )
    return 0


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    pairing = parse_pairing(Path(args.pairs).read_text())
    result = find_disjoint_paths(g, pairing, budget=args.budget)
    report: dict[str, Any] = {
        "status": result.status.value,
        "expansions": result.expansions,
        "exhausted": result.status is SolveStatus.INFEASIBLE,
        "paths": [list(p) for p in result.system.paths] if result.system else None,
    }
    print(f"status: {result.status.value}")
    if args.json is not None:
        _write_json(report, args.json)
    return {
        SolveStatus.FEASIBLE: 0,
        SolveStatus.INFEASIBLE: 1,
        SolveStatus.BUDGET_EXCEEDED: 3,
    }[result.status]


def _cmd_verify_pp(args) -> int:
    g = _read_graph(args.graph)
    if args.k is None:
        verdict = is_path_pairable(g, budget=args.budget, use_orbits=args.orbits, jobs=args.jobs)
    else:
        verdict = is_k_path_pairable(g, args.k, budget=args.budget, jobs=args.jobs)
    report: dict[str, Any] = {
        "status": verdict.status.value,
        "pairings_checked": verdict.checked,
        "pairings_total": verdict.total,
        "witness": [list(p) for p in verdict.counterexample.pairs]
        if verdict.counterexample
        else None,
    }
    print(f"status: {verdict.status.value} ({verdict.checked}/{verdict.total} pairings)")
    if args.json is not None:
        _write_json(report, args.json)
    return {
        PairabilityStatus.PAIRABLE: 0,
        PairabilityStatus.NOT_PAIRABLE: 1,
        PairabilityStatus.BUDGET_EXCEEDED: 3,
    }[verdict.status]


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    wanted = [c.strip() for c in args.conditions.split(",") if c.strip()]
    report: dict[str, Any] = {}
    all_hold = True
    for cond in wanted:
        if cond == "cut":
            cut = cut_condition(g)
            report["cut"] = {
                "holds": cut.holds,
                "violating_set": sorted(cut.violating_set) if cut.violating_set else None,
                "cut_size": cut.cut_size,
            }
            all_hold &= cut.holds
        elif cond == "faudree":
            delta = max_degree(g)
            ok = faudree_consistency(g.n, delta) if g.n >= 2 and delta >= 1 else True
            report["faudree"] = {
                "holds": ok,
                "n": g.n,
                "max_degree": delta,
                "degree_floor": planar_degree_floor(g.n),
            }
            all_hold &= ok
        else:
            print(f"unknown condition {cond!r} (choose cut, faudree)", file=sys.stderr)
            return 2
    _write_json(report, args.json)
    return 0 if all_hold else 1


def _cmd_lemma(args) -> int:
    which = args.which
    if which == "fact1":
        lhs, rhs = fact1_sides(args.k)
        report = {
            "k": args.k,
            "holds": fact1_check(args.k),
            "lhs": str(lhs),
            "rhs": str(rhs),
            "equality": lhs == rhs,
        }
        _write_json(report, args.json)
        return 0 if report["holds"] else 1

    if which == "trichotomy":
        mg = parse_multigraph(Path(args.multigraph).read_text())
        rep = lemma3_trichotomy(
            mg, args.k, Fraction(args.eps1), Fraction(args.eps2), floor=args.floor
        )
        _write_json(
            {
                "multiedges": rep.m,
                "k": rep.k,
                "eps1": str(rep.eps1),
                "eps2": str(rep.eps2),
                "max_incidence": rep.max_incidence,
                "far_pairs": rep.far_pairs,
                "good_matching": list(rep.good_matching) if rep.good_matching else None,
                "incidence_condition": rep.incidence_condition,
                "far_condition": rep.far_condition,
                "matching_condition": rep.matching_condition,
                "floor": rep.floor,
                "advisory": rep.advisory,
            },
            args.json,
        )
        return 0

    g = _read_graph(args.graph)
    if which == "lemma5":
        side_a = _vertex_list(args.side_a)
        side_b = sorted(set(range(g.n)) - set(side_a))
        rep = lemma5_check(g, side_a, side_b)
        _write_json(
            {
                "n": rep.n,
                "size_a": rep.size_a,
                "size_b": rep.size_b,
                "e_ab": rep.e_ab,
                "degree_two_count": rep.degree_two_count,
                "degree_two_bound": rep.degree_two_bound,
                "a_prime": sorted(rep.a_prime),
                "a_prime_bound": rep.a_prime_bound,
                "e_a_prime_b": rep.e_a_prime_b,
                "e_a_prime_bound": rep.e_a_prime_bound,
                "all_hold": rep.all_hold,
            },
            args.json,
        )
        return 0
    if which == "partition":
        state = refine_partition(degree_partition(g, args.threshold))
        _write_json(
            {
                "threshold": state.threshold,
                "steps": state.step,
                "side_a": sorted(state.side_a),
                "side_b": sorted(state.side_b),
                "cut_size": state.cut_size,
            },
            args.json,
        )
        return 0
    if which == "badedges":
        a_star = _vertex_list(args.a_star)
        b_star = sorted(set(range(g.n)) - set(a_star))
        rep = classify_bad_edges(g, a_star, b_star)
        _write_json(
            {
                "a_star": sorted(rep.a_star),
                "b_star": sorted(rep.b_star),
                "y": sorted(rep.y),
                "type_i": [list(e) for e in rep.type_i],
                "type_ii": [list(e) for e in rep.type_ii],
                "type_iii": [list(e) for e in rep.type_iii],
                "type_iv": [list(e) for e in rep.type_iv],
                "bad_count": rep.bad_count,
            },
            args.json,
        )
        return 0
    if which == "hub":
        mg = hub_multigraph(g, _vertex_list(args.y), _vertex_list(args.b_star))
        _write_json(
            {
                "n": mg.n,
                "multiedges": [[eid, u, v] for eid, u, v in mg.multiedges],
                "edge_list": emit_multigraph(mg),
            },
            args.json,
        )
        return 0
    if which == "weak":
        side_a = _vertex_list(args.side_a)
        side_b = sorted(set(range(g.n)) - set(side_a))
        rep = weak_reachability(g, side_a, side_b, args.source, args.radius)
        _write_json(
            {
                "source": rep.source,
                "radius": rep.radius,
                "ball": sorted(rep.ball),
                "reachable": sorted(rep.reachable),
                "intersection": sorted(rep.intersection),
                "witnesses": {str(v): list(p) for v, p in sorted(rep.witnesses.items())},
            },
            args.json,
        )
        return 0
    print(f"unknown lemma subcommand {which!r}", file=sys.stderr)
    return 2


def _cmd_census(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    lo, _, hi = args.sizes.partition(":")
    sizes = range(int(lo), int(hi or lo) + 1)
    report = run_census(
        families,
        sizes,
        checks,
        seed=args.seed,
        budget=args.budget,
        jobs=args.jobs,
        timings=args.timings,
    )
    _write_json(report, args.json)
    return census_exit_code(report, expect_counterexample=args.expect_counterexample)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathpair",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"Size caps can be raised with the {CAP_ENV_VAR} environment variable.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a family member in edge-list form")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--roles", action="store_true", help="append role annotation lines")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of edge-list")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("route", help="route a full pairing on a triangle-hub graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pairing", required=True, help="pairs file, or random:<seed>")
    p.add_argument("--json", nargs="?", const="", default=None)
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("solve", help="exact edge-disjoint paths decision")
    p.add_argument("--graph", required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", nargs="?", const="", default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify-pp", help="exhaustive (k-)path-pairability")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--orbits", action="store_true", help="verify one pairing per automorphism orbit")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", nargs="?", const="", default=None)
    p.set_defaults(func=_cmd_verify_pp)

    p = sub.add_parser("check", help="necessary conditions (filters)")
    p.add_argument("--graph", required=True)
    p.add_argument("--conditions", default="cut,faudree")
    p.add_argument("--json", nargs="?", const="", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("lemma", help="runnable proof machinery, JSON reports")
    lemma_sub = p.add_subparsers(dest="which", required=True)

    q = lemma_sub.add_parser("fact1")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("trichotomy")
    q.add_argument("--multigraph", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--eps1", default="1/100")
    q.add_argument("--eps2", default="1/100")
    q.add_argument("--floor", type=int, default=20)
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("lemma5")
    q.add_argument("--graph", required=True)
    q.add_argument("--side-a", required=True, help="comma-separated vertex ids of side A")
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("partition")
    q.add_argument("--graph", required=True)
    q.add_argument("--threshold", type=int, required=True)
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("badedges")
    q.add_argument("--graph", required=True)
    q.add_argument("--a-star", required=True, help="comma-separated vertex ids of A*")
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("hub")
    q.add_argument("--graph", required=True)
    q.add_argument("--y", required=True, help="comma-separated degree-2 vertices")
    q.add_argument("--b-star", required=True, help="comma-separated hub vertices")
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    q = lemma_sub.add_parser("weak")
    q.add_argument("--graph", required=True)
    q.add_argument("--side-a", required=True)
    q.add_argument("--source", type=int, required=True)
    q.add_argument("--radius", type=int, required=True)
    q.add_argument("--json", nargs="?", const="", default=None)
    q.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("census", help="check sweep over families, JSON report")
    p.add_argument("--families", default="", help=f"comma list from {sorted(FAMILIES)}")
    p.add_argument("--sizes", default="1:1", help="LO:HI inclusive parameter range")
    p.add_argument("--checks", default="cut", help=f"comma list from {sorted(CHECKS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--timings", action="store_true", help="include timings (breaks byte-identity)")
    p.add_argument("--expect-counterexample", action="store_true")
    p.add_argument("--json", nargs="?", const="", default=None)
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
