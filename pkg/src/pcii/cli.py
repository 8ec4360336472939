"""Command-line front door.

Verbs: compute, check-axioms, independence, consistency-suite,
reciprocalize, worst-triad, gen, serve.  Exit status 0 on success, 1 on
suite violations or matrix validation failures (offending coordinates
printed), 2 on usage errors.  The PCII_SEED environment variable
overrides the default seed when --seed is absent.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Sequence

from . import matio
from .axioms import (
    AXIOM_TITLES,
    AXIOMS,
    AxiomCheckConfig,
    check_axiom,
    random_consistent_matrix,
    random_pc_matrix,
    report_to_dict,
    run_consistency_suite,
    run_independence_suite,
)
from .errors import PcError, SuiteViolationError
from .indicators import evaluate, get_indicator
from .matrix import reciprocalize, triad_at

DEFAULT_SEED = 7


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _seed_from(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PCII_SEED")
    return int(env) if env else DEFAULT_SEED


def _config_from(args) -> AxiomCheckConfig:
    cfg = AxiomCheckConfig(rng_seed=_seed_from(args))
    if getattr(args, "samples", None) is not None:
        cfg = dataclasses.replace(cfg, samples=args.samples)
    distance = getattr(args, "distance", None)
    if distance:
        kinds = {"log": ("log_abs",), "abs": ("abs_diff",), "both": ("log_abs", "abs_diff")}
        cfg = dataclasses.replace(cfg, distance_kinds=kinds[distance])
    return cfg


def _cmd_compute(args) -> int:
    A = matio.load_matrix(args.matrix)
    result = evaluate(args.indicator, A)
    if args.json:
        doc = {"indicator": get_indicator(args.indicator).id, "value": result.value}
        if result.worst_triad is not None:
            t = result.worst_triad
            doc["worst_triad"] = [t.i, t.j, t.k]
            doc["triad_values"] = list(triad_at(A, t).as_tuple())
        if result.principal_eigenvalue is not None:
            doc["principal_eigenvalue"] = result.principal_eigenvalue
        print(_dumps(doc))
        return 0
    print(f"indicator: {get_indicator(args.indicator).id}")
    print(f"value: {_fmt(result.value)}")
    if result.worst_triad is not None:
        t = result.worst_triad
        x, y, z = triad_at(A, t).as_tuple()
        print(f"worst triad: ({t.i}, {t.j}, {t.k})")
        print(f"triad values: ({_fmt(x)}, {_fmt(y)}, {_fmt(z)})")
    if result.principal_eigenvalue is not None:
        print(f"principal eigenvalue: {_fmt(result.principal_eigenvalue)}")
    return 0


def _print_report(report, as_json: bool) -> None:
    if as_json:
        print(_dumps(report_to_dict(report)))
        return
    title = AXIOM_TITLES[report.axiom]
    print(f"{report.axiom} ({title}) {report.indicator}: {report.verdict} [trials {report.trials}]")
    if report.counterexample is not None:
        print(f"  counterexample: {_dumps(report.counterexample)}")
    if report.phi_table is not None:
        for dist, floors in report.phi_table.items():
            row = ", ".join(f"phi={p:g}: {_fmt(f)}" for p, f in sorted(floors.items()))
            print(f"  floors[{dist}]: {row}")


def _cmd_check_axioms(args) -> int:
    cfg = _config_from(args)
    axioms = [args.axiom.upper()] if args.axiom else list(AXIOMS)
    reports = [check_axiom(a, args.indicator, cfg) for a in axioms]
    if args.json:
        print(_dumps([report_to_dict(r) for r in reports]))
    else:
        for r in reports:
            _print_report(r, False)
    return 0


def _cmd_independence(args) -> int:
    cfg = _config_from(args)
    try:
        grid = run_independence_suite(cfg)
    except SuiteViolationError as exc:
        print(f"independence suite violation: {exc}", file=sys.stderr)
        return 1
    if args.json:
        doc = {
            "grid": {ind: {a: r.verdict for a, r in row.items()} for ind, row in grid.items()},
            "reports": [report_to_dict(r) for row in grid.values() for r in row.values()],
        }
        print(_dumps(doc))
        return 0
    header = "      " + "  ".join(f"{a:<6}" for a in AXIOMS)
    print(header)
    for ind, row in grid.items():
        print(f"{ind:<6}" + "  ".join(f"{row[a].verdict:<6}" for a in AXIOMS))
    print("independence grid matches the expected failure pattern")
    return 0


def _cmd_consistency_suite(args) -> int:
    cfg = _config_from(args)
    try:
        reports = run_consistency_suite(cfg)
    except SuiteViolationError as exc:
        print(f"consistency suite violation: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(_dumps([report_to_dict(r) for r in reports]))
        return 0
    for r in reports:
        _print_report(r, False)
    print("kii satisfies all five axioms on this run")
    return 0


def _cmd_reciprocalize(args) -> int:
    A = matio.load_matrix(args.matrix, mode="lenient")
    matio.save_matrix(args.out, reciprocalize(A))
    return 0


def _cmd_worst_triad(args) -> int:
    A = matio.load_matrix(args.matrix)
    ind = get_indicator(args.indicator)
    if ind.kernel is None:
        print(f"indicator {ind.id} has no triad kernel; use a triad-based indicator", file=sys.stderr)
        return 2
    result = evaluate(args.indicator, A)
    t = result.worst_triad
    x, y, z = triad_at(A, t).as_tuple()
    # The unique middle value zeroing this triad; adjusting x or z instead
    # is listed as an unranked alternative.
    repair_y = x * z
    alt_x, alt_z = y / z, y / x
    if args.json:
        print(_dumps({
            "indicator": ind.id,
            "value": result.value,
            "worst_triad": [t.i, t.j, t.k],
            "triad_values": [x, y, z],
            "repair": {"position": [t.i, t.k], "current": y, "proposed": repair_y},
            "alternatives": [
                {"position": [t.i, t.j], "current": x, "proposed": alt_x},
                {"position": [t.j, t.k], "current": z, "proposed": alt_z},
            ],
        }))
        return 0
    print(f"worst triad: ({t.i}, {t.j}, {t.k})")
    print(f"values: x = {_fmt(x)}, y = {_fmt(y)}, z = {_fmt(z)}")
    print(f"kernel value: {_fmt(result.value)}")
    print(f"repair: set ({t.i},{t.k}) to {_fmt(repair_y)} (replace y with x*z)")
    print(
        f"alternatives: set ({t.i},{t.j}) to {_fmt(alt_x)} (x = y/z); "
        f"set ({t.j},{t.k}) to {_fmt(alt_z)} (z = y/x)"
    )
    return 0


def _cmd_gen(args) -> int:
    seed = _seed_from(args)
    if args.consistent:
        A = random_consistent_matrix(args.n, args.spread, seed)
    else:
        A = random_pc_matrix(args.n, args.spread, seed)
    matio.save_matrix(args.out, A)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.state), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcii", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="evaluate an indicator on a matrix file")
    p.add_argument("--indicator", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("check-axioms", help="run axiom checks for an indicator")
    p.add_argument("--indicator", required=True)
    p.add_argument("--axiom", choices=[a.lower() for a in AXIOMS] + list(AXIOMS))
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--distance", choices=["log", "abs", "both"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_axioms)

    p = sub.add_parser("independence", help="verify the ii1..ii5 failure grid")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_independence)

    p = sub.add_parser("consistency-suite", help="verify kii passes all five axioms")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_consistency_suite)

    p = sub.add_parser("reciprocalize", help="geometric-mean reciprocalization")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reciprocalize)

    p = sub.add_parser("worst-triad", help="locate the governing triad and repairs")
    p.add_argument("--indicator", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_worst_triad)

    p = sub.add_parser("gen", help="generate a random PC matrix file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spread", type=float, required=True)
    p.add_argument("--consistent", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("serve", help="start the elicitation service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--state", default=None)
    p.set_defaults(func=_cmd_serve)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
