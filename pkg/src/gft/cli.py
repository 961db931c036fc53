"""Command-line front end: ``gft {radii,table1,verify,estimate,conjecture}``.

Exit codes: 0 success, 1 verify failure, 2 parameter validation,
3 unknown input, 4 numerical resolution failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import replace

import numpy as np

from . import acceptance, oracles, radii, zoo
from .errors import (
    BeyondTrustRadius,
    GridTooCoarse,
    NearSingularity,
    NewtonDiverged,
    NotNormalized,
    ParamOutOfRange,
    UnknownZooId,
)
from .operators import p_of

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_UNKNOWN, EXIT_NUMERIC = 0, 1, 2, 3, 4

PROPERTIES = ("univalence", "u", "starlike", "g-alpha")


def _sig(x):
    """Round floats to 12 significant digits for stable JSON."""
    if isinstance(x, dict):
        return {k: _sig(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_sig(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if not math.isfinite(x) else float(f"{x:.12g}")
    return x


def _dump_json(doc) -> str:
    return json.dumps(_sig(doc), indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([f"{v:.6f}" if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _oracle_config(args) -> oracles.OracleConfig:
    cfg = oracles.OracleConfig.from_env()
    over = {}
    if args.n_radial is not None:
        over["n_radial"] = args.n_radial
    if args.n_angular is not None:
        over["n_angular"] = args.n_angular
    if args.tol is not None:
        over["refine_tol"] = args.tol
    try:
        return replace(cfg, **over)
    except ValueError as exc:
        raise ParamOutOfRange(str(exc)) from exc


# commands -----------------------------------------------------------------

def cmd_radii(args) -> int:
    params = radii.ClassParam(args.beta, args.alpha, args.a2)
    results = [radii.r2(), radii.r_inv_sqrt3()]
    if params.beta is not None:
        results.insert(0, radii.r1(params.beta))
    if params.alpha is not None:
        results += [radii.r3(params.alpha), radii.r4(params.alpha), radii.r5(params.alpha)]
    if params.a2_abs is not None:
        results.append(radii.r6(params.a2_abs))
    fmt = args.format or "json"
    if fmt == "json":
        doc = {
            "params": {"beta": args.beta, "alpha": args.alpha, "a2_abs": args.a2},
            "radii": [r.as_dict() for r in results],
        }
        text = _dump_json(doc)
    elif fmt == "csv":
        text = _csv(["formula_id", "value", "residual"],
                    [(r.formula_id, r.value, r.residual) for r in results])
    else:
        text = "".join(f"{r.formula_id:<12} {r.value:.6f}  residual {r.residual:.2e}\n" for r in results)
    _emit(text, args.out)
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = radii.table1()
    fmt = args.format or "csv"
    if fmt == "csv":
        text = radii.table1_csv()
    elif fmt == "json":
        text = _dump_json({"table1": [{"a2_abs": b, "r6": r} for b, r in rows]})
    else:
        text = "".join(f"|a2| = {b:<5g} r6 = {r:.6f}\n" for b, r in rows)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _oracle_config(args)
    results = acceptance.run_all(cfg)
    ok = all(r.passed for r in results)
    fmt = args.format or "text"
    if fmt == "json":
        doc = {
            "passed": ok,
            "criteria": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "elapsed": r.elapsed,
                    "budget": r.budget,
                    "items": [{"label": lab, "passed": p, "measured": str(m)} for lab, p, m in r.items],
                }
                for r in results
            ],
        }
        text = _dump_json(doc)
    else:
        lines = []
        for r in results:
            lines.append(r.line())
            for lab, p, m in r.items:
                lines.append(f"    {'ok ' if p else 'BAD'} {lab}: {m}")
        lines.append("ALL PASS" if ok else "SOME CRITERIA FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def run_estimate(zoo_id: str, target: str, prop: str, beta: float | None, alpha: float | None,
                 cfg: oracles.OracleConfig) -> oracles.OracleReport:
    entry = zoo.resolve(zoo_id, beta=beta)
    fn = entry.f if target == "f" else p_of(entry.f)
    if prop == "univalence":
        return oracles.univalence_radius(fn, cfg)
    if prop == "u":
        return oracles.u_radius(fn, cfg)
    if prop == "starlike":
        return oracles.starlike_radius(fn, 0.0 if beta is None else beta, cfg)
    return oracles.g_alpha_radius(fn, 1.0 if alpha is None else alpha, cfg)


def cmd_estimate(args) -> int:
    cfg = _oracle_config(args)
    rep = run_estimate(args.zoo, args.target, args.property, args.beta, args.alpha, cfg)
    doc = rep.to_json()
    doc = {"zoo": args.zoo, "target": args.target, **doc}
    fmt = args.format or "json"
    if fmt == "json":
        text = _dump_json(doc)
    elif fmt == "csv":
        text = _csv(["zoo", "target", "property_id", "radius", "lower_bound"],
                    [(args.zoo, args.target, rep.property_id, rep.radius, rep.lower_bound)])
    else:
        text = f"{args.zoo} [{args.target}] {rep.property_id}: radius {rep.radius:.6f}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    cfg = _oracle_config(args)
    sweep = acceptance.conjecture_sweep(cfg)
    fmt = args.format or "json"
    cols = ["id", "a2_abs", "univalence", "u", "r6_bound", "gap"]
    if fmt == "json":
        text = _dump_json(sweep)
    elif fmt == "csv":
        text = _csv(cols, [[row[c] for c in cols] for row in sweep["rows"]])
    else:
        lines = [f"{row['id']:<18} univalence {row['univalence']:.6f}  u {row['u']:.6f}  "
                 f"r6 {row['r6_bound']:.6f}  gap {row['gap']:+.6f}" for row in sweep["rows"]]
        lines.append(f"min univalence {sweep['min_univalence']:.6f}; conjectured bound "
                     f"{sweep['conjectured_bound']:.6f}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", type=float)
    common.add_argument("--alpha", type=float)
    common.add_argument("--a2", type=float)
    common.add_argument("--format", choices=("json", "csv", "text"))
    common.add_argument("--out")
    common.add_argument("--n-radial", type=int)
    common.add_argument("--n-angular", type=int)
    common.add_argument("--tol", type=float, help="oracle bisection width on r")

    p = argparse.ArgumentParser(prog="gft", description="Radius computations for f/f' over univalent subclasses.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("radii", parents=[common], help="closed-form and polynomial-root radii")
    sub.add_parser("table1", parents=[common], help="r6(|a2|) for the eight tabulated |a2|")
    sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    est = sub.add_parser("estimate", parents=[common], help="run a sampling oracle")
    est.add_argument("--zoo", required=True)
    est.add_argument("--target", choices=("f", "p"), default="p")
    est.add_argument("--property", choices=PROPERTIES, default="univalence")
    sub.add_parser("conjecture", parents=[common], help="univalence radii of P_f over the built-in S members")
    return p


COMMANDS = {
    "radii": cmd_radii,
    "table1": cmd_table1,
    "verify": cmd_verify,
    "estimate": cmd_estimate,
    "conjecture": cmd_conjecture,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParamOutOfRange, NotNormalized) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except UnknownZooId as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (GridTooCoarse, NearSingularity, NewtonDiverged, BeyondTrustRadius) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
