"""Command-line front end: list identities, evaluate sides, verify, sweep.

Output records are JSON objects (one per line for streams) with every real
serialized at 17 significant digits, so parsing a record back reproduces the
binary64 values exactly.  Exit codes: 0 success / all passed, 1 verification
failures, 2 parameter or domain errors, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Any

from .identities import (
    FORMULAS,
    PARAM_SIGNATURES,
    IdentityId,
    VerifyReport,
    default_grid,
    verify,
)
from .series import DEFAULT_CONFIG
from .special import DomainError
from .summation import EvalConfig

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NOT_CONVERGED = 3

DEFAULT_TOL = 1e-7
CSV_HEADER = ["id", "n", "m", "p", "lhs", "rhs", "abs_err", "rel_err", "terms", "converged"]


def _fmt(x: Any) -> Any:
    """17-significant-digit float serialization; round-trips binary64 exactly."""
    if isinstance(x, float):
        return format(x, ".17g")
    return x


def _json_record(obj: dict[str, Any]) -> str:
    """Flat-dict JSON writer with controlled float formatting."""
    parts = []
    for key, val in obj.items():
        if isinstance(val, float):
            parts.append(f'"{key}": {_fmt(val)}')
        elif isinstance(val, dict):
            parts.append(f'"{key}": {_json_record(val)}')
        else:
            parts.append(f'"{key}": {json.dumps(val)}')
    return "{" + ", ".join(parts) + "}"


def record_from_report(rep: VerifyReport, wall_ms: float, side: str = "both") -> dict[str, Any]:
    rec: dict[str, Any] = {"id": rep.id.value, "params": dict(rep.params)}
    if side in ("both", "lhs"):
        rec["lhs"] = rep.lhs
    if side in ("both", "rhs"):
        rec["rhs"] = rep.rhs
    if side == "both":
        rec.update(abs_err=rep.abs_err, rel_err=rep.rel_err)
        rec["pass"] = rep.passed
    rec.update(lhs_terms=rep.lhs_terms, converged=rep.converged)
    for key, val in rep.extra.items():
        rec[key] = val
    rec["wall_ms"] = wall_ms
    return rec


def _tol_from(args: argparse.Namespace) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("EULER_SUM_TOL")
    if env:
        return float(env)
    return DEFAULT_TOL


def _cfg_from(args: argparse.Namespace) -> EvalConfig:
    cfg = DEFAULT_CONFIG
    overrides = {}
    if getattr(args, "rel_tol", None) is not None:
        overrides["rel_tol"] = args.rel_tol
    if getattr(args, "max_terms", None) is not None:
        overrides["max_terms"] = args.max_terms
    if getattr(args, "em_order", None) is not None:
        overrides["em_order"] = args.em_order
    return replace(cfg, **overrides) if overrides else cfg


def _parse_identity(name: str) -> IdentityId:
    try:
        return IdentityId[name.upper()]
    except KeyError:
        raise DomainError(
            f"unknown identity {name!r}; run `euler-sums list` for the inventory"
        ) from None


def _parse_range(text: str) -> list[float]:
    """Accept '0..3', '0.5,1,2', or a single number."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return [float(v) for v in range(int(lo), int(hi) + 1)]
    return [float(v) for v in text.split(",") if v != ""]


def _collect_params(args: argparse.Namespace) -> dict[str, Any]:
    params: dict[str, Any] = {}
    if args.n is not None:
        params["n"] = int(args.n)
    if args.m is not None:
        params["m"] = int(args.m)
    if args.p is not None:
        params["p"] = args.p
    if args.x is not None:
        params["x"] = args.x
    if getattr(args, "which", None):
        params["which"] = args.which
    if getattr(args, "form", None):
        params["form"] = args.form
    return params


# ------------------------------- commands -----------------------------------


def cmd_list(args: argparse.Namespace) -> int:
    needle = (args.filter or "").lower()
    for ident in IdentityId:
        line = f"{ident.value:16s} params={PARAM_SIGNATURES[ident]:40s} :: {FORMULAS[ident]}"
        if needle in line.lower():
            print(line)
    return EXIT_OK


def _verify_timed(ident: IdentityId, params: dict, tol: float, cfg: EvalConfig) -> tuple[VerifyReport, float]:
    t0 = time.perf_counter()
    rep = verify(ident, params, tol, cfg)
    return rep, (time.perf_counter() - t0) * 1e3


def cmd_eval(args: argparse.Namespace) -> int:
    ident = _parse_identity(args.identity)
    tol = _tol_from(args)
    cfg = _cfg_from(args)
    rep, ms = _verify_timed(ident, _collect_params(args), tol, cfg)
    print(_json_record(record_from_report(rep, ms, side=args.side)))
    if not rep.converged:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _grid_for(args: argparse.Namespace) -> list[tuple[IdentityId, dict[str, Any]]]:
    if args.all:
        return default_grid()
    ident = _parse_identity(args.identity)
    explicit = _collect_params(args)
    if explicit or ident.value.startswith("EX"):
        return [(ident, explicit)]
    return [(i, ps) for i, ps in default_grid() if i is ident]


def _worker(item: tuple[str, dict, float, dict]) -> dict:
    name, params, tol, cfg_kw = item
    rep, ms = _verify_timed(IdentityId[name], params, tol, EvalConfig(**cfg_kw))
    return record_from_report(rep, ms)


def _run_grid(grid, tol: float, cfg: EvalConfig, jobs: int) -> list[dict]:
    cfg_kw = {"rel_tol": cfg.rel_tol, "max_terms": cfg.max_terms,
              "em_order": cfg.em_order, "consecutive_small": cfg.consecutive_small}
    items = [(ident.value, params, tol, cfg_kw) for ident, params in grid]
    if jobs <= 1 or len(items) < 4:
        return [_worker(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_worker, items, chunksize=8))


def cmd_verify(args: argparse.Namespace) -> int:
    tol = _tol_from(args)
    cfg = _cfg_from(args)
    grid = _grid_for(args)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    records = _run_grid(grid, tol, cfg, jobs)
    all_pass = True
    any_nonconverged = False
    for rec in records:
        print(_json_record(rec))
        all_pass &= bool(rec.get("pass", False))
        any_nonconverged |= not rec.get("converged", True)
    summary = {"checked": len(records), "passed": sum(bool(r.get("pass")) for r in records),
               "tol": tol}
    print(_json_record(summary), file=sys.stderr)
    if any_nonconverged:
        return EXIT_NOT_CONVERGED
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def _sweep_grid(args: argparse.Namespace) -> list[tuple[IdentityId, dict[str, Any]]]:
    ident = _parse_identity(args.identity)
    axes: list[tuple[str, list[Any]]] = []
    for key in ("x", "n", "m", "p"):
        text = getattr(args, key)
        if text is not None:
            vals = _parse_range(text)
            if key in ("n", "m"):
                vals = [int(v) for v in vals]
            axes.append((key, vals))
    combos: list[dict[str, Any]] = [{}]
    for key, vals in axes:
        combos = [dict(c, **{key: v}) for c in combos for v in vals]
    if any(not vals for _key, vals in axes):
        combos = []
    return [(ident, c) for c in combos]


def cmd_sweep(args: argparse.Namespace) -> int:
    tol = _tol_from(args)
    cfg = _cfg_from(args)
    grid = _sweep_grid(args)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    records = _run_grid(grid, tol, cfg, jobs)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_HEADER)
        for rec in records:
            params = rec["params"]
            writer.writerow([
                rec["id"],
                _fmt(params.get("n", params.get("x", ""))),
                _fmt(params.get("m", "")),
                _fmt(params.get("p", "")),
                _fmt(rec["lhs"]),
                _fmt(rec["rhs"]),
                _fmt(rec["abs_err"]),
                _fmt(rec["rel_err"]),
                rec["lhs_terms"],
                rec["converged"],
            ])
        text = buf.getvalue()
    else:
        text = "\n".join(_json_record(r) for r in records) + ("\n" if records else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euler-sums",
        description="Evaluate and verify the variant Euler harmonic sums "
                    "(direct summation vs gamma-ratio closed forms).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the identity inventory")
    p_list.add_argument("filter", nargs="?", default="", help="substring filter")
    p_list.set_defaults(func=cmd_list)

    def add_common(p: argparse.ArgumentParser, with_params: bool = True) -> None:
        p.add_argument("--tol", type=float, default=None,
                       help="comparison tolerance (default: $EULER_SUM_TOL or 1e-7)")
        p.add_argument("--rel-tol", type=float, default=None, help="series relative tolerance")
        p.add_argument("--max-terms", type=int, default=None, help="direct-summation term cap")
        p.add_argument("--em-order", type=int, default=None, help="Euler-Maclaurin correction order")
        p.add_argument("--jobs", type=int, default=None, help="parallel workers (default: cores)")
        if with_params:
            p.add_argument("--n", type=int, default=None)
            p.add_argument("--m", type=int, default=None)
            p.add_argument("--p", type=float, default=None)
            p.add_argument("--x", type=float, default=None)
            p.add_argument("--which", default=None, help="EX1/EX2 sub-instance")
            p.add_argument("--form", default=None, help="EX3 sub-instance")

    p_eval = sub.add_parser("eval", help="evaluate one identity instance")
    p_eval.add_argument("identity")
    p_eval.add_argument("--side", choices=("both", "lhs", "rhs"), default="both")
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="verify identities over a grid (NDJSON stream)")
    p_verify.add_argument("identity", nargs="?", default=None)
    p_verify.add_argument("--all", action="store_true", help="run the full default grid")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="tabulate an identity over parameter ranges")
    p_sweep.add_argument("identity")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None, help="output file (default: stdout)")
    p_sweep.add_argument("--tol", type=float, default=None)
    p_sweep.add_argument("--rel-tol", type=float, default=None)
    p_sweep.add_argument("--max-terms", type=int, default=None)
    p_sweep.add_argument("--em-order", type=int, default=None)
    p_sweep.add_argument("--jobs", type=int, default=None)
    p_sweep.add_argument("--x", default=None, help="range like 0..3 or 0.5,1,2")
    p_sweep.add_argument("--n", default=None, help="range like 0..3")
    p_sweep.add_argument("--m", default=None, help="range like 1..4")
    p_sweep.add_argument("--p", default=None, help="range like 0.5,1,2")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.all and args.identity is None:
        parser.error("verify needs an identity name or --all")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
