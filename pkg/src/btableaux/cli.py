"""Command line front end.

    btableaux table {bnk,bstar,eulerian-b,eulerian-a} --n N [--format csv|json]
    btableaux verify NAME [--max-n N] [--jobs J]
    btableaux render KIND INPUT [--format ascii|text]
    btableaux series --order N [--t INT] [--q INT]

Every flag can also be set through an environment variable named
BTABLEAUX_<FLAG>, e.g. BTABLEAUX_MAX_N=6.  Exit status: 0 success,
1 a verification failed, 2 bad usage or unparsable input, 3 the enumeration
limit was exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

from . import ansatz, checks, genfun, render
from .errors import BTableauxError, LimitExceeded, ParseError
from .exactalg import MultiPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
TABLES = ("bnk", "bstar", "eulerian-b", "eulerian-a")

log = logging.getLogger("btableaux")


def _env(name: str, default=None, cast=str):
    raw = os.environ.get(f"BTABLEAUX_{name.upper().replace('-', '_')}")
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"btableaux: bad value {raw!r} in BTABLEAUX_{name.upper()}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="btableaux", description="Type B permutation tableaux toolkit")
    p.add_argument("--limit", type=int, default=_env("limit", None, int),
                   help="largest n allowed in exhaustive enumeration (default 8)")
    sub = p.add_subparsers(dest="command", required=True)
    # --limit is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    t = sub.add_parser("table", parents=[common], help="coefficient tables of B_n and the q-Eulerian numbers")
    t.add_argument("kind", choices=TABLES)
    t.add_argument("--n", type=int, default=_env("n", None, int))
    t.add_argument("--format", choices=("csv", "json"), default=_env("format", "csv"))

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("name", choices=("all",) + checks.SUITE_NAMES)
    v.add_argument("--max-n", "--n", dest="max_n", type=int, default=_env("max_n", None, int))
    v.add_argument("--jobs", type=int, default=_env("jobs", 1, int))

    r = sub.add_parser("render", parents=[common], help="ASCII drawings")
    r.add_argument("kind", choices=render.KINDS)
    r.add_argument("input", help="inline text ('/' separates tableau lines), a file path, or - for stdin")
    r.add_argument("--format", choices=("ascii", "text"), default=_env("render_format", "ascii"))

    s = sub.add_parser("series", parents=[common], help="J-fraction coefficients and the series they generate")
    s.add_argument("--order", type=int, required=_env("order") is None, default=_env("order", None, int))
    s.add_argument("--t", type=int, default=_env("t", None, int))
    s.add_argument("--q", type=int, default=_env("q", None, int))
    return p


def _specialise(poly: MultiPoly, t, q) -> MultiPoly:
    kw = {}
    if t is not None:
        kw["t"] = t
    if q is not None:
        kw["q"] = q
    return poly.subs(**kw) if kw else poly


def cmd_table(args, out) -> int:
    if args.n is None or args.n < 0:
        print("btableaux table: --n must be a nonnegative integer", file=sys.stderr)
        return EXIT_USAGE
    rows = genfun.gen_table(args.n, args.kind, args.limit)
    if args.format == "csv":
        out.write("n,k,polynomial\n")
        for n, k, poly in rows:
            out.write(f"{n},{k},{poly.to_text(compact=True)}\n")
    else:
        data = [{"n": n, "k": k, "polynomial": poly.to_text(), "terms": poly.to_json_terms()}
                for n, k, poly in rows]
        out.write(json.dumps({"table": args.kind, "rows": data}, indent=1) + "\n")
    return EXIT_OK


def _growth(start: int, stop: int) -> int:
    factor = 1
    for n in range(start + 1, stop + 1):
        factor *= 2 * n
    return factor


def _run_one(name: str, bound: int, limit) -> checks.VerifyReport:
    if limit is not None:
        os.environ["BTABLEAUX_LIMIT"] = str(limit)
    return checks.run_suite(name, bound)


def cmd_verify(args, out) -> int:
    from .signedperm import check_limit

    names = checks.SUITE_NAMES if args.name == "all" else (args.name,)
    plan = [(nm, checks.bound_for(nm, args.max_n, args.name == "all")) for nm in names]
    for nm, bound in plan:
        if nm in ("schroeder", "lagrange"):     # series orders, not enumerations
            continue
        check_limit(bound, args.limit)
        if bound > checks.SUITES[nm].default_max_n:
            # each extra level multiplies the enumeration by roughly 2n
            log.warning("%s at n <= %d runs about %dx longer than its default",
                        nm, bound, _growth(checks.SUITES[nm].default_max_n, bound))
    reports = []
    if args.jobs > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_run_one, nm, b, args.limit) for nm, b in plan]
            for fut in as_completed(futures):
                rep = fut.result()
                reports.append(rep)
                out.write(rep.line() + "\n")
                out.flush()
    else:
        for nm, b in plan:
            rep = _run_one(nm, b, args.limit)
            reports.append(rep)
            out.write(rep.line() + "\n")
            out.flush()
    failed = [r for r in reports if not r.ok]
    if len(reports) > 1:
        out.write("summary:\n")
        for rep in sorted(reports, key=lambda r: r.name):
            out.write(f"  {rep.name:<13} {rep.status}\n")
    out.write(f"{len(reports) - len(failed)}/{len(reports)} suites passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return arg


def cmd_render(args, out) -> int:
    obj = render.parse_input(args.kind, _read_input(args.input))
    if hasattr(obj, "check"):
        obj.check()
    elif hasattr(obj, "validate"):
        obj.validate()
    text = render.to_text(obj) if args.format == "text" else render.render(args.kind, obj)
    out.write(text + "\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.order is None or args.order < 0:
        print("btableaux series: --order must be a nonnegative integer", file=sys.stderr)
        return EXIT_USAGE
    for h in range(args.order // 2 + 1):
        out.write(f"gamma_{h} = {_specialise(ansatz.cf_gamma(h), args.t, args.q)}\n")
        if h >= 1:
            out.write(f"lambda_{h} = {_specialise(ansatz.cf_lambda(h), args.t, args.q)}\n")
    series = ansatz.cf_series(args.order)
    for n in range(args.order + 1):
        out.write(f"B_{n} = {_specialise(series[n], args.t, args.q)}\n")
    return EXIT_OK


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "render": cmd_render, "series": cmd_series}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=os.environ.get("BTABLEAUX_LOG", "WARNING"),
                        format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except LimitExceeded as exc:
        print(f"btableaux: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, BTableauxError, ValueError) as exc:
        print(f"btableaux: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
