"""Command line interface: ``flagforge <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import __version__
from .errors import FlagforgeError, InconsistentResult
from .ffield import CAP_ENV_VAR, FieldCtx, build_field
from .flagspec import load_flag_file
from .galois import galois_flag, galois_table, galois_type
from .odfc import odfc_scan
from .orbit import min_distance, orbit, orbit_report, subgroup
from .report import ReportEnvelope, render, to_json_lines

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2
VERIFY_PAIR_CAP = 2 * 10**6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _global_options(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("md", "csv", "json"), default=d, help="output format (default md)")
    parser.add_argument("--out", metavar="PATH", default=d, help="write output to PATH instead of stdout")
    parser.add_argument("--threads", type=int, metavar="N", default=argparse.SUPPRESS if suppress else 1)
    parser.add_argument("--cap", type=int, metavar="N", default=d, help=f"field size cap in elements (overrides {CAP_ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagforge", description="Cyclic orbit flag codes over finite fields.")
    parser.add_argument("--version", action="version", version=f"flagforge {__version__}")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field", help="modulus, group order and subfield lattice")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--poly", type=_int_list, help="modulus coefficients, constant term first")
    _global_options(p, suppress=True)

    p = sub.add_parser("orbit", help="analyse the orbit code of a flag-spec file")
    p.add_argument("flagspec")
    p.add_argument("-l", type=int, help="subgroup exponent: beta = a^l (overrides the file)")
    _global_options(p, suppress=True)

    p = sub.add_parser("galois-table", help="parameters of all Galois beta-cyclic codes of a type")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", "--type", type=_int_list, required=True, dest="type_vector")
    p.add_argument("--check", action="store_true", help="cross-check every row by enumerating its orbit")
    _global_options(p, suppress=True)

    p = sub.add_parser("odfc-scan", help="allowed dimensions for optimum distance codes, per subgroup")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    _global_options(p, suppress=True)

    p = sub.add_parser("verify", help="run the brute-force oracles")
    p.add_argument("scope", help="examples, tables, selftest, or a flag-spec path")
    p.add_argument("-l", type=int, help="subgroup exponent for a flag-spec scope")
    p.add_argument("--pair-cap", type=int, default=VERIFY_PAIR_CAP, help="exhaustive pairwise distance budget")
    _global_options(p, suppress=True)
    return parser


def _provenance(ctx: FieldCtx | None) -> dict[str, Any]:
    return {"modulus": ctx.modulus_str() if ctx else None, "version": __version__}


def _beta(l: int, order_star: int) -> str:
    if l == order_star:
        return "1"
    return "a" if l == 1 else f"a^{l}"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _with_beta_column(env: ReportEnvelope, order_star: int) -> ReportEnvelope:
    rows = [{"beta": _beta(r["beta_exponent"], order_star), **r} for r in env.rows]
    return ReportEnvelope(env.command, env.parameters, rows, env.provenance, env.summary, env.schema_version)


# -- commands -----------------------------------------------------------------------


def cmd_field(args) -> tuple[ReportEnvelope, int]:
    ctx = build_field(args.p, args.n, args.poly)
    rows = [
        {"m": m, "subfield_size": ctx.p**m, "group_order": ctx.p**m - 1, "generator_exponent": c}
        for m, c in ctx.subfield_lattice()
    ]
    env = ReportEnvelope(
        "field",
        {"p": args.p, "n": args.n, "poly": args.poly},
        rows,
        _provenance(ctx),
        summary={"modulus": ctx.modulus_str(), "order_star": ctx.order_star},
    )
    return env, EXIT_OK


def cmd_orbit(args) -> tuple[ReportEnvelope, int]:
    parsed = load_flag_file(args.flagspec)
    l = args.l if args.l is not None else (parsed.l or 1)
    code = orbit(parsed.flag, subgroup(parsed.ctx, l))
    row = orbit_report(code).as_dict()
    env = ReportEnvelope(
        "orbit",
        {"flagspec": args.flagspec, "l": l, "type_vector": list(parsed.flag.type_vector)},
        [row],
        _provenance(parsed.ctx),
    )
    return env, EXIT_OK


def _check_row(job: tuple[int, int, tuple[int, ...], tuple[int, ...], int]) -> tuple[int, int, tuple[int, ...], int]:
    p, n, tv, modulus, l = job
    ctx = build_field(p, n, modulus)
    code = orbit(galois_flag(ctx, galois_type(p, n, tv)), subgroup(ctx, l))
    return l, code.size, code.stab_orders_per_level, min_distance(code)


def cmd_galois_table(args) -> tuple[ReportEnvelope, int]:
    gtype = galois_type(args.p, args.n, args.type_vector)
    ctx = build_field(args.p, args.n)
    rows = galois_table(gtype)
    status = EXIT_OK
    if args.check:
        jobs = [(args.p, args.n, gtype.type_vector, ctx.modulus, r.l) for r in rows]
        if args.threads > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                results = list(pool.map(_check_row, jobs))
        else:
            results = [_check_row(j) for j in jobs]
        bad = [
            l
            for row, (l, size, stabs, d) in zip(rows, results)
            if (row.orbit_size, row.stab_orders, row.distance) != (size, stabs, d)
        ]
        print(f"check: {'all rows agree' if not bad else f'disagreement at l = {bad}'}", file=sys.stderr)
        if bad:
            status = EXIT_VERIFY
    env = ReportEnvelope(
        "galois-table",
        {"p": args.p, "n": args.n, "type_vector": list(gtype.type_vector)},
        [r.as_dict(gtype.type_vector) for r in rows],
        _provenance(ctx),
    )
    return env, status


def cmd_odfc_scan(args) -> tuple[ReportEnvelope, int]:
    rows = odfc_scan(args.p, args.n, args.m)
    env = ReportEnvelope(
        "odfc-scan",
        {"p": args.p, "n": args.n, "m": args.m},
        [r.as_dict() for r in rows],
        {"modulus": None, "version": __version__},
    )
    return env, EXIT_OK


def cmd_verify(args) -> tuple[list[dict], int]:
    from . import oracle

    if args.scope == "examples":
        reports = oracle.run_examples(pair_cap=args.pair_cap)
    elif args.scope == "tables":
        reports = oracle.run_tables(pair_cap=args.pair_cap)
    elif args.scope == "selftest":
        reports = oracle.run_selftest()
    else:
        parsed = load_flag_file(args.scope)
        l = args.l if args.l is not None else (parsed.l or 1)
        reports = oracle.run_flag(parsed.flag, l, pair_cap=args.pair_cap)
    records = [r.as_dict() for r in reports]
    return records, EXIT_OK if all(r.agree for r in reports) else EXIT_VERIFY


COMMANDS = {
    "field": cmd_field,
    "orbit": cmd_orbit,
    "galois-table": cmd_galois_table,
    "odfc-scan": cmd_odfc_scan,
}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"flagforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    saved_cap = os.environ.get(CAP_ENV_VAR)
    if args.cap is not None:
        os.environ[CAP_ENV_VAR] = str(args.cap)
    try:
        if args.command == "verify":
            records, status = cmd_verify(args)
            if args.format in (None, "json"):
                text = to_json_lines(records)
            else:
                env = ReportEnvelope("verify", {"scope": args.scope}, records, {"version": __version__})
                text = render(env, args.format)
            _emit(text, args.out)
            failed = sum(not r["agree"] for r in records)
            print(f"verify {args.scope}: {len(records) - failed}/{len(records)} agree", file=sys.stderr)
            return status
        env, status = COMMANDS[args.command](args)
        fmt = args.format or "md"
        if fmt == "md" and args.command in ("galois-table", "odfc-scan"):
            env = _with_beta_column(env, env.parameters["p"] ** env.parameters["n"] - 1)
        _emit(render(env, fmt), args.out)
        return status
    except InconsistentResult as exc:
        print(f"flagforge: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FlagforgeError, OSError, ValueError) as exc:
        print(f"flagforge: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if saved_cap is None:
            os.environ.pop(CAP_ENV_VAR, None)
        else:
            os.environ[CAP_ENV_VAR] = saved_cap


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
