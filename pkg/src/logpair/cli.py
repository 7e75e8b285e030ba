"""Command-line front end.

Subcommands: peel, zariski, invariants, pencil, example, search,
selftest.  Output is canonical JSON by default or an aligned text
table with --format table.  Exit codes: 0 on success, 1 on input
errors (including argument errors), 2 on internal failures.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import InputError, InternalError
from .examples import run_example
from .invariants import (bmy_check, euler_bound_check, log_chern,
                         noether_check)
from .jsonio import (dumps, encode_rational, load_classes, load_graph,
                     load_model, parse_class_arg, render_table,
                     run_manifest)
from .peeling import bark
from .pencil import analyze_adjoint_system
from .search import run_search
from .selftest import run_all
from .zariski import verify_decomposition, zariski_decompose


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; bad arguments are
    # input errors here, so route them through InputError instead
    def error(self, message):
        raise InputError(message)


def _span(text: str, name: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise InputError(f"--{name} expects LO:HI (got {text!r})")
    return lo, hi


def build_parser() -> _Parser:
    p = _Parser(prog="logpair",
                description="exact intersection-theory toolkit for "
                            "boundary pairs on rational surface models")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["json", "table"],
                        default="json")
        sp.add_argument("--manifest", metavar="PATH",
                        help="write a reproducibility manifest here")

    sp = sub.add_parser("peel", parents=[], help="bark of a dual graph")
    sp.add_argument("graph", help="dual graph JSON file")
    common(sp)

    sp = sub.add_parser("zariski", help="decompose a class against "
                                        "candidate curves")
    sp.add_argument("model", help="surface model JSON file")
    sp.add_argument("--class", dest="cls", required=True,
                    help="comma-separated coefficients")
    sp.add_argument("--candidates", required=True,
                    help="JSON file with an array of candidate classes")
    common(sp)

    sp = sub.add_parser("invariants", help="log invariants and identity "
                                           "checks")
    sp.add_argument("model", help="surface model JSON file")
    sp.add_argument("graph", help="dual graph JSON file")
    sp.add_argument("--class", dest="cls", required=True,
                    help="boundary class, comma-separated")
    common(sp)

    sp = sub.add_parser("pencil", help="adjoint system analysis")
    sp.add_argument("model", help="surface model JSON file")
    sp.add_argument("--divisor", required=True,
                    help="boundary class, comma-separated")
    sp.add_argument("--candidates", required=True,
                    help="JSON file with fixed-part candidates")
    common(sp)

    sp = sub.add_parser("example", help="run a bundled configuration")
    esub = sp.add_subparsers(dest="action", required=True)
    runp = esub.add_parser("run")
    runp.add_argument("name", choices=["ex2", "ex3"])
    runp.add_argument("--a", type=int, default=None,
                      help="family parameter for ex3 (default 2)")
    common(runp)

    sp = sub.add_parser("search", help="inequality grid search")
    sp.add_argument("family", choices=["ex4"])
    sp.add_argument("--g", required=True, metavar="LO:HI")
    sp.add_argument("--x", required=True, metavar="LO:HI")
    sp.add_argument("--y", required=True, metavar="LO:HI")
    sp.add_argument("--threads", type=int, default=None)
    common(sp)

    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.add_argument("--criterion", type=int, action="append",
                    default=None, help="run only this criterion "
                                       "(repeatable)")
    common(sp)
    return p


def _flatten(obj, prefix: str, rows: list) -> None:
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k), rows)
        return
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            rows.append((prefix, "[" + ", ".join(_scalar(v)
                                                 for v in obj) + "]"))
            return
        for i, v in enumerate(obj):
            _flatten(v, f"{prefix}[{i}]", rows)
        return
    rows.append((prefix, _scalar(obj)))


def _scalar(v) -> str:
    if isinstance(v, Fraction):
        return str(encode_rational(v))
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def _kv_table(report: dict) -> str:
    rows: list = []
    _flatten(report, "", rows)
    return render_table(["field", "value"], rows)


def _search_table(result: dict) -> str:
    headers = ["g", "e", "x", "y", "a", "k", "dim_positive", "big",
               "effective", "fixed_part", "feasible"]
    rows = []
    for r in result["rows"]:
        q = r["inequalities"]
        rows.append([r["g"], r["e"], r["x"], r["y"], r["a"], r["k"],
                     q["dim_positive"], q["big"], q["effective"],
                     q["fixed_part"], r["feasible"]])
    out = render_table(headers, rows)
    ref = result["reference_claim"]
    out += (f"\nrows: {result['row_count']}, feasible: "
            f"{result['feasible_count']}\n")
    out += (f"reference instance g={ref['g']} e={ref['e']} x={ref['x']} "
            f"y={ref['y']}: computed feasible = "
            f"{'yes' if ref['computed_feasible'] else 'no'}"
            f"{' (disagrees with the circulated claim)' if ref['discrepancy'] else ''}\n")
    iv = result.get("interval_x8_y1")
    if iv:
        nonempty = [row["g"] for row in iv["per_g"] if row["nonempty"]]
        variant = [row["g"] for row in iv["per_g"]
                   if row["variant_nonempty"]]
        out += ("integer window at x=8, y=1 nonempty for g in "
                f"{_compact_span(nonempty)}; variant threshold gives "
                f"{_compact_span(variant)}\n")
    return out


def _compact_span(values: list) -> str:
    if not values:
        return "(none)"
    runs = []
    start = prev = values[0]
    for v in values[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((start, prev))
        start = prev = v
    runs.append((start, prev))
    return ", ".join(f"{a}" if a == b else f"{a}..{b}" for a, b in runs)


def _run(args) -> tuple[str, int, list[str]]:
    """Returns (output text, exit code, input file paths)."""
    if args.command == "peel":
        graph = load_graph(args.graph)
        bk = bark(graph)
        report = {
            "coefficients": dict(bk.coefficients),
            "sharp_coefficients": dict(bk.sharp_coeffs),
            "bark_square": bk.bark_square,
            "gram_square": bk.gram_square,
            "tips": bk.tips_count,
            "bound_ok": bk.bound_ok,
            "segments": [
                {"kind": s.kind, "vertices": list(s.vertices),
                 "attach": s.attach}
                for s in bk.report.admissible_segments
            ],
            "excluded": [
                {"kind": s.kind, "vertices": list(s.vertices),
                 "reason": s.reason}
                for s in bk.report.excluded
            ],
        }
        text = (dumps(report) if args.format == "json"
                else _kv_table(report))
        return text, 0, [args.graph]

    if args.command == "zariski":
        model = load_model(args.model)
        cls = parse_class_arg(args.cls, model)
        candidates = load_classes(args.candidates, model)
        z = zariski_decompose(model, cls, candidates)
        checks = verify_decomposition(model, cls, candidates, z)
        report = {
            "P": list(z.positive),
            "N": list(z.negative),
            "support": list(z.support),
            "coefficients": list(z.coefficients),
            "rounds": z.rounds,
            "nef_scope": z.nef_scope,
            "checks": {
                "sum_matches": checks.sum_matches,
                "coefficients_nonnegative":
                    checks.coefficients_nonnegative,
                "support_negative_definite":
                    checks.support_negative_definite,
                "positive_orthogonal_to_support":
                    checks.positive_orthogonal_to_support,
                "positive_nonnegative_on_candidates":
                    checks.positive_nonnegative_on_candidates,
                "positive_times_input_is_square":
                    checks.positive_times_input_is_square,
                "all_ok": checks.all_ok,
            },
        }
        text = (dumps(report) if args.format == "json"
                else _kv_table(report))
        return text, 0, [args.model, args.candidates]

    if args.command == "invariants":
        model = load_model(args.model)
        graph = load_graph(args.graph)
        cls = parse_class_arg(args.cls, model)
        inv = log_chern(model, cls, graph)
        d_sq = model.self_intersection(cls)
        ebr = euler_bound_check(inv, model.hodge)
        bk = bark(graph)
        p_sq = (model.self_intersection(model.canonical_class() + cls)
                - bk.gram_square)
        report = {
            "c1bar_sq": inv.c1bar_sq,
            "c2bar": inv.c2bar,
            "pa_D": inv.pa_D,
            "l": inv.l,
            "chi_bar": inv.chi_bar,
            "e_open": inv.e_open,
            "pg_log": inv.pg_log,
            "h1_log": inv.h1_log,
            "m": inv.m,
            "boundary_square": d_sq,
            "checks": {
                "noether": noether_check(inv, d_sq),
                "euler_hypothesis": ebr.hypothesis_holds,
                "euler_conclusion": ebr.conclusion_holds,
                "euler_strong_conclusion": ebr.strong_conclusion_holds,
                "chi_omega_log": ebr.chi_omega_log,
                "bmy": bmy_check(p_sq, bk.gram_square, inv.c2bar),
            },
            "bark_square": bk.gram_square,
            "p_sq": p_sq,
        }
        text = (dumps(report) if args.format == "json"
                else _kv_table(report))
        return text, 0, [args.model, args.graph]

    if args.command == "pencil":
        model = load_model(args.model)
        boundary = parse_class_arg(args.divisor, model)
        candidates = load_classes(args.candidates, model)
        result = analyze_adjoint_system(model, boundary, candidates)
        report = result.describe()
        text = (dumps(report) if args.format == "json"
                else _kv_table(report))
        return text, 0, [args.model, args.candidates]

    if args.command == "example":
        report = run_example(args.name, args.a)
        text = (dumps(report) if args.format == "json"
                else _kv_table(report))
        return text, 0, []

    if args.command == "search":
        result = run_search(_span(args.g, "g"), _span(args.x, "x"),
                            _span(args.y, "y"), threads=args.threads)
        text = (dumps(result) if args.format == "json"
                else _search_table(result))
        return text, 0, []

    if args.command == "selftest":
        results = run_all(only=args.criterion)
        if not results:
            raise InputError("no matching criterion")
        lines = [r.line() for r in results]
        ok = all(r.passed for r in results)
        lines.append("all criteria passed" if ok
                     else "FAILED criteria: "
                          + ", ".join(str(r.number) for r in results
                                      if not r.passed))
        return "\n".join(lines) + "\n", (0 if ok else 2), []

    raise InternalError(f"unhandled command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code, inputs = _run(args)
        sys.stdout.write(text)
        manifest_path = getattr(args, "manifest", None)
        if manifest_path:
            cmd = list(sys.argv[1:] if argv is None else argv)
            doc = run_manifest(cmd, inputs, text, __version__)
            with open(manifest_path, "w", encoding="utf-8") as fh:
                fh.write(dumps(doc))
        return code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
