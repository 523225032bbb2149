"""Command-line entry point: ``medtri {search,audit,companion,descent,certify,report}``.

Exit codes: 0 success, 1 usage or input error, 2 counterexample found,
3 a universal identity failed (a bug signal).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from medtri import __version__
from medtri.audit import CONDITION_LABELS, TriangleAudit, audit_triangle
from medtri.descent import (
    GATE_DESCRIPTIONS,
    area_ratio_check,
    companion,
    companion_medians,
    descent_run,
    similarity_check,
)
from medtri.errors import AuditFailure, DomainError, UnsupportedInputError
from medtri.exact import format_exact
from medtri.io import (
    build_manifest,
    manifest_path,
    read_config_file,
    read_records,
    write_manifest,
    write_records,
    write_summary_csv,
)
from medtri.search import SearchConfig, certify, resolve_even_filter, run_search
from medtri.search import kernels
from medtri.triangle import Classification, IntTriangle, classify, heron16

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_AUDIT = 3

log = logging.getLogger("medtri")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(values) -> str:
    return "(" + ", ".join(format_exact(v) for v in values) + ")"


def _triangle_arg(sides: Sequence[int]) -> IntTriangle:
    if any(s <= 0 for s in sides):
        raise UsageError(f"sides must be positive, got {tuple(sides)}")
    cls = classify(*sides)
    if cls is not Classification.VALID:
        raise UsageError(f"{tuple(sides)} is {cls.value}")
    return IntTriangle(*sides)


def cmd_search(args) -> int:
    settings = {}
    if args.config:
        try:
            settings = read_config_file(args.config)
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc))
    for key in ("max_side", "shards", "even_filter", "out"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    if "max_side" not in settings:
        raise UsageError("search: --max-side is required (flag or config file)")
    try:
        max_side = int(settings["max_side"])
        shards = int(settings.get("shards", 1))
    except ValueError as exc:
        raise UsageError(f"search: {exc}")
    mode = str(settings.get("even_filter", "auto"))
    if mode not in ("auto", "off"):
        raise UsageError(f"search: --even-filter must be auto or off, got {mode!r}")
    out = str(settings.get("out", "results.jsonl"))
    try:
        probe = SearchConfig(max_side=max_side, shards=shards, output_path=out, backend=args.backend)
    except DomainError as exc:
        raise UsageError(f"search: {exc}")

    use_filter = resolve_even_filter(mode, max_side, probe.backend)
    config = SearchConfig(max_side, shards, use_filter, out, args.backend)
    result = run_search(config)
    try:
        n = write_records(out, result.records)
        write_manifest(manifest_path(out), build_manifest(result, __version__, mode))
    except OSError as exc:
        print(f"search: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"max_side={max_side} shards={len(result.shards)} backend={result.backend} "
          f"even_filter={'on' if use_filter else 'off'}")
    print(f"scanned {result.triples_scanned} triples, {n} integer-median triangles -> {out}")
    for rec in result.records:
        print(f"  {_fmt(rec.sides)} medians {_fmt(rec.medians)} area {rec.area_class.value}")
    if result.counterexamples:
        print(f"COUNTEREXAMPLE: {len(result.counterexamples)} triangle(s) with rational area:")
        for rec in result.counterexamples:
            print(f"  {_fmt(rec.sides)} medians {_fmt(rec.medians)} 16S^2={rec.heron16}")
        return EXIT_COUNTEREXAMPLE
    print("no triangle with integer sides, medians and rational area")
    return EXIT_OK


def print_audit(audit: TriangleAudit, out=None) -> None:
    out = out or sys.stdout
    p = lambda *a: print(*a, file=out)
    T = audit.triangle
    p(f"triangle {_fmt(T.sides)} medians {_fmt(audit.medians)} 16S^2 = {heron16(T)}")
    cond = audit.conditions
    p("eight conditions (normalized to 144 S^2):")
    for label, q, v in zip(CONDITION_LABELS, cond.q, cond.normalized):
        p(f"  ({label}) q = {format_exact(q):>16}  normalized = {format_exact(v)}")
    p(f"  all equal: {cond.all_equal}  (9 * 16S^2 = {cond.heron144})")
    p(f"  q4 with factor (A + 2C - B) instead of (A + 2M_C - B): {format_exact(cond.alt_factor_product)} "
      f"(residual {format_exact(cond.alt_factor_product - cond.heron144)})")
    s = audit.shifts
    p(f"shifts: delta = {_fmt(s.deltas)}  theta = {_fmt(s.thetas)}  "
      f"shifted products match: {audit.shifted_ok}")
    q = audit.quartic
    p(f"x, y, z, w = {_fmt((q.x, q.y, q.z, q.w))}  delta = 4m_b - 4m_a = {format_exact(q.delta)}")
    p(f"  xyzw = {format_exact(q.xyzw)}  T(delta) = {format_exact(q.T_value)}")
    p(f"  coefficients: cubic {format_exact(q.coeff_cubic)}  quad {format_exact(q.coeff_quad)}  "
      f"lin {format_exact(q.coeff_lin)}")
    p(f"  linear coefficient implied by factored form: {format_exact(q.lin_implied_by_factored)} "
      f"(residual {format_exact(q.lin_residual)})")
    p("quartic at candidate roots:")
    for name, ev in audit.roots.items():
        state = "vanishes" if ev.vanishes else "nonzero"
        p(f"  {name:>11} = {format_exact(ev.candidate):>8}: {format_exact(ev.value)} ({state})")
    l2 = audit.lemma2
    p(f"lemma 2: sum of squares = {l2.sum_sq_residue} (mod 3), medians = {l2.median_residues} (mod 3), "
      f"implication holds: {l2.implication_holds}")
    l3 = audit.lemma3
    p(f"lemma 3: 8m_c^2 + 18c^2 - 96m_a^2 = {l3.rhs} = {l3.rhs_residue} (mod 3), "
      f"perfect square: {l3.is_square}, constraint holds: {l3.constraint_holds}")
    p(f"cubic-sum identity: {audit.cubic_sum_ok}")
    p(f"universal identities: {'OK' if audit.universal_ok else 'FAILED'}")


def _audit_one(T: IntTriangle) -> int:
    try:
        audit = audit_triangle(T)
    except UnsupportedInputError:
        print(f"audit: {_fmt(T.sides)} has no integer medians", file=sys.stderr)
        return EXIT_USAGE
    except AuditFailure as exc:
        print(f"audit: universal identity failed: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    print_audit(audit)
    return EXIT_OK if audit.universal_ok else EXIT_AUDIT


def cmd_audit(args) -> int:
    if args.records:
        if args.sides:
            raise UsageError("audit: give either a side triple or --records, not both")
        try:
            records = read_records(args.records)
        except (OSError, ValueError) as exc:
            raise UsageError(f"audit: {exc}")
        code = EXIT_OK
        for rec in records:
            T = _triangle_arg((rec["a"], rec["b"], rec["c"]))
            rc = _audit_one(T)
            print()
            if rc == EXIT_USAGE:
                return rc
            code = max(code, rc)
        return code
    if not args.sides or len(args.sides) != 3:
        raise UsageError("audit: expected three sides or --records FILE")
    return _audit_one(_triangle_arg(args.sides))


def _print_companion(T: IntTriangle) -> bool:
    try:
        child = companion(T)
    except UnsupportedInputError:
        print(f"{_fmt(T.sides)} has irrational medians; no rational companion")
        return False
    print(f"companion sides   {_fmt(child.sides)}")
    print(f"companion medians {_fmt(companion_medians(T))}")
    print(f"16S^2: {heron16(T)} -> {format_exact(heron16(child))}; "
          f"ratio 1/9 exact: {area_ratio_check(T)}")
    print(f"similar to original: {similarity_check(T, child)}")
    return True


def cmd_companion(args) -> int:
    T = _triangle_arg(args.sides)
    return EXIT_OK if _print_companion(T) else EXIT_USAGE


def cmd_descent(args) -> int:
    T = _triangle_arg(args.sides)
    if args.iters < 0:
        raise UsageError("descent: --iters must be nonnegative")
    _print_companion(T)
    trace = descent_run(T, args.iters)
    print(f"descent trace ({len(trace)} step(s)):")
    for i, rep in enumerate(trace):
        print(f"  step {i}: {_fmt(rep.triangle.sides)} medians "
              f"{_fmt(rep.medians) if rep.medians else 'irrational'}")
        print(f"    median residues mod 3: {rep.median_residues}  side residues mod 3: {rep.side_residues}")
        print(f"    sides even: {rep.sides_even}  area: {rep.area_class.value}  "
              f"area divisible by 3: {rep.area_div3}")
        if rep.step_produced:
            print(f"    StepProduced -> {_fmt(rep.child.sides)} (16S^2 {rep.heron16} -> {rep.child_heron16})")
        else:
            failed = ", ".join(f"{g} ({GATE_DESCRIPTIONS[g]})" for g in rep.failed)
            print(f"    GateFailed: {failed}")
    return EXIT_OK


def cmd_certify(args) -> int:
    T = _triangle_arg(args.sides)
    try:
        rec = certify(T)
    except UnsupportedInputError:
        print(f"certify: {_fmt(T.sides)} has no integer medians", file=sys.stderr)
        return EXIT_USAGE
    except AuditFailure as exc:
        print(f"certify: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    print(json.dumps(rec.to_record()))
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        records = read_records(args.records)
    except (OSError, ValueError) as exc:
        raise UsageError(f"report: {exc}")
    if args.csv and args.csv != "-":
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_summary_csv(records, fh)
    else:
        write_summary_csv(records, sys.stdout)
        return EXIT_OK
    classes = {}
    for rec in records:
        classes[rec["area_class"]] = classes.get(rec["area_class"], 0) + 1
    primitive = sum(1 for rec in records if rec["primitive"] == [rec["a"], rec["b"], rec["c"]])
    print(f"{len(records)} records, {primitive} primitive")
    for name in ("integer", "rational", "irrational"):
        print(f"  area {name}: {classes.get(name, 0)}")
    failing = [r for r in records if not all(r["audits"].values())]
    print(f"  records with a failed audit: {len(failing)}")
    print(f"summary written to {args.csv}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="medtri", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"medtri {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("search", help="enumerate integer-median triangles up to a bound")
    p.add_argument("--max-side", type=int, default=None)
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--even-filter", choices=("auto", "off"), default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None, help="key=value file; flags override it")
    p.add_argument("--backend", choices=sorted(kernels.BACKENDS), default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("audit", help="run the identity audit on a triangle or record file")
    p.add_argument("sides", type=int, nargs="*")
    p.add_argument("--records", default=None)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("companion", help="print the companion triangle")
    p.add_argument("sides", type=int, nargs=3)
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("descent", help="run the descent gates")
    p.add_argument("sides", type=int, nargs=3)
    p.add_argument("--iters", type=int, default=5)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("certify", help="print the certified JSON record of a triangle")
    p.add_argument("sides", type=int, nargs=3)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("report", help="CSV summary of a record file")
    p.add_argument("records")
    p.add_argument("--csv", default=None, help="output path; stdout when omitted or '-'")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if args.command is None:
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, UnsupportedInputError) as exc:
        print(f"medtri: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
