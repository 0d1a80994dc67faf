"""Command-line front end: ``crstruct <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys

from . import hypersurface_lab as hl
from .ambiguity_groups import (
    CHECKS,
    compare_group_with_printed,
    get_template,
    lie_algebra_basis,
    lie_dimension,
    verify_group,
    verify_lie_closure,
)
from .frame_calculus import CLASSES, compare_with_printed, derive_transfer, keystone
from .report import Report

GROUPS = CLASSES


class InputError(Exception):
    """Bad file or value; reported with exit code 2."""


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--strict-errata", action="store_true", default=argparse.SUPPRESS,
                   help="treat errata as failures for the exit code")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="crstruct", parents=[common],
                                     description="Exact checks for CR ambiguity groups and frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="group axioms for the ambiguity groups")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--group", choices=GROUPS + ("all",))
    which.add_argument("--all", action="store_true")
    v.add_argument("--check", choices=CHECKS + ("all",), default="all")
    v.add_argument("--diff-paper", action="store_true",
                   help="also compare printed inverse and composition formulas")

    lie = sub.add_parser("lie", parents=[common], help="Lie algebra dimension and closure")
    lie.add_argument("--group", choices=GROUPS, required=True)
    lie.add_argument("--show-basis", action="store_true")

    d = sub.add_parser("derive", parents=[common], help="derive the transfer matrix of a class")
    d.add_argument("--class", dest="class_id", choices=CLASSES, required=True)
    d.add_argument("--diff-paper", action="store_true",
                   help="report differences from the printed matrices and definitions")

    c = sub.add_parser("classify", parents=[common], help="classify points of a graphed hypersurface")
    c.add_argument("--manifold", required=True, metavar="FILE")
    c.add_argument("--point", required=True, nargs="+", metavar="P")

    m = sub.add_parser("multiplier", parents=[common], help="evaluate the multiplier of a map")
    m.add_argument("--map", dest="map_file", required=True, metavar="FILE")
    m.add_argument("--source", required=True, metavar="FILE")
    m.add_argument("--target", required=True, metavar="FILE")
    m.add_argument("--point", required=True, metavar="P")
    return parser


def _cmd_verify(args, report: Report):
    groups = GROUPS if args.all or args.group == "all" else (args.group,)
    checks = CHECKS if args.check == "all" else (args.check,)
    for g in groups:
        res = verify_group(get_template(g), checks=checks, seed=args.seed)
        for c in res.checks:
            report.add(f"G_{g}", c.check, c.status, residual_terms=c.residual_terms, notes=list(c.details))
        if args.diff_paper:
            for rec in compare_group_with_printed(g):
                status = {"match": "pass", "erratum": "erratum"}.get(rec.status, "fail")
                report.add(f"G_{g}", f"printed-{rec.kind}", status, entry=rec.entry,
                           source=rec.source, printed=rec.printed, derived=rec.derived,
                           verdict=rec.status)


def _cmd_lie(args, report: Report):
    t = get_template(args.group)
    basis = lie_algebra_basis(t)
    dim = lie_dimension(basis)
    details = {"dimension": dim, "expected": t.expected_real_dim}
    if args.show_basis:
        details["basis"] = {
            name: [[x.to_expr() for x in row] for row in m] for name, m in basis
        }
    report.add(f"G_{t.id}", "dimension", "pass" if dim == t.expected_real_dim else "fail", **details)
    closed = verify_lie_closure(basis)
    report.add(f"G_{t.id}", "commutator-closure", "pass" if closed else "fail")


def _cmd_derive(args, report: Report):
    d = derive_transfer(args.class_id)
    subject = f"class {args.class_id}"
    report.add(subject, "transfer", "pass", matrix=d.matrix.to_strings(),
               definitions=d.definitions_expr(), fresh_reals=sorted(d.fresh_reals), notes=list(d.notes))
    k = keystone(args.class_id)
    report.add(subject, "keystone", "pass" if k.pattern_equal and k.diagonal_equal else "fail",
               pattern_equal=k.pattern_equal, diagonal_equal=k.diagonal_equal,
               full_equal=k.full_equal, notes=list(k.details))
    if args.diff_paper:
        cmp = compare_with_printed(args.class_id)
        for rec in cmp.errata:
            report.add(subject, f"printed {rec.entry}", "erratum", printed=rec.printed, derived=rec.derived)
        report.add(subject, "printed-comparison", "pass",
                   compared=len(cmp.records), errata=len(cmp.errata))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _load(path: str, loader):
    try:
        return loader(_read(path))
    except hl.HypersurfaceFormatError as exc:
        where = f":{exc.line}" + (f":{exc.column}" if exc.column else "") if exc.line else ""
        raise InputError(f"{path}{where}: {str(exc).split(': ', 1)[-1]}") from exc


def _point(text: str):
    try:
        return hl.parse_point(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _cmd_classify(args, report: Report):
    M = _load(args.manifold, hl.load_hypersurface)
    for p in args.point:
        try:
            v = hl.classify_point(M, _point(p))
        except (hl.PointNotOnM, hl.PoleAtPoint, ValueError) as exc:
            raise InputError(f"point {p}: {exc}") from exc
        report.add(f"{args.manifold} @ ({p})", "classify", "pass", **v.to_dict())


def _cmd_multiplier(args, report: Report):
    h = _load(args.map_file, hl.load_map)
    src = _load(args.source, hl.load_hypersurface)
    tgt = _load(args.target, hl.load_hypersurface)
    subject = f"{args.map_file} @ ({args.point})"
    try:
        res = hl.multiplier_at(h, src, tgt, _point(args.point))
    except hl.ZeroDenominator as exc:
        report.add(subject, "multiplier", "fail", error=str(exc))
        return
    except (hl.PointNotOnM, hl.PoleAtPoint, ValueError) as exc:
        raise InputError(f"point {args.point}: {exc}") from exc
    ok = not res.residual and res.on_source
    report.add(subject, "multiplier", "pass" if ok else "fail", **res.to_dict())


COMMANDS = {
    "verify": _cmd_verify,
    "lie": _cmd_lie,
    "derive": _cmd_derive,
    "classify": _cmd_classify,
    "multiplier": _cmd_multiplier,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    args.strict_errata = getattr(args, "strict_errata", False)

    report = Report(argv)
    try:
        COMMANDS[args.command](args, report)
    except InputError as exc:
        print(f"crstruct: error: {exc}", file=stderr)
        return 2
    stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return 1 if report.failed(args.strict_errata) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
