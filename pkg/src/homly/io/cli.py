"""Command-line interface: ``homly check|construct|twist|builtin|eval``.

Exit status is 0 when every requested identity holds, 1 when at least one
fails (or a construction's hypotheses fail), 2 on input or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import __version__
from ..constructions import (
    hom_akivis_from_algebra,
    hom_ly_from_hom_leibniz,
    natural_hom_ly,
    yau_twist,
)
from ..core import AlgebraSpec, HomLYSpec
from ..errors import HomlyError, PreconditionError
from ..identities import (
    DEFAULT_MAX_COUNTEREXAMPLES,
    AxiomSuiteReport,
    check_hom_akivis,
    check_hom_lie,
    check_hom_ly,
    check_left_hom_leibniz,
    check_ly,
    check_multiplicative,
    check_right_hom_leibniz,
    check_symmetric_annihilation,
    check_translation_derivation,
)
from .catalog import builtin, builtin_names
from .dsl import emit_file, parse_assignment, parse_file
from .report import emit_report

IDENTITIES = ("multiplicative", "hom-leibniz-left", "hom-leibniz-right", "hom-lie",
              "hom-akivis", "id-3-1", "id-3-2", "hom-ly", "ly")
DEFAULT_ALGEBRA_CHECKS = ("multiplicative", "hom-leibniz-left")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _run_identity(spec, name: str, k: int):
    if isinstance(spec, HomLYSpec):
        if name == "hom-ly":
            return check_hom_ly(spec, k)
        if name == "ly":
            return check_ly(spec, k)
        raise UsageError(f"identity {name!r} applies to 'algebra' files, not 'hom-ly' files")
    B, A = spec.product, spec.alpha
    if name == "multiplicative":
        return check_multiplicative(B, A, k)
    if name == "hom-leibniz-left":
        return check_left_hom_leibniz(B, A, k)
    if name == "hom-leibniz-right":
        return check_right_hom_leibniz(B, A, k)
    if name == "hom-lie":
        return check_hom_lie(B, A, k)
    if name == "hom-akivis":
        bracket, assoc = hom_akivis_from_algebra(spec)
        return check_hom_akivis(bracket, assoc, A, k)
    if name == "id-3-1":
        return check_symmetric_annihilation(B, A, k)
    if name == "id-3-2":
        return check_translation_derivation(B, A, k)
    if name == "hom-ly":
        return check_hom_ly(natural_hom_ly(spec), k)
    if name == "ly":
        return check_ly(natural_hom_ly(spec), k)
    raise UsageError(f"unknown identity {name!r}")


def _holds(reports) -> bool:
    return all(r.overall if isinstance(r, AxiomSuiteReport) else r.holds for r in reports)


def _format_text(reports) -> str:
    lines = []
    for r in reports:
        members = r.reports.values() if isinstance(r, AxiomSuiteReport) else [r]
        for m in members:
            lines.append(str(m))
            for cx in m.counterexamples[1:]:
                where = ",".join(map(str, cx.tuple))
                part = f" [{cx.part}]" if cx.part else ""
                lines.append(f"    also{part} at ({where}): lhs = {cx.lhs}, rhs = {cx.rhs}")
    return "\n".join(lines) + "\n"


def _read_spec(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_file(text)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_reports(reports, args, source: str) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(emit_report(reports, input=source, tool_version=__version__))
    else:
        sys.stdout.write(_format_text(reports))


def _checks(spec, args) -> int:
    names = args.identity or (["hom-ly"] if isinstance(spec, HomLYSpec)
                              else list(DEFAULT_ALGEBRA_CHECKS))
    reports = [_run_identity(spec, n, args.max_counterexamples) for n in names]
    _emit_reports(reports, args, args.file)
    return EXIT_OK if _holds(reports) else EXIT_FAIL


def cmd_check(args) -> int:
    return _checks(_read_spec(args.file), args)


def cmd_eval(args) -> int:
    spec = _read_spec(args.file)
    assignment = parse_assignment(args.assign)
    unknown = sorted(set(assignment) - set(spec.params))
    if unknown:
        raise UsageError(f"unknown parameter(s) {unknown}; declared: {list(spec.params)}")
    return _checks(spec.subst(assignment), args)


def _refuse(exc: PreconditionError, args) -> int:
    sys.stderr.write(f"homly: {exc}\n")
    if exc.report is not None:
        if getattr(args, "json", False):
            sys.stderr.write(emit_report([exc.report], input=args.file, tool_version=__version__))
        else:
            sys.stderr.write(_format_text([exc.report]))
    return EXIT_FAIL


def cmd_construct(args) -> int:
    spec = _read_spec(args.file)
    if not isinstance(spec, AlgebraSpec):
        raise UsageError("construct needs an 'algebra' file")
    try:
        H = hom_ly_from_hom_leibniz(spec)
    except PreconditionError as exc:
        return _refuse(exc, args)
    _write(emit_file(H), args.out)
    if args.check:
        report = check_hom_ly(H, args.max_counterexamples)
        _emit_reports([report], args, args.file)
        return EXIT_OK if report.overall else EXIT_FAIL
    return EXIT_OK


def cmd_twist(args) -> int:
    spec = _read_spec(args.file)
    if not isinstance(spec, AlgebraSpec):
        raise UsageError("twist needs an 'algebra' file")
    name = spec.name if spec.alpha.is_identity() else f"{spec.name}-twist"
    try:
        twisted = yau_twist(spec, name=name)
    except PreconditionError as exc:
        return _refuse(exc, args)
    _write(emit_file(twisted), args.out)
    return EXIT_OK


def cmd_builtin(args) -> int:
    _write(emit_file(builtin(args.name)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homly",
                                description="Exact checks and constructions for Hom-algebras.")
    p.add_argument("--version", action="version", version=f"homly {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def identity_opts(sp):
        sp.add_argument("--identity", action="append", choices=IDENTITIES, metavar="NAME",
                        help="identity to check (repeatable): " + ", ".join(IDENTITIES))
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument("--max-counterexamples", type=int, default=DEFAULT_MAX_COUNTEREXAMPLES,
                        metavar="K")

    sp = sub.add_parser("check", help="check identities on an .alg file")
    sp.add_argument("file")
    identity_opts(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("construct", help="build the Hom-Lie-Yamaguti structure")
    sp.add_argument("file")
    sp.add_argument("--out")
    sp.add_argument("--check", action="store_true", help="append the HLY1-HLY8 report")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-counterexamples", type=int, default=DEFAULT_MAX_COUNTEREXAMPLES,
                    metavar="K")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("twist", help="Yau twist along the file's map")
    sp.add_argument("file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_twist)

    sp = sub.add_parser("builtin", help="print a builtin algebra: " + ", ".join(builtin_names()))
    sp.add_argument("name")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_builtin)

    sp = sub.add_parser("eval", help="substitute parameter values, then check")
    sp.add_argument("file")
    sp.add_argument("--assign", required=True, metavar="a=2,b=3,l=I")
    identity_opts(sp)
    sp.set_defaults(func=cmd_eval)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, HomlyError) as exc:
        sys.stderr.write(f"homly: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
