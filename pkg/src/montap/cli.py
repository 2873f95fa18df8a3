"""Command line front end.

    montap alexander --link "N([2,2,3])"
    montap compute --link "P(3,3,3)" --rep fixtures/pretzel_333_f11.json --oracle-check
    montap diagram --link "M(7/3,2,7/2)"
    montap verify --link "N([2,2,3])" --rep fixtures/7_5_metabelian_plus.json

Exit codes: 1 parse error, 2 invalid representation, 3 engine error,
4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .engine import EngineError, compute_tap, ordinary_from_wada
from .laurent import NotDivisible, equiv
from .oracle import SizeCapExceeded, wada_invariant
from .representation import (
    InvalidRepresentation,
    build_representation,
    read_representation_json,
    trivial_representation,
    verify_representation,
)
from .rings import NotAUnitError, parse_ring_option
from .tangles import LinkSpecError, parse_link, synthesize_diagram

EXIT_PARSE, EXIT_REP, EXIT_ENGINE, EXIT_ORACLE = 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="montap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rep_required):
        p.add_argument("--link", required=True, help='link spec, e.g. "N([2,2,3])" or "M(7/3,2,7/2)"')
        p.add_argument("--rep", required=rep_required, help="representation JSON file")
        p.add_argument("--ring", help="coefficient ring override: Z, Q, Fp:<p>, cyclotomic:<m>, complex")

    def engine_flags(p):
        p.add_argument("--oracle-check", action="store_true", help="recompute with the Fox matrix and compare")
        p.add_argument("--force-degenerate", action="store_true", help="always use the epsilon path")
        p.add_argument("--dump-boundaries", action="store_true", help="print b_ne, b_sw, b_se per tangle")
        p.add_argument("--match-upto-inversion", action="store_true",
                       help="oracle comparison also allows t_i -> t_i^-1")

    p = sub.add_parser("compute", help="twisted Alexander polynomial")
    common(p, True)
    engine_flags(p)
    p = sub.add_parser("alexander", help="ordinary Alexander polynomial")
    common(p, False)
    engine_flags(p)
    p = sub.add_parser("diagram", help="print the synthesized diagram")
    common(p, False)
    p = sub.add_parser("verify", help="check a representation against the Wirtinger relations")
    common(p, True)
    return parser


def _diagram(args):
    try:
        return synthesize_diagram(parse_link(args.link))
    except LinkSpecError as exc:
        raise CliError(EXIT_PARSE, f"cannot parse link: {exc}") from None


def _ring(args):
    try:
        return parse_ring_option(args.ring) if args.ring else None
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"bad --ring: {exc}") from None


def _representation(args, diagram):
    ring = _ring(args)
    try:
        data = read_representation_json(args.rep)
        return build_representation(diagram, data, ring)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {args.rep}: {exc}") from None
    except (InvalidRepresentation, NotAUnitError) as exc:
        raise CliError(EXIT_REP, f"invalid representation: {exc}") from None


def _dump_boundaries(result, out):
    for k, tb in enumerate(result.boundaries, start=1):
        out.write(f"T{k} b_ne = {tb.b_ne}\n")
        out.write(f"T{k} b_sw = {tb.b_sw}\n")
        out.write(f"T{k} b_se = {tb.b_se}\n")


def _run_engine(args, out):
    diagram = _diagram(args)
    if args.command == "alexander":
        rep = trivial_representation(diagram, _ring(args))
    else:
        rep = _representation(args, diagram)
    violations = verify_representation(rep)
    if violations:
        raise CliError(EXIT_REP, "representation violates relations:\n" + "\n".join(violations))
    try:
        result = compute_tap(rep, args.force_degenerate)
    except (EngineError, NotDivisible, ZeroDivisionError) as exc:
        raise CliError(EXIT_ENGINE, f"engine error: {exc}") from None
    if args.dump_boundaries:
        _dump_boundaries(result, out)
    value = result.value
    if args.command == "alexander":
        value = ordinary_from_wada(value, diagram.component_count)
    out.write(f"{value}\n")
    if args.command == "compute":
        out.write(f"degenerate-path: {'yes' if result.used_degenerate_path else 'no'}\n")
    if args.oracle_check:
        try:
            oracle = wada_invariant(diagram, rep)
        except SizeCapExceeded as exc:
            raise CliError(EXIT_ENGINE, f"oracle skipped: {exc}") from None
        except EngineError as exc:
            raise CliError(EXIT_ENGINE, f"oracle error: {exc}") from None
        if not equiv(result.value, oracle.value, allow_var_inversion=args.match_upto_inversion):
            raise CliError(EXIT_ORACLE, f"oracle mismatch: engine {result}, oracle {oracle}")
        out.write("oracle: agree\n")
    return 0


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        if args.command == "diagram":
            out.write(_diagram(args).dump() + "\n")
            return 0
        if args.command == "verify":
            diagram = _diagram(args)
            bad = verify_representation(_representation(args, diagram))
            out.write("Ok\n" if not bad else "\n".join(bad) + "\n")
            return 0 if not bad else EXIT_REP
        return _run_engine(args, out)
    except CliError as exc:
        sys.stderr.write(str(exc) + "\n")
        return exc.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
