import argparse
import dataclasses
import json
import logging
import os
import sys
import typing
from pathlib import Path

import construct

from polynomial_zsigmondy import cyclotomic, formats
from polynomial_zsigmondy.errors import SequenceKindError
from polynomial_zsigmondy.factorizer import factor
from polynomial_zsigmondy.fields import FieldDescriptor, make_field
from polynomial_zsigmondy.poly import Poly
from polynomial_zsigmondy.poly_text import parse_poly
from polynomial_zsigmondy.primitive_analysis import TSV_HEADER, StripMode, build_record, survey
from polynomial_zsigmondy.rng import RngState
from polynomial_zsigmondy.sequences import SequenceKind, SequenceSpec, lucas_terms, term
from polynomial_zsigmondy.verification import statements
from polynomial_zsigmondy.verification.campaign import default_workers
from polynomial_zsigmondy.verification.char2 import explore_char2
from polynomial_zsigmondy.verification.report import Report, Verdict

logger = logging.getLogger(__name__)

SEED_ENV = "ZSIG_SEED"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for counterexamples."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def field_argument_type(s: str) -> FieldDescriptor:
    try:
        return make_field(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def seed_argument_type(s: str) -> int:
    seed = int(s, 0)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits; got {s}")
    return seed


def default_seed() -> int:
    value = os.environ.get(SEED_ENV)
    if value is None:
        return 0
    try:
        return seed_argument_type(value)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"{SEED_ENV} must be an unsigned 64-bit integer; got {value!r}") from None


def add_common_arguments(parser: argparse.ArgumentParser, formats_: tuple[str, ...] = ("json", "text")):
    parser.add_argument("--seed", type=seed_argument_type, help=f"Random seed. Defaults to ${SEED_ENV}, then 0")
    parser.add_argument("--format", choices=formats_, default=formats_[0], help="Output format")
    parser.add_argument("--out", type=Path, help="Write the output to this path instead of stdout")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info logs, -vv for debug")


def add_sequence_arguments(parser: argparse.ArgumentParser, field_required: bool = False):
    parser.add_argument(
        "--field",
        type=field_argument_type,
        required=field_required,
        help="fp:<p>, q, q-sqrt:<d>, fp2:<p>:<s>:<t> or q-ext:<s>:<t>",
    )
    parser.add_argument("--f", help="f; alone it gives the bang sequence f^n - 1")
    parser.add_argument("--g", help="g, for the zsigmondy sequence f^n - g^n")
    parser.add_argument("--P", dest="p", help="P over a quadratic extension, for the Lucas sequence")
    parser.add_argument("--terms", type=Path, help="Start from a term archive instead of --field/--f/--g/--P")


def create_parser():
    parser = ArgumentParser(prog="zsig", description="Primitive divisors of polynomial divisibility sequences")

    subparser = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    seq = subparser.add_parser("seq", help="Print the terms of a sequence")
    add_sequence_arguments(seq)
    add_common_arguments(seq, ("text", "json"))
    seq.add_argument("--n", type=int, help="A single index")
    seq.add_argument("--max-n", type=int, default=10, help="Print terms 1..max-n")
    seq.add_argument("--archive", type=Path, help="Also write the terms to a .ztrm archive")

    factor_parser = subparser.add_parser("factor", help="Factor a polynomial over a finite field")
    factor_parser.add_argument("--field", type=field_argument_type, required=True)
    factor_parser.add_argument("--f", required=True, help="The polynomial to factor")
    add_common_arguments(factor_parser, ("text", "json"))

    phi = subparser.add_parser("phi", help="Homogeneous cyclotomic polynomial Φ_n(f, g) or Φ_n(P, P_σ)")
    add_sequence_arguments(phi, field_required=True)
    add_common_arguments(phi, ("text", "json"))
    phi.add_argument("--n", type=int, required=True)

    primitive = subparser.add_parser("primitive", help="Primitive part and primitive prime divisors of a term")
    add_sequence_arguments(primitive)
    add_common_arguments(primitive)
    primitive.add_argument("--n", type=int, required=True)
    add_mode_argument(primitive)

    verify = subparser.add_parser("verify", help="Check a statement over a range of indices")
    add_sequence_arguments(verify)
    add_common_arguments(verify)
    verify.add_argument("--statement", required=True, choices=list(statements.STATEMENTS))
    verify.add_argument("--max-n", type=int, default=40)
    verify.add_argument("--n", type=int, help="Base index for the valuation statements")
    verify.add_argument("--max-m", type=int, default=27, help="Largest multiplier for the valuation statements")
    verify.add_argument("--pi", help="Irreducible divisor of term n for the valuation statements")
    verify.add_argument("--include-deleted", action="store_true", help="Keep indices divisible by the characteristic")
    verify.add_argument("--identity-bound", type=int, default=statements.IDENTITY_BOUND)
    verify.add_argument("--random", type=int, metavar="COUNT", help="Check COUNT seeded random sequences")
    verify.add_argument("--max-degree", type=int, default=3, help="Degree bound for random sequences")
    verify.add_argument("--archive", type=Path, help="Write failures and observations to a .zwit archive")
    add_runtime_arguments(verify)

    survey_parser = subparser.add_parser("survey", help="One row per index: degrees and primitive parts")
    add_sequence_arguments(survey_parser)
    add_common_arguments(survey_parser, ("tsv", "json", "text"))
    survey_parser.add_argument("--max-n", type=int, default=40)
    survey_parser.add_argument("--factors", action="store_true", help="List primitive prime divisors")
    add_mode_argument(survey_parser)

    char2 = subparser.add_parser("char2-search", help="Random zsigmondy pairs in characteristic 2 with g != 1")
    char2.add_argument("--field", type=field_argument_type, default=make_field("fp:2"))
    char2.add_argument("--max-degree", type=int, default=3)
    char2.add_argument("--count", type=int, default=200)
    char2.add_argument("--max-n", type=int, default=25)
    char2.add_argument("--archive", type=Path, help="Write witnesses to a .zwit archive")
    add_common_arguments(char2)
    add_runtime_arguments(char2)

    decode = subparser.add_parser("decode", help="Print a .ztrm or .zwit archive as JSON")
    decode.add_argument("--re-encode", help="Re-encode afterwards and compares to the original.", action="store_true")
    decode.add_argument("--out", type=Path, help="Write the JSON to this path instead of stdout")
    decode.add_argument("-v", "--verbose", action="count", default=0)
    decode.add_argument("input_path", type=Path, help="Path to the file")

    return parser


def add_mode_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--mode",
        type=StripMode,
        metavar="{all-earlier,divisors-only}",
        default=StripMode.ALL_EARLIER,
        help="Strip against all earlier terms or only the terms at divisors",
    )


def add_runtime_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--workers", type=int, help="Worker processes. Defaults to $ZSIG_WORKERS, then 1")
    parser.add_argument("--timing", action="store_true", help="Record wall time in reports")


# Argument resolution


def _seed(args) -> int:
    return args.seed if args.seed is not None else default_seed()


def _workers(args) -> int:
    return args.workers if args.workers is not None else default_workers()


def _require_field(args) -> FieldDescriptor:
    if args.field is None:
        raise UsageError("--field is required")
    return args.field


def _poly(text: str, field: FieldDescriptor) -> Poly:
    return parse_poly(text, field)


def sequence_from_args(args) -> SequenceSpec:
    if getattr(args, "terms", None) is not None:
        if args.f or args.g or args.p:
            raise UsageError("--terms cannot be combined with --f, --g or --P")
        archive = formats.TermArchive.read(args.terms)
        return archive.load()

    field = _require_field(args)
    if args.p is not None:
        if args.f or args.g:
            raise UsageError("--P cannot be combined with --f or --g")
        return SequenceSpec.lucas(_poly(args.p, field))
    if args.f is None:
        raise UsageError("one of --f or --P is required")
    if args.g is None:
        return SequenceSpec.bang(_poly(args.f, field))
    return SequenceSpec.zsigmondy(_poly(args.f, field), _poly(args.g, field))


def emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", args.out)
    else:
        sys.stdout.write(text)


def dump_json(value) -> str:
    return json.JSONEncoder(indent=4).encode(value)


# Commands


def do_seq(args) -> int:
    spec = sequence_from_args(args)
    indices = [args.n] if args.n is not None else list(range(1, args.max_n + 1))

    if spec.kind == SequenceKind.LUCAS:
        rows = [{"n": n, "term": str(term(spec, n)), "l_hat": str(lucas_terms(spec, n).l_hat)} for n in indices]
    else:
        rows = [{"n": n, "term": str(term(spec, n))} for n in indices]

    if args.format == "json":
        emit(args, dump_json({"spec": spec.describe(), "terms": rows}))
    else:
        emit(args, "\n".join(f"{row['n']}\t{row['term']}" for row in rows))

    if args.archive is not None:
        formats.TermArchive.from_spec(spec, max(indices)).write(args.archive)
        logger.info("Wrote %d terms to %s", max(indices), args.archive)
    return EXIT_OK


def do_factor(args) -> int:
    f = _poly(args.f, args.field)
    result = factor(f, RngState(_seed(args)))
    if args.format == "json":
        emit(
            args,
            dump_json(
                {
                    "field": args.field.spec_string,
                    "poly": str(f),
                    "unit": str(result.unit),
                    "factors": [{"poly": str(poly), "multiplicity": mult} for poly, mult in result.factors],
                }
            ),
        )
    else:
        emit(args, str(result))
    return EXIT_OK


def do_phi(args) -> int:
    field = args.field
    if args.p is not None:
        spec = SequenceSpec.lucas(_poly(args.p, field))
        result = cyclotomic.phi_lucas(args.n, spec.p, spec.p_sigma)
    else:
        if args.f is None:
            raise UsageError("one of --f or --P is required")
        g = _poly(args.g, field) if args.g is not None else Poly.one(field)
        result = cyclotomic.phi_homog(args.n, _poly(args.f, field), g)

    if args.format == "json":
        emit(args, dump_json({"n": args.n, "field": result.field.spec_string, "phi": str(result)}))
    else:
        emit(args, str(result))
    return EXIT_OK


def do_primitive(args) -> int:
    spec = sequence_from_args(args)
    rng = RngState(_seed(args)) if spec.base_field.is_finite else None
    record = build_record(spec, args.n, args.mode, rng)

    if args.format == "json":
        emit(args, dump_json(record.to_json()))
    else:
        lines = [
            f"term {args.n}: {term(spec, args.n)}",
            f"primitive part: {record.primitive_part}",
        ]
        if record.primitive_factors is not None:
            lines.append(f"primitive divisors: {record.primitive_factors}")
        if record.matches_phi is not None:
            lines.append(f"equals monic Φ_{args.n}: {record.matches_phi}")
        emit(args, "\n".join(lines))
    return EXIT_OK


def do_survey(args) -> int:
    spec = sequence_from_args(args)
    rng = RngState(_seed(args)) if args.factors else None
    records = survey(spec, args.max_n, args.mode, rng)

    if args.format == "json":
        emit(args, dump_json({"spec": spec.describe(), "records": [r.to_json() for r in records]}))
    elif args.format == "tsv":
        emit(args, "\n".join([TSV_HEADER] + [r.to_tsv() for r in records]))
    else:
        emit(args, "\n".join(f"{r.n}\t{r.primitive_part}" for r in records))
    return EXIT_OK


def _emit_reports(args, reports: list[Report]) -> int:
    if args.format == "json":
        value = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        emit(args, dump_json(value))
    else:
        emit(args, "\n".join(r.to_text() for r in reports))

    if any(r.verdict == Verdict.COUNTEREXAMPLE for r in reports):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def do_verify(args) -> int:
    seed = _seed(args)
    options = statements.VerifyOptions(
        max_n=args.max_n,
        n=args.n,
        max_m=args.max_m,
        seed=seed,
        include_deleted=args.include_deleted,
        identity_bound=args.identity_bound,
        timing=args.timing,
        field=args.field,
        count=args.random if args.random is not None else 25,
        max_degree=args.max_degree,
        archive=args.archive if args.statement == "char2-remark" else None,
        workers=_workers(args),
    )

    if args.random is not None:
        field = _require_field(args)
        reports = statements.run_campaign(args.statement, field, options)
    elif not statements.needs_spec(args.statement):
        _require_field(args)
        reports = [statements.run_statement(args.statement, None, options)]
    else:
        spec = sequence_from_args(args)
        if args.pi is not None:
            options = dataclasses.replace(options, pi=_poly(args.pi, spec.base_field))
        reports = [statements.run_statement(args.statement, spec, options)]

    if args.archive is not None and args.statement != "char2-remark":
        formats.WitnessArchive.from_reports(reports).write(args.archive)
        logger.info("Wrote witnesses to %s", args.archive)

    return _emit_reports(args, reports)


def do_char2_search(args) -> int:
    report = explore_char2(
        args.field,
        args.max_degree,
        args.count,
        RngState(_seed(args)),
        args.max_n,
        archive=args.archive,
        workers=_workers(args),
        timing=args.timing,
    )
    return _emit_reports(args, [report])


def do_decode(args) -> int:
    input_path: Path = args.input_path
    raw = input_path.read_bytes()
    decoded = formats.format_for_data(raw).parse(raw)
    emit(args, dump_json(decoded.to_json()))

    if args.re_encode:
        encoded = decoded.build()
        if formats.format_for_data(encoded).parse(encoded).to_json() != decoded.to_json():
            print(f"{input_path}: Results differ (len(raw): {len(raw)}; len(encoded): {len(encoded)})", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK


COMMANDS: dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "seq": do_seq,
    "factor": do_factor,
    "phi": do_phi,
    "primitive": do_primitive,
    "verify": do_verify,
    "survey": do_survey,
    "char2-search": do_char2_search,
    "decode": do_decode,
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr)


def run(argv: typing.Sequence[str] | None = None) -> int:
    """Runs one command; returns 0 on success, 1 on usage or input errors and 2 on a counterexample."""
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, SequenceKindError, ZeroDivisionError, OSError, construct.ConstructError) as e:
        print(f"zsig {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    raise SystemExit(run())
