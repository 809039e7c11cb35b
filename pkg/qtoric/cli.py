"""Command-line front end.

Tables go to standard output as TSV (or JSON with ``--json``); reports,
errors and logs go to standard error. Exit codes: 0 success, 1 domain or
validation error, 2 parse error, 3 failed check.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from qtoric import __version__
from qtoric.algebra.compositions import Composition, compositions_of
from qtoric.algebra.elements import NSymmElement
from qtoric.config import settings
from qtoric.errors import ArgumentError, InputParseError, QtoricError
from qtoric.logging_config import configure_structlog, get_logger
from qtoric.metrics import record_cli_command, write_metrics_file
from qtoric.models.input_file import InputFile, load_input, write_input
from qtoric.models.quasitoric import QuasitoricData
from qtoric.models.reports import CharFunction
from qtoric.services.face_ring_service import graded_piece
from qtoric.services.hopf_service import (
    antipode,
    check_antipode,
    check_coassociativity,
    check_conjecture15,
    coproduct_table,
    delta_bfk,
)
from qtoric.services.quasitoric_service import (
    char_function,
    char_number,
    f_h_vector,
    kernel_lattice,
    permute_vertices,
    preset_cpn,
    preset_hirzebruch,
    product,
)
from qtoric.services.validation_service import validate
from qtoric.tracing_config import configure_tracing

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_CHECK_FAILED = 3

CHECKS: dict[str, Callable] = {
    "conjecture15": check_conjecture15,
    "coassoc": check_coassociativity,
    "antipode": check_antipode,
}


def _out(line: str):
    print(line, file=sys.stdout)


def _err(line: str):
    print(line, file=sys.stderr)


def _parse_permutation(text: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ArgumentError(f"Invalid permutation '{text}': expected comma-separated integers")


def cmd_validate(args: argparse.Namespace) -> int:
    """Print the validation report of an input file."""
    d = load_input(args.path)
    report = validate(d)
    _err(report.summary())
    for issue in report.issues:
        _err(f"  {issue.kind}: {issue.message}")
    return EXIT_OK if report.valid else EXIT_DOMAIN_ERROR


def cmd_charnums(args: argparse.Namespace) -> int:
    """Print characteristic numbers, one composition per line."""
    d = load_input(args.path)
    if args.permute:
        d = permute_vertices(d, _parse_permutation(args.permute))
    if args.composition is not None:
        alpha = Composition.parse(args.composition)
        result = CharFunction(name=d.name, degree=d.m, values={str(alpha): char_number(d, alpha)})
    else:
        result = char_function(d)

    if args.json:
        _out(result.model_dump_json())
        return EXIT_OK
    ordered = [alpha for alpha in compositions_of(d.m) if str(alpha) in result.values]
    for alpha in ordered:
        _out(f"{alpha}\t{result.values[str(alpha)]}")
    return EXIT_OK


def _emit_data(d: QuasitoricData, output: Path | None):
    if output is None:
        sys.stdout.write(InputFile.from_quasitoric(d).to_json())
    else:
        write_input(d, output)
        _err(f"wrote {output}: {d.vertex_count} vertices, {len(d.facets)} facets")


def cmd_preset(args: argparse.Namespace) -> int:
    """Write a preset (or the product of two input files) as an input file."""
    if args.kind == "cpn":
        d = preset_cpn(args.n)
    elif args.kind == "hirzebruch":
        d = preset_hirzebruch(args.a)
    else:
        d = product(load_input(args.first), load_input(args.second))
    _emit_data(d, args.output)
    return EXIT_OK


def cmd_coproduct(args: argparse.Namespace) -> int:
    """Print the coproduct of a generator."""
    if args.degree < 0:
        raise ArgumentError(f"Degree must be non-negative, got {args.degree}")
    _out(str(delta_bfk(NSymmElement.generator(args.degree), max(args.degree, 1))))
    return EXIT_OK


def cmd_antipode(args: argparse.Namespace) -> int:
    """Print the antipode of a generator."""
    if args.degree < 0:
        raise ArgumentError(f"Degree must be non-negative, got {args.degree}")
    _out(str(antipode(NSymmElement.generator(args.degree), max(args.degree, 1))))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Run a structural check; exit 3 on any failing degree."""
    table = None
    if args.inject_fault is not None:
        table = coproduct_table(args.max_degree).with_fault(args.inject_fault)
    report = CHECKS[args.check](args.max_degree, table=table)
    for entry in report.degrees:
        _out(f"{entry.degree}\t{'pass' if entry.passed else 'fail'}")
    _err(report.summary())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_kernel(args: argparse.Namespace) -> int:
    """Print the kernel lattice of the characteristic matrix."""
    lattice = kernel_lattice(load_input(args.path))
    _out(lattice.summary())
    return EXIT_OK


def cmd_graded(args: argparse.Namespace) -> int:
    """Print sizes, cokernel rank and torsion of graded pieces."""
    d = load_input(args.path)
    degrees = [args.degree] if args.degree is not None else list(range(d.m + 1))
    _out("degree\tbasis\trelations\trank\ttorsion")
    for k in degrees:
        piece = graded_piece(d, k)
        torsion = ",".join(str(t) for t in piece.torsion)
        _out(f"{k}\t{len(piece.basis)}\t{len(piece.relations)}\t{piece.cokernel_rank}\t{torsion}")
    return EXIT_OK


def cmd_fh(args: argparse.Namespace) -> int:
    """Print the f- and h-vectors."""
    vectors = f_h_vector(load_input(args.path))
    _out("f\t" + ",".join(str(x) for x in vectors.f))
    _out("h\t" + ",".join(str(x) for x in vectors.h))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="qtoric",
        description="Exact NSymm coproducts and quasitoric characteristic numbers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Override QTORIC_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("validate", help="Validate an input file")
    p.add_argument("path", type=Path)
    p.set_defaults(handler=cmd_validate)

    p = subparsers.add_parser("charnums", help="Characteristic numbers [alpha]")
    p.add_argument("path", type=Path)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--composition", help="Comma-separated parts, e.g. 2,1")
    group.add_argument("--all", action="store_true", help="Every composition of m (default)")
    p.add_argument("--json", action="store_true", help="Emit JSON instead of TSV")
    p.add_argument("--permute", help="Vertex permutation p0,p1,... applied before evaluating")
    p.set_defaults(handler=cmd_charnums)

    p = subparsers.add_parser("preset", help="Write a preset or a product as an input file")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("cpn", help="Complex projective space")
    k.add_argument("n", type=int)
    k.add_argument("-o", "--output", type=Path)
    k = kinds.add_parser("hirzebruch", help="Hirzebruch surface")
    k.add_argument("a", type=int)
    k.add_argument("-o", "--output", type=Path)
    k = kinds.add_parser("product", help="Product of two input files")
    k.add_argument("first", type=Path)
    k.add_argument("second", type=Path)
    k.add_argument("-o", "--output", type=Path)
    p.set_defaults(handler=cmd_preset)

    p = subparsers.add_parser("coproduct", help="Coproduct of Z_n")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=cmd_coproduct)

    p = subparsers.add_parser("antipode", help="Antipode of Z_n")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=cmd_antipode)

    p = subparsers.add_parser("check", help="Run a structural check")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--inject-fault", type=int, help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_check)

    p = subparsers.add_parser("kernel", help="Kernel lattice of the characteristic matrix")
    p.add_argument("path", type=Path)
    p.set_defaults(handler=cmd_kernel)

    p = subparsers.add_parser("graded", help="Graded pieces of the face-ring quotient")
    p.add_argument("path", type=Path)
    p.add_argument("--degree", type=int)
    p.set_defaults(handler=cmd_graded)

    p = subparsers.add_parser("fh", help="f- and h-vectors")
    p.add_argument("path", type=Path)
    p.set_defaults(handler=cmd_fh)
    return parser


_tracing_configured = False


def _configure_tracing_once():
    global _tracing_configured
    if not _tracing_configured:
        configure_tracing("qtoric", enable_console_export=settings.trace_console)
        _tracing_configured = True


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.log_level:
        configure_structlog("qtoric", args.log_level, settings.log_format)
    _configure_tracing_once()

    command_logger = logger.bind(command=args.command)
    try:
        exit_code = args.handler(args)
    except InputParseError as e:
        _err(f"error: {e}")
        exit_code = EXIT_PARSE_ERROR
    except QtoricError as e:
        _err(f"error: {e}")
        command_logger.warning("Command failed", error_type=type(e).__name__, error=str(e))
        exit_code = EXIT_DOMAIN_ERROR
    except Exception as e:
        _err(f"error: unexpected failure: {e}")
        command_logger.error("Command failed unexpectedly", exc_info=True)
        exit_code = EXIT_DOMAIN_ERROR

    record_cli_command(args.command, exit_code)
    if settings.metrics_file is not None:
        write_metrics_file(settings.metrics_file)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
