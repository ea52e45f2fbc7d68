"""The ``zetap`` command line.

Exit status is 0 on success, 1 when a verification suite reports a failure and 2 on a usage or
domain error. Results go to stdout; logs, progress bars and errors go to stderr.
"""
import argparse
from collections.abc import Sequence
from enum import auto
from fractions import Fraction
import logging
import sys
from typing import Final

from pydantic import ValidationError
from strenum import UppercaseStrEnum

from zeta_parity.closed_forms.evaluation import ExactPi, Log2Multiple, Open, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.closed_forms.typology import classify
from zeta_parity.cli.output import OutputFormat, OutputRecord, write_records
from zeta_parity.coefficients.sequences import coeff_a, coeff_b, coeff_c
from zeta_parity.fourier.random_polynomials import DEFAULT_HEIGHT
from zeta_parity.numeric.config import NumericConfig
from zeta_parity.numeric.crosscheck import closed_form_decimal
from zeta_parity.verification.suites import (
    SuiteSummary,
    VerificationSuite,
    run_bridge_suite,
    run_crosscheck_suite,
    run_decompose_suite,
    run_even_identity_suite,
    run_odd_identity_suite,
)


logger = logging.getLogger(__name__)

EXIT_SUCCESS: Final[int] = 0
EXIT_VERIFICATION_FAILED: Final[int] = 1
EXIT_ERROR: Final[int] = 2

DEFAULT_DIGITS: Final[int] = 15
"""Decimals printed by ``value --decimal`` and ``table``."""

RANDOMISED_SUITES: Final[frozenset[VerificationSuite]] = frozenset(
    {VerificationSuite.EVEN_IDENTITY, VerificationSuite.ODD_IDENTITY}
)

SUITE_ALIASES: Final[dict[str, VerificationSuite]] = {
    "prop1": VerificationSuite.EVEN_IDENTITY,
    "prop6": VerificationSuite.ODD_IDENTITY,
}
"""Alternative names accepted by ``zetap verify``."""


class SequenceName(UppercaseStrEnum):
    """Coefficient sequences printed by ``zetap coeff``."""

    A = auto()
    """``xi(2p) = A_p pi^(2p)``, from ``p = 1``."""

    B = auto()
    """``zeta(2p) = B_p pi^(2p)``, from ``p = 1``."""

    C = auto()
    """``psi(2p + 1) = C_p pi^(2p + 1)``, from ``p = 0``."""

    @property
    def first_index(self) -> int:
        """Smallest valid index."""
        return 0 if self is SequenceName.C else 1


def suite_name(name: str) -> VerificationSuite:
    """Parse a suite name or one of its aliases.

    Example:
        >>> print(suite_name("prop6"))
        odd-identity

    Args:
        name: Suite name, e.g. ``bridge`` or ``prop1``.

    Returns:
        The suite.

    Raises:
        ValueError: If the name is unknown.
    """
    return SUITE_ALIASES.get(name) or VerificationSuite(name)


class CommandError(ValueError):
    """Invalid command input detected before any computation."""

    def __init__(self, message: str = "Invalid command input.") -> None:
        """Initialise the command error.

        Args:
            message: Error message.
        """
        super().__init__(message)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        The parser, with one sub-command per operation.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.TEXT,
        help="Output format.",
    )
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level (logs go to stderr).",
    )

    parser = argparse.ArgumentParser(
        prog="zetap",
        description="Exact values of zeta and five related series at natural numbers.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    coeff = commands.add_parser("coeff", parents=[common], help="Print A_p, B_p or C_p.")
    coeff.add_argument("sequence", type=SequenceName, choices=list(SequenceName))
    coeff.add_argument("index", type=int)

    value = commands.add_parser("value", parents=[common], help="Evaluate a series at n.")
    value.add_argument("function", type=FunctionId, choices=list(FunctionId))
    value.add_argument("n", type=int)
    mode = value.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="Exact form (default).")
    mode.add_argument("--decimal", action="store_true", help="Certified decimal expansion.")
    value.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="Decimals to print.")

    classify_parser = commands.add_parser(
        "classify", parents=[common], help="Parity typology of a (series, argument) pair."
    )
    classify_parser.add_argument("function", type=FunctionId, choices=list(FunctionId))
    classify_parser.add_argument("n", type=int)

    verify = commands.add_parser("verify", parents=[common], help="Run a verification suite.")
    verify.add_argument(
        "suite",
        type=suite_name,
        choices=list(VerificationSuite),
        help="Suite to run (prop1 and prop6 also name the even and odd identity suites).",
    )
    verify.add_argument("--max-p", type=int, default=6, help="Largest identity order or index.")
    verify.add_argument("--trials", type=int, default=50, help="Random polynomials per order.")
    verify.add_argument("--seed", type=int, default=None, help="Seed (randomised suites).")
    verify.add_argument("--tol", type=float, default=1e-9, help="Numeric tolerance.")
    verify.add_argument("--max-n", type=int, default=12, help="Largest argument (numeric suites).")
    verify.add_argument(
        "--height", type=int, default=DEFAULT_HEIGHT, help="Coefficient height bound."
    )
    verify.add_argument("--workers", type=int, default=0, help="Worker processes.")
    verify.add_argument("--per-trial", action="store_true", help="Print every trial result.")

    table = commands.add_parser("table", parents=[common], help="Table of resolved values.")
    table.add_argument("--max-p", type=int, default=12, help="Largest argument.")
    table.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="Decimals to print.")

    return parser


def _coeff_command(args: argparse.Namespace) -> list[OutputRecord]:
    sequence: SequenceName = args.sequence
    if args.index < sequence.first_index:
        error_message = (
            f"{sequence}_p is defined for p >= {sequence.first_index}, got p = {args.index}."
        )
        raise CommandError(error_message)

    compute = {SequenceName.A: coeff_a, SequenceName.B: coeff_b, SequenceName.C: coeff_c}[sequence]
    coefficient = compute(args.index)
    return [
        OutputRecord(
            {"sequence": str(sequence), "index": args.index, "value": str(coefficient)},
            f"{sequence} {args.index} {coefficient}",
        )
    ]


def _value_command(args: argparse.Namespace) -> list[OutputRecord]:
    function: FunctionId = args.function
    evaluation = evaluate(function, args.n)

    if args.decimal:
        if not isinstance(evaluation, ExactPi | Log2Multiple):
            error_message = f"{function}({args.n}) is {evaluation}: no decimal value to print."
            raise CommandError(error_message)
        decimal = str(closed_form_decimal(evaluation, args.digits))
        return [OutputRecord({"function": str(function), "n": args.n, "decimal": decimal}, decimal)]

    exact = str(evaluation)
    fields = {"function": str(function), "n": args.n, "exact": exact}
    text = exact
    if isinstance(evaluation, Open) and evaluation.note is not None:
        fields["note"] = evaluation.note
        text = f"{exact}\nnote: {evaluation.note}"
    return [OutputRecord(fields, text)]


def _classify_command(args: argparse.Namespace) -> list[OutputRecord]:
    record = classify(args.function, args.n)
    return [OutputRecord(record.to_dict(), str(record))]


def ln2_form(coefficient: Fraction) -> str:
    """Exact form of a multiple of ln 2 as printed in tables.

    Example:
        >>> ln2_form(Fraction(1)), ln2_form(Fraction(1, 2))
        ('ln2', '1/2 * ln2')

    Args:
        coefficient: Rational multiple.

    Returns:
        ``ln2`` or ``<coefficient> * ln2``.
    """
    return "ln2" if coefficient == 1 else f"{coefficient} * ln2"


def _table_command(args: argparse.Namespace) -> list[OutputRecord]:
    if args.max_p < 1:
        error_message = f"--max-p must be at least 1, got {args.max_p}."
        raise CommandError(error_message)

    records: list[OutputRecord] = []
    for n in range(1, args.max_p + 1):
        for function in FunctionId:
            evaluation = evaluate(function, n)
            match evaluation:
                case ExactPi(value):
                    exact = str(value)
                case Log2Multiple(coefficient):
                    exact = ln2_form(coefficient)
                case _:
                    continue
            decimal = str(closed_form_decimal(evaluation, args.digits))
            fields = {"function": str(function), "n": n, "exact": exact, "decimal": decimal}
            records.append(OutputRecord(fields))
    return records


def _run_suite(args: argparse.Namespace) -> SuiteSummary:
    suite: VerificationSuite = args.suite
    if suite in RANDOMISED_SUITES and args.seed is None:
        error_message = f"--seed is required for the randomised suite {suite}."
        raise CommandError(error_message)

    match suite:
        case VerificationSuite.EVEN_IDENTITY:
            return run_even_identity_suite(
                args.max_p, args.trials, args.seed, height=args.height, workers=args.workers
            )
        case VerificationSuite.ODD_IDENTITY:
            return run_odd_identity_suite(
                args.max_p, args.trials, args.seed, height=args.height, workers=args.workers
            )
        case VerificationSuite.BRIDGE:
            return run_bridge_suite(args.max_p)
        case VerificationSuite.CROSSCHECK:
            return run_crosscheck_suite(args.max_n, args.tol, NumericConfig.from_env())
        case VerificationSuite.DECOMPOSE:
            return run_decompose_suite(args.max_n, args.tol, NumericConfig.from_env())


def _verify_command(args: argparse.Namespace) -> int:
    summary = _run_suite(args)
    if args.per_trial:
        rows = summary.reports or summary.all_results
        records = [OutputRecord(row.to_dict(), row=row.to_csv_row()) for row in rows]
        write_records(records, args.format, sys.stdout)
    print(summary)

    for failure in summary.failures:
        print(
            f"failed: {failure.suite} index={failure.index} instance={failure.instance} "
            f"detail={failure.detail}",
            file=sys.stderr,
        )
    return EXIT_SUCCESS if summary.passed else EXIT_VERIFICATION_FAILED


def _error_text(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(
            f"{'.'.join(str(part) for part in detail['loc'])}: {detail['msg']}"
            for detail in error.errors()
        )
    return str(error)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments (defaults to ``sys.argv[1:]``).

    Returns:
        The exit status.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logger.debug("Running %s", args.command)

    try:
        match args.command:
            case "verify":
                return _verify_command(args)
            case "coeff":
                records = _coeff_command(args)
            case "value":
                records = _value_command(args)
            case "classify":
                records = _classify_command(args)
            case _:
                records = _table_command(args)
    except (ValueError, ArithmeticError, RuntimeError) as error:
        print(f"error: {_error_text(error)}", file=sys.stderr)
        return EXIT_ERROR

    write_records(records, args.format, sys.stdout)
    return EXIT_SUCCESS


def run() -> None:
    """Entry point of the ``zetap`` script."""
    sys.exit(main())


if __name__ == "__main__":
    run()
