"""Verification suites run by ``zetap verify``.

Each suite produces one `TrialResult` per checked instance and a `SuiteSummary` whose string form
is the one-line report printed by the command line. Randomised suites take a required seed, which
is logged, and draw every polynomial in the parent process so that results do not depend on the
number of workers.
"""
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from contextlib import ExitStack
from dataclasses import dataclass
from enum import auto
import logging
from typing import Any, Final, final

import mpmath
import numpy as np
from pydantic import NonNegativeInt, PositiveFloat, PositiveInt, validate_call
from strenum import KebabCaseStrEnum
from tqdm.auto import tqdm

from zeta_parity.closed_forms.decomposition import IdentityViolationError, decompose
from zeta_parity.closed_forms.evaluation import ExactPi, Log2Multiple, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.coefficients.cache import CoefficientCache, CoefficientConfig
from zeta_parity.coefficients.sequences import bridge_b_from_a
from zeta_parity.core.polynomial import PiPolynomial, Polynomial, QPolynomial
from zeta_parity.fourier.identities import (
    check_residual_soundness,
    even_identity_residual,
    odd_identity_residual,
)
from zeta_parity.fourier.random_polynomials import (
    DEFAULT_HEIGHT,
    random_odd_polynomial,
    random_polynomial,
)
from zeta_parity.numeric.config import NumericConfig
from zeta_parity.numeric.crosscheck import CrosscheckReport, crosscheck
from zeta_parity.numeric.series import sum_series


logger = logging.getLogger(__name__)

DECOMPOSITION_WORKING_DIGITS: Final[int] = 40
"""Working precision for combining numeric sums in the decomposition suite."""

DECOMPOSITION_INSTANCE: Final[str] = "zeta alpha beta xi"


class VerificationSuite(KebabCaseStrEnum):
    """Verification suites available from the command line."""

    EVEN_IDENTITY = auto()
    """Even periodization identity on canonical and random polynomials."""

    ODD_IDENTITY = auto()
    """Odd periodization identity on canonical and random odd polynomials."""

    BRIDGE = auto()
    """Agreement of the direct ``B_p`` recurrence with the value derived from ``A_p``."""

    CROSSCHECK = auto()
    """Closed forms against certified numeric sums."""

    DECOMPOSE = auto()
    """``alpha + beta = zeta`` and ``beta - alpha = xi``, exactly or numerically."""


_SUMMARY_NOUNS: Final[dict[VerificationSuite, str]] = {
    VerificationSuite.EVEN_IDENTITY: "residuals zero",
    VerificationSuite.ODD_IDENTITY: "residuals zero",
    VerificationSuite.BRIDGE: "exact",
    VerificationSuite.CROSSCHECK: "pairs pass",
    VerificationSuite.DECOMPOSE: "arguments hold",
}


@final
@dataclass(frozen=True)
class TrialResult:
    """Outcome of one checked instance."""

    suite: VerificationSuite
    instance: str
    """What was checked (a polynomial, a coefficient or a function name)."""

    index: int
    """Order ``p`` of the identity or argument ``n``."""

    detail: str
    """Residual, difference or gap found."""

    passed: bool

    def to_csv_row(self) -> list[str]:
        """Fields in the order ``suite, instance, index, detail, pass|fail``.

        Returns:
            The row.
        """
        return [
            str(self.suite),
            self.instance,
            str(self.index),
            self.detail,
            "pass" if self.passed else "fail",
        ]

    def to_dict(self) -> dict[str, Any]:
        """Plain-data form of the result, with the same columns as `to_csv_row`.

        Returns:
            Field names mapped to JSON-compatible values.
        """
        return {
            "suite": str(self.suite),
            "instance": self.instance,
            "index": self.index,
            "detail": self.detail,
            "status": "pass" if self.passed else "fail",
        }


@final
@dataclass(frozen=True)
class SuiteSummary:
    """All results of a suite run.

    Example:
        >>> summary = run_bridge_suite(3)
        >>> print(summary)
        bridge: 3/3 exact
        >>> summary.passed
        True
    """

    suite: VerificationSuite
    results: tuple[TrialResult, ...]
    """Results of the main (random or enumerated) instances."""

    canonical: tuple[TrialResult, ...] = ()
    """Results of the fixed instances run before the random ones."""

    reports: tuple[CrosscheckReport, ...] = ()
    """Full crosscheck records, one per result, for the crosscheck suite."""

    @property
    def all_results(self) -> tuple[TrialResult, ...]:
        """Canonical results followed by the main ones."""
        return self.canonical + self.results

    @property
    def failures(self) -> tuple[TrialResult, ...]:
        """Results that did not pass."""
        return tuple(result for result in self.all_results if not result.passed)

    @property
    def passed(self) -> bool:
        """Whether every instance passed."""
        return not self.failures

    def __str__(self) -> str:
        """One-line report, e.g. ``bridge: 50/50 exact``."""
        passed = sum(result.passed for result in self.results)
        line = f"{self.suite}: {passed}/{len(self.results)} {_SUMMARY_NOUNS[self.suite]}"
        if self.canonical:
            canonical_passed = sum(result.passed for result in self.canonical)
            line += f", {canonical_passed}/{len(self.canonical)} canonical"
        return line


IdentityTask = tuple[Polynomial, int]
"""A polynomial and the order of the identity to check it at."""


def _even_trial(task: IdentityTask) -> TrialResult:
    polynomial, p = task
    residual = even_identity_residual(polynomial, p)
    check_residual_soundness(residual)
    return TrialResult(
        VerificationSuite.EVEN_IDENTITY, str(polynomial), p, str(residual), passed=not residual
    )


def _odd_trial(task: IdentityTask) -> TrialResult:
    polynomial, p = task
    residual = odd_identity_residual(polynomial, p)
    check_residual_soundness(residual)
    return TrialResult(
        VerificationSuite.ODD_IDENTITY, str(polynomial), p, str(residual), passed=not residual
    )


def _run_trials(
    trial: Callable[[IdentityTask], TrialResult],
    tasks: Sequence[IdentityTask],
    *,
    workers: int,
    description: str,
) -> tuple[TrialResult, ...]:
    """Run trials in order, optionally across worker processes."""
    results: list[TrialResult] = []
    with ExitStack() as stack:
        if workers > 1:
            executor = stack.enter_context(ProcessPoolExecutor(max_workers=workers))
            outcomes = executor.map(trial, tasks, chunksize=max(1, len(tasks) // (4 * workers)))
        else:
            outcomes = map(trial, tasks)

        progress_bar = stack.enter_context(tqdm(desc=description, total=len(tasks), disable=None))
        for outcome in outcomes:
            results.append(outcome)
            progress_bar.update()

    return tuple(results)


@validate_call
def run_even_identity_suite(
    max_p: PositiveInt,
    trials: NonNegativeInt,
    seed: int,
    *,
    height: PositiveInt = DEFAULT_HEIGHT,
    workers: NonNegativeInt = 0,
) -> SuiteSummary:
    """Check the even periodization identity.

    The canonical instances ``t^(2p)`` and ``(t - pi)^(2p)`` run for every ``p`` up to ``max_p``,
    followed by ``trials`` random polynomials of degree ``2p`` per ``p``.

    Example:
        >>> print(run_even_identity_suite(2, 3, seed=42, height=50))
        even-identity: 6/6 residuals zero, 4/4 canonical

    Args:
        max_p: Largest order.
        trials: Random polynomials per order.
        seed: Seed of the random generator.
        height: Bound on numerators and denominators of the random coefficients.
        workers: Worker processes (0 or 1 runs in-process).

    Returns:
        The summary.
    """
    logger.info(
        "Even identity suite: seed=%d max_p=%d trials=%d height=%d", seed, max_p, trials, height
    )
    canonical_tasks: list[IdentityTask] = []
    for p in range(1, max_p + 1):
        canonical_tasks.append((QPolynomial.monomial(2 * p), p))
        canonical_tasks.append((PiPolynomial.shifted_power(2 * p), p))

    rng = np.random.default_rng(seed)
    random_tasks: list[IdentityTask] = [
        (random_polynomial(rng, 2 * p, height), p)
        for p in range(1, max_p + 1)
        for _ in range(trials)
    ]

    canonical = _run_trials(
        _even_trial, canonical_tasks, workers=workers, description="Canonical instances"
    )
    results = _run_trials(_even_trial, random_tasks, workers=workers, description="Random trials")
    return SuiteSummary(VerificationSuite.EVEN_IDENTITY, results, canonical)


@validate_call
def run_odd_identity_suite(
    max_p: NonNegativeInt,
    trials: NonNegativeInt,
    seed: int,
    *,
    height: PositiveInt = DEFAULT_HEIGHT,
    workers: NonNegativeInt = 0,
) -> SuiteSummary:
    """Check the odd periodization identity.

    The canonical instance ``t^(2p + 1)`` runs for every ``p`` from 0 to ``max_p``, followed by
    ``trials`` random odd polynomials of degree ``2p + 1`` per ``p``.

    Example:
        >>> print(run_odd_identity_suite(2, 2, seed=7, height=50))
        odd-identity: 6/6 residuals zero, 3/3 canonical

    Args:
        max_p: Largest order.
        trials: Random polynomials per order.
        seed: Seed of the random generator.
        height: Bound on numerators and denominators of the random coefficients.
        workers: Worker processes (0 or 1 runs in-process).

    Returns:
        The summary.
    """
    logger.info(
        "Odd identity suite: seed=%d max_p=%d trials=%d height=%d", seed, max_p, trials, height
    )
    canonical_tasks: list[IdentityTask] = [
        (QPolynomial.monomial(2 * p + 1), p) for p in range(max_p + 1)
    ]

    rng = np.random.default_rng(seed)
    random_tasks: list[IdentityTask] = [
        (random_odd_polynomial(rng, 2 * p + 1, height), p)
        for p in range(max_p + 1)
        for _ in range(trials)
    ]

    canonical = _run_trials(
        _odd_trial, canonical_tasks, workers=workers, description="Canonical instances"
    )
    results = _run_trials(_odd_trial, random_tasks, workers=workers, description="Random trials")
    return SuiteSummary(VerificationSuite.ODD_IDENTITY, results, canonical)


@validate_call
def run_bridge_suite(max_p: PositiveInt) -> SuiteSummary:
    """Compare ``B_p`` from its own recurrence with the value derived from ``A_p``.

    A fresh cache with the insertion-time bridge check disabled is used, so disagreements are
    reported here rather than raised.

    Args:
        max_p: Largest index.

    Returns:
        The summary.
    """
    cache = CoefficientCache(CoefficientConfig(check_bridge=False))
    results: list[TrialResult] = []
    for p in tqdm(range(1, max_p + 1), desc="Bridge", disable=None):
        direct = cache.b(p)
        bridged = bridge_b_from_a(p, cache)
        results.append(
            TrialResult(
                VerificationSuite.BRIDGE,
                f"B_{p}",
                p,
                str(direct - bridged),
                passed=direct == bridged,
            )
        )
    return SuiteSummary(VerificationSuite.BRIDGE, tuple(results))


@validate_call(config={"arbitrary_types_allowed": True})
def run_crosscheck_suite(
    max_n: PositiveInt, tol: PositiveFloat, config: NumericConfig | None = None
) -> SuiteSummary:
    """Cross-check every resolved value with ``n <= max_n`` against a numeric sum.

    Args:
        max_n: Largest argument.
        tol: Allowed gap between closed form and numeric sum.
        config: Numeric limits (defaults to the environment-aware configuration).

    Returns:
        The summary, with the numeric value and gap of each pair as detail and the full report of
        each pair in `SuiteSummary.reports`.
    """
    config = config or NumericConfig.from_env()
    pairs = [
        (function, n)
        for n in range(1, max_n + 1)
        for function in FunctionId
        if isinstance(evaluate(function, n), ExactPi | Log2Multiple)
    ]
    logger.info("Crosscheck suite: %d resolved pairs at tol=%g", len(pairs), tol)

    results: list[TrialResult] = []
    reports: list[CrosscheckReport] = []
    for function, n in tqdm(pairs, desc="Crosscheck", disable=None):
        report = crosscheck(function, n, tol, config)
        reports.append(report)
        results.append(
            TrialResult(
                VerificationSuite.CROSSCHECK,
                f"{function} = {report.closed_form}",
                n,
                f"numeric={report.numeric} gap={report.gap:.3e} terms={report.terms_used}",
                passed=report.passed,
            )
        )
    return SuiteSummary(VerificationSuite.CROSSCHECK, tuple(results), reports=tuple(reports))


def _numeric_decomposition(n: int, tol: float, config: NumericConfig) -> TrialResult:
    """Check both identities at an argument without closed forms, within certified bounds."""
    sums = {
        function: sum_series(function, n, tol / 4, config)
        for function in (FunctionId.ZETA, FunctionId.ALPHA, FunctionId.BETA, FunctionId.XI)
    }
    zeta, alpha, beta, xi = (
        sums[FunctionId.ZETA],
        sums[FunctionId.ALPHA],
        sums[FunctionId.BETA],
        sums[FunctionId.XI],
    )
    with mpmath.workdps(DECOMPOSITION_WORKING_DIGITS):
        sum_gap = abs(alpha.value + beta.value - zeta.value)
        difference_gap = abs(beta.value - alpha.value - xi.value)
        passed = bool(
            sum_gap <= alpha.tail_bound + beta.tail_bound + zeta.tail_bound
            and difference_gap <= alpha.tail_bound + beta.tail_bound + xi.tail_bound
        )
        detail = (
            f"numeric sum_gap={mpmath.nstr(sum_gap, 3)} "
            f"difference_gap={mpmath.nstr(difference_gap, 3)}"
        )
    return TrialResult(
        VerificationSuite.DECOMPOSE, DECOMPOSITION_INSTANCE, n, detail, passed=passed
    )


@validate_call(config={"arbitrary_types_allowed": True})
def run_decompose_suite(
    max_n: PositiveInt, tol: PositiveFloat, config: NumericConfig | None = None
) -> SuiteSummary:
    """Check ``alpha + beta = zeta`` and ``beta - alpha = xi`` for ``2 <= n <= max_n``.

    Even arguments are checked exactly in Q[pi]; odd arguments, which have no closed forms, are
    checked numerically within the certified bounds of the four sums.

    Example:
        >>> print(run_decompose_suite(4, 1e-8))
        decompose: 3/3 arguments hold

    Args:
        max_n: Largest argument.
        tol: Tolerance of the numeric checks.
        config: Numeric limits (defaults to the environment-aware configuration).

    Returns:
        The summary.
    """
    config = config or NumericConfig.from_env()
    results: list[TrialResult] = []
    for n in tqdm(range(2, max_n + 1), desc="Decompose", disable=None):
        try:
            record = decompose(n)
        except IdentityViolationError as error:
            results.append(
                TrialResult(
                    VerificationSuite.DECOMPOSE, DECOMPOSITION_INSTANCE, n, str(error), passed=False
                )
            )
            continue

        if n % 2:
            results.append(_numeric_decomposition(n, tol, config))
        else:
            detail = f"exact {record.alpha} + {record.beta} = {record.zeta}"
            results.append(
                TrialResult(
                    VerificationSuite.DECOMPOSE, DECOMPOSITION_INSTANCE, n, detail, passed=True
                )
            )
    return SuiteSummary(VerificationSuite.DECOMPOSE, tuple(results))
