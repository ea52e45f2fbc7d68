"""Exact values of zeta and five related series at natural numbers."""
from zeta_parity.closed_forms.decomposition import DecompositionRecord, decompose
from zeta_parity.closed_forms.evaluation import (
    Divergent,
    Evaluation,
    ExactPi,
    Log2Multiple,
    Open,
    evaluate,
)
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.closed_forms.typology import TypologyRecord, classify
from zeta_parity.coefficients.cache import CoefficientCache, CoefficientConfig
from zeta_parity.coefficients.sequences import bridge_b_from_a, coeff_a, coeff_b, coeff_c
from zeta_parity.core.fixed_decimal import FixedDecimal
from zeta_parity.core.pi_value import PI, PiValue, pi_divide
from zeta_parity.core.polynomial import PiPolynomial, QPolynomial
from zeta_parity.core.rendering import render_decimal
from zeta_parity.fourier.coefficients import cos_coefficient, sin_coefficient
from zeta_parity.fourier.identities import even_identity_residual, odd_identity_residual
from zeta_parity.numeric.cancellation import CancellationToken
from zeta_parity.numeric.config import NumericConfig
from zeta_parity.numeric.constants import compute_ln2, compute_pi, ln2_partial_sum
from zeta_parity.numeric.crosscheck import CrosscheckReport, crosscheck
from zeta_parity.numeric.series import SummationResult, euler_accelerated, sum_series


__all__ = [
    "PI",
    "CancellationToken",
    "CoefficientCache",
    "CoefficientConfig",
    "CrosscheckReport",
    "DecompositionRecord",
    "Divergent",
    "Evaluation",
    "ExactPi",
    "FixedDecimal",
    "FunctionId",
    "Log2Multiple",
    "NumericConfig",
    "Open",
    "PiPolynomial",
    "PiValue",
    "QPolynomial",
    "SummationResult",
    "TypologyRecord",
    "bridge_b_from_a",
    "classify",
    "coeff_a",
    "coeff_b",
    "coeff_c",
    "compute_ln2",
    "compute_pi",
    "cos_coefficient",
    "crosscheck",
    "decompose",
    "euler_accelerated",
    "evaluate",
    "even_identity_residual",
    "ln2_partial_sum",
    "odd_identity_residual",
    "pi_divide",
    "render_decimal",
    "sin_coefficient",
    "sum_series",
]
