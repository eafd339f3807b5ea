"""Weight-series expansion of difference-formula generators.

A generator is a base polynomial P(z) raised to the exponent gamma = alpha/d.
For integer gamma the power is an exact convolution; otherwise the series
coefficients come from the J.C.P. Miller recurrence

    m * beta_0 * w_m = sum_{k=1}^{min(m, deg)} (k*(gamma+1) - m) * beta_k * w_{m-k},

seeded with w_0 = beta_0^gamma. The classic Grünwald binomial weights are the
P(z) = 1 - z special case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .explicit_form import CoefficientVector
from .scalars import Field, Scalar, field_of

__all__ = [
    "WeightSeries",
    "ConvergenceDiagnostic",
    "grunwald_weights",
    "miller_expand",
    "poly_power_int",
    "convergence_diagnostic",
]


@dataclass(frozen=True)
class WeightSeries:
    """Truncated expansion w_0..w_{K-1} of P(z)**gamma."""

    gamma: Scalar
    base: tuple[Scalar, ...]
    weights: tuple[Scalar, ...]
    truncation: int


def _is_integral(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, float):
        return x.is_integer()
    return x == x.to_integral_value()


def grunwald_weights(alpha, truncation: int, field: Field | None = None) -> tuple[Scalar, ...]:
    """First ``truncation`` binomial weights of (1 - z)**alpha.

    g_0 = 1 and g_k = g_{k-1} * (k - 1 - alpha) / k.
    """
    if not isinstance(truncation, int) or truncation < 1:
        raise ValueError("truncation must be a positive integer")
    if field is None:
        field = field_of(alpha)
    with field.context():
        alpha = field.of(alpha)
        weights = [field.one]
        for k in range(1, truncation):
            weights.append(weights[-1] * (k - 1 - alpha) / k)
    return tuple(weights)


def miller_expand(base, gamma, truncation: int, field: Field | None = None) -> WeightSeries:
    """Expand P(z)**gamma to ``truncation`` weights by the Miller recurrence.

    Fractional gamma needs base[0] > 0 (real expansion); in the rational
    field a fractional gamma additionally needs base[0] to be a perfect
    power, otherwise ExactnessError signals that the caller must pick a
    float field.
    """
    base = tuple(base)
    if not base:
        raise ValueError("base polynomial must have at least one coefficient")
    if not isinstance(truncation, int) or truncation < 1:
        raise ValueError("truncation must be a positive integer")
    if field is None:
        field = field_of(base[0])
    with field.context():
        base_f = tuple(field.of(b) for b in base)
        gamma_f = field.of(gamma)
        b0 = base_f[0]
        integral = _is_integral(gamma_f)
        if not integral and not b0 > 0:
            raise ValueError("fractional exponent requires a positive leading base coefficient")
        if integral and b0 == 0 and gamma_f < 0:
            raise ZeroDivisionError("negative power of a polynomial with zero constant term")
        w = [field.power(b0, gamma_f)]
        deg = len(base_f) - 1
        for m in range(1, truncation):
            acc = field.zero
            for k in range(1, min(m, deg) + 1):
                acc += (k * (gamma_f + 1) - m) * base_f[k] * w[m - k]
            w.append(acc / (m * b0))
    return WeightSeries(gamma_f, base_f, tuple(w), truncation)


def poly_power_int(base, gamma: int) -> tuple[Scalar, ...]:
    """Exact coefficients of P(z)**gamma for integer gamma >= 1."""
    if not isinstance(gamma, int) or gamma < 1:
        raise ValueError("gamma must be a positive integer")
    base = tuple(base)
    out = list(base)
    for _ in range(gamma - 1):
        acc = [0 * base[0]] * (len(out) + len(base) - 1)
        for i, av in enumerate(out):
            for j, bv in enumerate(base):
                acc[i + j] += av * bv
        out = acc
    return tuple(out)


@dataclass(frozen=True)
class ConvergenceDiagnostic:
    """Unit-disk convergence test for a generator's fractional expansion.

    The edge-ratio criterion is exact for the p = 2 family, whose base
    factors into (1-z)^d times a single linear term; for any other p the
    same numbers are reported with ``advisory`` set.
    """

    beta0_positive: bool
    edge_ratio: Scalar
    converges_on_unit_disk: bool
    advisory: bool


def convergence_diagnostic(cv: CoefficientVector) -> ConvergenceDiagnostic:
    """Edge ratio |beta_{N-1}/beta_0| and the induced convergence verdict."""
    beta = cv.beta
    field = cv.params.field
    with field.context():
        b0 = beta[0]
        if b0 == 0:
            raise ZeroDivisionError("zero leading coefficient; expansion undefined")
        ratio = abs(beta[-1] / b0)
        positive = b0 > 0
        converges = positive and ratio < field.one
    return ConvergenceDiagnostic(positive, ratio, converges, advisory=cv.params.p != 2)
