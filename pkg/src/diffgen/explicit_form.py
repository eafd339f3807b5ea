"""Closed-form coefficients for derivative approximations of any order.

The base polynomial P(z) = beta_0 + beta_1 z + ... + beta_{N-1} z^{N-1} with
N = p + d is fixed by the moment conditions

    sum_j (lam - j)^k beta_j = d! * delta_{k,d},   k = 0 .. N-1,

where lam = r*d/alpha encodes the evaluation shift. Raising P(z) to alpha/d
then generates weights approximating the derivative of order alpha with
accuracy order p. Each beta_j splits into a numerator N_j (an elementary
symmetric polynomial in the shifted nodes) over a denominator D_j that does
not depend on lam, which is what the functions below compute without ever
solving a linear system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Mapping

from .scalars import FLOAT64, RATIONAL, Field, Scalar

if TYPE_CHECKING:  # pragma: no cover
    from .oracle import OpCount

__all__ = [
    "ApproxParams",
    "CoefficientVector",
    "ErrorCoefficients",
    "derive_params",
    "denominators",
    "numerators",
    "beta_coefficients",
    "error_coefficients",
    "generator_polynomial",
]


@dataclass(frozen=True)
class ApproxParams:
    """Validated parameter bundle: derivative order alpha, base order d,
    accuracy order p, shift r, with lam = r*d/alpha and n_coeffs = p + d."""

    alpha: Scalar
    d: int
    p: int
    r: Scalar
    lam: Scalar
    n_coeffs: int
    field: Field

    @property
    def gamma(self) -> Scalar:
        """Exponent alpha/d applied to the base polynomial."""
        with self.field.context():
            return self.alpha / self.d


def derive_params(alpha, d: int, p: int, r, field: Field = RATIONAL) -> ApproxParams:
    """Validate inputs and precompute lam and the coefficient count.

    alpha must be positive; d and p are positive integers; r is any scalar
    shift (integers give on-grid stencils, halves give staggered ones).
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"base derivative order d must be a positive integer, got {d!r}")
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"accuracy order p must be a positive integer, got {p!r}")
    alpha = field.of(alpha)
    r = field.of(r)
    with field.context():
        if not alpha > 0:
            raise ValueError("derivative order alpha must be positive")
        lam = r * d / alpha
    return ApproxParams(alpha, d, p, r, lam, p + d, field)


@lru_cache(maxsize=None)
def _denominators_exact(d: int, p: int) -> tuple[Fraction, ...]:
    n = p + d
    first = Fraction(1)
    for m in range(d + 1, n):
        first *= -m
    out = [first]
    for j in range(1, n):
        out.append(out[-1] * Fraction(-j, n - j))
    return tuple(out)


def denominators(d: int, p: int, field: Field = RATIONAL) -> tuple[Scalar, ...]:
    """Shift-independent denominators D_j, j = 0..p+d-1.

    D_0 = prod_{m=d+1}^{p+d-1} (-m) and D_j = D_{j-1} * (-j) / (p+d-j); the
    exact values are cached per (d, p) and converted into ``field``.
    """
    if not isinstance(d, int) or d < 1 or not isinstance(p, int) or p < 1:
        raise ValueError("d and p must be positive integers")
    exact = _denominators_exact(d, p)
    if field is RATIONAL:
        return exact
    with field.context():
        return tuple(field.of(v) for v in exact)


def numerators(params: ApproxParams, tally: "OpCount | None" = None) -> tuple[Scalar, ...]:
    """Numerators N_j: degree-(p-1) elementary symmetric polynomials on the
    node sets {lam - k : k != j}.

    Builds the coefficient list of prod_{m=1}^{N-1} (x + lam - m) once, then
    slides the excluded node from j-1 to j with a two-term recurrence, so the
    whole family costs O(N^2) operations instead of N * C(N-1, p-1).
    ``tally`` (if given) accumulates the executed adds and multiplies.
    """
    n = params.n_coeffs
    d = params.d
    adds = mults = 0
    with params.field.context():
        lam = params.lam
        xs = [lam - m for m in range(n)]
        zero = params.field.zero
        coeffs = [zero] * (n + 1)
        coeffs[0] = params.field.one
        for m in range(1, n):
            xm = xs[m]
            for k in range(m, 0, -1):
                coeffs[k] = coeffs[k - 1] + xm * coeffs[k]
            coeffs[0] = xm * coeffs[0]
            adds += m
            mults += m + 1
        nums = [coeffs[d]]
        prev = coeffs
        for j in range(1, n):
            x_in, x_out = xs[j - 1], xs[j]
            cur = [zero] * (n + 1)
            for k in range(n - 1, -1, -1):
                cur[k] = prev[k] + x_in * prev[k + 1] - x_out * cur[k + 1]
            adds += 2 * n
            mults += 2 * n
            nums.append(cur[d])
            prev = cur
    if tally is not None:
        tally.additions += adds
        tally.multiplications += mults
    return tuple(nums)


@dataclass(frozen=True)
class CoefficientVector:
    """Base-polynomial coefficients beta_j = N_j / D_j with their parts."""

    params: ApproxParams
    beta: tuple[Scalar, ...]
    numerators: tuple[Scalar, ...]
    denominators: tuple[Scalar, ...]


def beta_coefficients(params: ApproxParams, tally: "OpCount | None" = None) -> CoefficientVector:
    """Coefficients of the base polynomial for ``params``."""
    nums = numerators(params, tally)
    dens = denominators(params.d, params.p, params.field)
    with params.field.context():
        beta = tuple(nv / dv for nv, dv in zip(nums, dens))
    return CoefficientVector(params, beta, nums, dens)


@dataclass(frozen=True)
class ErrorCoefficients:
    """Leading error coefficients a_m, m = p .. p+count-1.

    The approximation error is sum_m a_m h^m D^{alpha+m} u + O(h^{m+1} ...),
    so ``leading`` (= a_p) multiplies h^p times the (alpha+p)-th derivative.
    """

    params: ApproxParams
    a: Mapping[int, Scalar]

    @property
    def leading(self) -> Scalar:
        return self.a[self.params.p]

    @property
    def super_convergent(self) -> bool:
        """True when the h^p term vanishes (order exceeds p); exact in rational mode."""
        return self.leading == 0


def error_coefficients(cv: CoefficientVector, count: int = 1) -> ErrorCoefficients:
    """First ``count`` error coefficients of the formula behind ``cv``.

    a_m = (alpha/d) * (1/(m+d)!) * sum_j (lam-j)^{m+d} beta_j; only
    m < 2p is meaningful for a base of degree p+d-1, hence count <= p.
    """
    params = cv.params
    if not isinstance(count, int) or count < 1 or count > params.p:
        raise ValueError(f"count must be in 1..p = {params.p}, got {count!r}")
    a: dict[int, Scalar] = {}
    with params.field.context():
        nodes = [params.lam - j for j in range(params.n_coeffs)]
        for m in range(params.p, params.p + count):
            k = m + params.d
            moment = params.field.zero
            for node, b in zip(nodes, cv.beta):
                moment += node**k * b
            a[m] = params.alpha * moment / (params.d * math.factorial(k))
    return ErrorCoefficients(params, a)


def generator_polynomial(cv: CoefficientVector) -> tuple[Scalar, ...]:
    """The base polynomial's coefficient tuple (beta_0, ..., beta_{N-1})."""
    return tuple(cv.beta)
