"""Brute-force reference paths for cross-checking the closed-form engine.

Everything here is deliberately naive: Cramer's rule on the full moment
matrix, combinatorial sums over index tuples, determinants by exact
elimination. Slow is fine; these exist so the fast path in
:mod:`diffgen.explicit_form` can be checked against something that is
obviously correct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import scalars
from .explicit_form import ApproxParams, CoefficientVector

__all__ = [
    "OpCount",
    "BudgetError",
    "esp_direct",
    "det_exact",
    "vandermonde_matrix",
    "vandermonde_solve",
    "numerators_direct",
    "consistency_moments",
    "symbol_series",
]

DEFAULT_BUDGET = 10**8


@dataclass
class OpCount:
    """Tally of executed scalar additions and multiplications."""

    additions: int = 0
    multiplications: int = 0


class BudgetError(ValueError):
    """Direct enumeration would exceed the configured operation budget."""


def esp_direct(xs, k: int):
    """Elementary symmetric polynomial S(xs, k) by direct enumeration."""
    xs = tuple(xs)
    if not isinstance(k, int) or k < 0 or k > len(xs):
        raise ValueError(f"need 0 <= k <= {len(xs)}, got {k!r}")
    total = 0
    for combo in combinations(xs, k):
        prod = 1
        for v in combo:
            prod = prod * v
        total = total + prod
    return total if k > 0 else 1


def det_exact(matrix):
    """Determinant by Gaussian elimination; exact for exact scalar types."""
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    det = 1
    for col in range(n):
        pivot_row = None
        for row in range(col, n):
            if m[row][col] != 0:
                pivot_row = row
                break
        if pivot_row is None:
            return 0 * det
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        det = det * pivot
        for row in range(col + 1, n):
            factor = m[row][col] / pivot
            if factor == 0:
                continue
            for j in range(col, n):
                m[row][j] = m[row][j] - factor * m[col][j]
    return det * sign


def vandermonde_matrix(params: ApproxParams):
    """Rows of the moment system: row k holds (lam - j)^k for j = 0..N-1."""
    n = params.n_coeffs
    with params.field.context():
        nodes = [params.lam - j for j in range(n)]
        rows = [[params.field.one for _ in nodes]]
        for _ in range(1, n):
            rows.append([prev * node for prev, node in zip(rows[-1], nodes)])
    return rows


def vandermonde_solve(params: ApproxParams):
    """Solve the moment system by Cramer's rule with exact determinants."""
    n = params.n_coeffs
    with params.field.context():
        rows = vandermonde_matrix(params)
        rhs = [params.field.zero] * n
        rhs[params.d] = params.field.of(math.factorial(params.d))
        den = det_exact(rows)
        beta = []
        for j in range(n):
            modified = [list(row) for row in rows]
            for k in range(n):
                modified[k][j] = rhs[k]
            beta.append(det_exact(modified) / den)
    return tuple(beta)


def numerators_direct(params: ApproxParams, budget: int = DEFAULT_BUDGET):
    """Numerators by full combinatorial enumeration, with tallied cost.

    Refuses (BudgetError) when the predicted M*N additions exceed ``budget``,
    M = C(N-1, p-1). Returns (numerators, OpCount).
    """
    n = params.n_coeffs
    m_count = math.comb(n - 1, params.p - 1)
    if m_count * n > budget:
        raise BudgetError(
            f"direct enumeration needs {m_count * n} additions, over the budget of {budget}"
        )
    count = OpCount()
    nums = []
    with params.field.context():
        nodes = [params.lam - k for k in range(n)]
        for j in range(n):
            rest = nodes[:j] + nodes[j + 1 :]
            total = params.field.zero
            for combo in combinations(rest, params.p - 1):
                prod = params.field.one
                for v in combo:
                    prod = prod * v
                    count.multiplications += 1
                total = total + prod
                count.additions += 1
            nums.append(total)
    return tuple(nums), count


def consistency_moments(cv: CoefficientVector, k_max: int):
    """Moments b_k = (1/k!) sum_j (lam-j)^k beta_j for k = 0..k_max.

    b_k = delta_{d,k} holds for k < N; the first departures are the error
    coefficients (up to the alpha/d factor).
    """
    params = cv.params
    n = params.n_coeffs
    if not isinstance(k_max, int) or k_max < n - 1:
        raise ValueError(f"k_max must be at least N-1 = {n - 1}")
    out = []
    with params.field.context():
        nodes = [params.lam - j for j in range(n)]
        powers = [params.field.one] * n
        for k in range(k_max + 1):
            if k > 0:
                powers = [pw * node for pw, node in zip(powers, nodes)]
            moment = params.field.zero
            for pw, b in zip(powers, cv.beta):
                moment += pw * b
            out.append(moment / math.factorial(k))
    return tuple(out)


def _convolve_truncated(a, b, length, zero):
    out = [zero] * length
    for i, av in enumerate(a):
        if i >= length:
            break
        for j, bv in enumerate(b):
            if i + j >= length:
                break
            out[i + j] += av * bv
    return out


def symbol_series(cv: CoefficientVector, count: int | None = None, digits: int = 40):
    """Power-series coefficients g_0..g_count of the scaled symbol of the
    formula: the composition (sum_k b_k z^{k-d})^{alpha/d} with b_k the
    consistency moments, evaluated by truncated formal series in decimal
    arithmetic.

    Order-p consistency shows up as g_0 = 1, g_1..g_{p-1} = 0 (to roundoff)
    and g_p equal to the leading error coefficient.
    """
    params = cv.params
    if count is None:
        count = params.p
    fb = scalars.bigdecimal(digits)
    with fb.context():
        lam = fb.of(params.lam)
        beta = [fb.of(b) for b in cv.beta]
        nodes = [lam - j for j in range(params.n_coeffs)]
        b = []
        powers = [fb.one] * len(nodes)
        for k in range(count + params.d + 1):
            if k > 0:
                powers = [pw * node for pw, node in zip(powers, nodes)]
            moment = fb.zero
            for pw, bj in zip(powers, beta):
                moment += pw * bj
            b.append(moment / math.factorial(k))
        # negative-degree moments b_0..b_{d-1} vanish by consistency; the
        # residue is roundoff from the decimal conversion, safe to drop
        s0 = b[params.d]
        t = [bk / s0 for bk in b[params.d + 1 :]]
        gamma = fb.of(params.alpha) / params.d
        series = [fb.zero] * (count + 1)
        series[0] = fb.one
        t_series = [fb.zero] + t
        t_power = [fb.one] + [fb.zero] * count
        binom = fb.one
        for order in range(1, count + 1):
            binom *= (gamma - (order - 1)) / order
            t_power = _convolve_truncated(t_power, t_series, count + 1, fb.zero)
            for i, v in enumerate(t_power):
                series[i] += binom * v
        scale = fb.power(s0, gamma)
        return [scale * g for g in series]
