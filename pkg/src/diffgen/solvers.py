"""Dirichlet two-point boundary-value solvers on uniform grids.

Three assembly routines share one dense-solve backend:

* ``assemble_central``    -- the textbook (1, -2, 1)/h^2 tridiagonal scheme;
* ``assemble_unified``    -- one full-width row per interior point, row i
  holding the maximal-order (p = N-1) second-derivative coefficients with
  shift r = i, so the scheme's order grows with the grid;
* ``assemble_fractional`` -- order-2 weights for a fractional derivative
  1 < alpha < 2, expanded from the (d=2, p=2) base generator and applied
  left-sided with zero extension below the domain.

Boundary values are folded into the right-hand side in all three.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
import scipy.linalg

from . import decfun
from .explicit_form import beta_coefficients, derive_params
from .scalars import FLOAT64, RATIONAL, ExactnessError, Field, Scalar, bigdecimal
from .series import convergence_diagnostic, miller_expand

__all__ = [
    "BvpProblem",
    "SolveReport",
    "SingularMatrixError",
    "sine_bvp",
    "power_law_fractional_bvp",
    "assemble_central",
    "assemble_unified",
    "assemble_fractional",
    "unified_coefficient_rows",
    "solve_dense",
    "solve_bvp",
    "convergence_study",
    "study_csv",
    "study_table",
]


class SingularMatrixError(ArithmeticError):
    """The assembled system has no usable pivot."""


@dataclass(frozen=True)
class BvpProblem:
    """Two-point Dirichlet problem D^alpha u = f on [a, b].

    ``field`` (when set, as the factories do) is the arithmetic the problem
    data lives in; solvers use it as their default.
    """

    a: Scalar
    b: Scalar
    ua: Scalar
    ub: Scalar
    rhs: Callable[[Scalar], Scalar]
    alpha: Scalar
    exact: Callable[[Scalar], Scalar] | None = None
    field: Field | None = None

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError("domain ends must satisfy a < b")


@dataclass(frozen=True)
class SolveReport:
    """One grid's outcome: solution values at the N+1 grid points, the
    max-norm error against the exact solution (when known), the order
    measured against the previous grid in a study, and the configured
    approximation order of the scheme."""

    n_intervals: int
    h: Scalar
    solution: tuple[Scalar, ...]
    max_error: Scalar | None
    empirical_order: float | None = None
    approx_order: int | None = None


def sine_bvp(field: Field = FLOAT64) -> BvpProblem:
    """u'' = -sin x on [-1, 1] with exact solution u = sin x."""
    if field.name == "rational":
        raise ExactnessError("sine problem has no rational data; use float64 or bigdecimal")
    sin = field.sin

    def rhs(x):
        return -sin(x)

    return BvpProblem(
        a=field.of(-1),
        b=field.of(1),
        ua=sin(field.of(-1)),
        ub=sin(field.of(1)),
        rhs=rhs,
        alpha=field.of(2),
        exact=sin,
        field=field,
    )


def power_law_fractional_bvp(alpha, field: Field = FLOAT64) -> BvpProblem:
    """D^alpha y = Gamma(4+alpha)/6 * x^3 on [0, 1] with exact y = x^(3+alpha)."""
    with field.context():
        alpha = field.of(alpha)
        if not (1 < alpha < 2):
            raise ValueError("fractional order must satisfy 1 < alpha < 2")
        gamma_factor = field.gamma(4 + alpha) / 6
        exponent = 3 + alpha

    def rhs(x):
        return gamma_factor * x**3

    def exact(x):
        return field.power(x, exponent)

    return BvpProblem(
        a=field.zero,
        b=field.one,
        ua=field.zero,
        ub=field.one,
        rhs=rhs,
        alpha=alpha,
        exact=exact,
        field=field,
    )


def _resolve_field(problem: BvpProblem, field: Field | None) -> Field:
    return field if field is not None else (problem.field or FLOAT64)


def _grid(problem: BvpProblem, n: int, field: Field):
    with field.context():
        a = field.of(problem.a)
        h = (field.of(problem.b) - a) / n
        xs = [a + i * h for i in range(n + 1)]
    return h, xs


def _empty_system(size: int, field: Field):
    if field.name == "float64":
        return np.zeros((size, size)), np.zeros(size)
    zero = field.zero
    return [[zero] * size for _ in range(size)], [zero] * size


def assemble_central(problem: BvpProblem, n: int, field: Field | None = None):
    """Tridiagonal interior system for u'' = f with the (1, -2, 1)/h^2 row."""
    field = _resolve_field(problem, field)
    if problem.alpha != 2:
        raise ValueError("central scheme handles the second derivative only")
    if not isinstance(n, int) or n < 2:
        raise ValueError("need at least 2 intervals")
    with field.context():
        h, xs = _grid(problem, n, field)
        scale = field.one / h**2
        matrix, rhs = _empty_system(n - 1, field)
        ua, ub = field.of(problem.ua), field.of(problem.ub)
        for i in range(1, n):
            row = i - 1
            matrix[row][row] = -2 * scale
            if row > 0:
                matrix[row][row - 1] = scale
            if row < n - 2:
                matrix[row][row + 1] = scale
            value = problem.rhs(xs[i])
            if i == 1:
                value = value - ua * scale
            if i == n - 1:
                value = value - ub * scale
            rhs[row] = value
    return matrix, rhs


def unified_coefficient_rows(n: int) -> list[tuple[Fraction, ...]]:
    """Exact full-grid rows: row i holds the (d=2, p=N-1, r=i) coefficients,
    one weight per grid point 0..N."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("need at least 2 intervals")
    rows = []
    for i in range(1, n):
        params = derive_params(2, 2, n - 1, i, RATIONAL)
        rows.append(beta_coefficients(params).beta)
    return rows


def assemble_unified(problem: BvpProblem, n: int, field: Field | None = None):
    """Full (N-1)x(N-1) interior system whose row i carries the
    maximal-order second-derivative formula shifted to grid point i.

    Coefficients are generated exactly (the shifts are integers) and then
    converted into ``field``; only the solve arithmetic is approximate.
    """
    field = _resolve_field(problem, field)
    if problem.alpha != 2:
        raise ValueError("unified scheme handles the second derivative only")
    exact_rows = unified_coefficient_rows(n)
    with field.context():
        h, xs = _grid(problem, n, field)
        scale = field.one / h**2
        matrix, rhs = _empty_system(n - 1, field)
        ua, ub = field.of(problem.ua), field.of(problem.ub)
        for i, exact_row in enumerate(exact_rows, start=1):
            row = [field.of(c) for c in exact_row]
            for j in range(1, n):
                matrix[i - 1][j - 1] = row[j] * scale
            rhs[i - 1] = problem.rhs(xs[i]) - (row[0] * ua + row[n] * ub) * scale
    return matrix, rhs


def assemble_fractional(
    problem: BvpProblem,
    n: int,
    p: int = 2,
    d: int = 2,
    r: int = 1,
    field: Field | None = None,
):
    """Interior system for D^alpha u = f, 1 < alpha < 2, from the expanded
    (d, p) generator at shift r.

    Row i applies weight w_k to u at grid index i + r - k, truncated at the
    left boundary (zero extension). The configured case is (p, d, r) =
    (2, 2, 1); anything else is accepted but flagged experimental. A
    divergent generator (edge ratio >= 1) warns and solves anyway.
    """
    field = _resolve_field(problem, field)
    with field.context():
        alpha = field.of(problem.alpha)
        if not (1 < alpha < 2):
            raise ValueError("fractional order must satisfy 1 < alpha < 2")
    if not isinstance(n, int) or n < 2:
        raise ValueError("need at least 2 intervals")
    if not isinstance(r, int) or r < 0:
        raise ValueError("shift r must be a non-negative integer (grid alignment)")
    if (p, d, r) != (2, 2, 1):
        warnings.warn(
            f"configuration (p={p}, d={d}, r={r}) is experimental; "
            "the validated setup is (2, 2, 1)",
            RuntimeWarning,
            stacklevel=2,
        )
    params = derive_params(problem.alpha, d, p, r, field)
    cv = beta_coefficients(params)
    diag = convergence_diagnostic(cv)
    if not diag.converges_on_unit_disk:
        warnings.warn(
            f"generator expansion diverges on the unit disk "
            f"(edge ratio {diag.edge_ratio}); solving anyway",
            RuntimeWarning,
            stacklevel=2,
        )
    with field.context():
        weights = miller_expand(cv.beta, params.gamma, n + r, field).weights
        h, xs = _grid(problem, n, field)
        scale = field.one / field.power(h, alpha)
        matrix, rhs = _empty_system(n - 1, field)
        ua, ub = field.of(problem.ua), field.of(problem.ub)
        for i in range(1, n):
            value = problem.rhs(xs[i])
            for k in range(0, i + r + 1):
                j = i + r - k
                if j > n:
                    continue
                coeff = weights[k] * scale
                if j == 0:
                    value = value - coeff * ua
                elif j == n:
                    value = value - coeff * ub
                else:
                    matrix[i - 1][j - 1] = coeff
            rhs[i - 1] = value
    return matrix, rhs


def _solve_exact(matrix, rhs):
    m = [list(row) for row in matrix]
    v = list(rhs)
    size = len(v)
    for col in range(size):
        pivot_row = max(range(col, size), key=lambda rr: abs(m[rr][col]))
        if m[pivot_row][col] == 0:
            raise SingularMatrixError(f"zero pivot at column {col}")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            v[col], v[pivot_row] = v[pivot_row], v[col]
        pivot = m[col][col]
        for row in range(col + 1, size):
            factor = m[row][col] / pivot
            if factor == 0:
                continue
            for j in range(col, size):
                m[row][j] = m[row][j] - factor * m[col][j]
            v[row] = v[row] - factor * v[col]
    out = [None] * size
    for row in range(size - 1, -1, -1):
        acc = v[row]
        for j in range(row + 1, size):
            acc = acc - m[row][j] * out[j]
        out[row] = acc / m[row][row]
    return out


def solve_dense(matrix, rhs, field: Field | None = None):
    """Solve a dense square system.

    numpy arrays go through LAPACK LU with partial pivoting and a relative
    pivot floor of 1e-14; exact and decimal systems use elimination with the
    same pivoting and a zero-pivot check. Decimal systems run under
    ``field.context()`` when a field is given, else the active context.
    """
    if isinstance(matrix, np.ndarray):
        scale = float(np.abs(matrix).max()) or 1.0
        try:
            lu, piv = scipy.linalg.lu_factor(matrix)
        except (np.linalg.LinAlgError, ValueError) as exc:
            raise SingularMatrixError(str(exc)) from exc
        if float(np.abs(np.diag(lu)).min()) <= 1e-14 * scale:
            raise SingularMatrixError("pivot below 1e-14 of the matrix scale")
        return scipy.linalg.lu_solve((lu, piv), np.asarray(rhs, dtype=float))
    if field is not None:
        with field.context():
            return _solve_exact(matrix, rhs)
    return _solve_exact(matrix, rhs)


_ASSEMBLERS = {
    "central": assemble_central,
    "unified": assemble_unified,
    "fractional": assemble_fractional,
}


def _configured_order(scheme: str, n: int, p: int) -> int:
    if scheme == "central":
        return 2
    if scheme == "unified":
        return n - 1
    return p


def solve_bvp(
    problem: BvpProblem,
    scheme: str,
    n: int,
    field: Field | None = None,
    **scheme_options,
) -> SolveReport:
    """Assemble and solve one grid; scheme is central, unified, or fractional."""
    field = _resolve_field(problem, field)
    try:
        assembler = _ASSEMBLERS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {sorted(_ASSEMBLERS)}") from None
    matrix, rhs = assembler(problem, n, field=field, **scheme_options)
    interior = solve_dense(matrix, rhs, field)
    with field.context():
        h, xs = _grid(problem, n, field)
        solution = [field.of(problem.ua)]
        solution.extend(field.of(v) for v in interior)
        solution.append(field.of(problem.ub))
        max_error = None
        if problem.exact is not None:
            max_error = field.zero
            for x, u in zip(xs, solution):
                err = abs(u - problem.exact(x))
                if err > max_error:
                    max_error = err
    return SolveReport(
        n_intervals=n,
        h=h,
        solution=tuple(solution),
        max_error=max_error,
        approx_order=_configured_order(scheme, n, scheme_options.get("p", 2)),
    )


def _order_between(prev: SolveReport, cur: SolveReport) -> float | None:
    if prev.max_error is None or cur.max_error is None:
        return None
    if prev.max_error == 0 or cur.max_error == 0:
        return None
    if isinstance(cur.max_error, Decimal):
        ratio = prev.max_error / cur.max_error
        step = Decimal(cur.n_intervals) / Decimal(prev.n_intervals)
        return float(ratio.ln() / step.ln())
    ratio = float(prev.max_error) / float(cur.max_error)
    step = cur.n_intervals / prev.n_intervals
    return math.log(ratio) / math.log(step)


def convergence_study(
    problem: BvpProblem,
    scheme: str,
    n_values: Sequence[int],
    field: Field | None = None,
    **scheme_options,
) -> list[SolveReport]:
    """Solve on each grid in n_values and attach empirical orders between
    consecutive grids. Needs problem.exact for the error column."""
    field = _resolve_field(problem, field)
    if problem.exact is None:
        raise ValueError("a convergence study needs the exact solution")
    reports: list[SolveReport] = []
    for n in n_values:
        report = solve_bvp(problem, scheme, n, field, **scheme_options)
        if reports:
            report = replace(report, empirical_order=_order_between(reports[-1], report))
        reports.append(report)
    return reports


def _fmt_error(value) -> str:
    if value is None:
        return "--"
    if isinstance(value, Decimal):
        return f"{value:.5e}"
    return f"{float(value):.5e}"


def _fmt_order(value) -> str:
    return "--" if value is None else f"{value:.4f}"


def study_csv(reports: Sequence[SolveReport]) -> str:
    """CSV lines N,h,max_error,order."""
    lines = ["N,h,max_error,order"]
    for rep in reports:
        lines.append(
            f"{rep.n_intervals},{float(rep.h):.8g},"
            f"{_fmt_error(rep.max_error)},{_fmt_order(rep.empirical_order)}"
        )
    return "\n".join(lines)


def study_table(reports: Sequence[SolveReport], label: str = "error") -> str:
    """Aligned text table: N, h, error, measured order, configured order."""
    header = f"{'N':>6} {'h':>12} {label:>14} {'order':>9} {'p':>5}"
    lines = [header]
    for rep in reports:
        conf = "--" if rep.approx_order is None else str(rep.approx_order)
        lines.append(
            f"{rep.n_intervals:>6} {float(rep.h):>12.6g} "
            f"{_fmt_error(rep.max_error):>14} {_fmt_order(rep.empirical_order):>9} {conf:>5}"
        )
    return "\n".join(lines)
