"""Difference-formula weights for classical and fractional derivatives.

One closed form covers the whole family: pick the derivative order alpha,
a base order d, an accuracy order p and a shift r, and the package produces
the generator-polynomial coefficients (exactly, in rational arithmetic),
their error terms, expanded weight series, classical stencils of any order
and shift, and dense boundary-value solvers built on top.
"""

from .explicit_form import (
    ApproxParams,
    CoefficientVector,
    ErrorCoefficients,
    beta_coefficients,
    denominators,
    derive_params,
    error_coefficients,
    generator_polynomial,
    numerators,
)
from .oracle import (
    BudgetError,
    OpCount,
    consistency_moments,
    numerators_direct,
    symbol_series,
    vandermonde_solve,
)
from .scalars import (
    FLOAT64,
    RATIONAL,
    ExactnessError,
    Field,
    Scalar,
    approx_equal,
    bigdecimal,
    field_from_name,
    parse_scalar,
)
from .series import (
    ConvergenceDiagnostic,
    WeightSeries,
    convergence_diagnostic,
    grunwald_weights,
    miller_expand,
    poly_power_int,
)
from .solvers import (
    BvpProblem,
    SingularMatrixError,
    SolveReport,
    assemble_central,
    assemble_fractional,
    assemble_unified,
    convergence_study,
    power_law_fractional_bvp,
    sine_bvp,
    solve_bvp,
    solve_dense,
    study_csv,
    study_table,
    unified_coefficient_rows,
)
from .stencils import (
    Stencil,
    apply_stencil,
    compact_stencil,
    noncompact_stencil,
    render_stencil,
    shift_for_kind,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxParams",
    "BudgetError",
    "BvpProblem",
    "CoefficientVector",
    "ConvergenceDiagnostic",
    "ErrorCoefficients",
    "ExactnessError",
    "FLOAT64",
    "Field",
    "OpCount",
    "RATIONAL",
    "Scalar",
    "SingularMatrixError",
    "SolveReport",
    "Stencil",
    "WeightSeries",
    "approx_equal",
    "apply_stencil",
    "assemble_central",
    "assemble_fractional",
    "assemble_unified",
    "beta_coefficients",
    "bigdecimal",
    "compact_stencil",
    "consistency_moments",
    "convergence_diagnostic",
    "convergence_study",
    "denominators",
    "derive_params",
    "error_coefficients",
    "field_from_name",
    "generator_polynomial",
    "grunwald_weights",
    "miller_expand",
    "noncompact_stencil",
    "numerators",
    "numerators_direct",
    "parse_scalar",
    "poly_power_int",
    "power_law_fractional_bvp",
    "render_stencil",
    "shift_for_kind",
    "sine_bvp",
    "solve_bvp",
    "solve_dense",
    "study_csv",
    "study_table",
    "symbol_series",
    "unified_coefficient_rows",
    "vandermonde_solve",
    "__version__",
]
