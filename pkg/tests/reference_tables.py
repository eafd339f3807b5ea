"""Frozen reference data for the coefficient-table regression tests.

Base-polynomial coefficients for derivative approximations, transcribed once
and kept verbatim so the closed-form engine is tested against fixed values
rather than against itself. Polynomial entries are tuples of Fractions in
ascending powers of the shift variable lam (constant term first); rows are
indexed by the coefficient position j.

ORDER_P_AT_ZERO holds the classical order-p backward-difference polynomials
(shift 0, first derivative). The widely reprinted p = 2 entry with a z^2
coefficient of 3/2 is a known misprint; the moment conditions give 1/2, which
is the value frozen here.
"""

from fractions import Fraction as F

# ---------------------------------------------------------------------------
# Order-p base polynomials at shift 0 (d = 1): coefficients of z^0 .. z^p.

ORDER_P_AT_ZERO = {
    1: (F(1), F(-1)),
    2: (F(3, 2), F(-2), F(1, 2)),
    3: (F(11, 6), F(-3), F(3, 2), F(-1, 3)),
    4: (F(25, 12), F(-4), F(3), F(-4, 3), F(1, 4)),
    5: (F(137, 60), F(-5), F(5), F(-10, 3), F(5, 4), F(-1, 5)),
    6: (F(147, 60), F(-6), F(15, 2), F(-20, 3), F(15, 4), F(-6, 5), F(1, 6)),
}

# ---------------------------------------------------------------------------
# beta_j as polynomials in lam, d = 1 (the shifted first-derivative family).

BETA_POLY_D1 = {
    1: (
        (F(1),),
        (F(-1),),
    ),
    2: (
        (F(3, 2), F(-1)),
        (F(-2), F(2)),
        (F(1, 2), F(-1)),
    ),
    3: (
        (F(11, 6), F(-2), F(1, 2)),
        (F(-3), F(5), F(-3, 2)),
        (F(3, 2), F(-4), F(3, 2)),
        (F(-1, 3), F(1), F(-1, 2)),
    ),
    4: (
        (F(25, 12), F(-35, 12), F(5, 4), F(-1, 6)),
        (F(-4), F(26, 3), F(-9, 2), F(2, 3)),
        (F(3), F(-19, 2), F(6), F(-1)),
        (F(-4, 3), F(14, 3), F(-7, 2), F(2, 3)),
        (F(1, 4), F(-11, 12), F(3, 4), F(-1, 6)),
    ),
    5: (
        (F(137, 60), F(-15, 4), F(17, 8), F(-1, 2), F(1, 24)),
        (F(-5), F(77, 6), F(-71, 8), F(7, 3), F(-5, 24)),
        (F(5), F(-107, 6), F(59, 4), F(-13, 3), F(5, 12)),
        (F(-10, 3), F(13), F(-49, 4), F(4), F(-5, 12)),
        (F(5, 4), F(-61, 12), F(41, 8), F(-11, 6), F(5, 24)),
        (F(-1, 5), F(5, 6), F(-7, 8), F(1, 3), F(-1, 24)),
    ),
}

# ---------------------------------------------------------------------------
# beta_j as polynomials in lam, d = 2.

BETA_POLY_D2 = {
    1: (
        (F(1),),
        (F(-2),),
        (F(1),),
    ),
    2: (
        (F(2), F(-1)),
        (F(-5), F(3)),
        (F(4), F(-3)),
        (F(-1), F(1)),
    ),
    3: (
        (F(35, 12), F(-5, 2), F(1, 2)),
        (F(-26, 3), F(9), F(-2)),
        (F(19, 2), F(-12), F(3)),
        (F(-14, 3), F(7), F(-2)),
        (F(11, 12), F(-3, 2), F(1, 2)),
    ),
    4: (
        (F(15, 4), F(-17, 4), F(3, 2), F(-1, 6)),
        (F(-77, 6), F(71, 4), F(-7), F(5, 6)),
        (F(107, 6), F(-59, 2), F(13), F(-5, 3)),
        (F(-13), F(49, 2), F(-12), F(5, 3)),
        (F(61, 12), F(-41, 4), F(11, 2), F(-5, 6)),
        (F(-5, 6), F(7, 4), F(-1), F(1, 6)),
    ),
    5: (
        (F(203, 45), F(-49, 8), F(35, 12), F(-7, 12), F(1, 24)),
        (F(-87, 5), F(29), F(-31, 2), F(10, 3), F(-1, 4)),
        (F(117, 4), F(-461, 8), F(137, 4), F(-95, 12), F(5, 8)),
        (F(-254, 9), F(62), F(-121, 3), F(10), F(-5, 6)),
        (F(33, 2), F(-307, 8), F(107, 4), F(-85, 12), F(5, 8)),
        (F(-27, 5), F(13), F(-19, 2), F(8, 3), F(-1, 4)),
        (F(137, 180), F(-15, 8), F(17, 12), F(-5, 12), F(1, 24)),
    ),
}

# ---------------------------------------------------------------------------
# beta_j as polynomials in lam, d = 3.

BETA_POLY_D3 = {
    1: (
        (F(1),),
        (F(-3),),
        (F(3),),
        (F(-1),),
    ),
    2: (
        (F(5, 2), F(-1)),
        (F(-9), F(4)),
        (F(12), F(-6)),
        (F(-7), F(4)),
        (F(3, 2), F(-1)),
    ),
    3: (
        (F(17, 4), F(-3), F(1, 2)),
        (F(-71, 4), F(14), F(-5, 2)),
        (F(59, 2), F(-26), F(5)),
        (F(-49, 2), F(24), F(-5)),
        (F(41, 4), F(-11), F(5, 2)),
        (F(-7, 4), F(2), F(-1, 2)),
    ),
    4: (
        (F(49, 8), F(-35, 6), F(7, 4), F(-1, 6)),
        (F(-29), F(31), F(-10), F(1)),
        (F(461, 8), F(-137, 2), F(95, 4), F(-5, 2)),
        (F(-62), F(242, 3), F(-30), F(10, 3)),
        (F(307, 8), F(-107, 2), F(85, 4), F(-5, 2)),
        (F(-13), F(19), F(-8), F(1)),
        (F(15, 8), F(-17, 6), F(5, 4), F(-1, 6)),
    ),
    5: (
        (F(967, 120), F(-28, 3), F(23, 6), F(-2, 3), F(1, 24)),
        (F(-638, 15), F(111, 2), F(-295, 12), F(9, 2), F(-7, 24)),
        (F(3929, 40), F(-142), F(135, 2), F(-13), F(7, 8)),
        (F(-389, 3), F(1219, 6), F(-1235, 12), F(125, 6), F(-35, 24)),
        (F(2545, 24), F(-176), F(565, 6), F(-20), F(35, 24)),
        (F(-268, 5), F(185, 2), F(-207, 4), F(23, 2), F(-7, 8)),
        (F(1849, 120), F(-82, 3), F(95, 6), F(-11, 3), F(7, 24)),
        (F(-29, 15), F(7, 2), F(-25, 12), F(1, 2), F(-1, 24)),
    ),
}

BETA_POLY = {1: BETA_POLY_D1, 2: BETA_POLY_D2, 3: BETA_POLY_D3}

# ---------------------------------------------------------------------------
# Named compact stencils: (name, d, p, r, weights, leading error).

COMPACT_ROWS = (
    ("left", 1, 3, F(0),
     (F(11, 6), F(-3), F(3, 2), F(-1, 3)),
     F(-1, 4)),
    ("central", 3, 4, F(3),
     (F(-1, 8), F(1), F(-13, 8), F(0), F(13, 8), F(-1), F(1, 8)),
     F(-7, 120)),
    ("shifted", 2, 4, F(1),
     (F(5, 6), F(-5, 4), F(-1, 3), F(7, 6), F(-1, 2), F(1, 12)),
     F(13, 180)),
    ("right", 3, 4, F(6),
     (F(-15, 8), F(13), F(-307, 8), F(62), F(-461, 8), F(29), F(-49, 8)),
     F(-29, 15)),
    ("staggered", 2, 4, F(3, 2),
     (F(3, 16), F(41, 48), F(-67, 24), F(19, 8), F(-35, 48), F(5, 48)),
     F(341, 5760)),
)

# ---------------------------------------------------------------------------
# Squared third-order base for the second derivative (shift 1): the
# non-compact worked example. Base, its square, and the leading error.

NONCOMPACT_BASE = (F(23, 24), F(-7, 8), F(-1, 8), F(1, 24))
NONCOMPACT_SQUARED = (
    F(529, 576), F(-161, 96), F(101, 192), F(43, 144),
    F(-11, 192), F(-1, 96), F(1, 576),
)
NONCOMPACT_ERROR = F(1, 12)

# Shift samples used for validating the polynomial rows.
LAMBDA_SAMPLES = (F(0), F(1, 2), F(1), F(3, 2), F(2))


def eval_poly(coeffs, lam):
    """Evaluate a constant-first coefficient tuple at lam."""
    acc = F(0)
    for c in reversed(coeffs):
        acc = acc * lam + c
    return acc


def beta_row(d, p, lam):
    """The frozen beta vector for (d, p) at a sampled lam."""
    return tuple(eval_poly(poly, lam) for poly in BETA_POLY[d][p])
