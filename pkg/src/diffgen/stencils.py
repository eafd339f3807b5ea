"""Classical finite-difference stencils from generator coefficients.

A stencil packages the weights together with their grid offsets: weight k
multiplies the sample at x + (r - k)h, reading leftward from the largest
offset, and the whole sum is divided by h**alpha on application. Compact
stencils use the minimal p+d points (alpha = d); non-compact ones raise a
lower-order base to an integer power gamma = alpha/d >= 2 and use
gamma*(p+d-1)+1 points.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal
from fractions import Fraction

from .explicit_form import (
    ApproxParams,
    beta_coefficients,
    derive_params,
    error_coefficients,
)
from .scalars import RATIONAL, Field, Scalar
from .series import poly_power_int

__all__ = [
    "Stencil",
    "KINDS",
    "shift_for_kind",
    "compact_stencil",
    "noncompact_stencil",
    "apply_stencil",
    "render_stencil",
]

KINDS = ("left", "right", "central", "shifted", "staggered")


@dataclass(frozen=True)
class Stencil:
    """A difference formula for a derivative of integer order.

    ``weights[k]`` multiplies the sample at ``x + offsets[k]*h`` with
    ``offsets[k] = shift - k``; the weighted sum is scaled by
    1/h**derivative_order. ``eval_fraction`` is the fractional part of the
    shift (nonzero means the evaluation point sits between grid points) and
    ``leading_error`` the coefficient of h**accuracy_order times the
    derivative of order ``error_derivative_order`` in the truncation error.
    """

    derivative_order: int
    accuracy_order: int
    shift: Scalar
    offsets: tuple[Scalar, ...]
    weights: tuple[Scalar, ...]
    eval_fraction: Scalar
    leading_error: Scalar
    error_derivative_order: int
    base_params: ApproxParams


def _fractional_part(r, field: Field) -> Scalar:
    with field.context():
        if isinstance(r, Fraction):
            return r - (r.numerator // r.denominator)
        if isinstance(r, Decimal):
            return r - r.to_integral_value(rounding=ROUND_FLOOR)
        return field.of(r - math.floor(r))


def shift_for_kind(kind: str, d: int, p: int, r=None) -> Scalar:
    """Shift value for a named stencil kind.

    left -> 0, right -> p+d-1, central -> (p+d-1)/2 (a half-integer when
    p+d-1 is odd: the staggered-central formula), shifted -> the given
    integer r, staggered -> the given non-integer r.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown stencil kind {kind!r}; expected one of {KINDS}")
    span = p + d - 1
    if kind == "left":
        return Fraction(0)
    if kind == "right":
        return Fraction(span)
    if kind == "central":
        return Fraction(span, 2)
    if r is None:
        raise ValueError(f"kind {kind!r} needs an explicit shift r")
    r = Fraction(r)
    if kind == "shifted":
        if r.denominator != 1:
            raise ValueError("shifted stencils need an integer shift; use 'staggered'")
        if not 0 <= r <= span:
            warnings.warn(
                f"shift {r} lies outside the stencil support [0, {span}]; "
                "the formula is extrapolative",
                stacklevel=2,
            )
        return r
    if r.denominator == 1:
        raise ValueError("staggered stencils need a non-integer shift")
    return r


def _build(params: ApproxParams, weights, leading_error, field: Field) -> Stencil:
    with field.context():
        offsets = tuple(params.r - k for k in range(len(weights)))
    return Stencil(
        derivative_order=int(params.alpha),
        accuracy_order=params.p,
        shift=params.r,
        offsets=offsets,
        weights=tuple(weights),
        eval_fraction=_fractional_part(params.r, field),
        leading_error=leading_error,
        error_derivative_order=int(params.alpha) + params.p,
        base_params=params,
    )


def compact_stencil(d: int, p: int, r, field: Field = RATIONAL) -> Stencil:
    """Minimal-width formula for the d-th derivative, order p, shift r.

    Uses p+d points; the weights are the base coefficients themselves
    (exponent gamma = 1, no expansion).
    """
    params = derive_params(d, d, p, r, field)
    cv = beta_coefficients(params)
    err = error_coefficients(cv)
    return _build(params, cv.beta, err.leading, field)


def noncompact_stencil(alpha: int, d: int, p: int, r, field: Field = RATIONAL) -> Stencil:
    """Formula for the alpha-th derivative as an integer power of a
    lower-order base: alpha = gamma*d with gamma >= 2.

    The base coefficients use lam = r*d/alpha, then the weights are the
    exact gamma-fold convolution of the base, gamma*(p+d-1)+1 of them.
    """
    if not isinstance(alpha, int) or not isinstance(d, int) or d < 1:
        raise ValueError("alpha and d must be integers with d >= 1")
    gamma, remainder = divmod(alpha, d)
    if remainder != 0 or gamma < 2:
        raise ValueError(
            f"non-compact form needs alpha = gamma*d with integer gamma >= 2; "
            f"got alpha={alpha}, d={d}"
        )
    params = derive_params(alpha, d, p, r, field)
    cv = beta_coefficients(params)
    err = error_coefficients(cv)
    with field.context():
        weights = poly_power_int(cv.beta, gamma)
    return _build(params, weights, err.leading, field)


def apply_stencil(st: Stencil, samples, x, h) -> Scalar:
    """Evaluate the formula at x with spacing h.

    ``samples`` is either a callable f (sampled at x + offset*h) or a
    sequence of precomputed values aligned with ``st.offsets``.
    """
    field = st.base_params.field
    with field.context():
        h = field.of(h)
        if not h > 0:
            raise ValueError("spacing h must be positive")
        if callable(samples):
            x = field.of(x)
            values = [samples(x + off * h) for off in st.offsets]
        else:
            values = list(samples)
            if len(values) != len(st.weights):
                raise ValueError(
                    f"need {len(st.weights)} samples, got {len(values)}"
                )
        acc = field.zero
        for w, v in zip(st.weights, values):
            acc += w * v
        return acc / h**st.derivative_order


def _text(value, field: Field) -> str:
    return field.format(value)


def _json_value(value, field: Field):
    if field.name == "float64":
        return float(value)
    return _text(value, field)


def render_stencil(st: Stencil, format: str = "human") -> str:
    """Render as text: 'human' (weights left to right, the on-grid
    evaluation weight in parentheses), 'json', or 'csv'."""
    field = st.base_params.field
    if format == "human":
        parts = []
        for off, w in zip(st.offsets, st.weights):
            text = _text(w, field)
            parts.append(f"({text})" if off == 0 else text)
        line = ", ".join(parts)
        if st.eval_fraction != 0:
            line += f" | eval offset {_text(st.eval_fraction, field)}"
        return line + f" | error {_text(st.leading_error, field)}"
    if format == "json":
        record = {
            "alpha": st.derivative_order,
            "d": st.base_params.d,
            "p": st.accuracy_order,
            "r": _json_value(st.shift, field),
            "lambda": _json_value(st.base_params.lam, field),
            "offsets": [_json_value(v, field) for v in st.offsets],
            "weights": [_json_value(v, field) for v in st.weights],
            "eval_fraction": _json_value(st.eval_fraction, field),
            "leading_error": _json_value(st.leading_error, field),
            "error_derivative_order": st.error_derivative_order,
        }
        return json.dumps(record)
    if format == "csv":
        lines = ["index,offset,weight"]
        for k, (off, w) in enumerate(zip(st.offsets, st.weights)):
            lines.append(f"{k},{_text(off, field)},{_text(w, field)}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}; expected human, json, or csv")
