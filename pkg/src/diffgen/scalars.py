"""Interchangeable scalar arithmetic for coefficient generation and solving.

Three realizations of the same numeric interface:

* ``rational``   -- exact ``fractions.Fraction`` arithmetic;
* ``float64``    -- IEEE double precision (native floats);
* ``bigdecimal`` -- ``decimal.Decimal`` at a configured number of digits.

Coefficient generation defaults to the rational field so every downstream
identity can be checked with ``==``. The float fields exist for the solver
layer and for timing comparisons, not for deriving coefficients.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from dataclasses import dataclass
from decimal import Context, Decimal, getcontext, localcontext
from fractions import Fraction
from typing import Union

from . import decfun

Scalar = Union[Fraction, float, Decimal]

__all__ = [
    "Scalar",
    "Field",
    "RATIONAL",
    "FLOAT64",
    "bigdecimal",
    "field_from_name",
    "field_of",
    "parse_scalar",
    "approx_equal",
    "ExactnessError",
]

MIN_DIGITS = 15


class ExactnessError(ArithmeticError):
    """An operation has no exact representation in the rational field."""


def _integer_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0 and whether it is exact."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, True
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n


def _exact_fraction_power(base: Fraction, exponent: Fraction) -> Fraction:
    if exponent.denominator == 1:
        if base == 0 and exponent < 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return base ** int(exponent)
    s, t = exponent.numerator, exponent.denominator
    if base == 0:
        if s < 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return Fraction(0)
    negative = base < 0
    if negative and t % 2 == 0:
        raise ExactnessError(f"even root of negative rational {base}")
    rn, ok_n = _integer_nth_root(abs(base.numerator), t)
    rd, ok_d = _integer_nth_root(base.denominator, t)
    if not (ok_n and ok_d):
        raise ExactnessError(f"{base} has no exact rational {t}th root")
    root = Fraction(-rn if negative else rn, rd)
    return root**s


def _is_integral(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, float):
        return x.is_integer()
    if isinstance(x, Decimal):
        return x == x.to_integral_value()
    raise TypeError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class Field:
    """One scalar realization.

    Use the module constants ``RATIONAL`` and ``FLOAT64``, or build a decimal
    field with ``bigdecimal(digits)``. All arithmetic helpers honour the
    field's precision: decimal work runs inside ``context()``.
    """

    name: str
    digits: int | None = None

    def context(self):
        """Context manager activating this field's decimal precision (no-op otherwise)."""
        if self.name == "bigdecimal":
            return localcontext(Context(prec=self.digits))
        return nullcontext()

    def of(self, value) -> Scalar:
        """Convert an int, Fraction, float, Decimal or literal string into this field."""
        if self.name == "rational":
            return Fraction(value)
        if self.name == "float64":
            return float(Fraction(value)) if isinstance(value, str) else float(value)
        with self.context():
            if isinstance(value, Fraction):
                return Decimal(value.numerator) / Decimal(value.denominator)
            if isinstance(value, str):
                return +Decimal(value)
            return +Decimal(value)

    @property
    def zero(self) -> Scalar:
        return self.of(0)

    @property
    def one(self) -> Scalar:
        return self.of(1)

    def format(self, x) -> str:
        """Textual form: num/den for rationals, shortest round-trip otherwise."""
        if self.name == "rational":
            return str(Fraction(x))
        if self.name == "float64":
            return repr(float(x))
        return str(x)

    def to_float(self, x) -> float:
        return float(x)

    def power(self, base, exponent) -> Scalar:
        """base ** exponent within the field.

        Rational mode is exact or raises :class:`ExactnessError`; float modes
        require a positive base for fractional exponents.
        """
        if self.name == "rational":
            if isinstance(exponent, float):
                raise TypeError("float exponent in rational field")
            return _exact_fraction_power(Fraction(base), Fraction(exponent))
        if self.name == "float64":
            b, e = float(base), float(exponent)
            if b < 0 and not e.is_integer():
                raise ValueError("negative base with fractional exponent")
            if b == 0 and e < 0:
                raise ZeroDivisionError("0 raised to a negative power")
            return b**e
        with self.context():
            b = self.of(base)
            e = self.of(exponent)
            if e == e.to_integral_value():
                if b == 0 and e < 0:
                    raise ZeroDivisionError("0 raised to a negative power")
                return +(b ** int(e))
            if b == 0:
                if e < 0:
                    raise ZeroDivisionError("0 raised to a negative power")
                return +Decimal(0)
            if b < 0:
                raise ValueError("negative base with fractional exponent")
            return +(b**e)

    def sin(self, x) -> Scalar:
        if self.name == "rational":
            raise ExactnessError("sin has no exact rational value")
        if self.name == "float64":
            return math.sin(float(x))
        with self.context():
            return decfun.sin(self.of(x))

    def gamma(self, x) -> Scalar:
        """The gamma function, for positive arguments in the float fields."""
        if self.name == "rational":
            x = Fraction(x)
            if x.denominator == 1 and x > 0:
                return Fraction(math.factorial(int(x) - 1))
            raise ExactnessError("gamma is irrational off the positive integers")
        if self.name == "float64":
            return math.gamma(float(x))
        with self.context():
            return decfun.gamma(self.of(x))


RATIONAL = Field("rational")
FLOAT64 = Field("float64")


def bigdecimal(digits: int = 50) -> Field:
    """Decimal field at ``digits`` significant digits (at least 15)."""
    if not isinstance(digits, int) or digits < MIN_DIGITS:
        raise ValueError(f"bigdecimal needs an integer precision >= {MIN_DIGITS}")
    return Field("bigdecimal", digits)


_NAMES = {
    "rational": "rational",
    "f64": "float64",
    "float64": "float64",
    "big": "bigdecimal",
    "bigdecimal": "bigdecimal",
}


def field_from_name(name: str, digits: int = 50) -> Field:
    try:
        canonical = _NAMES[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}") from None
    if canonical == "rational":
        return RATIONAL
    if canonical == "float64":
        return FLOAT64
    return bigdecimal(digits)


def field_of(x) -> Field:
    """Infer the field a scalar belongs to (Decimal uses the active precision)."""
    if isinstance(x, (int, Fraction)):
        return RATIONAL
    if isinstance(x, float):
        return FLOAT64
    if isinstance(x, Decimal):
        return bigdecimal(max(MIN_DIGITS, getcontext().prec))
    raise TypeError(f"not a scalar: {x!r}")


def parse_scalar(text: str, field: Field = RATIONAL) -> Scalar:
    """Parse an integer, num/den fraction, or decimal literal into ``field``.

    Rational parsing of decimal literals is exact; float fields round to
    nearest. Raises ValueError on malformed text and ZeroDivisionError on a
    zero denominator.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise ValueError("empty scalar literal")
    if "/" in s:
        num_text, _, den_text = s.partition("/")
        try:
            num, den = int(num_text), int(den_text)
        except ValueError:
            raise ValueError(f"malformed fraction literal {text!r}") from None
        return field.of(Fraction(num, den))
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed scalar literal {text!r}") from None
    return field.of(value)


def _realization(x) -> str:
    if isinstance(x, int):
        return "any"
    if isinstance(x, Fraction):
        return "rational"
    if isinstance(x, float):
        return "float64"
    if isinstance(x, Decimal):
        return "bigdecimal"
    raise TypeError(f"not a scalar: {x!r}")


def _as_decimal(v) -> Decimal:
    if isinstance(v, Decimal):
        return v
    if isinstance(v, Fraction):
        return Decimal(v.numerator) / Decimal(v.denominator)
    return Decimal(repr(float(v))) if isinstance(v, float) else Decimal(v)


def approx_equal(a, b, rel_tol=None) -> bool:
    """Equality test respecting the realization of the operands.

    Exact operands compare with ``==`` (rel_tol ignored); float64 and
    bigdecimal operands compare as |a-b| <= rel_tol * max(1, |b|). Mixing
    realizations raises TypeError.
    """
    ra, rb = _realization(a), _realization(b)
    kinds = {ra, rb} - {"any"}
    if len(kinds) > 1:
        raise TypeError(f"mixed scalar realizations: {ra} vs {rb}")
    kind = kinds.pop() if kinds else "rational"
    if kind == "rational":
        return a == b
    if rel_tol is None or not rel_tol > 0:
        raise ValueError("float comparisons need rel_tol > 0")
    if kind == "float64":
        a, b = float(a), float(b)
        return abs(a - b) <= float(rel_tol) * max(1.0, abs(b))
    a, b, tol = _as_decimal(a), _as_decimal(b), _as_decimal(rel_tol)
    return abs(a - b) <= tol * max(Decimal(1), abs(b))
