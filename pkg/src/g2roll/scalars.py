"""Exact scalars: rationals and Gaussian rationals.

``Rat`` is ``gmpy2.mpq`` when available (an order of magnitude faster than
``fractions.Fraction``, with identical semantics and hashing), otherwise
``Fraction``.  Every exact module works over either field; arithmetic between
a rational and a ``GaussRational`` promotes to ``GaussRational``.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction


def as_rational(value):
    """Coerce an int, rational or ``"p/q"`` string to ``Rat``.

    Floats are refused: silently turning ``0.1`` into a binary fraction
    would defeat the point of exact arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Rat):
        return value
    if isinstance(value, numbers.Rational):
        return Rat(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        try:
            f = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
        return Rat(f.numerator, f.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


as_fraction = as_rational


@dataclass(frozen=True)
class GaussRational:
    """A complex number ``re + im*i`` with rational parts."""

    re: object
    im: object = 0

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @staticmethod
    def lift(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return GaussRational(as_rational(value), 0)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        try:
            o = GaussRational.lift(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"


I = GaussRational(0, 1)


def format_rational(value) -> str:
    """Canonical ``"p/q"`` text, ``"p"`` when the denominator is 1."""
    f = as_rational(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def encode_scalar(value):
    """JSON form: ``"p/q"`` for rationals, ``{"re", "im"}`` for complex."""
    if isinstance(value, GaussRational):
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    return format_rational(value)


def decode_scalar(obj):
    if isinstance(obj, dict):
        if set(obj) != {"re", "im"}:
            raise ValueError(f"complex scalar needs exactly 're' and 'im': {obj!r}")
        return GaussRational(as_rational(obj["re"]), as_rational(obj["im"]))
    if isinstance(obj, float):
        raise ValueError(f"float {obj!r} is not an exact scalar; use a 'p/q' string")
    return as_rational(obj)


def is_zero(value) -> bool:
    return value == 0
