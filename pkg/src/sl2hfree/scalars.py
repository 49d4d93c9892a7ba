"""Exact scalar arithmetic: rationals and Gaussian rationals.

The whole engine is generic over an exact coefficient field.  Plain
``fractions.Fraction`` values (and ints) are the rational scalars;
``GaussianRational`` adjoins the imaginary unit.  A Gaussian value whose
imaginary part cancels to zero is never kept: construction goes through
:func:`gaussian`, which hands back a ``Fraction`` instead, so ``==`` and
``hash`` never see two representations of the same number.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FIELDS = (RATIONAL, GAUSSIAN)


class GaussianRational:
    """re + im*i with exact rational parts and im != 0."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        re = Fraction(re)
        im = Fraction(im)
        if im == 0:
            raise ValueError("GaussianRational requires a nonzero imaginary part; use gaussian()")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return gaussian(self.re + other[0], self.im + other[1])

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return gaussian(self.re - other[0], self.im - other[1])

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return gaussian(other[0] - self.re, other[1] - self.im)

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.re, self.im
        c, d = other
        return gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        a, b = self.re, self.im
        return gaussian((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.re * self.re + self.im * self.im
        a, b = other
        c, d = self.re, self.im
        return gaussian((a * c + b * d) / n, (b * c - a * d) / n)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out: Scalar = Fraction(1)
        for _ in range(n):
            out = out * self
        return out

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        # any purely real value differs: our im is never zero
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True  # im != 0 means the value is nonzero

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, GaussianRational]


def _lift(x):
    if isinstance(x, GaussianRational):
        return (x.re, x.im)
    if isinstance(x, (int, Fraction)):
        return (Fraction(x), Fraction(0))
    return NotImplemented


def gaussian(re, im) -> Scalar:
    """Build re + im*i, collapsing to a Fraction when im == 0."""
    re = Fraction(re)
    im = Fraction(im)
    if im == 0:
        return re
    return GaussianRational(re, im)


def normalize_scalar(x) -> Scalar:
    """Coerce to Fraction/GaussianRational; reject inexact types."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def re_part(x: Scalar) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def im_part(x: Scalar) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def scalar_sqrt(x: Scalar, field: str = RATIONAL) -> Optional[Scalar]:
    """An exact square root of x inside the given field, or None."""
    if isinstance(x, GaussianRational):
        if field != GAUSSIAN:
            return None
        # (u+vi)^2 = x: u^2 = (re + |x|)/2, v = im/(2u)
        norm = _fraction_sqrt(x.re * x.re + x.im * x.im)
        if norm is None:
            return None
        u = _fraction_sqrt((x.re + norm) / 2)
        if u is None or u == 0:
            return None
        v = x.im / (2 * u)
        root = gaussian(u, v)
        return root if root * root == x else None
    q = Fraction(x)
    r = _fraction_sqrt(q)
    if r is not None:
        return r
    if field == GAUSSIAN and q < 0:
        s = _fraction_sqrt(-q)
        if s is not None:
            return gaussian(0, s)
    return None


def is_half_integer_ge_one(alpha: Scalar) -> bool:
    """True when alpha lies in 1 + (1/2)Z_{>=0}, decided exactly."""
    if isinstance(alpha, GaussianRational):
        return False
    a = Fraction(alpha)
    return a >= 1 and (2 * a).denominator == 1


def format_scalar(x: Scalar) -> str:
    """Canonical text form: rationals as p/q, Gaussians as a+bi."""
    if isinstance(x, GaussianRational):
        re, im = x.re, x.im
        imag_mag = "i" if abs(im) == 1 else f"{abs(im)}i"
        imag = ("-" if im < 0 else "") + imag_mag
        if re == 0:
            return imag
        joined = imag if im < 0 else "+" + imag
        return f"{re}{joined}"
    return str(Fraction(x))
