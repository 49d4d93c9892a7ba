"""Exact univariate polynomials in h over a configurable exact field.

Coefficients are Fractions or GaussianRationals (see ``scalars``), index
equals the power of h, and trailing zeros are stripped so every
polynomial has exactly one representation.  deg 0 is the sentinel
``NEG_INF``, ordered below every integer.

Besides ring arithmetic this module houses the shift map
``p(h) -> p(h+m)``, conversion to and from the binomial basis
e_k(h) = C(h,k), the solver for the difference operator
T_{a,b}(w) = a*w(h+1) - b*w(h), and the classifier for images of
nonconstant polynomials under T_{1,c}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .scalars import GaussianRational, Scalar, normalize_scalar

NEG_INF = float("-inf")

Degree = Union[int, float]


class Poly:
    """Immutable polynomial; supports +, -, *, **, divmod, call."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [normalize_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_c", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def coeffs(self) -> Tuple[Scalar, ...]:
        return self._c

    @property
    def degree(self) -> Degree:
        return len(self._c) - 1 if self._c else NEG_INF

    def coeff(self, k: int) -> Scalar:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_constant(self) -> bool:
        return len(self._c) <= 1

    @property
    def is_nonzero_constant(self) -> bool:
        return len(self._c) == 1

    def constant_value(self) -> Scalar:
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._c[0] if self._c else Fraction(0)

    def leading_coefficient(self) -> Scalar:
        if not self._c:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._c[-1]

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self._c])

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, s) -> "Poly":
        s = normalize_scalar(s)
        return Poly([c * s for c in self._c])

    def __divmod__(self, other) -> Tuple["Poly", "Poly"]:
        return euclid_div(self, _as_poly(other))

    def __floordiv__(self, other) -> "Poly":
        return euclid_div(self, _as_poly(other))[0]

    def __mod__(self, other) -> "Poly":
        return euclid_div(self, _as_poly(other))[1]

    def __call__(self, x: Scalar) -> Scalar:
        x = normalize_scalar(x)
        out: Scalar = Fraction(0)
        for c in reversed(self._c):
            out = out * x + c
        return out

    def shift(self, m: int) -> "Poly":
        """p(h) -> p(h+m), exact coefficient expansion."""
        if m == 0 or self.is_constant:
            return self
        step = Poly([m, 1])  # h + m
        out = ZERO
        for c in reversed(self._c):
            out = out * step + c
        return out

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({self._c!r})"


def _as_poly(x) -> "Poly":
    if isinstance(x, Poly):
        return x
    try:
        return Poly([normalize_scalar(x)])
    except TypeError:
        return NotImplemented


ZERO = Poly()
ONE = Poly([1])
H = Poly([0, 1])


def poly(*coeffs) -> Poly:
    """Poly from coefficients in increasing power order."""
    return Poly(coeffs)


def euclid_div(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder with deg r < deg b; b must be nonzero."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    q: List[Scalar] = []
    r = list(a.coeffs)
    db = b.degree
    lb = b.leading_coefficient()
    dr = len(r) - 1
    if dr >= db:
        q = [Fraction(0)] * (dr - db + 1)
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        t = r[-1] / lb
        q[dr - db] = t
        for i, c in enumerate(b.coeffs):
            r[dr - db + i] = r[dr - db + i] - t * c
        while r and r[-1] == 0:
            r.pop()
    return Poly(q), Poly(r)


# -- the shift operator T_{a,b} and the binomial basis ----------------


def binomial_convert(p: Poly) -> List[Scalar]:
    """Coefficients of p in the basis e_k(h) = C(h,k).

    These are the iterated forward differences of p at 0; the list has
    length deg(p)+1 (empty for the zero polynomial).
    """
    out: List[Scalar] = []
    cur = p
    while not cur.is_zero:
        out.append(cur(Fraction(0)))
        cur = cur.shift(1) - cur
    return out


def binomial_restore(cs: Sequence[Scalar]) -> Poly:
    """Inverse of binomial_convert."""
    out = ZERO
    ek = ONE
    for k, c in enumerate(cs):
        if k > 0:
            ek = ek * Poly([1 - k, 1]).scale(Fraction(1, k))  # e_k = e_{k-1}*(h-k+1)/k
        out = out + ek.scale(normalize_scalar(c))
    return out


def apply_T(a: Scalar, b: Scalar, w: Poly) -> Poly:
    """T_{a,b}(w) = a*w(h+1) - b*w(h)."""
    return w.shift(1).scale(a) - w.scale(b)


def solve_T(a: Scalar, b: Scalar, target: Poly) -> Poly:
    """The w with a*w(h+1) - b*w(h) = target.

    T_{a,b} is triangular on the binomial basis: e_k maps to
    (a-b)*e_k + a*e_{k-1}.  For a != b, back substitution from the top
    degree; for a = b the kernel is the constants, and the solution
    returned is the one with zero e_0 coefficient.
    """
    a = normalize_scalar(a)
    b = normalize_scalar(b)
    if a == 0 or b == 0:
        raise ValueError("solve_T needs nonzero a and b")
    t = binomial_convert(target)
    if a == b:
        # t_k = a * c_{k+1}
        c = [Fraction(0)] + [tk / a for tk in t]
    else:
        d = a - b
        c = [Fraction(0)] * len(t)
        carry: Scalar = Fraction(0)
        for k in range(len(t) - 1, -1, -1):
            c[k] = (t[k] - carry) / d
            carry = a * c[k]
    w = binomial_restore(c)
    assert apply_T(a, b, w) == target
    return w


@dataclass(frozen=True)
class TImage:
    """Image of a nonconstant u under T_{1,c}; never zero."""

    value: Poly
    constant: Optional[Scalar]  # set when the image is a nonzero constant

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


def classify_T_image(c: Scalar, u: Poly) -> TImage:
    """Classify T_{1,c}(u) for nonconstant u and nonzero c.

    The image is a nonzero constant beta exactly when c = 1 and
    u = beta*h + theta; otherwise it is nonzero and nonconstant.
    """
    c = normalize_scalar(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if u.is_constant:
        raise ValueError("u must be nonconstant")
    img = apply_T(Fraction(1), c, u)
    if img.is_zero:
        raise AssertionError("T_{1,c} annihilated a nonconstant polynomial")
    if img.is_constant:
        return TImage(img, img.constant_value())
    return TImage(img, None)
