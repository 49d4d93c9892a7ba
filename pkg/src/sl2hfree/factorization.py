"""The two canonical factorizations of a unit 2x2 polynomial matrix.

Standard form: diag(b1,b2)*E(v_1)***E(v_l) with every interior v_i
nonconstant, and (v_1,v_2) != (0,0) when l = 2.  Each unit has exactly
one standard form; ``length`` counts its E-factors.

LQ form: [[a,0],[u,b]]*E(q_T)***E(q_1) where the q_i are the
sign-alternated quotients of the Euclidean algorithm on the first row;
q_i is nonconstant for every i > 1, q_1 = 0 when deg k11 < deg k12,
and T = 0 when k12 = 0.

``reduce_word`` rewrites an arbitrary word into standard form using the
unit identities

    (i)   E(u)E(0)E(v)          = -E(u+v)
    (ii)  E(b)E(1/b)E(b)        = -diag(b, 1/b)
    (iii) E(u)diag(b1,b2)       = diag(b2,b1)E((b1/b2)u)
    (vi)  E(u)E(b)E(v)          = E(u - 1/b) diag(b, 1/b) E(v - 1/b)

applied leftmost-first with priority (i) > (ii) > (vi); diagonals
created mid-word migrate to the front through (iii) immediately.
``standard_form`` goes through the LQ form instead and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .matrices import DiagPair, E, EWord, PolyMat2
from .poly import Poly, _as_poly, euclid_div
from .scalars import Scalar, normalize_scalar


@dataclass(frozen=True)
class StandardForm:
    """The unique reduced word of a unit matrix."""

    front: DiagPair
    factors: Tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(_as_poly(u) for u in self.factors))
        fs = self.factors
        for i in range(1, len(fs) - 1):
            if fs[i].is_constant:
                raise ValueError(f"interior factor {i + 1} is constant: {fs[i]}")
        if len(fs) == 2 and fs[0].is_zero and fs[1].is_zero:
            raise ValueError("a length-2 standard form cannot be E(0)E(0)")

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def all_nonconstant(self) -> bool:
        return all(not u.is_constant for u in self.factors)

    def as_word(self) -> EWord:
        return EWord(self.front, self.factors)

    def expand(self) -> PolyMat2:
        return self.as_word().expand()

    def __str__(self):
        from .parsing import format_word

        return format_word(self.front, self.factors)


@dataclass(frozen=True)
class LQForm:
    """Lower-triangular front with sign-alternated Euclidean quotients."""

    a: Scalar
    b: Scalar
    u: Poly
    quotients: Tuple[Poly, ...]  # q_1, ..., q_T

    def __post_init__(self):
        object.__setattr__(self, "a", normalize_scalar(self.a))
        object.__setattr__(self, "b", normalize_scalar(self.b))
        object.__setattr__(self, "u", _as_poly(self.u))
        object.__setattr__(self, "quotients", tuple(_as_poly(q) for q in self.quotients))
        if self.a == 0 or self.b == 0:
            raise ValueError("front diagonal entries must be nonzero")
        for i, q in enumerate(self.quotients):
            if i > 0 and q.is_constant:
                raise ValueError(f"quotient q_{i + 1} must be nonconstant, got {q}")

    @property
    def front(self) -> PolyMat2:
        return PolyMat2([[self.a, 0], [self.u, self.b]])

    def reassemble(self) -> PolyMat2:
        out = self.front
        for q in reversed(self.quotients):
            out = out * E(q)
        return out

    def __str__(self):
        from .parsing import format_lq

        return format_lq(self)


def lq_form(k: PolyMat2) -> LQForm:
    """Euclidean algorithm on the first row of a unit matrix."""
    k.require_unit()
    m = k
    quotients: List[Poly] = []
    while not m[0, 1].is_zero:
        q, _ = euclid_div(m[0, 0], m[0, 1])
        quotients.append(q)
        k11, k12 = m[0, 0], m[0, 1]
        k21, k22 = m[1, 0], m[1, 1]
        m = PolyMat2([[k12, q * k12 - k11], [k22, q * k22 - k21]])
    a, b, u = m[0, 0], m[1, 1], m[1, 0]
    out = LQForm(a.constant_value(), b.constant_value(), u, tuple(quotients))
    assert out.reassemble() == k
    return out


def reduce_word(w: EWord) -> StandardForm:
    """Shorten a word to its standard form by the unit identities."""
    d1, d2 = w.front.d1, w.front.d2
    fs: List[Poly] = list(w.factors)

    def migrate(idx: int, c1: Scalar, c2: Scalar) -> None:
        # a diagonal diag(c1,c2) sits immediately left of fs[idx];
        # push it through the factors to its left into the front
        nonlocal d1, d2
        for j in range(idx - 1, -1, -1):
            fs[j] = fs[j].scale(c1 / c2)
            c1, c2 = c2, c1
        d1, d2 = d1 * c1, d2 * c2

    while True:
        n = len(fs)
        # (i) kill an interior E(0)
        hit = next((i for i in range(1, n - 1) if fs[i].is_zero), None)
        if hit is not None:
            merged = fs[hit - 1] + fs[hit + 1]
            fs[hit - 1 : hit + 2] = [merged]
            d1, d2 = -d1, -d2
            continue
        # (ii) collapse E(b)E(1/b)E(b)
        hit = next(
            (
                i
                for i in range(n - 2)
                if fs[i].is_nonzero_constant
                and fs[i + 2] == fs[i]
                and fs[i + 1] == Poly([1 / fs[i].constant_value()])
            ),
            None,
        )
        if hit is not None:
            beta = fs[hit].constant_value()
            del fs[hit : hit + 3]
            migrate(hit, beta, 1 / beta)
            d1, d2 = -d1, -d2
            continue
        # (vi) absorb an interior nonzero constant
        hit = next((i for i in range(1, n - 1) if fs[i].is_nonzero_constant), None)
        if hit is not None:
            beta = fs[hit].constant_value()
            inv = 1 / beta
            fs[hit - 1] = fs[hit - 1] - inv
            fs[hit + 1] = fs[hit + 1] - inv
            del fs[hit]
            migrate(hit, beta, inv)
            continue
        # E(0)E(0) with nothing else collapses to -I
        if n == 2 and fs[0].is_zero and fs[1].is_zero:
            fs = []
            d1, d2 = -d1, -d2
            continue
        break
    return StandardForm(DiagPair(d1, d2), tuple(fs))


def standard_form(k: PolyMat2) -> StandardForm:
    """Standard form through the LQ form and the front-factor rewrite

        [[a,0],[u,b]] = diag(-a,-b) E(0) E(u/b).
    """
    lq = lq_form(k)
    a, b, u, qs = lq.a, lq.b, lq.u, lq.quotients
    rev = tuple(reversed(qs))  # E-factor order: q_T, ..., q_1
    if u.is_zero:
        out = StandardForm(DiagPair(a, b), rev)
    else:
        ub = u.scale(1 / b)
        if not qs:
            out = StandardForm(DiagPair(-a, -b), (Poly(), ub))
        elif not ub.is_constant:
            out = StandardForm(DiagPair(-a, -b), (Poly(),) + (ub,) + rev)
        else:
            beta = ub.constant_value()
            inv = 1 / beta
            out = StandardForm(
                DiagPair(-a * inv, -b * beta),
                (Poly([-beta]), rev[0] - inv) + rev[1:],
            )
    assert out.expand() == k
    return out


def length(k: PolyMat2) -> int:
    """Number of E-factors in the standard form."""
    return standard_form(k).length
