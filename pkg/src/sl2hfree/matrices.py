"""2x2 polynomial matrices, the E(u) generators, and twisted conjugation.

A matrix is a unit of the matrix ring over C[h] exactly when its
determinant is a nonzero constant.  The generator

    E(u) = [[u, 1], [-1, 0]]

has determinant 1; words diag(d1,d2)*E(u_1)***E(u_k) are the raw
material of the factorization engine.  Twisted conjugation is
B = P(h)^{-1} A(h) P(h+1), and ``cocycle`` evaluates the 1-cocycle
attached to a unit K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .errors import NotInvertibleError
from .poly import ONE, ZERO, Poly, _as_poly
from .scalars import Scalar, normalize_scalar


class PolyMat2:
    """Immutable 2x2 matrix with Poly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(_as_poly(e) for e in row) for row in rows)
        if len(rs) != 2 or any(len(r) != 2 for r in rs):
            raise ValueError("PolyMat2 needs a 2x2 array of entries")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat2 is immutable")

    @staticmethod
    def identity() -> "PolyMat2":
        return IDENTITY

    @staticmethod
    def diagonal(d1, d2) -> "PolyMat2":
        return PolyMat2([[d1, ZERO], [ZERO, d2]])

    def __getitem__(self, ij: Tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other) -> "PolyMat2":
        if not isinstance(other, PolyMat2):
            return NotImplemented
        a, b = self.rows, other.rows
        return PolyMat2(
            [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ]
        )

    def __add__(self, other) -> "PolyMat2":
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return PolyMat2(
            [[self.rows[i][j] + other.rows[i][j] for j in range(2)] for i in range(2)]
        )

    def __sub__(self, other) -> "PolyMat2":
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PolyMat2":
        return PolyMat2([[-e for e in row] for row in self.rows])

    def scale(self, s) -> "PolyMat2":
        s = normalize_scalar(s)
        return PolyMat2([[e.scale(s) for e in row] for row in self.rows])

    def det(self) -> Poly:
        return self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]

    def transpose(self) -> "PolyMat2":
        return PolyMat2([[self.rows[0][0], self.rows[1][0]], [self.rows[0][1], self.rows[1][1]]])

    @property
    def is_unit(self) -> bool:
        return self.det().is_nonzero_constant

    @property
    def is_constant(self) -> bool:
        return all(e.is_constant for row in self.rows for e in row)

    def require_unit(self, what: str = "matrix") -> "PolyMat2":
        if not self.is_unit:
            raise NotInvertibleError(f"{what} has determinant {self.det()}, not a nonzero constant")
        return self

    def inverse(self) -> "PolyMat2":
        """Adjugate over the constant determinant; requires a unit."""
        self.require_unit()
        d = self.det().constant_value()
        a, b = self.rows[0]
        c, e = self.rows[1]
        inv_d = 1 / d
        return PolyMat2(
            [[e.scale(inv_d), (-b).scale(inv_d)], [(-c).scale(inv_d), a.scale(inv_d)]]
        )

    def shift(self, m: int) -> "PolyMat2":
        """A(h) -> A(h+m), entrywise."""
        return PolyMat2([[e.shift(m) for e in row] for row in self.rows])

    def apply(self, v: Tuple[Poly, Poly]) -> Tuple[Poly, Poly]:
        g1, g2 = v
        return (
            self.rows[0][0] * g1 + self.rows[0][1] * g2,
            self.rows[1][0] * g1 + self.rows[1][1] * g2,
        )

    def __eq__(self, other):
        if isinstance(other, PolyMat2):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        from .parsing import format_matrix

        return format_matrix(self)

    def __repr__(self):
        return f"PolyMat2({[[repr(str(e)) for e in row] for row in self.rows]})"


IDENTITY = PolyMat2([[ONE, ZERO], [ZERO, ONE]])


def E(u) -> PolyMat2:
    """The unit [[u, 1], [-1, 0]]; det = 1."""
    u = _as_poly(u)
    return PolyMat2([[u, ONE], [-ONE, ZERO]])


E0 = E(ZERO)


@dataclass(frozen=True)
class DiagPair:
    """A pair of nonzero scalars, the front factor diag(d1,d2)."""

    d1: Scalar
    d2: Scalar

    def __post_init__(self):
        object.__setattr__(self, "d1", normalize_scalar(self.d1))
        object.__setattr__(self, "d2", normalize_scalar(self.d2))
        if self.d1 == 0 or self.d2 == 0:
            raise ValueError("diagonal entries must be nonzero")

    def swapped(self) -> "DiagPair":
        return DiagPair(self.d2, self.d1)

    def alternated(self, k: int) -> "DiagPair":
        """diag(d1,d2) for even k, diag(d2,d1) for odd k."""
        return self if k % 2 == 0 else self.swapped()

    def negated(self) -> "DiagPair":
        return DiagPair(-self.d1, -self.d2)

    def scale(self, s1, s2) -> "DiagPair":
        return DiagPair(self.d1 * normalize_scalar(s1), self.d2 * normalize_scalar(s2))

    def as_matrix(self) -> PolyMat2:
        return PolyMat2.diagonal(self.d1, self.d2)

    def entry_multiset(self) -> Tuple[str, str]:
        """Order-insensitive fingerprint of {d1, d2}."""
        from .scalars import format_scalar

        return tuple(sorted((format_scalar(self.d1), format_scalar(self.d2))))

    def __str__(self):
        from .parsing import format_diag

        return format_diag(self)


@dataclass(frozen=True)
class EWord:
    """An unreduced word diag(d1,d2)*E(u_1)***E(u_k)."""

    front: DiagPair
    factors: Tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(_as_poly(u) for u in self.factors))

    def expand(self) -> PolyMat2:
        out = self.front.as_matrix()
        for u in self.factors:
            out = out * E(u)
        return out

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        from .parsing import format_word

        return format_word(self.front, self.factors)


def word(d1, d2, *factors) -> EWord:
    return EWord(DiagPair(d1, d2), tuple(_as_poly(u) for u in factors))


def twisted_conjugate(a: PolyMat2, p: PolyMat2) -> PolyMat2:
    """P(h)^{-1} * A(h) * P(h+1); P must be a unit."""
    p.require_unit("conjugator")
    return p.inverse() * a * p.shift(1)


def cocycle(k: PolyMat2, m: int) -> PolyMat2:
    """The 1-cocycle of K: value I at 0, K(h)***K(h+m-1) at m >= 1,
    K(h-1)^{-1}***K(h-m)^{-1} at -m <= -1."""
    k.require_unit()
    out = IDENTITY
    if m >= 0:
        for i in range(m):
            out = out * k.shift(i)
    else:
        for i in range(1, -m + 1):
            out = out * k.shift(-i).inverse()
    return out
