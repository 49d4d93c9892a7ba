"""Membership in the set S of units not twisted-similar to a constant
diagonal matrix, decided with verifiable certificates.

A unit K either reduces, through a chain of explicit twisted
conjugations, to a word with every E-factor nonconstant (then K is in
S, and conjugating K by any unit can never shorten the word below its
length), or the chain bottoms out at a constant diagonal matrix (then K
is not in S).  Every verdict carries the accumulated conjugator P, and
the identity P(h)^{-1} K P(h+1) = result is re-checked exactly before
the verdict is returned.

The module also builds every explicit family of matrices
twisted-similar to a prescribed diag(a,b) (the generic similar-word
construction, the four parametric families D/G/K/Z, and the sporadic
short forms), and predicts how conjugation by a reduced word changes
length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import CertificateError, FieldLimitationError, PreconditionError
from .factorization import StandardForm, reduce_word, standard_form
from .matrices import E0, DiagPair, E, EWord, IDENTITY, PolyMat2, twisted_conjugate
from .poly import Poly, _as_poly, solve_T
from .scalars import (
    GAUSSIAN,
    RATIONAL,
    GaussianRational,
    Scalar,
    normalize_scalar,
    scalar_sqrt,
)


@dataclass(frozen=True)
class InS:
    """K is twisted-similar to the all-nonconstant word ``canonical``."""

    canonical: StandardForm
    witness: PolyMat2


@dataclass(frozen=True)
class NotInS:
    """K is twisted-similar to the constant diagonal ``diag``."""

    diag: DiagPair
    witness: PolyMat2


SMembership = Union[InS, NotInS]


def _infer_field(k: PolyMat2) -> str:
    for row in k.rows:
        for entry in row:
            if any(isinstance(c, GaussianRational) for c in entry.coeffs):
                return GAUSSIAN
    return RATIONAL


def _checked_not_in_s(k: PolyMat2, diag: DiagPair, witness: PolyMat2) -> NotInS:
    if twisted_conjugate(k, witness) != diag.as_matrix():
        raise CertificateError("diagonal certificate failed exact verification")
    return NotInS(diag, witness)


def _checked_in_s(k: PolyMat2, canonical: StandardForm, witness: PolyMat2) -> InS:
    if canonical.length < 1 or not canonical.all_nonconstant:
        raise CertificateError("canonical word is not all-nonconstant")
    if twisted_conjugate(k, witness) != canonical.expand():
        raise CertificateError("canonical certificate failed exact verification")
    return InS(canonical, witness)


def _unipotent_upper(v: Poly) -> PolyMat2:
    return PolyMat2([[1, v], [0, 1]])


def _unipotent_lower(v: Poly) -> PolyMat2:
    return PolyMat2([[1, 0], [v, 1]])


def triangular_to_diagonal(m: PolyMat2) -> Tuple[DiagPair, PolyMat2]:
    """Conjugator killing the off-diagonal entry of a triangular unit.

    For [[a,u],[0,b]] choose v with a v(h+1) - b v(h) = -u; the upper
    unipotent [[1,v],[0,1]] then carries the matrix to diag(a,b).  The
    lower-triangular case is symmetric.
    """
    a = m[0, 0]
    b = m[1, 1]
    if not (a.is_nonzero_constant and b.is_nonzero_constant):
        raise PreconditionError("triangular reduction needs constant diagonal entries")
    av, bv = a.constant_value(), b.constant_value()
    upper, lower = m[0, 1], m[1, 0]
    if lower.is_zero:
        p = _unipotent_upper(solve_T(av, bv, -upper))
    elif upper.is_zero:
        p = _unipotent_lower(solve_T(bv, av, -lower))
    else:
        raise PreconditionError("matrix is not triangular")
    out = DiagPair(av, bv)
    if twisted_conjugate(m, p) != out.as_matrix():
        raise CertificateError("triangular reduction failed")
    return out, p


def constant_to_diagonal(m: PolyMat2, fld: str) -> Tuple[DiagPair, PolyMat2]:
    """Diagonalize a constant unit up to twisted similarity.

    Triangular constants need no eigenvalue computation; for the rest
    the eigenvalues must lie in the configured field, otherwise a
    FieldLimitationError is raised (the verdict over the complex numbers
    would be not-in-S, but no certificate exists in this field).
    """
    if not m.is_constant:
        raise PreconditionError("not a constant matrix")
    if m[0, 1].is_zero and m[1, 0].is_zero:
        return DiagPair(m[0, 0].constant_value(), m[1, 1].constant_value()), IDENTITY
    if m[0, 1].is_zero or m[1, 0].is_zero:
        return triangular_to_diagonal(m)
    tr = m[0, 0].constant_value() + m[1, 1].constant_value()
    det = m.det().constant_value()
    disc = tr * tr - 4 * det
    root = scalar_sqrt(disc, fld)
    if root is None:
        raise FieldLimitationError(
            f"constant matrix has eigenvalue discriminant {disc} with no square root "
            f"in the {fld} field; extend the coefficient field to certify the verdict"
        )
    lam1 = (tr + root) / 2
    lam2 = (tr - root) / 2
    a12 = m[0, 1].constant_value()
    a11 = m[0, 0].constant_value()
    vec = (a12, lam1 - a11)  # kernel of m - lam1 (a12 != 0 here)
    if vec[1] != 0:
        basis = PolyMat2([[vec[0], 1], [vec[1], 0]])
    else:
        basis = PolyMat2([[vec[0], 0], [vec[1], 1]])
    tri = twisted_conjugate(m, basis)
    if not tri[1, 0].is_zero:
        raise CertificateError("eigenvector change of basis did not triangularize")
    diag, unip = triangular_to_diagonal(tri)
    p = basis * unip
    if twisted_conjugate(m, p) != diag.as_matrix():
        raise CertificateError("constant-matrix reduction failed")
    return diag, p


def s_membership(k: PolyMat2, fld: Optional[str] = None) -> SMembership:
    """Decide membership in S, returning a certified verdict.

    Reduction loop on the standard form: a trailing constant factor
    E(beta) rotates to the front (conjugator E(beta)^{-1}); a leading
    constant E(omega) in front of a nonconstant tail is either resolved
    directly (tail length 1) or fed by rotating the last tail factor
    back to the front (conjugator E(u_k(h-1))^{-1}), after which the
    word is re-reduced and the absorbed constant shortens it.  Length
    never increases along the chain.
    """
    k.require_unit()
    if fld is None:
        fld = _infer_field(k)
    witness = IDENTITY
    sf = standard_form(k)
    while True:
        fs = sf.factors
        a, b = sf.front.d1, sf.front.d2
        if not fs:
            return _checked_not_in_s(k, sf.front, witness)
        if all(f.is_constant for f in fs):
            diag, extra = constant_to_diagonal(sf.expand(), fld)
            return _checked_not_in_s(k, diag, witness * extra)
        if sf.all_nonconstant:
            return _checked_in_s(k, sf, witness)
        if fs[-1].is_constant:
            beta = fs[-1].constant_value()
            step = E(Poly([beta])).inverse()
            sf = reduce_word(EWord(DiagPair(b, a), (Poly([a * beta / b]),) + fs[:-1]))
            witness = witness * step
            continue
        # leading constant, nonconstant tail
        omega = fs[0]
        tail = fs[1:]
        if len(tail) == 1:
            u = tail[0]
            if omega.is_zero:
                w = solve_T(Fraction(1), a / b, u)  # u = -(a/b)w(h) + w(h+1)
                witness = witness * E(w).inverse()
                return _checked_not_in_s(k, DiagPair(-b, -a), witness)
            inv = 1 / omega.constant_value()
            step = E0 * E(-u.shift(-1) + inv) * E0
            witness = witness * step
            sf = standard_form(twisted_conjugate(sf.expand(), step))
            return _checked_in_s(k, sf, witness)
        u_last = tail[-1]
        step = E(u_last.shift(-1)).inverse()
        sf = reduce_word(
            EWord(DiagPair(b, a), (u_last.shift(-1).scale(a / b), omega) + tail[:-1])
        )
        witness = witness * step


# -- explicit matrices twisted-similar to a prescribed diagonal -------


def make_similar_to_diag(a: Scalar, b: Scalar, u: Sequence[Poly]) -> PolyMat2:
    """The word-conjugate of diag(a,b) by E(u_1)***E(u_k), expanded.

    Interior u_j must be nonconstant and (u_1,u_2) != (0,0) when k = 2;
    the boundary entries are unrestricted.  The result is
    twisted-similar to diag(a,b) by construction, which is re-verified
    exactly before returning.
    """
    a = normalize_scalar(a)
    b = normalize_scalar(b)
    us = [_as_poly(x) for x in u]
    k = len(us)
    if k < 1:
        raise PreconditionError("need at least one word factor")
    for j in range(1, k - 1):
        if us[j].is_constant:
            raise PreconditionError(f"interior factor {j + 1} must be nonconstant")
    if k == 2 and us[0].is_zero and us[1].is_zero:
        raise PreconditionError("(u_1, u_2) = (0, 0) is excluded for k = 2")
    ratio = a / b
    factors = [Poly()]
    for i in range(k, 1, -1):
        c = ratio if i % 2 == 0 else 1 / ratio
        factors.append(-us[i - 1].scale(c))
    factors.append(-us[0].scale(b / a) + us[0].shift(1))
    for j in range(2, k + 1):
        factors.append(us[j - 1].shift(1))
    front = DiagPair(a, b).alternated(k)
    if k % 2 == 1:
        front = front.negated()
    out = EWord(front, tuple(factors)).expand()
    conjugator = IDENTITY
    for x in us:
        conjugator = conjugator * E(x)
    if out != twisted_conjugate(PolyMat2.diagonal(a, b), conjugator):
        raise CertificateError("similar-word construction disagrees with conjugation")
    return out


FAMILY_NAMES = ("D", "G", "K", "Z", "similar", "diag", "const-e0", "const-single", "const-pair", "z-short")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting one explicit not-in-S representative."""

    family: str
    a: Scalar
    b: Scalar
    u: Tuple[Poly, ...] = ()
    eps: int = 0
    delta: int = 0
    beta: Optional[Scalar] = None
    eta: Optional[Scalar] = None

    def __post_init__(self):
        object.__setattr__(self, "a", normalize_scalar(self.a))
        object.__setattr__(self, "b", normalize_scalar(self.b))
        object.__setattr__(self, "u", tuple(_as_poly(x) for x in self.u))
        if self.beta is not None:
            object.__setattr__(self, "beta", normalize_scalar(self.beta))
        if self.eta is not None:
            object.__setattr__(self, "eta", normalize_scalar(self.eta))
        if self.family not in FAMILY_NAMES:
            raise PreconditionError(f"unknown family {self.family!r}; expected one of {FAMILY_NAMES}")
        if self.a == 0 or self.b == 0:
            raise PreconditionError("a and b must be nonzero")
        if self.eps not in (0, 1) or self.delta not in (0, 1):
            raise PreconditionError("eps and delta must be 0 or 1")


def _sgn_pow(x: Scalar, n: int) -> Scalar:
    """x^((-1)^n)."""
    return x if n % 2 == 0 else 1 / x


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def family_build(spec: FamilySpec) -> PolyMat2:
    """The literal matrix of the chosen family, expanded."""
    a, b, us = spec.a, spec.b, spec.u
    k = len(us)
    eps, delta = spec.eps, spec.delta
    beta, eta = spec.beta, spec.eta
    fam = spec.family

    if fam == "similar":
        return make_similar_to_diag(a, b, us)
    if fam == "diag":
        return DiagPair(a, b).alternated(eps).as_matrix()
    if fam == "const-e0":
        _require(beta is not None and beta != 0, "const-e0 needs nonzero beta")
        front = DiagPair(-a, -b).alternated(delta)
        factors = (Poly(),) * (1 - eps) + (Poly([beta]),) + (Poly(),) * eps
        return EWord(front, factors).expand()
    if fam == "const-single":
        _require(beta is not None and beta != 0, "const-single needs nonzero beta")
        front = DiagPair(-a / beta, -b * beta)
        return EWord(front, (Poly([-beta - beta * b / a]),)).expand()
    if fam == "const-pair":
        _require(beta is not None and beta != 0, "const-pair needs nonzero beta")
        _require(eta is not None and eta != 0, "const-pair needs nonzero eta")
        front = DiagPair(-a * beta / eta, -b * eta / beta)
        second = -(beta - eta) * b / (a * beta * beta) + (beta - eta) / (beta * eta)
        return EWord(front, (Poly([eta]), Poly([second]))).expand()
    if fam == "z-short":
        _require(beta is not None and beta != 0, "z-short needs nonzero beta")
        _require(eta is not None and eta != 0, "z-short needs nonzero eta")
        _require(k == 1 and not us[0].is_constant, "z-short takes exactly one nonconstant factor")
        u1 = us[0]
        scale = beta * beta * a / b
        front = DiagPair(-b / (beta * eta), -a * beta * eta)
        factors = (
            Poly([-eta]),
            -u1.scale(scale) - beta - 1 / eta,
            u1.shift(1) - 1 / beta,
            Poly([-eta * scale]),
        )
        return EWord(front, factors).expand()

    # parametric families D, G, K, Z
    _require(k >= 1, f"family {fam} needs at least one word factor")
    _require(all(not x.is_constant for x in us), f"family {fam} needs nonconstant factors")
    ratio = a / b

    if fam == "D":
        front = DiagPair(a, b).alternated(k + eps + delta)
        if k % 2 == 1:
            front = front.negated()
        factors = [Poly()] * (1 - eps)
        for i in range(k, 1, -1):
            factors.append(-us[i - 1].scale(_sgn_pow(ratio, i + delta)))
        factors.append(us[0])
        for j in range(2, k + 1):
            factors.append(us[j - 1].shift(1))
        factors.extend([Poly()] * eps)
        return EWord(front, tuple(factors)).expand()

    if fam == "G":
        _require(beta is not None and beta != 0, "family G needs nonzero beta")
        front = DiagPair(a, b).alternated(k + 1 - eps)
        front = front.scale(_sgn_pow(beta, k + 1 - eps), _sgn_pow(beta, k + eps))
        if k % 2 == 0:
            front = front.negated()  # sign (-1)^(k+1)
        bscale = beta * beta * ratio
        factors = [Poly()] * (1 - eps)
        for i in range(k, 1, -1):
            factors.append(-us[i - 1].scale(_sgn_pow(bscale, i + 1)))
        factors.append(-us[0].scale(bscale) - beta)
        factors.append(us[0].shift(1) - 1 / beta)
        for j in range(2, k + 1):
            factors.append(us[j - 1].shift(1))
        factors.extend([Poly()] * eps)
        return EWord(front, tuple(factors)).expand()

    if fam == "K":
        _require(eta is not None and eta != 0, "family K needs nonzero eta")
        if k == 1:
            front = DiagPair(a, b).alternated(eps).scale(1 / eta, eta)
            factors = (Poly([-eta]), us[0], Poly([-eta * _sgn_pow(b / a, eps)]))
            return EWord(front, factors).expand()
        front = DiagPair(a, b).alternated(k + 1 - eps).scale(1 / eta, eta)
        if k % 2 == 0:
            front = front.negated()  # sign (-1)^(k+1)
        factors = [Poly([-eta]), -us[k - 1].scale(_sgn_pow(ratio, k + eps)) - 1 / eta]
        for i in range(k - 1, 1, -1):
            factors.append(-us[i - 1].scale(_sgn_pow(ratio, i + eps)))
        factors.append(us[0])
        for j in range(2, k + 1):
            factors.append(us[j - 1].shift(1))
        factors.append(Poly([-eta * _sgn_pow(b / a, k + 1 - eps)]))
        return EWord(front, tuple(factors)).expand()

    # fam == "Z"
    _require(beta is not None and beta != 0, "family Z needs nonzero beta")
    _require(eta is not None and eta != 0, "family Z needs nonzero eta")
    bscale = beta * beta * ratio
    if k == 1:
        front = DiagPair(-b / (eta * beta), -a * eta * beta)
        factors = (
            Poly([-eta]),
            -us[0].scale(bscale) - beta,
            us[0].shift(1) - 1 / beta,
            Poly([-eta * bscale]),
        )
        return EWord(front, factors).expand()
    front = DiagPair(a, b).alternated(k).scale(
        _sgn_pow(beta, k) / eta, eta * _sgn_pow(beta, k + 1)
    )
    if k % 2 == 1:
        front = front.negated()  # sign (-1)^k
    factors = [Poly([-eta]), -us[k - 1].scale(_sgn_pow(bscale, k + 1)) - 1 / eta]
    for i in range(k - 1, 1, -1):
        factors.append(-us[i - 1].scale(_sgn_pow(bscale, i + 1)))
    factors.append(-us[0].scale(bscale) - beta)
    factors.append(us[0].shift(1) - 1 / beta)
    for j in range(2, k + 1):
        factors.append(us[j - 1].shift(1))
    factors.append(Poly([-eta * _sgn_pow(bscale, k + 1)]))
    return EWord(front, tuple(factors)).expand()


# -- length behavior under conjugation by a reduced word --------------

ZERO_CLASS = "zero"
CONST_CLASS = "const"
NONCONST_CLASS = "nonconst"
POLY_CLASSES = (ZERO_CLASS, CONST_CLASS, NONCONST_CLASS)


def poly_class(p: Poly) -> str:
    if p.is_zero:
        return ZERO_CLASS
    return CONST_CLASS if p.is_constant else NONCONST_CLASS


def predict_conjugation_length(
    k: int,
    p: int,
    v1_class: str,
    vp_class: str,
    u1_minus_v1_class: Optional[str] = None,
    v2_special: bool = False,
) -> int:
    """Length of P(h)^{-1} * word(1,1; u_1..u_k) * P(h+1).

    Here all u_i are nonconstant, P = word(1,1; v_1..v_p) is in standard
    form with p >= 1, and the descriptor gives the classes of v_1, v_p
    and (when v_1 is nonconstant) of u_1 - v_1; ``v2_special`` marks the
    p = 2 coincidence v_2 = (v_1 - u_1)^{-1}.  The uncovered descriptors
    (v_1 = 0, or u_1 = v_1) admit genuine shortening and are rejected.
    """
    if k < 1 or p < 1:
        raise PreconditionError("k and p must be positive")
    for cls in (v1_class, vp_class):
        if cls not in POLY_CLASSES:
            raise PreconditionError(f"unknown polynomial class {cls!r}")
    if p == 1 and vp_class != v1_class:
        raise PreconditionError("p = 1 forces the v_p class to equal the v_1 class")

    if v1_class == CONST_CLASS:
        if p == 1:
            return k + 2
        return {NONCONST_CLASS: k + 2 * p - 1, CONST_CLASS: k + 2 * p - 2, ZERO_CLASS: k + 2 * p - 3}[vp_class]

    if v1_class != NONCONST_CLASS:
        raise PreconditionError("v_1 = 0 is outside the covered descriptors")
    if u1_minus_v1_class is None or u1_minus_v1_class not in POLY_CLASSES:
        raise PreconditionError("need the class of u_1 - v_1 when v_1 is nonconstant")

    if u1_minus_v1_class == NONCONST_CLASS:
        if vp_class == NONCONST_CLASS:
            return k + 2 * p
        if p == 1:
            raise PreconditionError("p = 1 forces v_p nonconstant here")
        return {CONST_CLASS: k + 2 * p - 1, ZERO_CLASS: k + 2 * p - 2}[vp_class]

    if u1_minus_v1_class == CONST_CLASS:
        if vp_class == NONCONST_CLASS:
            return k + 2 * p - 1
        if p == 2:
            return k + 1 if v2_special else k + 2
        if p > 2:
            return {CONST_CLASS: k + 2 * p - 2, ZERO_CLASS: k + 2 * p - 3}[vp_class]
        raise PreconditionError("p = 1 forces v_p nonconstant here")

    raise PreconditionError("u_1 = v_1 is outside the covered descriptors")
