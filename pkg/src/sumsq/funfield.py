"""Rational function fields K = F_q(x) with q odd: elements and places.

Places are the monic irreducible polynomials plus the degree place at
infinity (uniformizer 1/x).  Only the rational function field itself is
supported; finite extensions raise UnsupportedField.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedField, ZeroElement
from .gf import (
    FqElem,
    FqField,
    fp_add,
    fp_deg,
    fp_divmod,
    fp_eval,
    fp_gcd,
    fp_monic,
    fp_mul,
    fp_neg,
    fp_powmod,
    fp_scale,
    fp_sub,
    fp_trim,
    is_irreducible_fq,
    poly_factor_fq,
)


@dataclass(frozen=True)
class FunctionField:
    """F_q(x) for odd q; the full constant field is F_q by construction."""

    base: FqField

    def __post_init__(self):
        if self.base.p == 2:
            raise UnsupportedField("characteristic 2 function fields are not supported")

    @property
    def q(self):
        return self.base.q

    def __call__(self, num, den=None):
        F = self.base
        num = _as_poly(F, num)
        den = (F.one(),) if den is None else _as_poly(F, den)
        return ffelem(self, num, den)

    def gen(self):
        return self((0, 1))

    def __repr__(self):
        return f"F_{self.q}(x)"


def _as_poly(F, value):
    if isinstance(value, FFElem):
        raise TypeError("pass coefficients, not field elements")
    if isinstance(value, int):
        return fp_trim(F, (F.coerce(value),))
    if isinstance(value, FqElem):
        return fp_trim(F, (F.coerce(value),))
    return fp_trim(F, tuple(F.coerce(c) for c in value))


def ffelem(K, num, den):
    """Canonical fraction: gcd reduced, monic denominator."""
    F = K.base
    if not den:
        raise ZeroElement("zero denominator")
    if not num:
        return FFElem(K, (), (F.one(),))
    g = fp_gcd(F, num, den)
    if fp_deg(g) > 0:
        num = fp_divmod(F, num, g)[0]
        den = fp_divmod(F, den, g)[0]
    lc = den[-1]
    if lc != F.one():
        inv = F.inv(lc)
        num = fp_scale(F, num, inv)
        den = fp_scale(F, den, inv)
    return FFElem(K, num, den)


@dataclass(frozen=True)
class FFElem:
    parent: FunctionField
    num: tuple
    den: tuple

    def is_zero(self):
        return not self.num

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.parent != self.parent:
                raise ValueError("elements of different fields")
            return other
        return self.parent(other)

    def __add__(self, other):
        o = self._coerce(other)
        F = self.parent.base
        num = fp_add(F, fp_mul(F, self.num, o.den), fp_mul(F, o.num, self.den))
        return ffelem(self.parent, num, fp_mul(F, self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.parent, fp_neg(self.parent.base, self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        F = self.parent.base
        return ffelem(
            self.parent, fp_mul(F, self.num, o.num), fp_mul(F, self.den, o.den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroElement("division by zero")
        F = self.parent.base
        return ffelem(
            self.parent, fp_mul(F, self.num, o.den), fp_mul(F, self.den, o.num)
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return (self.parent(1) / self) ** (-e)
        acc = self.parent(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return (self.parent, self.num, self.den) == (other.parent, other.num, other.den)
        if isinstance(other, (int, FqElem)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.num, self.den))

    def __repr__(self):
        from .gf import fq_poly_str

        n = fq_poly_str(self.parent.base, self.num)
        if fp_deg(self.den) == 0 and self.den and self.den[-1] == self.parent.base.one():
            return n
        return f"({n})/({fq_poly_str(self.parent.base, self.den)})"


@dataclass(frozen=True)
class PlaceFF:
    """A place of F_q(x): a monic irreducible polynomial, or infinity (poly=None)."""

    parent: FunctionField
    poly: tuple  # None for the infinite place

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.is_infinite else fp_deg(self.poly)

    @property
    def residue_order(self):
        return self.parent.q**self.degree

    def label(self):
        from .gf import fq_poly_str

        return "infinity" if self.is_infinite else f"({fq_poly_str(self.parent.base, self.poly)})"

    def __repr__(self):
        return f"PlaceFF{self.label()}"


def place_finite(K, coeffs):
    F = K.base
    poly = fp_monic(F, _as_poly(F, coeffs))
    if fp_deg(poly) < 1 or not is_irreducible_fq(F, poly):
        raise ValueError("finite places are monic irreducible polynomials")
    return PlaceFF(K, poly)


def place_infinity(K):
    return PlaceFF(K, None)


def _mult_of(F, poly, P):
    m = 0
    while True:
        q, r = fp_divmod(F, poly, P)
        if r:
            return m
        poly = q
        m += 1


def valuation_ff(a, pl):
    """v_P(a); at infinity this is deg(den) - deg(num)."""
    if a.is_zero():
        raise ZeroElement("valuation of zero")
    if pl.is_infinite:
        return fp_deg(a.den) - fp_deg(a.num)
    F = a.parent.base
    return _mult_of(F, a.num, pl.poly) - _mult_of(F, a.den, pl.poly)


def places_dividing(a):
    """All places with nonzero valuation, the infinite place included."""
    if a.is_zero():
        raise ZeroElement("support of zero")
    K = a.parent
    F = K.base
    out = []
    for part in (a.num, a.den):
        if fp_deg(part) < 1:
            continue
        _, facs = poly_factor_fq(F, part)
        for g, _ in facs:
            P = PlaceFF(K, g)
            if P not in out:
                out.append(P)
    out.sort(key=lambda P: (P.degree, P.poly))
    if fp_deg(a.den) != fp_deg(a.num):
        out.append(place_infinity(K))
    return out


def residue_unit_ff(a, pl):
    """Class of a * pi^(-v) in the residue field of the place.

    At a finite place the residue lives in F_q[x]/(P) and is returned as a
    coefficient tuple over F_q of length deg P; at infinity it is the
    leading-coefficient ratio, an element of F_q.
    """
    if a.is_zero():
        raise ZeroElement("residue of zero")
    F = a.parent.base
    if pl.is_infinite:
        return F.mul(a.num[-1], F.inv(a.den[-1]))
    P = pl.poly
    vn = _mult_of(F, a.num, P)
    vd = _mult_of(F, a.den, P)
    num = a.num
    for _ in range(vn):
        num = fp_divmod(F, num, P)[0]
    den = a.den
    for _ in range(vd):
        den = fp_divmod(F, den, P)[0]
    num_r = fp_divmod(F, num, P)[1]
    den_r = fp_divmod(F, den, P)[1]
    den_inv = _inv_mod(F, den_r, P)
    return fp_divmod(F, fp_mul(F, num_r, den_inv), P)[1]


def _inv_mod(F, g, P):
    """Inverse of g modulo the irreducible P via Fermat in F_q[x]/(P)."""
    order = F.q ** fp_deg(P)
    return fp_powmod(F, g, order - 2, P)


def residue_is_square_ff(a, pl):
    """Euler criterion for the residue of the unit part of a at pl."""
    F = a.parent.base
    if pl.is_infinite:
        return F.is_square_rep(residue_unit_ff(a, pl))
    u = residue_unit_ff(a, pl)
    order = pl.residue_order
    pw = fp_powmod(F, u, (order - 1) // 2, pl.poly)
    return pw == (F.one(),)


def is_local_square_ff(a, pl):
    """Local square test: even valuation and square residue (q odd)."""
    if a.is_zero():
        raise ZeroElement("square test of zero")
    if valuation_ff(a, pl) % 2 != 0:
        return False
    return residue_is_square_ff(a, pl)


def is_square_global_ff(a):
    """a is a square iff its leading unit is a square in F_q and every
    irreducible factor of numerator and denominator has even multiplicity."""
    if a.is_zero():
        raise ZeroElement("square test of zero")
    F = a.parent.base
    lead = F.mul(a.num[-1], F.inv(a.den[-1]))
    if not F.is_square_rep(lead):
        return False
    for part in (a.num, a.den):
        if fp_deg(part) < 1:
            continue
        _, facs = poly_factor_fq(F, part)
        if any(m % 2 for _, m in facs):
            return False
    return True
