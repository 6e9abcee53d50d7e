"""Number fields K = Q[x]/(f) with exact power-basis arithmetic.

Elements carry their coordinates as Fractions with respect to the power
basis of a root theta of the monic integral defining polynomial.  Real
embeddings are isolating rational intervals refined on demand; all sign
computations are exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DivisionByZero, ReduciblePolynomial, ZeroElement
from .qpoly import (
    degree,
    discriminant,
    eval_at,
    interval_eval,
    isolate_real_roots,
    monic_q,
    mul,
    rem_q,
    sub,
    trim,
)
from .zfactor import is_irreducible_z, poly_factor_z


@dataclass(frozen=True)
class NumberField:
    """Q[x]/(f) for a monic integral irreducible f.

    `input_poly` and `gen_scale` record the normalization applied to the
    user's defining polynomial: theta = gen_scale * alpha where alpha is a
    root of the input and theta the root of `poly` actually used.
    """

    poly: tuple  # monic integral coefficients
    input_poly: tuple
    gen_scale: Fraction
    disc: int

    @property
    def n(self):
        return degree(self.poly)

    def __call__(self, value):
        """Coerce a rational (or coordinate sequence) into the field."""
        if isinstance(value, NFElem):
            if value.parent != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (int, Fraction)):
            coords = (Fraction(value),) + (Fraction(0),) * (self.n - 1)
            return NFElem(self, coords)
        coords = tuple(Fraction(c) for c in value)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        return NFElem(self, coords)

    def gen(self):
        """The power-basis generator theta (zero in the degree-1 field)."""
        if self.n == 1:
            return self(-Fraction(self.poly[0]))
        return self((0, 1) + (0,) * (self.n - 2))

    def one(self):
        return self(1)

    def zero(self):
        return self(0)

    def __repr__(self):
        return f"NumberField({poly_str(self.poly)})"


def poly_str(coeffs, var="x"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c}")
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    s = terms[0]
    for t in terms[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def nf_new(coeffs):
    """Build the number field defined by an irreducible polynomial over Q.

    Non-monic or non-integral input is normalized by the substitution
    x -> x / c and rescaling, which always produces a monic integral
    polynomial; the applied transform is recorded on the field.
    """
    coeffs = trim(tuple(Fraction(c) for c in coeffs))
    if degree(coeffs) < 1:
        raise ReduciblePolynomial("defining polynomial must be nonconstant")
    f1 = monic_q(coeffs)
    L = 1
    for c in f1:
        L = lcm(L, c.denominator)
    n = degree(f1)
    monic_int = tuple(int(f1[i] * L ** (n - i)) for i in range(n)) + (1,)
    if n > 1 and not is_irreducible_z(monic_int):
        raise ReduciblePolynomial(f"{poly_str(coeffs)} is reducible over Q")
    return NumberField(
        poly=monic_int,
        input_poly=coeffs,
        gen_scale=Fraction(L),
        disc=int(discriminant(monic_int)),
    )


QQ = nf_new((0, 1))  # the rationals, presented as Q[x]/(x)


@lru_cache(maxsize=None)
def _reduction_rows(K):
    """theta^j for j = n .. 2n-2 as integer coordinate rows."""
    n = K.n
    rows = []
    prev = list(K.poly[:-1])  # theta^n = -(f - x^n)
    rows.append(tuple(-c for c in prev))
    for _ in range(n - 2):
        row = [0] + list(rows[-1][: n - 1])
        top = rows[-1][n - 1]
        if top:
            row = [row[i] - top * K.poly[i] for i in range(n)]
        rows.append(tuple(row))
    return rows


@dataclass(frozen=True)
class NFElem:
    parent: NumberField
    coords: tuple

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.parent != self.parent:
                raise ValueError("elements of different fields")
            return other
        return self.parent(other)

    def __add__(self, other):
        o = self._coerce(other)
        return NFElem(self.parent, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NFElem(self.parent, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return NFElem(self.parent, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        n = self.parent.n
        prod = mul(trim(self.coords), trim(o.coords))
        if degree(prod) < n:
            coords = tuple(prod[i] if i < len(prod) else Fraction(0) for i in range(n))
            return NFElem(self.parent, coords)
        rows = _reduction_rows(self.parent)
        out = [prod[i] if i < n else Fraction(0) for i in range(n)]
        for j in range(n, len(prod)):
            cj = prod[j]
            if cj:
                row = rows[j - n]
                for i in range(n):
                    out[i] += cj * row[i]
        return NFElem(self.parent, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # extended Euclid of the coordinate polynomial against f over Q
        a, b = tuple(map(Fraction, self.parent.poly)), trim(self.coords)
        s0, s1 = (), (Fraction(1),)
        while b:
            q, r = _divmod_frac(a, b)
            a, b = b, r
            s0, s1 = s1, sub(s0, mul(q, s1))
        inv_lead = 1 / a[-1] if degree(a) == 0 else None
        if inv_lead is None:
            raise ArithmeticError("defining polynomial not irreducible?")  # pragma: no cover
        s0 = tuple(c * inv_lead for c in s0)
        s0 = rem_q(s0, tuple(map(Fraction, self.parent.poly)))
        coords = tuple(s0[i] if i < len(s0) else Fraction(0) for i in range(self.parent.n))
        return NFElem(self.parent, coords)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.parent.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, NFElem):
            return self.parent == other.parent and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == self.parent(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.coords))

    def norm(self):
        """Field norm N(a) as an exact rational (resultant with f)."""
        from .qpoly import resultant

        A = trim(self.coords)
        if not A:
            return Fraction(0)
        return Fraction(resultant(tuple(map(Fraction, self.parent.poly)), A))

    def denominator_clear(self):
        """(b, c) with integral-coordinate b, positive integer c, self = b/c."""
        c = 1
        for x in self.coords:
            c = lcm(c, x.denominator)
        b = NFElem(self.parent, tuple(x * c for x in self.coords))
        return b, c

    def __repr__(self):
        return poly_str(trim(self.coords), var="a") if not self.is_zero() else "0"


def _divmod_frac(a, b):
    from .qpoly import divmod_q

    return divmod_q(a, b)


# ---------------------------------------------------------------------------
# real embeddings


@dataclass(frozen=True)
class RealEmbedding:
    """An isolating rational interval around one real root of f.

    For degree-1 fields the interval is degenerate (lo == hi == the root).
    """

    parent: NumberField
    index: int
    lo: Fraction
    hi: Fraction

    def refined(self, steps=1):
        """A strictly smaller isolating interval (bisection by f's sign)."""
        if self.lo == self.hi:
            return self
        f = tuple(map(Fraction, self.parent.poly))
        lo, hi = self.lo, self.hi
        s_lo = 1 if eval_at(f, lo) > 0 else -1
        for _ in range(steps):
            mid = (lo + hi) / 2
            v = eval_at(f, mid)
            if v == 0:  # cannot happen for irreducible f of degree >= 2
                hi = mid + (hi - mid) / 2
                continue
            if (1 if v > 0 else -1) == s_lo:
                lo = mid
            else:
                hi = mid
        return RealEmbedding(self.parent, self.index, lo, hi)

    def __repr__(self):
        if self.lo == self.hi:
            return f"real embedding #{self.index} (theta = {self.lo})"
        return f"real embedding #{self.index} (theta in [{self.lo}, {self.hi}])"


@lru_cache(maxsize=None)
def real_embeddings(K):
    """All real embeddings of K, ordered by the embedded value of theta."""
    if K.n == 1:
        root = -Fraction(K.poly[0])
        return (RealEmbedding(K, 0, root, root),)
    f = tuple(map(Fraction, K.poly))
    intervals = isolate_real_roots(f)
    return tuple(RealEmbedding(K, i, lo, hi) for i, (lo, hi) in enumerate(intervals))


def sign_at(a, rho):
    """Sign of rho(a) in {+1, -1} for a nonzero element a."""
    if a.is_zero():
        raise ZeroElement("sign of zero")
    A = trim(a.coords)
    if rho.lo == rho.hi:
        v = eval_at(A, rho.lo)
        return 1 if v > 0 else -1
    emb = rho
    for _ in range(10_000):
        m, M = interval_eval(A, emb.lo, emb.hi)
        if m > 0:
            return 1
        if M < 0:
            return -1
        emb = emb.refined(4)
    raise ArithmeticError("interval refinement failed to separate sign")  # pragma: no cover


def is_totally_positive(a):
    """True iff a is positive under every real embedding (vacuous if none)."""
    if a.is_zero():
        raise ZeroElement("sign of zero")
    return all(sign_at(a, rho) == 1 for rho in real_embeddings(a.parent))
