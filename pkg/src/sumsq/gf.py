"""Finite fields F_q (q = p^k) and univariate polynomial factorization.

Element representation is lightweight: an element of F_p is an int in
[0, p), an element of F_{p^k} with k > 1 is a k-tuple of such ints (the
coefficients of its representative modulo the field's defining polynomial).
`FqElem` is a thin operator-overloading wrapper around a (field, rep) pair.

Factorization is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting.  The equal-degree stage draws its random
polynomials from a generator seeded by a hash of the input, so results are
reproducible across runs and machines.
"""

import hashlib
import random
from dataclasses import dataclass

from .errors import CharacteristicTwo, ZeroElement
from .intfun import factor_integer, is_prime

# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FqField:
    """The field with p^k elements; modulus is None exactly when k == 1."""

    p: int
    k: int
    modulus: tuple = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if (self.modulus is None) != (self.k == 1):
            raise ValueError("modulus required exactly for k > 1")
        if self.modulus is not None:
            if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")

    @property
    def q(self):
        return self.p**self.k

    # -- element reps ------------------------------------------------------

    def zero(self):
        return 0 if self.k == 1 else (0,) * self.k

    def one(self):
        return 1 if self.k == 1 else (1,) + (0,) * (self.k - 1)

    def gen(self):
        """Rep of the residue class of x (only meaningful for k > 1)."""
        if self.k == 1:
            raise ValueError("prime field has no extension generator")
        return (0, 1) + (0,) * (self.k - 2)

    def coerce(self, x):
        if isinstance(x, FqElem):
            if x.parent != self:
                raise ValueError("element of a different field")
            return x.rep
        if isinstance(x, int):
            r = x % self.p
            return r if self.k == 1 else (r,) + (0,) * (self.k - 1)
        if isinstance(x, tuple):
            if self.k == 1:
                raise ValueError("tuple rep in a prime field")
            if len(x) != self.k:
                x = tuple(x[i] if i < len(x) else 0 for i in range(self.k))
            return tuple(c % self.p for c in x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.q}")

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.k == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        out = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # reduce modulo the (monic) defining polynomial
        m = self.modulus
        for i in range(len(out) - 1, self.k - 1, -1):
            c = out[i] % self.p
            if c:
                for j in range(self.k):
                    out[i - self.k + j] -= c * m[j]
            out[i] = 0
        return tuple(c % self.p for c in out[: self.k])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroElement("inverse of zero")
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc = self.one()
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def is_zero(self, a):
        return a == 0 if self.k == 1 else all(c == 0 for c in a)

    def is_square_rep(self, a):
        """Euler criterion; characteristic must be odd."""
        if self.p == 2:
            raise CharacteristicTwo("square classes are trivial in characteristic 2")
        if self.is_zero(a):
            raise ZeroElement("square test of zero")
        return self.pow(a, (self.q - 1) // 2) == self.one()

    def elements(self):
        """All q element reps, lexicographic."""
        if self.k == 1:
            yield from range(self.p)
            return
        def rec(prefix):
            if len(prefix) == self.k:
                yield tuple(prefix)
                return
            for c in range(self.p):
                yield from rec(prefix + [c])
        yield from rec([])

    def first_nonsquare(self):
        """Smallest nonsquare in the deterministic element order (q odd)."""
        for rep in self.elements():
            if not self.is_zero(rep) and not self.is_square_rep(rep):
                return rep
        raise ArithmeticError("no nonsquare found")  # pragma: no cover

    def __repr__(self):
        return f"F_{self.q}"


@dataclass(frozen=True)
class FqElem:
    parent: FqField
    rep: object

    def __add__(self, other):
        o = self.parent.coerce(other)
        return FqElem(self.parent, self.parent.add(self.rep, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self.parent.coerce(other)
        return FqElem(self.parent, self.parent.sub(self.rep, o))

    def __rsub__(self, other):
        o = self.parent.coerce(other)
        return FqElem(self.parent, self.parent.sub(o, self.rep))

    def __mul__(self, other):
        o = self.parent.coerce(other)
        return FqElem(self.parent, self.parent.mul(self.rep, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FqElem(self.parent, self.parent.neg(self.rep))

    def __truediv__(self, other):
        o = self.parent.coerce(other)
        return FqElem(self.parent, self.parent.mul(self.rep, self.parent.inv(o)))

    def __pow__(self, e):
        return FqElem(self.parent, self.parent.pow(self.rep, e))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.parent == other.parent and self.rep == other.rep
        try:
            return self.rep == self.parent.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.rep))

    def is_zero(self):
        return self.parent.is_zero(self.rep)

    def __repr__(self):
        if self.parent.k == 1:
            return str(self.rep)
        terms = []
        for i, c in enumerate(self.rep):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    lead = "" if c == 1 else f"{c}*"
                    terms.append(f"{lead}g" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) or "0"


def is_square_fq(u):
    """True iff the nonzero FqElem u is a square (odd characteristic)."""
    return u.parent.is_square_rep(u.rep)


# ---------------------------------------------------------------------------
# polynomials over F_q: coefficient tuples of element reps


def fp_trim(F, f):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return tuple(f)


def fp_deg(f):
    return len(f) - 1


def fp_add(F, f, g):
    n = max(len(f), len(g))
    z = F.zero()
    return fp_trim(
        F,
        [F.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)],
    )


def fp_neg(F, f):
    return tuple(F.neg(c) for c in f)


def fp_sub(F, f, g):
    return fp_add(F, f, fp_neg(F, g))


def fp_scale(F, f, c):
    if F.is_zero(c):
        return ()
    return tuple(F.mul(a, c) for a in f)


def fp_mul(F, f, g):
    if not f or not g:
        return ()
    out = [F.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return fp_trim(F, out)


def fp_divmod(F, f, g):
    if not g:
        raise ZeroElement("polynomial division by zero")
    inv_lc = F.inv(g[-1])
    q = [F.zero()] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g):
        if F.is_zero(r[-1]):
            r.pop()
            continue
        c = F.mul(r[-1], inv_lc)
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] = F.sub(r[k + i], F.mul(c, g[i]))
        r.pop()
    return fp_trim(F, q), fp_trim(F, r)


def fp_rem(F, f, g):
    return fp_divmod(F, f, g)[1]


def fp_monic(F, f):
    if not f:
        return ()
    return fp_scale(F, f, F.inv(f[-1]))


def fp_gcd(F, f, g):
    a, b = fp_trim(F, f), fp_trim(F, g)
    while b:
        a, b = b, fp_rem(F, a, b)
    return fp_monic(F, a)


def fp_eval(F, f, x):
    acc = F.zero()
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def fp_derivative(F, f):
    return fp_trim(F, [F.mul(F.coerce(i), f[i]) for i in range(1, len(f))])


def fp_powmod(F, base, e, mod):
    acc = (F.one(),)
    b = fp_rem(F, base, mod)
    while e:
        if e & 1:
            acc = fp_rem(F, fp_mul(F, acc, b), mod)
        b = fp_rem(F, fp_mul(F, b, b), mod)
        e >>= 1
    return acc


def _fp_pth_root(F, f):
    """Inverse Frobenius on coefficients: g with g(x)^p = f(x^p) pattern."""
    root = lambda c: F.pow(c, F.p ** (F.k - 1)) if F.k > 1 else c
    return tuple(root(f[i]) for i in range(0, len(f), F.p))


def squarefree_decomposition_fq(F, f):
    """[(monic squarefree g_i, multiplicity m_i)] with f = lc * prod g_i^m_i."""
    f = fp_monic(F, f)
    out = {}

    def work(g, mult):
        if fp_deg(g) < 1:
            return
        d = fp_derivative(F, g)
        if not d:
            # g = h(x^p); recurse on the p-th root with multiplied exponent
            work(_fp_pth_root(F, g), mult * F.p)
            return
        c = fp_gcd(F, g, d)
        w = fp_divmod(F, g, c)[0]
        i = 1
        while fp_deg(w) > 0:
            y = fp_gcd(F, w, c)
            z = fp_divmod(F, w, y)[0]
            if fp_deg(z) > 0:
                out[z] = out.get(z, 0) + i * mult
            w = y
            c = fp_divmod(F, c, y)[0]
            i += 1
        if fp_deg(c) > 0:
            work(c, mult)  # c is a p-th power; the derivative-zero branch scales mult

    work(f, 1)
    # merge any repeated squarefree parts coming from the p-power branch
    return sorted(out.items(), key=lambda t: (fp_deg(t[0]), t[0]))


def _seed_for(F, f):
    h = hashlib.sha256(repr((F.p, F.k, F.modulus, tuple(f))).encode()).digest()
    return int.from_bytes(h[:8], "big")


def _distinct_degree(F, f):
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    out = []
    h = (F.zero(), F.one())  # x
    x = (F.zero(), F.one())
    d = 0
    while fp_deg(f) > 2 * d:
        d += 1
        h = fp_powmod(F, h, F.q, f)
        g = fp_gcd(F, fp_sub(F, h, x), f)
        if fp_deg(g) > 0:
            out.append((g, d))
            f = fp_divmod(F, f, g)[0]
            h = fp_rem(F, h, f)
    if fp_deg(f) > 0:
        out.append((f, fp_deg(f)))
    return out


def _rand_poly(F, n, rng):
    if F.k == 1:
        return fp_trim(F, [rng.randrange(F.p) for _ in range(n)])
    return fp_trim(F, [tuple(rng.randrange(F.p) for _ in range(F.k)) for _ in range(n)])


def _equal_degree_split(F, f, d, rng):
    """Split monic squarefree f = product of irreducibles all of degree d."""
    n = fp_deg(f)
    if n == d:
        return [f]
    while True:
        h = _rand_poly(F, n, rng)
        if fp_deg(h) < 1:
            continue
        g = fp_gcd(F, h, f)
        if 0 < fp_deg(g) < n:
            pass
        elif F.p == 2:
            # char 2: additive trace map sum h^(2^i), i < k*d
            t = fp_rem(F, h, f)
            acc = t
            for _ in range(F.k * d - 1):
                t = fp_rem(F, fp_mul(F, t, t), f)
                acc = fp_add(F, acc, t)
            g = fp_gcd(F, acc, f)
        else:
            w = fp_powmod(F, h, (F.q**d - 1) // 2, f)
            g = fp_gcd(F, fp_sub(F, w, (F.one(),)), f)
        if 0 < fp_deg(g) < n:
            rest = fp_divmod(F, f, g)[0]
            return _equal_degree_split(F, g, d, rng) + _equal_degree_split(F, rest, d, rng)


def poly_factor_fq(F, f):
    """Factor a nonzero polynomial over F_q.

    Returns (lc, [(monic irreducible coeff tuple, multiplicity)]) with the
    factor list sorted by (degree, coefficients); deterministic because the
    equal-degree stage is seeded from a hash of the input.
    """
    f = fp_trim(F, f)
    if not f:
        raise ZeroElement("cannot factor the zero polynomial")
    lc = f[-1]
    if fp_deg(f) == 0:
        return lc, []
    rng = random.Random(_seed_for(F, f))
    factors = {}
    for g, mult in squarefree_decomposition_fq(F, f):
        for h, d in _distinct_degree(F, g):
            for irr in _equal_degree_split(F, h, d, rng):
                factors[irr] = factors.get(irr, 0) + mult
    return lc, sorted(factors.items(), key=lambda t: (fp_deg(t[0]), t[0]))


def is_irreducible_fq(F, f):
    """Rabin irreducibility test over F_q."""
    f = fp_trim(F, f)
    n = fp_deg(f)
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return True
    x = (F.zero(), F.one())
    h = fp_powmod(F, x, F.q**n, f)
    if fp_sub(F, h, x):
        return False
    for r, _ in factor_integer(n):
        h = fp_powmod(F, x, F.q ** (n // r), f)
        if fp_deg(fp_gcd(F, fp_sub(F, h, x), f)) != 0:
            return False
    return True


def monic_polys(F, deg):
    """Monic degree-deg polynomials, most-significant coefficient first.

    The first poly yielded is x^deg; the constant coefficient varies fastest.
    """
    def rec(coeffs):
        if len(coeffs) == deg:
            yield tuple(reversed(coeffs)) + (F.one(),)
            return
        for rep in F.elements():
            yield from rec(coeffs + [rep])
    yield from rec([])


def monic_irreducibles(F):
    """All monic irreducibles, by increasing degree then lexicographic order."""
    deg = 1
    while True:
        for f in monic_polys(F, deg):
            if is_irreducible_fq(F, f):
                yield f
        deg += 1


def canonical_modulus(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    Fp = FqField(p, 1)
    for f in monic_polys(Fp, k):
        if is_irreducible_fq(Fp, f):
            return f
    raise ArithmeticError("unreachable")  # pragma: no cover


def fq_coeff_str(F, rep):
    """Render one coefficient; extension-field elements use the generator g."""
    if F.k == 1:
        return str(rep)
    s = repr(FqElem(F, rep))
    return f"({s})" if "+" in s else s


def fq_poly_str(F, coeffs, var="x"):
    """Human-readable polynomial over F_q."""
    if not coeffs:
        return "0"
    terms = []
    one = F.one()
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if F.is_zero(c):
            continue
        if i == 0:
            terms.append(fq_coeff_str(F, c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == one else f"{fq_coeff_str(F, c)}*{mono}")
    return " + ".join(terms) if terms else "0"


def field_of_order(q):
    """F_q with the canonical defining polynomial when q is not prime."""
    fac = factor_integer(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, k = fac[0]
    if k == 1:
        return FqField(p, 1)
    return FqField(p, k, canonical_modulus(p, k))
