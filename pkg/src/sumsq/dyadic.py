"""Dyadic completions K_d at primes over 2, at finite working precision.

A completion is Z_2[x]/(F) with F a Hensel-lifted factor of the defining
polynomial known modulo 2^N.  Elements of the valuation ring are coefficient
tuples modulo 2^N.  Working precision is an internal concern: any routine
that detects it might not have enough bits raises PrecisionExhausted, and
the public entry points rebuild the completion at doubled N and retry, so
every value returned is exact.

Square testing uses the classical principal-unit bound: a unit u is a
square iff it is congruent to a square modulo 2^3 (since 8*O sits inside
p^(2e+1)).  The set of unit squares mod 8 is precomputed per completion.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import PrecisionExhausted, ZeroElement
from .gf import FqField, fp_deg, fp_divmod, fp_trim, poly_factor_fq
from .hensel import hensel_lift_factors
from .places import PrimeIdealNF, split_prime, valuation


@dataclass(frozen=True)
class DyadicCompletion:
    """K_d = Q_2[x]/(F), with F known modulo 2^N."""

    prime: PrimeIdealNF
    N: int
    F: tuple  # monic, coefficients in [0, 2^N)

    @property
    def e(self):
        return self.prime.e

    @property
    def f_deg(self):
        return self.prime.f_deg

    @property
    def d(self):
        return self.prime.e * self.prime.f_deg

    @property
    def mod(self):
        return 1 << self.N

    def __repr__(self):
        return f"DyadicCompletion({self.prime.label()}, d={self.d}, N={self.N})"


@dataclass(frozen=True)
class LocalElem:
    """Image of a field element: exact valuation plus a unit part.

    The unit part u satisfies a ~ u * pi^val modulo unit squares and is
    known modulo 2^bits (bits >= 3, enough to decide square classes).
    """

    parent: DyadicCompletion
    val: int
    unit: tuple
    bits: int


@lru_cache(maxsize=None)
def grouped_dyadic_factors(K, N):
    """Hensel lift of f = prod gbar_i^{e_i} mod 2 to mod 2^N, one factor per prime.

    Returns a tuple of monic int tuples ordered like split_prime(K, 2).
    """
    primes = split_prime(K, 2)
    F2 = FqField(2, 1)
    groups = []
    for P in primes:
        g = tuple(int(c) % 2 for c in P.gbar)
        acc = (1,)
        for _ in range(P.e):
            prod = [0] * (len(acc) + len(g) - 1)
            for i, a in enumerate(acc):
                if a:
                    for j, b in enumerate(g):
                        prod[i + j] += a * b
            acc = tuple(c % 2 for c in prod)
        groups.append(fp_trim(F2, acc))
    lifted = hensel_lift_factors(tuple(K.poly), list(groups), 2, N)
    return tuple(tuple(f) for f in lifted)


def dyadic_completion(P, N=None):
    """The completion at a prime over 2, at working precision 2^N.

    N defaults to max(16, 4e+6); smaller requests are raised to that floor.
    """
    floor = max(16, 4 * P.e + 6)
    N = floor if N is None else max(N, floor)
    facs = grouped_dyadic_factors(P.parent, N)
    return DyadicCompletion(prime=P, N=N, F=facs[P.index])


def escalate(D):
    return dyadic_completion(D.prime, 2 * D.N)


# ---------------------------------------------------------------------------
# arithmetic in O/2^N = (Z/2^N)[x]/(F)


def _red(D, coeffs):
    """Reduce an int coefficient list modulo (2^N, F) to a length-d tuple."""
    m = D.mod
    out = [c % m for c in coeffs]
    d = D.d
    F = D.F
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            for j in range(d):
                out[i - d + j] = (out[i - d + j] - c * F[j]) % m
        out[i] = 0
    out = out[:d] + [0] * (d - len(out))
    return tuple(out[:d])


def _lmul(D, u, v):
    out = [0] * (2 * D.d - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return _red(D, out)


def _lsub(D, u, v):
    m = D.mod
    return tuple((a - b) % m for a, b in zip(u, v))


def _lscale(D, u, c):
    m = D.mod
    return tuple(a * c % m for a in u)


@lru_cache(maxsize=None)
def _pi_powers(D):
    """Images of pi^0 .. pi^(2e) in O/2^N."""
    img = _embed_integral(D, D.prime.pi)
    out = [_red(D, (1,))]
    for _ in range(2 * D.e):
        out.append(_lmul(D, out[-1], img))
    return tuple(out)


def _embed_integral(D, a):
    """Image of an element with integral coordinates."""
    b, c = a.denominator_clear()
    if c != 1:
        raise ValueError("element is not integral")
    return _red(D, [int(x) for x in b.coords])


@lru_cache(maxsize=None)
def _gbar2(D):
    """gbar as an F_2 polynomial (the residue map data)."""
    return tuple(int(c) % 2 for c in D.prime.gbar)


def _gbar_multiplicity(D, wmod2):
    """Multiplicity of gbar in a nonzero polynomial over F_2."""
    F2 = FqField(2, 1)
    g = _gbar2(D)
    w = fp_trim(F2, wmod2)
    m = 0
    while True:
        q, r = fp_divmod(F2, w, g)
        if r:
            return m
        m += 1
        w = q


def _local_val(D, z, bits):
    """Valuation of a nonzero z in O/2^bits; raises when precision runs out."""
    t = 0
    cur = list(z)
    while True:
        if t >= bits - 1:
            raise PrecisionExhausted
        if all(c % (1 << (t + 1)) == 0 for c in cur):
            t += 1
            continue
        break
    w2 = [(c >> t) & 1 for c in cur]
    m = _gbar_multiplicity(D, w2)
    return D.e * t + m


def _unit_class(D, z, bits, val):
    """Unit part mod 8 of z with v(z) = val; z ~ unit * pi^val mod squares."""
    e = D.e
    S = -(-val // (2 * e)) if val > 0 else 0
    k = 2 * e * S - val
    u = _lmul(D, z, _pi_powers(D)[k]) if k else tuple(z)
    shift = 2 * S
    if bits - shift < 3:
        raise PrecisionExhausted
    mask = (1 << shift) - 1
    if any(c & mask for c in u):
        raise ArithmeticError("unit extraction: inexact 2-power division")  # pragma: no cover
    u = tuple((c >> shift) & 7 for c in u)
    return u


@lru_cache(maxsize=None)
def _square_classes_mod8(D):
    """All squares w^2 mod (8, F); w^2 mod 8 only depends on w mod 4."""
    F8 = tuple(c % 8 for c in D.F[: D.d]) + (1,)
    d = D.d
    seen = set()

    def mul8(u, v):
        out = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    out[i + j] += a * b
        for i in range(len(out) - 1, d - 1, -1):
            c = out[i] % 8
            if c:
                for j in range(d):
                    out[i - d + j] = (out[i - d + j] - c * F8[j]) % 8
            out[i] = 0
        return tuple(x % 8 for x in out[:d])

    def rec(prefix):
        if len(prefix) == d:
            seen.add(mul8(tuple(prefix), tuple(prefix)))
            return
        for c in range(4):
            rec(prefix + [c])

    rec([])
    return frozenset(seen)


# ---------------------------------------------------------------------------
# public operations


def embed_dyadic(a, D):
    """Exact valuation and unit part of the image of a in K_d.

    Escalates the working precision internally as needed; the completion
    referenced by the returned LocalElem may be finer than the one passed.
    """
    if a.is_zero():
        raise ZeroElement("embedding of zero")
    P = D.prime
    v = valuation(a, P)
    # u_exact = a * pi^(2eS - v) / 2^(2S) is a unit in the same square class
    # as a * pi^(-v); its image gives the unit part.
    e = P.e
    S = -(-v // (2 * e)) if v > 0 else 0
    u_exact = a * P.pi ** (2 * e * S - v) / (1 << (2 * S)) if (2 * e * S - v) or S else a
    while True:
        try:
            img, bits = _embed_image(D, u_exact)
            if bits < 3:
                raise PrecisionExhausted
            unit = tuple(c % (1 << bits) for c in img)
            if all(c % 2 == 0 for c in unit) or _gbar_multiplicity(D, [c & 1 for c in unit]):
                raise ArithmeticError("unit part is not a unit")  # pragma: no cover
            return LocalElem(parent=D, val=v, unit=unit, bits=bits)
        except PrecisionExhausted:
            D = escalate(D)


def _embed_image(D, a):
    """(image, bits) of an element with v >= 0 at D's prime.

    Denominators are stripped exactly: the odd part by modular inversion,
    the 2-part by an exact coefficient shift (valid because v(a) >= 0).
    """
    b, c = a.denominator_clear()
    t = 0
    while c % 2 == 0:
        c //= 2
        t += 1
    img = _red(D, [int(x) for x in b.coords])
    bits = D.N - t
    if bits < 1:
        raise PrecisionExhausted
    mask = (1 << t) - 1
    if any(x & mask for x in img):
        raise PrecisionExhausted  # not enough precision to witness divisibility
    img = tuple(x >> t for x in img)
    if c != 1:
        cinv = pow(c, -1, 1 << bits)
        img = tuple(x * cinv % (1 << bits) for x in img)
    return img, bits


def is_local_square_dyadic(a, D):
    """True iff a is a square in K_d: even valuation and square unit class."""
    le = embed_dyadic(a, D)
    if le.val % 2 != 0:
        return False
    u8 = tuple(c % 8 for c in le.unit)
    return u8 in _square_classes_mod8(le.parent)


def minus_one_minus_one_dyadic(D):
    """(-1,-1) at the dyadic place: +1 iff the local degree d is even."""
    return 1 if D.d % 2 == 0 else -1


@lru_cache(maxsize=None)
def _minus_one_square(D):
    K = D.prime.parent
    return is_local_square_dyadic(K(-1), D)


@lru_cache(maxsize=None)
def _s_star(D):
    """Largest s <= e with -1 a square modulo p^(2s); 0 when there is none.

    Only meaningful when -1 is not a local square; bounds the denominator
    depth of two-square representations.
    """
    for s in range(D.e, 0, -1):
        want = 2 * s
        one = _red(D, (1,))
        found = False
        for u in _enum_residues(D, want):
            z = tuple((a + b) % D.mod for a, b in zip(_lmul(D, u, u), one))
            try:
                if _local_val(D, z, D.N) >= want:
                    found = True
                    break
            except PrecisionExhausted:  # u^2 + 1 = 0 beyond precision: deep square
                found = True
                break
        if found:
            return s
    return 0


@lru_cache(maxsize=None)
def _residue_lifts(D):
    """Lifts of the residue field F_2^f: polynomials with 0/1 coefficients."""
    f = D.f_deg
    out = []

    def rec(prefix):
        if len(prefix) == f:
            out.append(_red(D, tuple(prefix)))
            return
        for c in (0, 1):
            rec(prefix + [c])

    rec([])
    return tuple(out)


def _enum_residues(D, k):
    """All representatives of O/p^k as sums of digits c_i * pi^i (DFS order)."""
    reps = _residue_lifts(D)
    img_pi = _embed_integral(D, D.prime.pi)
    pi_pows = [_red(D, (1,))]
    for _ in range(k - 1):
        pi_pows.append(_lmul(D, pi_pows[-1], img_pi))
    m = D.mod
    zero = tuple([0] * D.d)

    def rec(i, acc):
        if i == k:
            yield acc
            return
        for r in reps:
            if r == zero:
                yield from rec(i + 1, acc)
            else:
                term = _lmul(D, r, pi_pows[i]) if i else r
                yield from rec(i + 1, tuple((a + b) % m for a, b in zip(acc, term)))

    yield from rec(0, zero)


def sum_of_two_squares_dyadic(a, D):
    """Whether a is a sum of two squares in K_d (the symbol (-1, a)_d = +1).

    The element is first normalized to valuation 0 or 1 by dividing by even
    powers of the uniformizer.  Squares and the hyperbolic case (-1 itself a
    local square) answer immediately; otherwise y runs over a residue system
    of O/p^(4e+2s*+3) and a - y^2 is tested for squareness, where s* bounds
    how deep -1 approximates a square.  With -1 not a square, any exact
    representation has coordinate valuations >= -s*, which makes the
    enumeration complete at this depth.
    """
    if a.is_zero():
        raise ZeroElement("two-square test of zero")
    P = D.prime
    v = valuation(a, P)
    a_norm = a / P.pi ** (2 * (v // 2)) if v // 2 else a
    if is_local_square_dyadic(a_norm, D):
        return True
    if _minus_one_square(D):
        return True
    s = _s_star(D)
    b = a_norm * P.pi ** (2 * s) if s else a_norm
    k = 4 * D.e + 2 * s + 3
    while True:
        D_cur = dyadic_completion(P, max(D.N, k + 8))
        try:
            return _two_square_scan(D_cur, b, k)
        except PrecisionExhausted:
            D = escalate(D_cur)


def _two_square_scan(D, b, k):
    img_b, bits = _embed_image(D, b)
    if bits < k + 6:
        raise PrecisionExhausted
    sq8 = _square_classes_mod8(D)
    mod_bits = 1 << bits
    img_b = tuple(c % mod_bits for c in img_b)
    for y in _enum_residues(D, k):
        y2 = _lmul(D, y, y)
        z = tuple((p - q) % mod_bits for p, q in zip(img_b, y2))
        # b - y^2 is never exactly zero here (b is not a square), so the
        # valuation is finite and precision escalation resolves any overflow.
        val = _local_val(D, z, bits)
        if val % 2 != 0:
            continue
        u8 = _unit_class(D, z, bits, val)
        if u8 in sq8:
            return True
    return False
