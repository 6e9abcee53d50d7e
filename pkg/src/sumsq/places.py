"""Finite places of a number field: Kummer-Dedekind splitting, valuations,
residue fields, and the tame Hilbert symbol.

Scope fence: only primes p at which the equation order Z[theta] is
p-maximal are supported.  The Dedekind criterion certifies this; failures
raise NotPMaximal naming the prime, they are never silently worked around.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotPMaximal, ZeroElement
from .gf import FqField, FqElem, fp_deg, fp_divmod, fp_gcd, fp_trim, poly_factor_fq
from .intfun import factor_integer
from .numberfield import NFElem, NumberField, poly_str, real_embeddings, sign_at
from .qpoly import degree, mul as qmul, sub as qsub, trim


@dataclass(frozen=True)
class PrimeIdealNF:
    """A prime of O_K above p, in Kummer-Dedekind presentation.

    gbar is the monic irreducible factor of f mod p attached to the prime;
    e its multiplicity (= ramification index), f_deg its degree (= residue
    degree).  pi and tau are a verified uniformizer (v = 1) and
    anti-uniformizer (v = -1, nonnegative valuation at the other primes
    above p).
    """

    parent: NumberField
    p: int
    gbar: tuple  # int coefficients mod p
    e: int
    f_deg: int
    pi: NFElem
    tau: NFElem
    index: int

    @property
    def degree(self):
        return self.e * self.f_deg

    def is_dyadic(self):
        return self.p == 2

    def label(self):
        return f"({self.p}, {poly_str(self.gbar)})"

    def __repr__(self):
        return f"PrimeIdealNF{self.label()} e={self.e} f={self.f_deg}"

    def __hash__(self):
        return hash((self.parent, self.p, self.gbar))

    def __eq__(self, other):
        if not isinstance(other, PrimeIdealNF):
            return NotImplemented
        return (self.parent, self.p, self.gbar) == (other.parent, other.p, other.gbar)


@dataclass(frozen=True)
class ResidueField:
    """Residue field K(p) = F_p[x]/(gbar) with theta mapped to the class of x."""

    prime: PrimeIdealNF
    field: FqField

    @property
    def order(self):
        return self.field.q


@lru_cache(maxsize=None)
def dedekind_is_pmaximal(K, p):
    """Dedekind criterion for p-maximality of Z[theta]."""
    Fp = FqField(p, 1)
    fbar = fp_trim(Fp, [c % p for c in K.poly])
    _, facs = poly_factor_fq(Fp, fbar)
    gstar = (1,)
    hstar = (1,)
    for g, e in facs:
        gstar = _zmulp(gstar, g, p)
        for _ in range(e - 1):
            hstar = _zmulp(hstar, g, p)
    # integer lifts with coefficients in [0, p)
    gh = qmul(gstar, hstar)
    T = tuple((a - b) // p for a, b in _pad(K.poly, gh))
    Tbar = fp_trim(Fp, [c % p for c in T])
    d = fp_gcd(Fp, fp_gcd(Fp, Tbar, fp_trim(Fp, gstar)), fp_trim(Fp, hstar))
    return fp_deg(d) == 0


def _zmulp(f, g, p):
    """Product of integer lifts, coefficients renormalized into [0, p)."""
    out = qmul(f, g)
    return tuple(c % p for c in out)


def _pad(f, g):
    n = max(len(f), len(g))
    return [((f[i] if i < len(f) else 0), (g[i] if i < len(g) else 0)) for i in range(n)]


def _integral_at_p(a, p):
    """True iff no coordinate denominator is divisible by p."""
    return all(c.denominator % p != 0 for c in a.coords)


def _tau_valuation(b, tau, p):
    """v(b) at tau's prime for an element b with p-integral coordinates."""
    v = 0
    z = b
    while True:
        z = z * tau
        if not _integral_at_p(z, p):
            return v
        v += 1


@lru_cache(maxsize=None)
def split_prime(K, p):
    """The primes of O_K above p, sorted by (residue degree, gbar).

    Requires Z[theta] to be p-maximal; raises NotPMaximal(p) otherwise.
    Uniformizers and anti-uniformizers are constructed and then verified:
    v(pi) = 1, v(p) = e at every prime, and sum e*f = n.
    """
    if not dedekind_is_pmaximal(K, p):
        raise NotPMaximal(p)
    Fp = FqField(p, 1)
    fbar = fp_trim(Fp, [c % p for c in K.poly])
    _, facs = poly_factor_fq(Fp, fbar)
    facs = sorted(facs, key=lambda t: (fp_deg(t[0]), t[0]))

    primes = []
    for idx, (gbar, e) in enumerate(facs):
        # anti-uniformizer tau = (f / gbar)(theta) / p using integer lifts
        cof = (1,)
        for h, eh in facs:
            ex = eh - 1 if h == gbar else eh
            for _ in range(ex):
                cof = _zmulp(cof, h, p)
        tau_elem = _apply_poly(K, cof) / p
        # uniformizer: first verified candidate among g(theta), p, g(theta)+p
        g_theta = _apply_poly(K, gbar)
        candidates = [g_theta, K(p), g_theta + p]
        pi = None
        for cand in candidates:
            if cand.is_zero():
                continue
            bi, c = cand.denominator_clear()
            if c % p == 0:
                continue
            if _tau_valuation(bi, tau_elem, p) == 1:
                pi = cand
                break
        if pi is None:
            raise ArithmeticError(f"no uniformizer found above {p}")  # pragma: no cover
        primes.append(
            PrimeIdealNF(
                parent=K,
                p=p,
                gbar=gbar,
                e=e,
                f_deg=fp_deg(gbar),
                pi=pi,
                tau=tau_elem,
                index=idx,
            )
        )

    assert sum(P.e * P.f_deg for P in primes) == K.n
    for P in primes:
        assert valuation(K(p), P) == P.e
        assert valuation(P.pi, P) == 1
    return tuple(primes)


def _apply_poly(K, coeffs):
    """Evaluate an integer polynomial at theta."""
    theta = K.gen()
    acc = K.zero()
    for c in reversed(coeffs):
        acc = acc * theta + K(int(c))
    return acc


def valuation(a, P):
    """Exact p-adic valuation v_P(a) of a nonzero element."""
    if a.is_zero():
        raise ZeroElement("valuation of zero")
    b, c = a.denominator_clear()
    vc = 0
    while c % P.p == 0:
        c //= P.p
        vc += 1
    return _tau_valuation(b, P.tau, P.p) - P.e * vc


@lru_cache(maxsize=None)
def residue_field(P):
    f_deg = P.f_deg
    if f_deg == 1:
        return ResidueField(P, FqField(P.p, 1))
    return ResidueField(P, FqField(P.p, f_deg, tuple(int(c) % P.p for c in P.gbar)))


def _reduce_elem(P, a):
    """Image in K(P) of an element with p-integral coordinates."""
    R = residue_field(P)
    p = P.p
    coeffs = []
    for c in a.coords:
        num, den = c.numerator, c.denominator
        coeffs.append(num * pow(den, -1, p) % p)
    Fp = FqField(p, 1)
    red = fp_trim(Fp, coeffs)
    if P.f_deg > 1:
        rem = fp_divmod(Fp, red, tuple(c % p for c in P.gbar))[1]
        rep = tuple(rem[i] if i < len(rem) else 0 for i in range(P.f_deg))
    else:
        # gbar = x - r: theta reduces to r
        r = (-P.gbar[0]) % p
        rep = 0
        for c in reversed(coeffs):
            rep = (rep * r + c) % p
    return FqElem(R.field, rep)


def residue_of_unit_part(a, P):
    """Image of a * tau^v(a) in the residue field, as a nonzero FqElem."""
    if a.is_zero():
        raise ZeroElement("residue of zero")
    b, c = a.denominator_clear()
    s = 0
    while c % P.p == 0:
        c //= P.p
        s += 1
    vb = _tau_valuation(b, P.tau, P.p)
    z = b * P.tau**vb
    res = _reduce_elem(P, z)
    # divide out p^s: p * tau^e is a v-unit with p-integral coordinates
    if s:
        w = _reduce_elem(P, K_p_unit(P))
        res = res * (w ** (-s))
    cinv = pow(c % P.p, -1, P.p)
    return res * cinv


@lru_cache(maxsize=None)
def K_p_unit(P):
    """The v-unit p * tau^e used to strip rational p-powers in residues."""
    return P.parent(P.p) * P.tau**P.e


def is_local_square_nondyadic(a, P):
    """Local square test at an odd place: even valuation and QR residue."""
    if a.is_zero():
        raise ZeroElement("square test of zero")
    if P.p == 2:
        raise ValueError("use the dyadic machinery at places over 2")
    if valuation(a, P) % 2 != 0:
        return False
    u = residue_of_unit_part(a, P)
    return u.parent.is_square_rep(u.rep)


def hilbert_nondyadic(a, b, P):
    """Tame Hilbert symbol (a, b)_P at an odd place, in {+1, -1}.

    With a = pi^alpha * u and b = pi^beta * w this is
    (-1)^(alpha*beta*(q-1)/2) * chi(u)^beta * chi(w)^alpha for the
    quadratic character chi of the residue field.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroElement("Hilbert symbol of zero")
    if P.p == 2:
        raise ValueError("tame formula invalid at dyadic places")
    alpha = valuation(a, P)
    beta = valuation(b, P)
    q = residue_field(P).order
    sym = 1
    if alpha % 2 and beta % 2 and (q - 1) // 2 % 2:
        sym = -sym
    if beta % 2:
        u = residue_of_unit_part(a, P)
        if not u.parent.is_square_rep(u.rep):
            sym = -sym
    if alpha % 2:
        w = residue_of_unit_part(b, P)
        if not w.parent.is_square_rep(w.rep):
            sym = -sym
    return sym


def hilbert_real(a, b, rho):
    """Hilbert symbol at a real place: -1 iff both arguments are negative."""
    if a.is_zero() or b.is_zero():
        raise ZeroElement("Hilbert symbol of zero")
    return -1 if sign_at(a, rho) < 0 and sign_at(b, rho) < 0 else 1


def support_odd_primes(a):
    """All primes P above odd rational primes with v_P(a) != 0.

    Candidates come from factoring the norm of the numerator and the
    rational denominator, then splitting each odd prime factor.
    """
    if a.is_zero():
        raise ZeroElement("support of zero")
    b, c = a.denominator_clear()
    nb = b.norm()
    rational_primes = {p for p, _ in factor_integer(int(nb))} | {
        p for p, _ in factor_integer(c)
    }
    out = []
    for p in sorted(rational_primes):
        if p == 2:
            continue
        for P in split_prime(a.parent, p):
            if valuation(a, P) != 0:
                out.append(P)
    return out
