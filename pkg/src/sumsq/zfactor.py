"""Exact factorization over Z[x]: Zassenhaus with subset recombination.

Squarefree part, factorization modulo a good prime, Hensel lift past the
Landau-Mignotte bound, then subset recombination.  No lattice reduction:
the defining polynomials this library meets stay at single-digit degrees,
where recombination is cheap.
"""

from itertools import combinations
from math import isqrt

from .errors import ZeroElement
from .gf import FqField, fp_deg, fp_gcd, fp_derivative, fp_trim, poly_factor_fq
from .hensel import hensel_lift_factors, zm_red
from .intfun import primes_from
from .qpoly import (
    degree,
    divmod_q,
    mul,
    primitive_z,
    squarefree_decomposition_q,
    to_int_poly,
    trim,
)


def _sym(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _monicize(f):
    """G monic in Z[x] with the roots of f scaled by lc(f): G(x) = lc^(n-1) f(x/lc)."""
    n = degree(f)
    lc = f[-1]
    return tuple(f[i] * lc ** (n - 1 - i) for i in range(n)) + (1,)


def _demonicize_factor(h, lc):
    """Map a monic factor of G back to a primitive factor of f: pp(h(lc*x))."""
    g = tuple(h[i] * lc**i for i in range(len(h)))
    return primitive_z(g)[0]


def _mignotte_bound(f):
    n = degree(f)
    norm = isqrt(sum(c * c for c in f)) + 1
    return 2**n * norm * abs(f[-1])


def _divides_z(d, f):
    """Exact divisibility test in Z[x]."""
    q, r = divmod_q(tuple(map(int, f)), tuple(map(int, d)))
    if r:
        return None
    qi = tuple(int(c) if c == int(c) else None for c in q)
    if any(c is None for c in qi):
        return None
    return qi


def _factor_squarefree_primitive(f):
    """Irreducible factors of a squarefree primitive f in Z[x] (positive lc)."""
    if degree(f) == 1:
        return [f]
    G = _monicize(f)
    lc = f[-1]
    for p in primes_from(3):
        if lc % p == 0:
            continue
        Fp = FqField(p, 1)
        fbar = fp_trim(Fp, [c % p for c in G])
        if fp_deg(fbar) != degree(G):
            continue
        if fp_deg(fp_gcd(Fp, fbar, fp_derivative(Fp, fbar))) != 0:
            continue
        break
    _, modfacs = poly_factor_fq(Fp, fbar)
    mod_factors = [fac for fac, _ in modfacs]
    if len(mod_factors) == 1:
        return [f]
    bound = _mignotte_bound(G)
    a = 1
    while p**a < 2 * bound + 1:
        a += 1
    m = p**a
    lifted = hensel_lift_factors(zm_red(G, m), mod_factors, p, a)

    # subset recombination against the monic transform
    out = []
    remaining = list(range(len(lifted)))
    current = G
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in combinations(remaining, size):
            prod = (1,)
            for i in combo:
                prod = trim([_sym(c, m) for c in _mul_mod(prod, lifted[i], m)])
            q = _divides_z(prod, current)
            if q is not None:
                out.append(_demonicize_factor(prod, lc))
                for i in combo:
                    remaining.remove(i)
                current = q
                found = True
                break
        if not found:
            size += 1
    if degree(current) > 0:
        out.append(_demonicize_factor(current, lc))
    return out


def _mul_mod(f, g, m):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return tuple(c % m for c in out)


def poly_factor_z(f):
    """Factor a nonzero integer polynomial into primitive irreducibles.

    Returns a list of (primitive irreducible factor with positive leading
    coefficient, multiplicity); the rational constant f / prod factors^mult
    is not part of the list.  Constant input yields an empty list.
    """
    f = trim(f)
    if not f:
        raise ZeroElement("cannot factor the zero polynomial")
    if degree(f) == 0:
        return []
    out = {}
    for sqfree, mult in squarefree_decomposition_q(f):
        g, _ = to_int_poly(sqfree)
        g, _ = primitive_z(g)
        for irr in _factor_squarefree_primitive(g):
            out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda t: (degree(t[0]), t[0]))


def is_irreducible_z(f):
    """Irreducibility over Q of a nonconstant integer polynomial."""
    f = trim(f)
    if degree(f) < 1:
        return False
    facs = poly_factor_z(f)
    return len(facs) == 1 and facs[0][1] == 1 and degree(facs[0][0]) == degree(f)
