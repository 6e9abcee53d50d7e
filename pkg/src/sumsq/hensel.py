"""Hensel lifting of polynomial factorizations and roots modulo p^N.

Polynomials over Z/p^N are plain int tuples with coefficients reduced into
[0, p^N).  All lifted factors are monic, which keeps the divisions exact.
"""

from .errors import ZeroElement


def zm_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def zm_red(f, m):
    return zm_trim([c % m for c in f])


def zm_add(f, g, m):
    n = max(len(f), len(g))
    return zm_trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m for i in range(n)])


def zm_sub(f, g, m):
    n = max(len(f), len(g))
    return zm_trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m for i in range(n)])


def zm_mul(f, g, m):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return zm_trim([c % m for c in out])


def zm_divmod_monic(f, g, m):
    """Division by a monic g over Z/m: exact quotient and remainder."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g):
        c = r[-1] % m
        if c == 0:
            r.pop()
            continue
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] = (r[k + i] - c * g[i]) % m
        r.pop()
    return zm_trim(q), zm_trim(r)


def zm_eval(f, x, m):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % m
    return acc


def _bezout_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p, via extended Euclid over F_p."""
    from .gf import FqField, fp_divmod, fp_mul, fp_sub, fp_trim, fp_scale, fp_deg

    Fp = FqField(p, 1)
    a, b = fp_trim(Fp, [c % p for c in g]), fp_trim(Fp, [c % p for c in h])
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while b:
        q, r = fp_divmod(Fp, a, b)
        a, b = b, r
        s0, s1 = s1, fp_sub(Fp, s0, fp_mul(Fp, q, s1))
        t0, t1 = t1, fp_sub(Fp, t0, fp_mul(Fp, q, t1))
    if fp_deg(a) != 0:
        raise ArithmeticError("factors not coprime mod p")
    inv = pow(a[0], -1, p)
    return fp_scale(Fp, s0, inv), fp_scale(Fp, t0, inv)


def _lift_pair(f, g, h, s, t, p, k_from, k_to):
    """Quadratic lift of f = g*h (g, h monic) with s*g + t*h = 1, p^k_from -> p^k_to."""
    k = k_from
    while k < k_to:
        k = min(2 * k, k_to)
        m = p**k
        e = zm_sub(zm_red(f, m), zm_mul(g, h, m), m)
        q, r = zm_divmod_monic(zm_mul(s, e, m), h, m)
        g = zm_add(g, zm_add(zm_mul(t, e, m), zm_mul(q, g, m), m), m)
        h = zm_add(h, r, m)
        b = zm_sub(zm_add(zm_mul(s, g, m), zm_mul(t, h, m), m), (1,), m)
        c, d = zm_divmod_monic(zm_mul(s, b, m), h, m)
        s = zm_sub(s, d, m)
        t = zm_sub(t, zm_add(zm_mul(t, b, m), zm_mul(c, g, m), m), m)
    return g, h, s, t


def hensel_lift_factors(f, factors_mod_p, p, N):
    """Lift pairwise-coprime monic factors of monic f from mod p to mod p^N.

    factors_mod_p: list of monic int tuples whose product is f mod p.
    Returns monic lifts whose product is f mod p^N, in the same order.
    """
    f = zm_red(f, p**N)
    if len(factors_mod_p) == 1:
        return [f]
    half = len(factors_mod_p) // 2
    left, right = factors_mod_p[:half], factors_mod_p[half:]
    g0 = (1,)
    for fac in left:
        g0 = zm_mul(g0, fac, p)
    h0 = (1,)
    for fac in right:
        h0 = zm_mul(h0, fac, p)
    s0, t0 = _bezout_mod_p(g0, h0, p)
    g, h, _, _ = _lift_pair(f, g0, h0, s0, t0, p, 1, N)
    return hensel_lift_factors(g, left, p, N) + hensel_lift_factors(h, right, p, N)


def lift_root(f, r, p, N):
    """Newton-lift a simple root r of f mod p to mod p^N."""
    fp = tuple(i * f[i] for i in range(1, len(f)))
    if zm_eval(fp, r, p) == 0:
        raise ZeroElement("root is not simple mod p")
    k = 1
    while k < N:
        k = min(2 * k, N)
        m = p**k
        d = pow(zm_eval(fp, r, m), -1, m)
        r = (r - zm_eval(f, r, m) * d) % m
    return r


def lift_sqrt(a, s, p, N):
    """Newton-lift s with s^2 = a mod p (p odd, a unit) to mod p^N."""
    k = 1
    while k < N:
        k = min(2 * k, N)
        m = p**k
        s = (s + a * pow(s, -1, m)) * pow(2, -1, m) % m
    return s
