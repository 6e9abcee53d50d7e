"""Dense univariate polynomials over Q and Z as coefficient tuples.

Coefficient index equals the degree of the monomial.  The zero polynomial
is the empty tuple.  Everything is exact: coefficients are ints or
`fractions.Fraction`s and the two mix freely.
"""

from fractions import Fraction
from math import gcd

from .errors import ZeroElement


def trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f):
    return len(f) - 1


def add(f, g):
    n = max(len(f), len(g))
    return trim(tuple((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)))


def neg(f):
    return tuple(-c for c in f)


def sub(f, g):
    return add(f, neg(g))


def scale(f, c):
    if c == 0:
        return ()
    return tuple(c * a for a in f)


def mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return trim(out)


def mul_xk(f, k):
    if not f:
        return ()
    return (0,) * k + tuple(f)


def divmod_q(f, g):
    """Quotient and remainder over Q; g must be nonzero."""
    if not g:
        raise ZeroElement("polynomial division by zero")
    q = [0] * max(0, len(f) - len(g) + 1)
    r = list(f)
    dg, lg = degree(g), g[-1]
    while len(r) >= len(g) and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(g):
            break
        c = Fraction(r[-1], 1) / lg
        k = len(r) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        r.pop()
    return trim(q), trim(r)


def rem_q(f, g):
    return divmod_q(f, g)[1]


def monic_q(f):
    if not f:
        return ()
    lc = Fraction(f[-1])
    return tuple(Fraction(c) / lc for c in f)


def gcd_q(f, g):
    """Monic gcd over Q."""
    a, b = f, g
    while b:
        a, b = b, rem_q(a, b)
    return monic_q(a)


def derivative(f):
    return trim(tuple(i * f[i] for i in range(1, len(f))))


def eval_at(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def content_z(f):
    c = 0
    for a in f:
        c = gcd(c, abs(a))
    return c


def primitive_z(f):
    """Primitive part with positive leading coefficient, and the removed factor."""
    if not f:
        return (), 0
    c = content_z(f)
    if f[-1] < 0:
        c = -c
    return tuple(a // c for a in f), c


def to_int_poly(f):
    """Clear denominators: returns (g over Z, d) with g = d*f, d > 0."""
    d = 1
    for c in f:
        if isinstance(c, Fraction):
            d = d * c.denominator // gcd(d, c.denominator)
    g = tuple(int(c * d) for c in f)
    return g, d


def squarefree_decomposition_q(f):
    """Yun's algorithm over Q: list of (monic factor, multiplicity)."""
    f = monic_q(f)
    out = []
    g = gcd_q(f, derivative(f))
    w = divmod_q(f, g)[0]
    i = 1
    while degree(w) > 0:
        y = gcd_q(w, g)
        z = divmod_q(w, y)[0]
        if degree(z) > 0:
            out.append((monic_q(z), i))
        w = y
        g = divmod_q(g, y)[0]
        i += 1
    return out


def resultant(f, g):
    """res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0 if (degree(f) > 0 or degree(g) > 0) else 1
    if degree(f) == 0:
        return f[-1] ** degree(g) if degree(g) >= 0 else 1
    if degree(g) == 0:
        return g[-1] ** degree(f)
    r = rem_q(f, g)
    sign = -1 if (degree(f) % 2 == 1 and degree(g) % 2 == 1) else 1
    if not r:
        return 0
    return sign * g[-1] ** (degree(f) - degree(r)) * resultant(g, r)


def discriminant(f):
    """Discriminant of a monic polynomial."""
    n = degree(f)
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * resultant(f, derivative(f))


def cauchy_bound(f):
    """Rational B with all real roots of f in (-B, B)."""
    lc = abs(Fraction(f[-1]))
    return 1 + max(abs(Fraction(c)) / lc for c in f[:-1]) if len(f) > 1 else Fraction(1)


def sturm_sequence(f):
    seq = [tuple(map(Fraction, f)), tuple(map(Fraction, derivative(f)))]
    while seq[-1]:
        r = rem_q(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return seq


def _sign_changes(seq, x):
    signs = []
    for p in seq:
        v = eval_at(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f, lo, hi, seq=None):
    """Number of distinct real roots of squarefree f in (lo, hi]."""
    seq = seq or sturm_sequence(f)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def isolate_real_roots(f):
    """Disjoint rational intervals (lo, hi] each holding one real root of f.

    f must be squarefree.  Returned intervals additionally satisfy
    f(lo) != 0 and f(hi) != 0, sorted in increasing order.
    """
    seq = sturm_sequence(f)
    bound = cauchy_bound(f)
    total = count_real_roots(f, -bound, bound, seq)
    out = []

    def split(lo, hi, k):
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while eval_at(f, mid) == 0:
            mid = (lo + mid) / 2
        left = count_real_roots(f, lo, mid, seq)
        split(lo, mid, left)
        split(mid, hi, k - left)

    split(-bound, bound, total)
    return out


def interval_eval(f, lo, hi):
    """Enclosure [m, M] of f over [lo, hi] via interval Horner."""
    m = M = Fraction(f[-1]) if f else Fraction(0)
    for c in reversed(f[:-1]):
        cands = (m * lo, m * hi, M * lo, M * hi)
        m, M = min(cands) + c, max(cands) + c
    return m, M
