"""Global square testing in a number field.

Two interleaved procedures, each of which terminates on its half of the
answer: a scan over odd primes with zero valuation looking for a place
where the element is not a local square (the Global Square Theorem
guarantees one exists for a nonsquare), and a 2-adic-style lift at a fully
split auxiliary prime that reconstructs an exact square root (which
succeeds, at sufficient precision, for a square).  Whichever side finishes
first decides; both answers come with verified witnesses.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import SearchBoundExceeded, ZeroElement
from .gf import FqField, fp_deg, fp_trim, poly_factor_fq
from .hensel import lift_root, lift_sqrt, zm_eval
from .intfun import factor_integer, is_perfect_square, primes_from, rational_reconstruct, sqrt_mod
from .places import residue_of_unit_part, split_prime
from .qpoly import trim

_SCAN_BATCH = 24
_AUX_PRIME_BOUND = 1_000_000


@lru_cache(maxsize=None)
def _fully_split_prime(K, avoid):
    """Smallest odd prime, coprime to `avoid`, where f splits into n distinct
    linear factors mod p."""
    for p in primes_from(3):
        if p > _AUX_PRIME_BOUND:
            raise SearchBoundExceeded(
                "no fully split auxiliary prime found",
                {"field": repr(K), "bound": _AUX_PRIME_BOUND},
            )
        if K.disc % p == 0 or avoid % p == 0:
            continue
        if K.n == 1:
            return p, ((-int(K.poly[0])) % p,)
        Fp = FqField(p, 1)
        fbar = fp_trim(Fp, [c % p for c in K.poly])
        if fp_deg(fbar) != K.n:
            continue
        _, facs = poly_factor_fq(Fp, fbar)
        if len(facs) == K.n and all(fp_deg(g) == 1 and m == 1 for g, m in facs):
            roots = tuple(sorted((-g[0]) % p for g, _ in facs))
            return p, roots


def _solve_mod(M, rhs, m, p):
    """Solve M x = rhs mod m for a matrix invertible mod p (m = p^k)."""
    n = len(rhs)
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] % p != 0)
        A[col], A[piv] = A[piv], A[col]
        inv = pow(A[col][col], -1, m)
        A[col] = [v * inv % m for v in A[col]]
        for i in range(n):
            if i != col and A[i][col]:
                c = A[i][col]
                A[i] = [(v - c * w) % m for v, w in zip(A[i], A[col])]
    return [A[i][n] for i in range(n)]


def _scan_witness(a, prime_iter, batch):
    """Check the next `batch` eligible odd primes for a non-square residue."""
    K = a.parent
    b, c = a.denominator_clear()
    bad = 2 * K.disc * int(b.norm().numerator) * c
    seen = 0
    while seen < batch:
        p = next(prime_iter)
        if bad % p == 0:
            continue
        seen += 1
        for P in split_prime(K, p):
            u = residue_of_unit_part(a, P)
            if not u.parent.is_square_rep(u.rep):
                return P
    return None


def _try_lift(a, k):
    """Attempt exact square-root reconstruction at precision p^k.

    Returns (True, w) on success, (False, P) when the auxiliary prime
    itself witnesses a non-square residue, or None when undecided.
    """
    K = a.parent
    b, c = a.denominator_clear()
    nb = int(b.norm().numerator)
    p, roots = _fully_split_prime(K, abs(nb) * c)
    m = p**k
    f = tuple(int(x) for x in K.poly)
    lifted_roots = [lift_root(f, r, p, k) for r in roots]
    coords = [int(x.numerator) * pow(x.denominator, -1, m) % m for x in a.coords]
    values = [zm_eval(tuple(coords), r, m) for r in lifted_roots]
    sqrts = []
    for r, v in zip(roots, values):
        s0 = sqrt_mod(v % p, p)
        if s0 is None:
            # nonresidue coordinate: the place above p at this root refutes
            for P in split_prime(K, p):
                if (-P.gbar[0]) % p == r:
                    return False, P
            raise ArithmeticError("split prime lookup failed")  # pragma: no cover
        sqrts.append(lift_sqrt(v, s0, p, k))
    n = K.n
    V = [[pow(r, j, m) for j in range(n)] for r in lifted_roots]
    for mask in range(1 << (n - 1)):
        rhs = [sqrts[0]] + [
            (sqrts[i + 1] if not (mask >> i) & 1 else (-sqrts[i + 1]) % m) for i in range(n - 1)
        ]
        x = _solve_mod(V, rhs, m, p)
        coords = []
        for xi in x:
            rec = rational_reconstruct(xi, m)
            if rec is None:
                break
            coords.append(Fraction(rec[0], rec[1]))
        else:
            w = K(tuple(coords))
            if w * w == a:
                return True, w
    return None


def is_square_global(a):
    """Decide a in K^2; returns (True, sqrt) or (False, witness place).

    The witness place P satisfies: a is not a local square at P (odd
    valuation or non-QR unit residue), so the refusal is checkable.
    """
    if a.is_zero():
        raise ZeroElement("square test of zero")
    K = a.parent
    if K.n == 1:
        x = a.coords[0]
        if x > 0 and is_perfect_square(x.numerator) and is_perfect_square(x.denominator):
            return True, K(Fraction(isqrt(x.numerator), isqrt(x.denominator)))
        prime_iter = primes_from(3)
        while True:
            P = _scan_witness(a, prime_iter, _SCAN_BATCH)
            if P is not None:
                return False, P
    prime_iter = primes_from(3)
    k = 8
    while True:
        P = _scan_witness(a, prime_iter, _SCAN_BATCH)
        if P is not None:
            return False, P
        res = _try_lift(a, k)
        if res is not None:
            return res
        k *= 2


def is_minus_one_square(K):
    """The level test s(K) = 1, i.e. whether -1 is a square in K."""
    return is_square_global(K(-1))[0]
