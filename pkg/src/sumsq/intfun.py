"""Integer primitives: primality, factorization, modular square roots.

Everything here is deterministic.  Primality below 3.3e24 uses a fixed
Miller-Rabin base set that is a proven witness set in that range; above it
the same test is extended with additional fixed bases.
"""

from math import gcd, isqrt

from .errors import ZeroElement

# Proven deterministic witness set for n < 3,317,044,064,679,887,385,961,981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_SMALL_PRIME_LIMIT = 10_000


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit + 1) if flags[i]]


SMALL_PRIMES = _sieve(_SMALL_PRIME_LIMIT)
_SMALL_PRIME_SET = set(SMALL_PRIMES)


def is_prime(n):
    """Deterministic primality test (proven below 3.3e24)."""
    if n < 2:
        return False
    if n <= _SMALL_PRIME_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES if n < 3_317_044_064_679_887_385_961_981 else _MR_BASES + _MR_EXTRA
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start):
    """Yield primes >= start in increasing order."""
    n = max(2, start)
    if n == 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def next_prime(n):
    """Smallest prime >= n."""
    return next(primes_from(n))


def _pollard_rho(n):
    # Brent's cycle variant with a deterministic parameter schedule.
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        f = lambda v: (v * v + c) % n
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")  # pragma: no cover


def factor_integer(n):
    """Exact prime factorization of a nonzero integer.

    Returns a sorted list of (prime, exponent) pairs for |n|; the sign is
    the caller's business.
    """
    if n == 0:
        raise ZeroElement("cannot factor 0")
    n = abs(n)
    out = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(out.items())


def is_perfect_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def sqrt_mod(a, p):
    """A square root of a modulo an odd prime p, or None if a is not a QR."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks with the smallest nonresidue as the generator.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def rational_reconstruct(c, m):
    """Rational number n/d with n ≡ c*d (mod m), |n|,|d| <= sqrt(m/2).

    Standard half-extended Euclid; returns (n, d) with d > 0 or None when
    no representative exists at this precision.
    """
    c %= m
    bound = isqrt(m // 2)
    r0, r1 = m, c
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 == 0 or abs(t1) > bound or gcd(abs(t1), m) != 1:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if gcd(abs(r1), t1) != 1:
        return None
    return r1, t1
