"""Exact integer primality and factorization.

Trial division to 10**4, then Pollard rho with Brent's cycle detection.
Primality is deterministic Miller-Rabin below 2**64 and BPSW above.
"""

from __future__ import annotations

from math import gcd, isqrt

from . import kernels

TRIAL_LIMIT = 10_000
U64 = 1 << 64


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


SMALL_PRIMES = _small_primes(TRIAL_LIMIT)


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n):
    if isqrt(n) ** 2 == n:
        return False
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # binary ladder for U_k, V_k, Q^k
    u, v, qk = 0, 2, 1
    for bit in bin(k)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v), (d * u + p * v)
            u = (u if u % 2 == 0 else u + n) // 2 % n
            v = (v if v % 2 == 0 else v + n) // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def _mr_base2(n):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(2, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < U64:
        return bool(kernels.is_prime_u64(n))
    for p in SMALL_PRIMES[:50]:
        if n % p == 0:
            return False
    return _mr_base2(n) and _strong_lucas(n)


def _rho(n: int) -> int:
    """A nontrivial divisor of the odd composite n."""
    brent = kernels.pollard_brent if n < U64 else kernels.fallback.pollard_brent
    c = 1
    while True:
        for y0 in (2, 3, 5):
            g = brent(n, c, y0)
            if 1 < g < n:
                return g
        c += 1


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| for n != 0 as {prime: multiplicity}."""
    if n == 0:
        raise ZeroDivisionError("0 has no factorization")
    n = abs(n)
    out: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _rho(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def prime_divisors(n: int) -> list[int]:
    return list(factor_int(n)) if n not in (0, 1, -1) else []


def radical(n: int) -> int:
    r = 1
    for p in prime_divisors(n):
        r *= p
    return r


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factor_int(n).values())


def primes():
    """All primes in increasing order, without end."""
    yield from SMALL_PRIMES
    n = SMALL_PRIMES[-1] + 2
    while True:
        if is_prime(n):
            yield n
        n += 2


def crt_pair(r1, m1, r2, m2):
    """Combine x = r1 mod m1, x = r2 mod m2 (coprime moduli)."""
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


__all__ = [
    "factor_int", "is_prime", "is_squarefree", "prime_divisors", "primes",
    "radical", "crt_pair", "gcd",
]
