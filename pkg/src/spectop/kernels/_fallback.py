"""Interpreted implementations of the hot kernels.

Same signatures and results as the compiled ``_core`` module.  The
exhaustive sweeps are vectorized with numpy one ring at a time.
"""

from math import gcd

import numpy as np

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_u64(n):
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(n, c, y0, m=128):
    """One Brent run of rho with f(y) = y^2 + c; returns a divisor in [2, n]."""
    y, r, q, g = y0 % n, 1, 1, 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def punctual_search(n):
    """For every a in Z/n: number of x with a^2 x = a and x^2 a = x, the first
    such x (or -1), and whether some x solves a^2 x = a alone."""
    a = np.arange(n, dtype=np.int64)
    aa = (a * a) % n
    x = a[None, :]
    first = (aa[:, None] * x) % n == a[:, None]
    both = first & (((x * x) % n) * a[:, None] % n == x)
    counts = both.sum(axis=1)
    sol = np.where(counts > 0, both.argmax(axis=1), -1)
    regular = first.any(axis=1)
    return counts.tolist(), sol.tolist(), regular.tolist()


def hom_check(n, primes):
    """Violations of ring-hom laws for Z/n -> prod F_p, a -> (a mod p)_p,
    over all pairs; returns (unital_ok, add_violations, mul_violations)."""
    unital = all(1 % p == 1 for p in primes)
    add_bad = mul_bad = 0
    a = np.arange(n, dtype=np.int64)
    step = max(1, 4_000_000 // max(n, 1))
    for lo in range(0, n, step):
        rows = a[lo:lo + step, None]
        s = (rows + a[None, :]) % n
        t = (rows * a[None, :]) % n
        for p in primes:
            ra, rb = rows % p, a[None, :] % p
            add_bad += int(((ra + rb) % p != s % p).sum())
            mul_bad += int(((ra * rb) % p != t % p).sum())
    return unital, add_bad, mul_bad


def vnr_sweep(primes):
    """Exhaustive punctual-inverse and idempotent laws on prod_{p in primes} F_p.

    Elements are indexed through the CRT bijection; every law is checked
    componentwise.  Returns a tuple
    (size, inverse_violations, idempotent_violations, ideal_violations,
     generator_violations, first_bad_a, first_bad_b).
    """
    primes = list(primes)
    m = 1
    for p in primes:
        m *= p
    idx = np.arange(m, dtype=np.int64)
    res = [idx % p for p in primes]
    basis = []
    for p in primes:
        q = m // p
        basis.append(q * pow(q, -1, p) % m)
    inv = [np.array([0] + [pow(r, -1, p) for r in range(1, p)], dtype=np.int64)[r]
           for p, r in zip(primes, res)]
    e = [(r * i) % p for p, r, i in zip(primes, res, inv)]
    supp = np.zeros(m, dtype=np.int64)
    for j, r in enumerate(res):
        supp |= (r != 0).astype(np.int64) << j
    first_bad = [-1, -1]

    def note(mask2d):
        if first_bad[0] < 0 and mask2d.any():
            a, b = np.argwhere(mask2d)[0]
            first_bad[0], first_bad[1] = int(a), int(b)

    # uniqueness of the punctual inverse, by search over all x
    ok = np.ones((m, m), dtype=bool)
    for p, r in zip(primes, res):
        A, Xs = r[:, None], r[None, :]
        ok &= ((A * A % p) * Xs % p == A) & ((Xs * Xs % p) * A % p == Xs)
    counts = ok.sum(axis=1)
    found = ok.argmax(axis=1)
    bad_inv = counts != 1
    for p, r, i in zip(primes, res, inv):
        bad_inv |= r[found] != i
    note(bad_inv[:, None])
    inverse_violations = int(bad_inv.sum())

    bad_idem = np.zeros(m, dtype=bool)
    for p, ej in zip(primes, e):
        bad_idem |= (ej * ej) % p != ej
    note(bad_idem[:, None])
    idempotent_violations = int(bad_idem.sum())

    # aT and e(a)T as explicit sets, against the support description
    prod_a = np.zeros((m, m), dtype=np.int64)
    prod_e = np.zeros((m, m), dtype=np.int64)
    for p, r, ej, b in zip(primes, res, e, basis):
        prod_a += ((r[:, None] * r[None, :]) % p) * b
        prod_e += ((ej[:, None] * r[None, :]) % p) * b
    prod_a %= m
    prod_e %= m
    rows = np.repeat(idx, m).reshape(m, m)
    in_a = np.zeros((m, m), dtype=bool)
    in_e = np.zeros((m, m), dtype=bool)
    in_a[rows, prod_a] = True
    in_e[rows, prod_e] = True
    by_supp = (supp[None, :] & ~supp[:, None]) == 0
    bad_ideal = (in_a != in_e) | (in_a != by_supp)
    bad_ideal_rows = bad_ideal.any(axis=1)
    note(bad_ideal_rows[:, None])
    ideal_violations = int(bad_ideal_rows.sum())

    # generator of aT + bT for every pair
    bad_gen = np.zeros((m, m), dtype=bool)
    g_supp = np.zeros((m, m), dtype=np.int64)
    for j, (p, r, i, ej) in enumerate(zip(primes, res, inv, e)):
        ea, eb = ej[:, None], ej[None, :]
        g = (ea + eb * ((1 - ea) % p)) % p
        g_supp |= (g != 0).astype(np.int64) << j
        ginv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)[g]
        ge = (g * ginv) % p
        ra, rb = r[:, None], r[None, :]
        bad_gen |= (ge * ra) % p != ra
        bad_gen |= (ge * rb) % p != rb
        comb = (ra * i[:, None] + rb * ((i[None, :] * ((1 - ea) % p)) % p)) % p
        bad_gen |= comb != g
    bad_gen |= g_supp != (supp[:, None] | supp[None, :])
    note(bad_gen)
    generator_violations = int(bad_gen.sum())

    return (m, inverse_violations, idempotent_violations, ideal_violations,
            generator_violations, first_bad[0], first_bad[1])
