# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_fallback`` for the reference semantics."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"


cdef inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


cdef inline uint64_t gcd_u64(uint64_t a, uint64_t b) nogil:
    cdef uint64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef uint64_t[12] MR_BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_prime_u64(uint64_t n):
    """Deterministic Miller-Rabin for 64-bit n."""
    cdef uint64_t d, x, a
    cdef int s, i, j
    if n < 2:
        return False
    for i in range(12):
        if n % MR_BASES[i] == 0:
            return n == MR_BASES[i]
    d = n - 1
    s = 0
    while (d & 1) == 0:
        d >>= 1
        s += 1
    for i in range(12):
        a = MR_BASES[i]
        x = powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for j in range(s - 1):
            x = mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(uint64_t n, uint64_t c, uint64_t y0, uint64_t m=128):
    """One Brent run of rho with f(y) = y^2 + c; returns a divisor in [2, n]."""
    cdef uint64_t y = y0 % n, r = 1, q = 1, g = 1, x = y, ys = y, k, i, lim
    c %= n
    with nogil:
        while g == 1:
            x = y
            for i in range(r):
                y = (mulmod(y, y, n) + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                lim = m if m < r - k else r - k
                for i in range(lim):
                    y = (mulmod(y, y, n) + c) % n
                    q = mulmod(q, x - y if x > y else y - x, n)
                g = gcd_u64(q, n)
                k += m
            r *= 2
        if g == n:
            while True:
                ys = (mulmod(ys, ys, n) + c) % n
                g = gcd_u64(x - ys if x > ys else ys - x, n)
                if g > 1:
                    break
    return g


def punctual_search(int64_t n):
    """Per a in Z/n: solution count of a^2 x = a, x^2 a = x; first solution; regularity."""
    cdef int64_t a, x, aa, cnt, first
    cdef bint reg
    counts = [0] * n
    sols = [-1] * n
    regular = [False] * n
    for a in range(n):
        aa = a * a % n
        cnt = 0
        first = -1
        reg = False
        for x in range(n):
            if aa * x % n == a:
                reg = True
                if (x * x % n) * a % n == x:
                    cnt += 1
                    if first < 0:
                        first = x
        counts[a] = cnt
        sols[a] = first
        regular[a] = reg
    return counts, sols, regular


def hom_check(int64_t n, primes):
    """Ring-hom law violations of a -> (a mod p)_p over all pairs of Z/n."""
    cdef int k = len(primes), j
    cdef int64_t a, b, s, t, p, ra, rb
    cdef int64_t add_bad = 0, mul_bad = 0
    # res[j * n + x] = x mod p_j
    cdef int64_t* ps = <int64_t*>malloc(k * sizeof(int64_t))
    cdef int64_t* res = <int64_t*>malloc(k * n * sizeof(int64_t))
    for j in range(k):
        ps[j] = primes[j]
    unital = all(1 % q == 1 for q in primes)
    with nogil:
        for j in range(k):
            for a in range(n):
                res[j * n + a] = a % ps[j]
        for a in range(n):
            s = a
            for b in range(n):
                # s = a + b mod n, kept incrementally
                t = a * b % n
                for j in range(k):
                    p = ps[j]
                    ra = res[j * n + a]
                    rb = res[j * n + b]
                    if (ra + rb) % p != res[j * n + s]:
                        add_bad += 1
                    if ra * rb % p != res[j * n + t]:
                        mul_bad += 1
                s += 1
                if s == n:
                    s = 0
    free(res)
    free(ps)
    return unital, add_bad, mul_bad


def vnr_sweep(primes):
    """Exhaustive laws on prod F_p, elements indexed via CRT.

    Returns (size, inverse_violations, idempotent_violations,
    ideal_violations, generator_violations, first_bad_a, first_bad_b).
    """
    cdef int k = len(primes), j, ok
    cdef int64_t m = 1, a, b, x, t, p, ra, rx, cnt, found, idx_a, idx_e, v
    cdef int64_t ea, eb, g, gi, ia, ib, comb
    cdef int64_t inv_bad = 0, idem_bad = 0, ideal_bad = 0, gen_bad = 0
    cdef int64_t bad_a = -1, bad_b = -1
    cdef int64_t gs
    for q in primes:
        m *= q
    cdef int64_t* ps = <int64_t*>malloc(k * sizeof(int64_t))
    cdef int64_t* basis = <int64_t*>malloc(k * sizeof(int64_t))
    cdef int64_t* res = <int64_t*>malloc(m * k * sizeof(int64_t))
    cdef int64_t* inv = <int64_t*>malloc(m * k * sizeof(int64_t))
    cdef int64_t* e = <int64_t*>malloc(m * k * sizeof(int64_t))
    cdef int64_t* supp = <int64_t*>malloc(m * sizeof(int64_t))
    cdef int64_t* mark_a = <int64_t*>calloc(m, sizeof(int64_t))
    cdef int64_t* mark_e = <int64_t*>calloc(m, sizeof(int64_t))
    # per-component inverse tables, concatenated
    cdef int64_t total = 0
    for q in primes:
        total += q
    cdef int64_t* invtab = <int64_t*>malloc(total * sizeof(int64_t))
    cdef int64_t* off = <int64_t*>malloc(k * sizeof(int64_t))
    total = 0
    for j in range(k):
        q = primes[j]
        ps[j] = q
        off[j] = total
        invtab[total] = 0
        for v in range(1, q):
            invtab[total + v] = pow(v, -1, q)
        total += q
        basis[j] = (m // q) * pow(m // q, -1, q) % m
    try:
        with nogil:
            for a in range(m):
                supp[a] = 0
                for j in range(k):
                    p = ps[j]
                    ra = a % p
                    res[a * k + j] = ra
                    inv[a * k + j] = invtab[off[j] + ra]
                    e[a * k + j] = ra * inv[a * k + j] % p
                    if ra != 0:
                        supp[a] |= (<int64_t>1) << j

            for a in range(m):
                # exhaustive search for solutions of a^2 x = a, x^2 a = x
                cnt = 0
                found = -1
                for x in range(m):
                    ok = 1
                    for j in range(k):
                        p = ps[j]
                        ra = res[a * k + j]
                        rx = res[x * k + j]
                        if (ra * ra % p) * rx % p != ra or (rx * rx % p) * ra % p != rx:
                            ok = 0
                            break
                    if ok:
                        cnt += 1
                        found = x
                ok = cnt == 1
                if ok:
                    for j in range(k):
                        if res[found * k + j] != inv[a * k + j]:
                            ok = 0
                if not ok:
                    inv_bad += 1
                    if bad_a < 0:
                        bad_a = a
                        bad_b = a

                for j in range(k):
                    p = ps[j]
                    v = e[a * k + j]
                    if v * v % p != v:
                        idem_bad += 1
                        if bad_a < 0:
                            bad_a = a
                            bad_b = a
                        break

                # aT and e(a)T as explicit sets
                for t in range(m):
                    idx_a = 0
                    idx_e = 0
                    for j in range(k):
                        p = ps[j]
                        idx_a += (res[a * k + j] * res[t * k + j] % p) * basis[j]
                        idx_e += (e[a * k + j] * res[t * k + j] % p) * basis[j]
                    mark_a[idx_a % m] = a + 1
                    mark_e[idx_e % m] = a + 1
                ok = 1
                for t in range(m):
                    if (mark_a[t] == a + 1) != (mark_e[t] == a + 1):
                        ok = 0
                    if (mark_a[t] == a + 1) != ((supp[t] & ~supp[a]) == 0):
                        ok = 0
                if not ok:
                    ideal_bad += 1
                    if bad_a < 0:
                        bad_a = a
                        bad_b = a

            for a in range(m):
                for b in range(m):
                    ok = 1
                    gs = 0
                    for j in range(k):
                        p = ps[j]
                        ea = e[a * k + j]
                        eb = e[b * k + j]
                        g = (ea + eb * ((1 - ea + p) % p)) % p
                        if g != 0:
                            gs |= (<int64_t>1) << j
                        gi = invtab[off[j] + g]
                        ra = res[a * k + j]
                        rx = res[b * k + j]
                        if (g * gi % p) * ra % p != ra or (g * gi % p) * rx % p != rx:
                            ok = 0
                        ia = inv[a * k + j]
                        ib = inv[b * k + j]
                        comb = (ra * ia + rx * (ib * ((1 - ea + p) % p) % p)) % p
                        if comb != g:
                            ok = 0
                    if gs != (supp[a] | supp[b]):
                        ok = 0
                    if not ok:
                        gen_bad += 1
                        if bad_a < 0:
                            bad_a = a
                            bad_b = b
    finally:
        free(ps); free(basis); free(res); free(inv); free(e); free(supp)
        free(mark_a); free(mark_e); free(invtab); free(off)
    return (m, inv_bad, idem_bad, ideal_bad, gen_bad, bad_a, bad_b)
