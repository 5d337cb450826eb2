"""Integer primality and factorization against sympy and trial division."""

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from spectop import intfactor, kernels


def trial_division(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def test_small_range_matches_sympy():
    for n in range(-10, 20000):
        assert intfactor.is_prime(n) == sympy.isprime(n), n


# strong pseudoprimes and Carmichael numbers that catch weak tests
HARD = [561, 1105, 1729, 2047, 3215031751, 3825123056546413051,
        318665857834031151167461, 2**61 - 1, 2**64 - 59, 2**64 + 13, 2**89 - 1, 2**127 - 1]


@pytest.mark.parametrize("n", HARD)
def test_hard_cases(n):
    assert intfactor.is_prime(n) == sympy.isprime(n)


def test_random_wide_numbers_match_sympy():
    rng = random.Random(11)
    for bits in (32, 48, 63, 64, 80, 128):
        for _ in range(200):
            n = rng.getrandbits(bits) | 1
            assert intfactor.is_prime(n) == sympy.isprime(n), n


@given(st.integers(2, 10**6))
def test_factor_matches_trial_division(n):
    assert intfactor.factor_int(n) == trial_division(n)


def test_factor_semiprimes_beyond_trial_range():
    rng = random.Random(3)
    for _ in range(30):
        p = sympy.randprime(10**6, 10**9)
        q = sympy.randprime(10**6, 10**9)
        fs = intfactor.factor_int(p * q * 12)
        expect = {2: 2, 3: 1}
        for r in (p, q):
            expect[r] = expect.get(r, 0) + 1
        assert fs == expect
    n = rng.getrandbits(62) | 1
    assert intfactor.factor_int(n) == sympy.factorint(n)


@given(st.integers(2, 2**64))
def test_factor_reconstructs(n):
    fs = intfactor.factor_int(n)
    prod = 1
    for p, e in fs.items():
        assert sympy.isprime(p)
        prod *= p**e
    assert prod == n


def test_radical_and_squarefree():
    assert intfactor.radical(12) == 6
    assert intfactor.is_squarefree(30) and not intfactor.is_squarefree(12)
    assert intfactor.prime_divisors(360) == [2, 3, 5]


def test_prime_stream_starts_correctly():
    it = intfactor.primes()
    assert [next(it) for _ in range(10)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_crt_pair():
    r = intfactor.crt_pair(2, 3, 3, 5)
    assert 0 <= r < 15 and (r % 3, r % 5) == (2, 3)


@pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")
def test_backends_agree_on_primality():
    rng = random.Random(5)
    for _ in range(2000):
        n = rng.getrandbits(64)
        assert kernels.compiled.is_prime_u64(n) == kernels.fallback.is_prime_u64(n)
