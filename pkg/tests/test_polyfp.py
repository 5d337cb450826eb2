"""Polynomial arithmetic over GF(p), checked against exhaustive search."""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectop import polyfp as P

PRIMES = [2, 3, 5, 7]


def polys(p, max_deg=8):
    return st.lists(st.integers(0, p - 1), max_size=max_deg + 1).map(lambda c: P.trim(c, p))


def brute_irreducible(f, p):
    """No monic divisor of degree 1..deg/2, by exhaustive trial division."""
    d = P.deg(f)
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = tuple(tail) + (1,)
            if not P.mod(f, g, p):
                return False
    return True


def brute_factor(f, p):
    """Peel off the smallest monic irreducible divisor repeatedly."""
    out = {}
    f = P.monic(f, p)
    k = 1
    while P.deg(f) > 0:
        if 2 * k > P.deg(f):
            out[f] = out.get(f, 0) + 1
            break
        for tail in itertools.product(range(p), repeat=k):
            g = tuple(tail) + (1,)
            while True:
                q, r = P.divmod_(f, g, p)
                if r:
                    break
                out[g] = out.get(g, 0) + 1
                f = q
        k += 1
    return out


def necklace(n, p):
    # number of monic irreducibles of degree n over GF(p)
    def mobius(k):
        res, m, d = 1, k, 2
        while d * d <= m:
            if m % d == 0:
                m //= d
                if m % d == 0:
                    return 0
                res = -res
            d += 1
        return -res if m > 1 else res
    return sum(mobius(n // d) * p**d for d in range(1, n + 1) if n % d == 0) // n


@pytest.mark.parametrize("p", PRIMES)
def test_ring_laws(p):
    rng = random.Random(p)
    for _ in range(200):
        f, g, h = (P.trim([rng.randrange(p) for _ in range(rng.randrange(7))], p) for _ in range(3))
        assert P.add(f, g, p) == P.add(g, f, p)
        assert P.mul(f, P.add(g, h, p), p) == P.add(P.mul(f, g, p), P.mul(f, h, p), p)
        assert P.sub(P.add(f, g, p), g, p) == f
        if g:
            q, r = P.divmod_(f, g, p)
            assert P.add(P.mul(q, g, p), r, p) == f
            assert P.deg(r) < P.deg(g)


@pytest.mark.parametrize("p", [2, 3])
def test_irreducibility_matches_exhaustive_search(p):
    for d in range(1, 7 if p == 2 else 5):
        for f in P.monic_of_degree(d, p):
            assert P.is_irreducible(f, p) == brute_irreducible(f, p), f


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (2, 8), (3, 3), (3, 5), (5, 3), (7, 2)])
def test_irreducible_count_matches_necklace_formula(p, n):
    assert sum(1 for f in P.monic_of_degree(n, p) if P.is_irreducible(f, p)) == necklace(n, p)


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_factor_matches_brute_force(p, data):
    f = data.draw(polys(p))
    if not f:
        return
    lc, fs = P.factor(f, p)
    assert lc == f[-1]
    assert dict(fs) == brute_factor(f, p)
    prod = (lc,)
    for q, e in fs:
        assert q[-1] == 1 and P.is_irreducible(q, p)
        for _ in range(e):
            prod = P.mul(prod, q, p)
    assert prod == f


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_factor_is_deterministic(p, data):
    f = data.draw(polys(p))
    if f:
        assert P.factor(f, p) == P.factor(f, p)


def test_x2_plus_x_over_gf2():
    assert P.factor(P.parse("x^2+x", 2), 2) == (1, [((0, 1), 1), ((1, 1), 1)])


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_parse_render_roundtrip(p, data):
    f = data.draw(polys(p))
    assert P.parse(P.render(f), p) == f


@pytest.mark.parametrize("p", [2, 3])
def test_xgcd_bezout(p):
    rng = random.Random(7)
    for _ in range(100):
        f = P.trim([rng.randrange(p) for _ in range(6)], p)
        g = P.trim([rng.randrange(p) for _ in range(5)], p)
        if not f and not g:
            continue
        d, s, t = P.xgcd(f, g, p)
        assert P.add(P.mul(s, f, p), P.mul(t, g, p), p) == d
        assert d == P.gcd(f, g, p)
