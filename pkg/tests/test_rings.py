import random

import pytest

from spectop.errors import GrammarError, RingMismatchError, ZeroElementError
from spectop.rings import arith, factor, is_prime_element, is_unit, parse_ring

RINGS = ["Z", "Z/12", "Z/30", "Z/97", "Z/1024", "GF(2)[x]", "GF(3)[x]", "GF(7)[x]"]


def random_nonzero(ring, rng):
    name = str(ring)
    while True:
        if name == "Z":
            a = ring(rng.choice([-1, 1]) * rng.randrange(1, 10**12))
        elif name.startswith("Z/"):
            a = ring(rng.randrange(ring.n))
        else:
            a = ring.element(tuple(rng.randrange(ring.p) for _ in range(rng.randrange(1, 10))))
        if not a.is_zero():
            return a


def test_examples():
    Z, Z6, F2, F3 = (parse_ring(t) for t in ("Z", "Z/6", "GF(2)[x]", "GF(3)[x]"))
    assert arith("mul", Z6(4), Z6(4)) == Z6(4)
    assert arith("add", Z(17), Z(0)) == Z(17)
    assert arith("add", F2.parse("x+1"), F2.parse("x+1")) == F2.zero
    f = factor(Z(12))
    assert f.unit == Z(1) and [(q.payload, e) for q, e in f.factors] == [(2, 2), (3, 1)]
    f = factor(Z(-1))
    assert f.unit == Z(-1) and f.factors == ()
    f = factor(F2.parse("x^2+x"))
    assert [(str(q), e) for q, e in f.factors] == [("x", 1), ("x+1", 1)]
    assert is_unit(Z(1)) and is_unit(Z6(5)) and not is_unit(F3.parse("x"))


def test_mismatched_rings_rejected():
    with pytest.raises(RingMismatchError):
        parse_ring("Z")(1) + parse_ring("Z/6")(1)
    with pytest.raises(RingMismatchError):
        arith("mul", parse_ring("Z/6")(1), parse_ring("Z/12")(1))


def test_factor_zero_rejected():
    for name in RINGS:
        with pytest.raises(ZeroElementError):
            factor(parse_ring(name).zero)


@pytest.mark.parametrize("name", RINGS)
def test_factor_reconstructs_1000_random(name):
    ring = parse_ring(name)
    rng = random.Random(name)
    for _ in range(1000):
        a = random_nonzero(ring, rng)
        f = factor(a)
        assert f.expand() == a
        assert f.unit.is_unit()
        assert all(is_prime_element(q) for q in f.primes())
        assert factor(a) == f


def test_modular_factor_only_sees_divisors_of_n():
    Z12 = parse_ring("Z/12")
    f = factor(Z12(8))
    assert [(q.payload, e) for q, e in f.factors] == [(2, 2)]
    assert f.expand() == Z12(8)
    assert factor(Z12(7)).factors == ()


@pytest.mark.parametrize("bad", ["Q", "Z/0", "Z/-3", "GF(4)[x]", "GF(x)[x]", ""])
def test_bad_ring_text(bad):
    with pytest.raises(GrammarError):
        parse_ring(bad)


def test_parse_render_roundtrip():
    for name in RINGS:
        ring = parse_ring(name)
        assert str(parse_ring(str(ring))) == str(ring)
        rng = random.Random(1)
        for _ in range(50):
            a = random_nonzero(ring, rng)
            assert ring.parse(str(a)) == a
