import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectop.constructible import (boolean_op, boolean_subalgebra, from_basic, is_constructible,
                                   is_patch_closed, patch_closure, patch_membership)
from spectop.errors import RefusedError
from spectop.grammar import parse_set
from spectop.rings import parse_ring
from spectop.spectrum import (closed_point, closed_points, d_of, empty, finite, full,
                              generic_point, predicate, progression, v_of)

Z = parse_ring("Z")
Z12 = parse_ring("Z/12")
F2 = parse_ring("GF(2)[x]")


def pts(ring, *gens):
    return finite(ring, [closed_point(ring, g) for g in gens])


def test_boolean_op_examples():
    assert boolean_op("intersect", v_of(Z(6)), v_of(Z(10))) == pts(Z, 2)
    assert boolean_op("complement", d_of(Z(12))) == v_of(Z(12)) == pts(Z, 2, 3)
    assert boolean_op("union", d_of(Z(4)), v_of(Z(4))) == full(Z)
    with pytest.raises(ValueError):
        boolean_op("xor", full(Z), full(Z))


def test_from_basic_examples():
    assert from_basic(Z(1), Z(6)) == pts(Z, 2, 3)
    assert from_basic(Z(2), Z(15)) == pts(Z, 3, 5)
    assert from_basic(Z(6), Z(6)) == empty(Z)


def test_patch_closure_examples():
    P = progression(Z, 1, 4)
    assert patch_closure(P) == P.with_generic(True)
    assert patch_closure(pts(Z, 2, 3)) == pts(Z, 2, 3)
    assert patch_closure(pts(Z12, 2)) == pts(Z12, 2)


def test_is_patch_closed_examples():
    assert is_patch_closed(v_of(Z(12)))
    assert is_patch_closed(d_of(Z(12)))
    assert not is_patch_closed(progression(Z, 3, 4))


def test_patch_membership_examples():
    assert patch_membership(generic_point(Z), progression(Z, 3, 4))
    assert not patch_membership(closed_point(Z, 3), pts(Z, 2))
    assert patch_membership(closed_point(Z, 5), d_of(Z(3)))
    assert not patch_membership(generic_point(Z), pts(Z, 2, 3))
    assert patch_membership(closed_point(Z12, 3), full(Z12))


def test_patch_membership_refuses_unknown_infinitude():
    S = predicate(Z, lambda P: P.generator.payload % 7 == 1)
    with pytest.raises(RefusedError):
        patch_membership(generic_point(Z), S)
    with pytest.raises(RefusedError):
        patch_closure(S)


def test_boolean_subalgebra_examples():
    A = boolean_subalgebra(full(Z), [v_of(Z(6)), v_of(Z(10))])
    atoms = sorted(a.subset.describe() for a in A.atoms)
    assert atoms == sorted(["{2}", "{3}", "{5}", "cofinite~{2,3,5}+generic"])
    assert [a.is_infinite for a in A.atoms].count(True) == 1
    A = boolean_subalgebra(full(Z), [])
    assert [a.subset for a in A.atoms] == [full(Z)]
    A = boolean_subalgebra(pts(Z, 2, 3, 5), [v_of(Z(6))])
    assert sorted(a.subset.describe() for a in A.atoms) == ["{2,3}", "{5}"]


@given(st.lists(st.integers(-200, 200), max_size=4), st.sampled_from(["all", "progression(1,4)",
                                                                      "{2,3,5,7}", "D(6)"]))
def test_atoms_partition_carrier(gens, carrier):
    C = parse_set(Z, carrier)
    G = [v_of(Z(g)) for g in gens]
    A = boolean_subalgebra(C, G)
    union = empty(Z)
    for a, b in itertools.combinations(A.atoms, 2):
        assert (a.subset & b.subset) == empty(Z)
    for a in A.atoms:
        union = union | a.subset
        assert not a.subset.is_empty()
        assert a.is_infinite == bool(a.subset.is_infinite())
    assert union == C
    for g in G:
        trace = g & C
        covered = empty(Z)
        for a in A.atoms:
            if a.subset.issubset(trace):
                covered = covered | a.subset
            else:
                assert (a.subset & trace) == empty(Z)
        assert covered == trace


def test_constructible_shapes():
    assert is_constructible(d_of(Z(6)))
    assert is_constructible(v_of(Z(6)))
    assert not is_constructible(progression(Z, 1, 4))
    assert is_constructible(pts(Z12, 3))


@pytest.mark.parametrize("ring", [Z, F2])
def test_generic_is_in_patch_closure_of_every_infinite_set(ring):
    S = finite(ring, list(itertools.islice(closed_points(ring), 30)))
    assert not patch_membership(generic_point(ring), S)
    assert patch_membership(generic_point(ring), d_of(ring.one).with_generic(False))


# ------------------------------------------------------------ sampled invariants

RINGS = [Z, F2, parse_ring("GF(3)[x]")]


def _random_constructible(ring, rng):
    """A finite union of basic sets D(a) & V(b), built from small elements."""
    first = list(itertools.islice(closed_points(ring), 12))

    def elem():
        k = rng.randrange(4)
        out = ring.one
        for P in rng.sample(first, k):
            out = out * P.generator
        return out

    S = empty(ring)
    for _ in range(rng.randrange(1, 3)):
        b = ring.zero if rng.random() < 0.4 else elem()
        S = S | from_basic(elem(), b)
    return S


def test_boolean_laws_on_1000_triples():
    import random

    rng = random.Random(0)
    for i in range(1000):
        ring = RINGS[i % 3]
        A, B, C = (_random_constructible(ring, rng) for _ in range(3))
        assert is_constructible(A)
        assert A | B == B | A and A & B == B & A
        assert (A | B) | C == A | (B | C) and (A & B) & C == A & (B & C)
        assert A & (B | C) == (A & B) | (A & C) and A | (B & C) == (A | B) & (A | C)
        assert ~(A & B) == ~A | ~B and ~(A | B) == ~A & ~B
        assert ~~A == A


def _sample_sets(ring, rng):
    first = list(itertools.islice(closed_points(ring), 20))
    pick = rng.randrange(4)
    if pick == 0:
        return finite(ring, rng.sample(first, rng.randrange(6)))
    if pick == 1:
        return _random_constructible(ring, rng)
    if ring is Z:
        m = rng.choice([3, 4, 5, 8, 12])
        return progression(Z, rng.randrange(m), m) - finite(Z, rng.sample(first, 2))
    return _random_constructible(ring, rng).with_generic(False)


def test_patch_closure_laws_sampled():
    import random

    rng = random.Random(1)
    for i in range(300):
        ring = RINGS[i % 3]
        A, B = _sample_sets(ring, rng), _sample_sets(ring, rng)
        K = patch_closure(A)
        assert A.issubset(K) and patch_closure(K) == K
        assert patch_closure(A | B) == K | patch_closure(B)
        assert K.issubset(patch_closure(A | B))


def test_patch_membership_agrees_with_closure_on_200_samples():
    import random

    rng = random.Random(2)
    for i in range(200):
        ring = RINGS[i % 3]
        S = _sample_sets(ring, rng)
        first = list(itertools.islice(closed_points(ring), 20))
        P = generic_point(ring) if rng.random() < 0.4 else rng.choice(first)
        assert patch_membership(P, S) == patch_closure(S).contains(P), (S.describe(), P)


@pytest.mark.parametrize("ring", RINGS)
def test_v_and_d_are_patch_closed(ring):
    import random

    rng = random.Random(3)
    for _ in range(100):
        first = list(itertools.islice(closed_points(ring), 12))
        g = ring.one
        for P in rng.sample(first, rng.randrange(4)):
            g = g * P.generator
        assert is_patch_closed(v_of(g)) and is_patch_closed(d_of(g))
