"""Ultrafilters: finite axioms, descriptors, limits, closure and witnesses."""

import itertools
import json
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectop.constructible import boolean_subalgebra, patch_closure
from spectop.errors import (BoundsError, InvalidDescriptorError, NoWitnessError,
                            PreconditionError)
from spectop.grammar import parse_set
from spectop.rings import parse_ring
from spectop.spectrum import (all_closed, closed_point, d_of, finite, full, generic_point,
                              progression, v_of)
from spectop.ultrafilter import (SELECTION_RULES, FiniteUltrafilter, Nonprincipal, Principal,
                                 check_ultrafilter_axioms, descriptor_from_json,
                                 enumerate_ultrafilters, induce_on_member, induce_on_superset,
                                 is_ultrafilter_closed, limit_contains, limit_primality_check,
                                 ultrafilter_closure, ultrafilter_limit, witness_ultrafilter)

Z = parse_ring("Z")
Z12 = parse_ring("Z/12")
F2 = parse_ring("GF(2)[x]")
F3 = parse_ring("GF(3)[x]")


def pts(ring, *gens):
    return finite(ring, [closed_point(ring, g) for g in gens])


def naive_is_ultrafilter(carrier, family):
    """Straight from the definitions, no bitmasks."""
    carrier = frozenset(carrier)
    fam = {frozenset(S) for S in family}
    subsets = [frozenset(c) for k in range(len(carrier) + 1)
               for c in itertools.combinations(sorted(carrier), k)]
    if not fam or frozenset() in fam:
        return False
    for A in fam:
        for B in subsets:
            if A <= B and B not in fam:
                return False
        for B in fam:
            if A & B not in fam:
                return False
    for A in subsets:
        B = carrier - A
        if (A in fam) == (B in fam):
            return False
    return True


# ------------------------------------------------------------ finite axioms

def test_axiom_examples():
    assert check_ultrafilter_axioms({1, 2}, [{1}, {1, 2}])
    r = check_ultrafilter_axioms({1, 2}, [{1}, {2}, {1, 2}])
    assert not r
    axioms = [ax for ax, _ in r.violations]
    assert 3 in axioms
    wit = dict(r.violations)[3]
    assert {frozenset(w) for w in wit} == {frozenset({1}), frozenset({2})}
    assert check_ultrafilter_axioms({1}, [{1}])
    json.dumps(r.to_json())


def test_empty_family_and_empty_set():
    assert check_ultrafilter_axioms({1, 2}, []).first_violation[0] == 0
    assert not check_ultrafilter_axioms({1}, [set(), {1}])


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_checker_matches_naive_oracle_exhaustively(n):
    carrier = set(range(n))
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    found = 0
    for mask in range(1 << len(subsets)):
        fam = [S for i, S in enumerate(subsets) if mask >> i & 1]
        verdict = bool(check_ultrafilter_axioms(carrier, fam))
        assert verdict == naive_is_ultrafilter(carrier, fam)
        found += verdict
    assert found == n


@given(st.lists(st.frozensets(st.integers(0, 4)), max_size=14))
def test_checker_matches_naive_oracle_randomly(fam):
    assert bool(check_ultrafilter_axioms(set(range(5)), fam)) == naive_is_ultrafilter(range(5), fam)


@given(st.integers(0, 4))
def test_principal_families_pass(k):
    carrier = set(range(5))
    fam = [set(c) | {k} for r in range(5) for c in itertools.combinations(carrier - {k}, r)]
    assert check_ultrafilter_axioms(carrier, fam)


def test_enumerate_examples():
    assert len(enumerate_ultrafilters({1})) == 1
    assert len(enumerate_ultrafilters({1, 2, 3})) == 3
    assert len(enumerate_ultrafilters({1, 2, 3, 4})) == 4
    for U in enumerate_ultrafilters({"a", "b", "c"}):
        assert U.is_principal()
        assert U == FiniteUltrafilter.principal({"a", "b", "c"}, U.point)


def test_bounds():
    with pytest.raises(BoundsError):
        check_ultrafilter_axioms(set(range(25)), [])
    with pytest.raises(BoundsError):
        enumerate_ultrafilters(set(range(6)))


@pytest.mark.parametrize("natoms", range(1, 7))
def test_descriptors_satisfy_axioms_on_finite_algebras(natoms):
    """Restrict a descriptor to the algebra generated by a few sets and check
    the axioms on the atom-level power set."""
    C = all_closed(Z)
    gens = [v_of(Z(v)) for v in (2, 3, 5, 7, 11)[: natoms - 1]]
    A = boolean_subalgebra(C, gens)
    assert len(A.atoms) == natoms
    for U in [Principal(C, closed_point(Z, 3)), Nonprincipal(C, "lex-min")]:
        idx = range(len(A.atoms))
        fam = [set(c) for k in range(natoms + 1) for c in itertools.combinations(idx, k)
               if U.selects(A.union_of([A.atoms[i] for i in c]))]
        assert check_ultrafilter_axioms(set(idx), fam)


# ------------------------------------------------------------ limits

def test_limit_examples():
    C = progression(Z, 1, 4)
    U = Nonprincipal(C)
    assert ultrafilter_limit(U) == generic_point(Z)
    v = limit_contains(U, Z(5))
    assert not v.in_limit and v.trace == pts(Z, 5) and v.reconstructs()
    assert ultrafilter_limit(Principal(full(Z12), closed_point(Z12, 3))) == closed_point(Z12, 3)
    assert ultrafilter_limit(Nonprincipal(all_closed(Z))) == generic_point(Z)


def test_limit_rejects_bad_descriptors():
    with pytest.raises(InvalidDescriptorError):
        ultrafilter_limit(Nonprincipal(pts(Z, 2, 3)))
    with pytest.raises(InvalidDescriptorError):
        ultrafilter_limit(Nonprincipal(full(Z12)))
    with pytest.raises(InvalidDescriptorError):
        Nonprincipal(all_closed(Z), "coin-flip")
    with pytest.raises(InvalidDescriptorError):
        Principal(pts(Z, 2), closed_point(Z, 3))


@pytest.mark.parametrize("U,samples", [
    (Principal(full(Z), closed_point(Z, 3)), 100),
    (Nonprincipal(all_closed(Z)), 1000),
    (Nonprincipal(all_closed(F2)), 1000),
    (Nonprincipal(progression(Z, 1, 4), "seeded-3"), 300),
])
def test_primality_examples(U, samples):
    report = limit_primality_check(U, samples)
    assert report["passed"], report["violations"]


# ------------------------------------------------------------ induced

def test_induce_on_member_examples():
    P = closed_point(Z, 5)
    U = Principal(all_closed(Z), P)
    V = induce_on_member(U, progression(Z, 1, 4))
    assert isinstance(V, Principal) and ultrafilter_limit(V) == P
    N = Nonprincipal(all_closed(Z))
    C1 = progression(Z, 1, 4)
    if not N.selects(C1):
        C1 = all_closed(Z) - C1
    V = induce_on_member(N, C1)
    assert ultrafilter_limit(V) == generic_point(Z)
    assert induce_on_member(N, all_closed(Z)) is N
    with pytest.raises(PreconditionError):
        induce_on_member(N, all_closed(Z) - C1)


def test_induce_on_superset_examples():
    C = progression(Z, 1, 4)
    U = Principal(C, closed_point(Z, 13))
    assert induce_on_superset(U, all_closed(Z)).point == closed_point(Z, 13)
    N = Nonprincipal(C)
    V = induce_on_superset(N, all_closed(Z))
    assert ultrafilter_limit(V) == generic_point(Z)
    assert induce_on_superset(N, C) is N
    with pytest.raises(PreconditionError):
        induce_on_superset(N, pts(Z, 2))


def test_induced_descriptors_agree_with_parent():
    N = Nonprincipal(all_closed(Z), "seeded-1")
    C1 = progression(Z, 1, 3)
    if not N.selects(C1):
        C1 = all_closed(Z) - C1
    V = induce_on_member(N, C1)
    for B in [progression(Z, 1, 8), progression(Z, 5, 12), d_of(Z(30)), v_of(Z(30))]:
        assert V.selects(B & C1) == N.selects(B & C1)


# ------------------------------------------------------------ coherence and serialization

@pytest.mark.parametrize("rule", SELECTION_RULES)
def test_refinement_is_coherent(rule):
    U = Nonprincipal(all_closed(Z), rule)
    chosen, gens = all_closed(Z), []
    for m in (3, 4, 5, 8):
        gens += [progression(Z, r, m) for r in range(m)]
        atom = U.select(boolean_subalgebra(all_closed(Z), gens))
        assert atom.is_infinite
        assert not (atom.subset - chosen).is_infinite()
        chosen = atom.subset
    for m in (7, 9, 16):
        atom = U.select(boolean_subalgebra(all_closed(Z), [progression(Z, r, m) for r in range(m)]))
        assert U.selects(atom.subset & chosen)
        assert (atom.subset & chosen).is_infinite()


@pytest.mark.parametrize("rule", ["lex-min", "first-point", "seeded-5"])
def test_json_roundtrip_replays_choices(rule):
    U = Nonprincipal(progression(Z, 1, 4), rule)
    probes = [progression(Z, 1, 8), progression(Z, 1, 3), progression(Z, 2, 5)]
    before = [U.selects(B) for B in probes]
    data = json.loads(U.dumps())
    V = descriptor_from_json(Z, data)
    assert [V.selects(B) for B in probes] == before
    assert V.to_json() == U.to_json()
    P = Principal(full(Z), closed_point(Z, 7))
    assert descriptor_from_json(Z, P.to_json()).point == P.point


def test_concurrent_queries_are_consistent():
    U = Nonprincipal(all_closed(Z), "seeded-2")
    probes = [progression(Z, r, m) for m in (3, 5, 8) for r in range(m)]
    out = [[] for _ in range(6)]

    def work(k):
        out[k] = [U.selects(B) for B in probes]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == out[0] for o in out)


# ------------------------------------------------------------ closure

def test_closure_examples():
    C = pts(Z, 2, 3, 5)
    assert ultrafilter_closure(C) == C
    assert ultrafilter_closure(progression(Z, 3, 4)) == progression(Z, 3, 4, generic=True)
    assert ultrafilter_closure(d_of(Z(6))) == d_of(Z(6))
    assert is_ultrafilter_closed(d_of(Z(6)))
    assert ultrafilter_closure(pts(Z12, 2)) == pts(Z12, 2)


@given(st.sampled_from(["{2,3}", "progression(1,4)", "D(10)", "V(30)", "cofinite~{7}",
                        "classes(5:1,4)", "{}", "progression(2,6)", "progression(1,4)~{5}"]),
       st.sampled_from(["{}", "{11}", "progression(3,4)", "V(6)"]))
def test_closure_laws(a, b):
    A, B = parse_set(Z, a), parse_set(Z, b)
    K = ultrafilter_closure(A)
    assert A.issubset(K)
    assert ultrafilter_closure(K) == K
    assert K == patch_closure(A)
    assert ultrafilter_closure(A | B) == K | ultrafilter_closure(B)


# ------------------------------------------------------------ witness

def test_witness_examples():
    w = witness_ultrafilter(progression(Z, 1, 4))
    assert w.point == generic_point(Z)
    assert ultrafilter_limit(w.ultrafilter) == generic_point(Z)
    stages = [s["stage"] for s in w.log]
    assert stages[0] == "intersection" and stages[-1] == "verification"
    json.loads(w.log_json())
    w = witness_ultrafilter(all_closed(F3))
    assert w.point == generic_point(F3)
    with pytest.raises(NoWitnessError):
        witness_ultrafilter(pts(Z, 2, 3))
