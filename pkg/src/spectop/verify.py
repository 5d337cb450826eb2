"""Verification suites for the nine acceptance criteria.

``CRITERIA`` maps each number to a name and a suite; ``run_criterion`` runs
one suite and wraps it in a :class:`CriterionResult`, ``run_all`` runs them
in order.  All sampling is
driven by ``seed``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import intfactor
from .constructible import patch_closure
from .rings import Integers, Modular, PolyRing
from .spectrum import (_units, all_closed, closed_points, cofinite, d_of, finite, full,
                       generic_point, ideal, progression, residue_classes, v_of)
from .ultrafilter import (SELECTION_RULES, Nonprincipal, Principal, check_ultrafilter_axioms,
                          enumerate_ultrafilters, induce_on_member, induce_on_superset,
                          limit_contains, limit_primality_check, random_element,
                          ultrafilter_closure, ultrafilter_limit, witness_ultrafilter)
from .vnr import (VnrRing, contraction_map, epimorphism_evidence, hull_certificate, is_vnr,
                  relatively_prime_lemma_check, sweep_laws, t_of, zero_dimensional_check)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name} ({self.elapsed:.2f}s)"

    def to_json(self, timing: bool = True) -> dict:
        out = {"criterion": self.number, "name": self.name, "passed": self.passed,
               "detail": self.detail}
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def _timed(number, name, fn, *args, **kw) -> CriterionResult:
    t = time.perf_counter()
    passed, detail = fn(*args, **kw)
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - t)


INFINITE_RINGS = (Integers(), PolyRing(2), PolyRing(3))


def _first_points(ring, k):
    out = []
    for P in closed_points(ring):
        out.append(P)
        if len(out) == k:
            return out
    return out


def _progression_family(ring, rng, i):
    """One of 20 residue-class families per ring, with random corrections."""
    if isinstance(ring, Integers):
        m = [3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 15, 16, 20, 24, 5, 7, 8, 12, 9, 30][i % 20]
        units = [r for r in range(m) if intfactor.gcd(r, m) == 1]
        R = rng.sample(units, rng.randint(1, max(1, len(units) - 1)))
        return residue_classes(ring, m, R)
    mods = ["x", "x+1", "x^2+x+1", "x^2", "x^2+1", "x^3+x+1", "x^3", "x^2+x"]
    m = ring.parse(mods[i % len(mods)])
    units = sorted(_units(ring, m.payload), key=ring.sort_key)
    R = rng.sample(units, rng.randint(1, max(1, len(units) - 1)))
    return residue_classes(ring, m, [ring.element(r) for r in R])


def generate_families(count: int = 500, seed: int = 0):
    """Finite (<= 50 points), cofinite (<= 10 exclusions) and progression sets."""
    rng = random.Random(seed)
    fams = []
    pools = {ring: _first_points(ring, 120 if isinstance(ring, Integers) else 80)
             for ring in INFINITE_RINGS}
    n_prog = 20
    i = 0
    while len(fams) < count:
        ring = INFINITE_RINGS[i % 3]
        kind = i % 3 if len(fams) < count - n_prog * 3 else 2
        pool = pools[ring]
        if kind == 0:
            S = finite(ring, rng.sample(pool, rng.randint(0, 50)))
        elif kind == 1:
            S = cofinite(ring, rng.sample(pool, rng.randint(0, 10)))
        else:
            S = _progression_family(ring, rng, i)
            if rng.random() < 0.5:
                S = S.difference(finite(ring, rng.sample(pool[:20], rng.randint(0, 3))))
        if rng.random() < 0.25:
            S = S.with_generic(True)
        fams.append(S)
        i += 1
    return fams


def _c1(count=500, seed=0):
    fams = generate_families(count, seed)
    bad = []
    kinds = {"finite": 0, "cofinite": 0, "progression": 0}
    for S in fams:
        part = type(S.closed_part).__name__.lower()
        kinds["progression" if part == "predicate" else part] += 1
        if patch_closure(S) != ultrafilter_closure(S):
            bad.append(S.describe())
    return not bad, {"families": len(fams), "kinds": kinds, "mismatches": bad[:5]}


def _random_ideal(ring, rng):
    gens = [random_element(ring, rng) for _ in range(rng.randint(1, 3))]
    return ideal(*gens)


def _c2(count=200, seed=0):
    rng = random.Random(seed)
    rings = [Integers(), PolyRing(2), PolyRing(3), PolyRing(5),
             Modular(12), Modular(30), Modular(97), Modular(360)]
    bad = []
    checked = 0
    for ring in rings:
        for _ in range(count):
            I = _random_ideal(ring, rng)
            a = random_element(ring, rng)
            for S in (v_of(I), d_of(a)):
                checked += 1
                if ultrafilter_closure(S) != S:
                    bad.append(f"{ring}: {S.describe()}")
    return not bad, {"rings": [str(r) for r in rings], "sets_checked": checked,
                     "not_closed": bad[:5]}


def brute_force_ultrafilters(n: int) -> list[frozenset]:
    """All ultrafilters on {0..n-1} straight from the definition.

    Subsets are bitmasks and a family is a set of masks.  A nonempty
    upward-closed family contains the carrier, and then axiom (3) applied
    to the carrier picks exactly one of each complementary pair; families
    failing that are skipped before the full test.
    """
    full = (1 << n) - 1
    subsets = range(1 << n)
    pairs = [(S, full ^ S) for S in subsets if S < full ^ S]
    out = []
    for choice in range(1 << len(pairs)):
        fam = {full}
        for k, (S, T) in enumerate(pairs):
            fam.add(T if choice >> k & 1 else S)
        if 0 in fam:
            continue
        ok = all((A | B) in fam for A in fam for B in subsets) and \
            all((A & B) in fam for A in fam for B in fam) and \
            all(((A in fam) + (B in fam) == 1)
                for C in fam for A in subsets if A & C == A for B in [C ^ A])
        if ok:
            out.append(frozenset(fam))
    return out


def _induced_configs(count, rng):
    Z, F2 = Integers(), PolyRing(2)
    for k in range(count):
        ring = Z if k % 2 == 0 else F2
        kind = k % 4
        if kind < 2:
            # principal on a finite or cofinite carrier
            pool = _first_points(ring, 30)
            C = finite(ring, rng.sample(pool, rng.randint(1, 8))) if rng.random() < 0.5 \
                else cofinite(ring, rng.sample(pool, 3))
            P = next(C.closed_points())
            U = Principal(C, P)
            C1 = C.intersect(finite(ring, [P] + rng.sample(pool, 3)))
        else:
            base = progression(Z, 1, 4) if ring == Z else progression(F2, 1, "x^2+x+1")
            C = base if rng.random() < 0.5 else all_closed(ring)
            U = Nonprincipal(C, rng.choice(SELECTION_RULES))
            split = _progression_family(ring, rng, rng.randrange(20)).intersect(C)
            C1 = split if U.selects(split) else C.difference(split)
            C1 = C1.difference(finite(ring, rng.sample(_first_points(ring, 10), 2)))
        C_lam = C.union(cofinite(ring, _first_points(ring, 4)) if rng.random() < 0.5
                        else full(ring))
        yield ring, U, C1, C_lam


def _c3(configs=100, seed=0):
    rng = random.Random(seed)
    enum = {}
    ok = True
    for n in range(1, 5):
        carrier = list(range(n))
        found = enumerate_ultrafilters(carrier)
        fams = {frozenset(frozenset(i for i in range(n) if S >> i & 1) for S in F)
                for F in brute_force_ultrafilters(n)}
        mine = {frozenset(U.member_sets) for U in found}
        good = (len(found) == n and mine == fams and all(U.is_principal() for U in found)
                and all(check_ultrafilter_axioms(carrier, U.member_sets) for U in found))
        # every family the checker accepts is one of the brute-force ultrafilters
        if n <= 3:
            subsets = [frozenset(c) for k in range(n + 1) for c in combinations(carrier, k)]
            accepted = set()
            for bits in range(1 << len(subsets)):
                fam = [subsets[i] for i in range(len(subsets)) if bits >> i & 1]
                if check_ultrafilter_axioms(carrier, fam):
                    accepted.add(frozenset(fam))
            good = good and accepted == fams
        enum[n] = {"found": len(found), "brute_force": len(fams), "passed": good}
        ok = ok and good
    bad = []
    for ring, U, C1, C_lam in _induced_configs(configs, rng):
        L = ultrafilter_limit(U)
        U1 = induce_on_member(U, C1)
        Ul = induce_on_superset(U, C_lam)
        probes = [ring.zero, ring.one] + [random_element(ring, rng) for _ in range(4)]
        if isinstance(U, Principal):
            probes.append(U.point.generator)
        same = ultrafilter_limit(U1) == L == ultrafilter_limit(Ul) and all(
            limit_contains(U, a).in_limit == limit_contains(U1, a).in_limit ==
            limit_contains(Ul, a).in_limit == L.contains(a) for a in probes)
        if not same:
            bad.append(f"{U!r} / {C1.describe()} / {C_lam.describe()}")
    ok = ok and not bad
    return ok, {"enumeration": enum, "induced_configurations": configs, "induced_failures": bad[:5]}


def descriptor_classes():
    Z, F2, F3 = Integers(), PolyRing(2), PolyRing(3)
    base = Nonprincipal(all_closed(Z), "seeded-3")
    prog = Nonprincipal(progression(Z, 1, 4))
    return {
        "principal Z (3)": Principal(full(Z), next(iter(v_of(Z(3)).points()))),
        "principal Z generic": Principal(d_of(Z(6)), generic_point(Z)),
        "principal Z/12 (3)": Principal(full(Modular(12)), v_of(Modular(12)(3)).points()[0]),
        "principal GF(2)[x] (x^2+x+1)": Principal(full(F2), v_of(F2("x^2+x+1")).points()[0]),
        "nonprincipal Z all closed": Nonprincipal(all_closed(Z)),
        "nonprincipal Z progression(1,4)": prog,
        "nonprincipal GF(2)[x]": Nonprincipal(all_closed(F2), "lex-max"),
        "nonprincipal GF(3)[x] progression": Nonprincipal(progression(F3, 1, "x"), "first-point"),
        "induced on member": induce_on_member(base, progression(Z, 3, 4))
        if base.selects(progression(Z, 3, 4)) else induce_on_member(base, progression(Z, 1, 4)),
        "induced on superset": induce_on_superset(prog, full(Z)),
    }


def _c4(samples=1000, seed=0):
    rows = {}
    for name, U in descriptor_classes().items():
        rep = limit_primality_check(U, samples, seed)
        rows[name] = {"passed": rep["passed"], "products_in_limit": rep["products_in_limit"],
                      "violations": rep["violations"][:3]}
    return all(r["passed"] for r in rows.values()), {"samples": samples, "classes": rows}


def _radical_groups(max_n):
    groups = {}
    for n in range(2, max_n + 1):
        groups.setdefault(tuple(intfactor.prime_divisors(n)), []).append(n)
    return groups


def _c5(max_n=1000):
    groups = _radical_groups(max_n)
    bad = {}
    pairs = 0
    for comps, ns in groups.items():
        rep = sweep_laws(comps)
        pairs += rep["size"] ** 2
        if not rep["passed"]:
            bad[str(ns[0])] = rep
    return not bad, {"max_n": max_n, "moduli": max_n - 1, "distinct_hulls": len(groups),
                     "element_pairs": pairs, "failures": dict(list(bad.items())[:3])}


def _c6(max_n=1000):
    bad = []
    for n in range(2, max_n + 1):
        R = Modular(n)
        T, iota = t_of(R)
        cert = hull_certificate(T, iota, exhaustive_bound=0)
        sf = intfactor.is_squarefree(n)
        vnr = is_vnr(R)
        cm = contraction_map(iota)
        zd = zero_dimensional_check(T)
        if not (vnr == cert["bijective"] == sf and cert["relations"]["passed"]
                and cm.passed and zd["passed"]):
            bad.append(n)
    return not bad, {"max_n": max_n, "failures": bad[:10]}


def witness_families(count=50, seed=0):
    """Infinite sets without the generic point, split by progression probes."""
    rng = random.Random(seed)
    Z, F2, F3 = INFINITE_RINGS
    out = []
    for k in range(count):
        ring = INFINITE_RINGS[k % 3]
        pool = _first_points(ring, 20)
        if k % 2 == 0:
            C = _progression_family(ring, rng, k)
        else:
            C = cofinite(ring, rng.sample(pool, rng.randint(0, 5)))
        probes = [_progression_family(ring, rng, rng.randrange(20)) for _ in range(3)]
        out.append((C, probes))
    return out


def _c7(count=50, samples=50, seed=0):
    bad = []
    distinct = 0
    for C, probes in witness_families(count, seed):
        logs = set()
        for rule in SELECTION_RULES:
            try:
                w = witness_ultrafilter(C, rule, probes, samples=samples, seed=seed)
            except AssertionError as exc:
                bad.append(f"{C.describe()} [{rule}]: {exc}")
                continue
            if not (w.point.is_generic and ultrafilter_limit(w.ultrafilter) == w.point):
                bad.append(f"{C.describe()} [{rule}]")
            logs.add(str(w.ultrafilter.choices))
        distinct += len(logs) > 1
    return not bad, {"families": count, "rules": list(SELECTION_RULES),
                     "families_where_rules_disagree": distinct, "failures": bad[:5]}


def _c8(max_n=200):
    bad = []
    checked = 0
    for n in range(2, max_n + 1):
        rep = relatively_prime_lemma_check(VnrRing.of(n))
        checked += rep["checked"]
        if not rep["passed"]:
            bad.append(n)
    return not bad, {"max_n": max_n, "elements": checked, "failures": bad}


def _c9(max_n=10):
    rows = {}
    for n in range(2, max_n + 1):
        _, iota = t_of(Modular(n))
        ev = epimorphism_evidence(iota)
        rows[n] = {"at_most_one_each": ev["at_most_one_each"],
                   "max_homs": max(r["homs"] for r in ev["targets"]),
                   "targets": len(ev["targets"])}
    return all(r["at_most_one_each"] for r in rows.values()), {
        "note": "evidence over a finite catalog of targets, not a proof", "by_n": rows}


CRITERIA = {
    1: ("patch closure = ultrafilter closure", _c1),
    2: ("V(I) and D(a) are ultrafilter-closed", _c2),
    3: ("ultrafilter calculus and induced limits", _c3),
    4: ("P_U is prime", _c4),
    5: ("regular-ring laws on T(Z/n)", _c5),
    6: ("hull and contraction", _c6),
    7: ("witness ultrafilters", _c7),
    8: ("a and ax - 1 split every prime", _c8),
    9: ("epimorphism evidence", _c9),
}


def run_criterion(k: int, **kw) -> CriterionResult:
    name, fn = CRITERIA[k]
    return _timed(k, name, fn, **kw)


def criterion_options(max_n: int = 1000, samples: int = 1000, seed: int = 0) -> dict:
    """Keyword arguments for each criterion; the defaults are the acceptance settings."""
    return {
        1: {"seed": seed}, 2: {"seed": seed}, 3: {"seed": seed},
        4: {"samples": samples, "seed": seed}, 5: {"max_n": max_n}, 6: {"max_n": max_n},
        7: {"seed": seed}, 8: {"max_n": min(max_n, 200)}, 9: {"max_n": min(max_n, 10)},
    }


def run_all(max_n: int = 1000, samples: int = 1000, seed: int = 0, only=None) -> list[CriterionResult]:
    opts = criterion_options(max_n, samples, seed)
    return [run_criterion(k, **opts[k]) for k in (only or CRITERIA)]


__all__ = ["CRITERIA", "CriterionResult", "brute_force_ultrafilters", "criterion_options",
           "descriptor_classes", "generate_families", "run_all", "run_criterion", "witness_families"]
