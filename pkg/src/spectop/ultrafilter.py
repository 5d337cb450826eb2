"""Ultrafilters on sets of primes and their limit points.

On a finite carrier ultrafilters are explicit families, checked against the
three axioms with bitmasks.  On an infinite set of primes a nonprincipal
ultrafilter cannot be written down, so :class:`Nonprincipal` is an oracle:
every question is first reduced to a finite partition of the carrier, and
the oracle picks one infinite piece.  It keeps the piece it picked last and
only ever refines it, so its answers are those of a single ultrafilter.

The limit of U on C is P_U = {a : V(a) & C in U}.
"""

from __future__ import annotations

import hashlib
import json
import random
import threading
from dataclasses import dataclass, field
from itertools import combinations

from . import polyfp
from .constructible import FiniteBooleanAlgebra, boolean_subalgebra, patch_closure
from .errors import (BoundsError, InvalidDescriptorError, NoWitnessError,
                     PreconditionError, RingMismatchError)
from .rings import Integers, Modular, RingElement
from .spectrum import (Cofinite, Ideal, Predicate, PrimeIdeal, SpectrumSubset, finite,
                       generic_point, v_of)

MAX_AXIOM_CARRIER = 20
MAX_ENUM_CARRIER = 5


# ---------------------------------------------------------------- finite carriers

def _ordered(carrier):
    items = list(set(carrier))
    try:
        return sorted(items)
    except TypeError:
        return sorted(items, key=repr)


@dataclass(frozen=True)
class AxiomReport:
    """Result of an axiom check.  ``violations`` holds ``(axiom, witness)``
    pairs in axiom order; ``first_violation`` is the first of them."""

    is_ultrafilter: bool
    violations: tuple = ()

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.is_ultrafilter

    def to_json(self):
        return {"ultrafilter": self.is_ultrafilter,
                "violations": [{"axiom": ax, "witness": [sorted(w, key=repr) for w in wit]}
                               for ax, wit in self.violations]}


def check_ultrafilter_axioms(carrier, family) -> AxiomReport:
    """Check a family of subsets of a finite carrier.

    Axioms: (1) upward closure, (2) closure under binary intersection,
    (3) for disjoint A, B with A | B in U exactly one of A, B is in U.
    Nonemptiness is reported as axiom 0.  Every violated axiom is listed
    with a witness pair of subsets.
    """
    elems = _ordered(carrier)
    n = len(elems)
    if n > MAX_AXIOM_CARRIER:
        raise BoundsError(f"carrier of size {n} exceeds {MAX_AXIOM_CARRIER}")
    index = {x: i for i, x in enumerate(elems)}
    full = (1 << n) - 1

    def to_mask(S):
        m = 0
        for x in S:
            if x not in index:
                raise PreconditionError(f"{x!r} is not in the carrier")
            m |= 1 << index[x]
        return m

    def to_set(m):
        return frozenset(elems[i] for i in range(n) if m >> i & 1)

    fam = {to_mask(S) for S in family}
    members = sorted(fam)
    bad = []
    if not fam:
        bad.append((0, ()))
    # (1)
    up_ok = True
    for A in members:
        rest = full & ~A
        while rest:
            bit = rest & -rest
            rest ^= bit
            if A | bit not in fam:
                bad.append((1, (to_set(A), to_set(A | bit))))
                up_ok = False
                break
        if not up_ok:
            break
    # (2)
    meet_ok = True
    if len(members) <= 1500:
        for A, B in combinations(members, 2):
            if A & B not in fam:
                bad.append((2, (to_set(A), to_set(B))))
                meet_ok = False
                break
    else:
        # with (1), the family is up(M) for M the meet of all members, iff M is a member
        cur = members[0]
        for B in members[1:]:
            if cur & B not in fam:
                bad.append((2, (to_set(cur), to_set(B))))
                meet_ok = False
                break
            cur &= B
        if meet_ok and not up_ok:
            meet_ok = None
    # (3)
    budget = sum(1 << bin(C).count("1") for C in members)
    if budget <= 1 << 22:
        for C in members:
            A = C
            found = False
            while True:
                B = C ^ A
                if A <= B and (A in fam) == (B in fam):
                    pair = sorted((to_set(A), to_set(B)), key=lambda s: (len(s), _ordered(s)))
                    bad.append((3, tuple(pair)))
                    found = True
                    break
                if A == 0:
                    break
                A = (A - 1) & C
            if found:
                break
    elif up_ok and meet_ok:
        M = members[0]
        for B in members[1:]:
            M &= B
        if bin(M).count("1") != 1:
            low = M & -M
            bad.append((3, (to_set(low), to_set(M ^ low))))
    else:
        bad.append((3, ("not checked: family fails (1) or (2) and is too large",)))
    bad.sort(key=lambda v: v[0])
    return AxiomReport(not bad, tuple(bad))


@dataclass(frozen=True)
class FiniteUltrafilter:
    carrier: frozenset
    member_sets: frozenset

    def __post_init__(self):
        rep = check_ultrafilter_axioms(self.carrier, self.member_sets)
        if not rep:
            raise InvalidDescriptorError(f"not an ultrafilter: {rep.first_violation}")

    @classmethod
    def principal(cls, carrier, point) -> FiniteUltrafilter:
        elems = _ordered(carrier)
        if point not in elems:
            raise PreconditionError(f"{point!r} is not in the carrier")
        rest = [x for x in elems if x != point]
        fam = [frozenset((point,) + c) for k in range(len(rest) + 1) for c in combinations(rest, k)]
        return cls(frozenset(elems), frozenset(fam))

    @property
    def point(self):
        """The point every member contains (an ultrafilter on a finite set is principal)."""
        core = frozenset(self.carrier)
        for S in self.member_sets:
            core &= S
        (x,) = core
        return x

    def is_principal(self) -> bool:
        return len(self.member_sets) == 1 << (len(self.carrier) - 1) and \
            frozenset((self.point,)) in self.member_sets

    def __contains__(self, S):
        return frozenset(S) in self.member_sets


def enumerate_ultrafilters(carrier) -> list[FiniteUltrafilter]:
    """All ultrafilters on a carrier of at most five points.

    A filter on a finite set is up(M) for M the meet of its members, so the
    candidates are up(M) over nonempty M; each is run through the checker.
    """
    elems = _ordered(carrier)
    n = len(elems)
    if n > MAX_ENUM_CARRIER:
        raise BoundsError(f"carrier of size {n} exceeds {MAX_ENUM_CARRIER}")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(elems, k)]
    out = []
    for M in subsets:
        if not M:
            continue
        fam = [S for S in subsets if M <= S]
        if check_ultrafilter_axioms(elems, fam):
            out.append(FiniteUltrafilter(frozenset(elems), frozenset(fam)))
    return out


# ---------------------------------------------------------------- selection rules

class SelectionRule:
    """Chooses one of several infinite pieces.  Named rules:

    ``lex-min`` / ``lex-max``
        smallest / largest normal-form description;
    ``first-point``
        the piece containing the smallest closed point;
    ``seeded-<k>``
        a hash of k and the sorted descriptions picks the index.
    """

    def __init__(self, name: str):
        self.name = name
        if name in ("lex-min", "lex-max", "first-point"):
            self.seed = None
        elif name.startswith("seeded-") and name[7:].isdigit():
            self.seed = int(name[7:])
        else:
            raise InvalidDescriptorError(f"unknown selection rule {name!r}")

    def choose(self, pieces: list[SpectrumSubset]) -> SpectrumSubset:
        ordered = sorted(pieces, key=lambda S: S.describe())
        if self.name == "lex-min":
            return ordered[0]
        if self.name == "lex-max":
            return ordered[-1]
        if self.name == "first-point":
            return min(ordered, key=lambda S: next(S.closed_points()).sort_key)
        blob = f"{self.seed}|" + "|".join(S.describe() for S in ordered)
        h = int.from_bytes(hashlib.sha256(blob.encode()).digest()[:8], "big")
        return ordered[h % len(ordered)]

    def __repr__(self):
        return f"SelectionRule({self.name!r})"


SELECTION_RULES = ("lex-min", "lex-max", "first-point") + tuple(f"seeded-{k}" for k in range(7))


# ---------------------------------------------------------------- descriptors

class UltrafilterDescriptor:
    """An ultrafilter on a set C of primes.

    ``selects(B)`` decides whether B & C is in U; ``select(algebra)``
    returns the one atom of a finite Boolean algebra on C that U contains.
    """

    carrier: SpectrumSubset
    is_principal: bool = False

    def selects(self, B: SpectrumSubset) -> bool:
        raise NotImplementedError

    def select(self, algebra: FiniteBooleanAlgebra):
        if algebra.carrier != self.carrier:
            raise PreconditionError("algebra lives on a different carrier")
        chosen = [a for a in algebra.atoms if self.selects(a.subset)]
        assert len(chosen) == 1, chosen
        return chosen[0]

    def to_json(self) -> dict:
        raise NotImplementedError

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class Principal(UltrafilterDescriptor):
    """All subsets of C that contain the point P."""

    is_principal = True

    def __init__(self, carrier: SpectrumSubset, point: PrimeIdeal):
        if point.ring != carrier.ring:
            raise RingMismatchError("point and carrier live in different spectra")
        if not carrier.contains(point):
            raise InvalidDescriptorError(f"{point} is not in {carrier.describe()}")
        self.carrier = carrier
        self.point = point

    def selects(self, B):
        return B.contains(self.point)

    def select(self, algebra):
        return algebra.atom_containing(self.point)

    def to_json(self):
        return {"principal": self.point.label()}

    def __repr__(self):
        return f"Principal({self.carrier.describe()}, {self.point})"


class Nonprincipal(UltrafilterDescriptor):
    """A nonprincipal ultrafilter on an infinite C, given by a selection rule.

    A nonprincipal ultrafilter contains every cofinite subset of C, so sets
    only matter up to finite differences.  State: an infinite set
    ``current``, kept without finite corrections, such that U contains
    exactly the sets that almost contain it; plus the log of choices.  A
    query splits ``current`` into finitely many pieces.  If one piece is
    infinite it is forced; otherwise the rule picks one.  Each answer only
    shrinks ``current``, so all answers come from one ultrafilter.
    """

    def __init__(self, carrier: SpectrumSubset, rule: str = "lex-min"):
        if isinstance(carrier.ring, Modular) or not carrier.require_known_infinitude():
            raise InvalidDescriptorError(
                f"{carrier.describe()} is finite; it carries only principal ultrafilters")
        self.carrier = carrier
        self.rule = SelectionRule(rule)
        self._current = _core(carrier)
        self._choices: list[dict] = []
        self._lock = threading.RLock()

    @property
    def current(self) -> SpectrumSubset:
        with self._lock:
            return self._current

    @property
    def choices(self) -> list[dict]:
        with self._lock:
            return [dict(c) for c in self._choices]

    def _refine(self, pieces, query) -> int:
        infinite = [i for i, q in enumerate(pieces) if q.require_known_infinitude()]
        assert infinite, "an infinite set split into finitely many finite pieces"
        if len(infinite) == 1:
            k = infinite[0]
        else:
            cores = [_core(pieces[i]) for i in infinite]
            pick = self.rule.choose(cores)
            k = infinite[cores.index(pick)]
            self._choices.append({"query": query,
                                  "pieces": sorted(c.describe() for c in cores),
                                  "chosen": pick.describe()})
        self._current = _core(pieces[k])
        return k

    def selects(self, B):
        if B.ring != self.carrier.ring:
            raise RingMismatchError("set and carrier live in different spectra")
        with self._lock:
            cur = self._current
            inside, outside = cur.intersect(B), cur.difference(B)
            return self._refine([inside, outside], B.intersect(self.carrier).describe()) == 0

    def replay(self, records, parse) -> None:
        """Re-apply logged choices: the rule must pick the logged piece, and
        that piece must lie inside the current one up to finitely many points."""
        with self._lock:
            for rec in records:
                pieces = [parse(t) for t in rec["pieces"]]
                pick = self.rule.choose(pieces)
                if pick.describe() != rec["chosen"]:
                    raise InvalidDescriptorError(f"rule {self.rule.name} does not pick {rec['chosen']}")
                if pick.difference(self._current).require_known_infinitude():
                    raise InvalidDescriptorError(f"{rec['chosen']} does not refine {self._current}")
                self._current = pick
                self._choices.append(dict(rec))

    def select(self, algebra):
        if algebra.carrier != self.carrier:
            raise PreconditionError("algebra lives on a different carrier")
        with self._lock:
            pieces = [self._current.intersect(a.subset) for a in algebra.atoms]
            query = ";".join(a.describe() for a in algebra.atoms)
            return algebra.atoms[self._refine(pieces, query)]

    def to_json(self):
        return {"nonprincipal": {"carrier": self.carrier.describe(),
                                 "rule": self.rule.name,
                                 "choices": self.choices}}

    def __repr__(self):
        return f"Nonprincipal({self.carrier.describe()}, {self.rule.name!r})"


def _core(S: SpectrumSubset) -> SpectrumSubset:
    """S without the generic point and without finite corrections."""
    part = S.closed_part
    if isinstance(part, Cofinite):
        part = Cofinite(())
    elif isinstance(part, Predicate):
        part = Predicate(part.test, part.declared_infinite, part.description, part.classes)
    return SpectrumSubset(S.ring, False, part)


class _Induced(UltrafilterDescriptor):
    mode = ""

    def __init__(self, parent: UltrafilterDescriptor, carrier: SpectrumSubset):
        self.parent = parent
        self.carrier = carrier

    def to_json(self):
        return {"nonprincipal": {"carrier": self.carrier.describe(),
                                 "induced": self.mode,
                                 "parent": self.parent.to_json()}}

    def __repr__(self):
        return f"{type(self).__name__}({self.parent!r}, {self.carrier.describe()})"


class InducedOnMember(_Induced):
    """U_1 = {C_1 & B : B in U} on a member C_1 of U."""

    mode = "member"

    def selects(self, B):
        return self.parent.selects(B.intersect(self.carrier))


class InducedOnSuperset(_Induced):
    """U_lambda = {B subset of C_lambda : B & C in U}."""

    mode = "superset"

    def selects(self, B):
        return self.parent.selects(B.intersect(self.parent.carrier))


def descriptor_from_json(ring, data: dict, carrier: SpectrumSubset | None = None) -> UltrafilterDescriptor:
    """Rebuild a descriptor; nonprincipal choices are replayed and checked."""
    from .grammar import parse_set
    from .spectrum import closed_point, full

    if "principal" in data:
        label = data["principal"]
        P = generic_point(ring) if label == "0" else closed_point(ring, ring.parse(label))
        return Principal(carrier if carrier is not None else full(ring), P)
    body = data["nonprincipal"]
    C = parse_set(ring, body["carrier"])
    if "induced" in body:
        parent = descriptor_from_json(ring, body["parent"])
        return (InducedOnMember if body["induced"] == "member" else InducedOnSuperset)(parent, C)
    U = Nonprincipal(C, body.get("rule", "lex-min"))
    U.replay(body.get("choices", []), lambda t: parse_set(ring, t))
    return U


# ---------------------------------------------------------------- limits

@dataclass(frozen=True)
class MembershipVerdict:
    """Whether ``element`` lies in P_U, with the trace V(a) & C and the
    atom of the Boolean algebra generated by the trace that U selected."""

    element: RingElement
    in_limit: bool
    trace: SpectrumSubset
    selected: SpectrumSubset
    algebra: list = field(default_factory=list)

    def reconstructs(self) -> bool:
        return self.selected.issubset(self.trace) == self.in_limit

    def to_json(self):
        return {"element": str(self.element), "in_limit": self.in_limit,
                "trace": self.trace.describe(), "trace_infinite": self.trace.is_infinite(),
                "selected_atom": self.selected.describe(), "algebra": self.algebra}


def limit_contains(U: UltrafilterDescriptor, a: RingElement) -> MembershipVerdict:
    if a.ring != U.carrier.ring:
        raise RingMismatchError(f"{a!r} is not an element of {U.carrier.ring}")
    trace = v_of(a).intersect(U.carrier)
    alg = boolean_subalgebra(U.carrier, [trace])
    atom = U.select(alg)
    return MembershipVerdict(a, bool(atom.signs[0]), trace, atom.subset, alg.log())


def ultrafilter_limit(U: UltrafilterDescriptor) -> PrimeIdeal:
    """P_U as a point of Spec(R).

    Principal at P gives P.  Otherwise every trace V(a) & C with a != 0 is
    finite, so no such a is in P_U, while 0 is; P_U is the zero ideal.  The
    two facts are checked through the oracle before returning.
    """
    C = U.carrier
    if C.is_empty():
        raise PreconditionError("the carrier is empty")
    if isinstance(U, Principal):
        return U.point
    if isinstance(C.ring, Modular):
        raise InvalidDescriptorError("Spec(Z/n) is finite; only principal ultrafilters exist")
    if not C.require_known_infinitude():
        raise InvalidDescriptorError(f"nonprincipal descriptor on finite {C.describe()}")
    ring = C.ring
    assert limit_contains(U, ring.zero).in_limit
    P = next(C.closed_points())
    assert not limit_contains(U, P.generator).in_limit
    return generic_point(ring)


def _random_element(ring, rng: random.Random, zero_rate: float = 0.1) -> RingElement:
    if rng.random() < zero_rate:
        return ring.zero
    if isinstance(ring, Integers):
        return ring.element(rng.randint(-10**4, 10**4))
    if isinstance(ring, Modular):
        return ring.element(rng.randrange(ring.n))
    d = rng.randint(0, 8)
    return ring.element(polyfp.trim(tuple(rng.randrange(ring.p) for _ in range(d + 1)), ring.p))


def random_element(ring, rng: random.Random) -> RingElement:
    return _random_element(ring, rng)


def limit_primality_check(U: UltrafilterDescriptor, samples: int = 1000, seed: int = 0) -> dict:
    """Sampled check that P_U is a prime ideal.

    For each pair (a, b): ab in P_U implies a or b in P_U; a + b in P_U
    when both are; ra in P_U when a is.  Membership always goes through
    :func:`limit_contains`.
    """
    rng = random.Random(seed)
    ring = U.carrier.ring
    memo: dict = {}

    def member(x):
        if x not in memo:
            memo[x] = limit_contains(U, x).in_limit
        return memo[x]

    bad = []
    prime_hits = 0
    for _ in range(samples):
        a, b = _random_element(ring, rng), _random_element(ring, rng)
        ia, ib = member(a), member(b)
        if member(a * b):
            prime_hits += 1
            if not (ia or ib):
                bad.append({"law": "prime", "a": str(a), "b": str(b)})
        if ia and ib and not member(a + b):
            bad.append({"law": "sum", "a": str(a), "b": str(b)})
        if ia and not member(b * a):
            bad.append({"law": "absorb", "a": str(a), "r": str(b)})
    if not member(ring.zero):
        bad.append({"law": "zero"})
    if member(ring.one):
        bad.append({"law": "proper"})
    return {"descriptor": U.to_json(), "samples": samples, "seed": seed,
            "products_in_limit": prime_hits, "violations": bad, "passed": not bad}


# ---------------------------------------------------------------- induced

def induce_on_member(U: UltrafilterDescriptor, C1: SpectrumSubset) -> UltrafilterDescriptor:
    if not C1.issubset(U.carrier):
        raise PreconditionError(f"{C1.describe()} is not contained in {U.carrier.describe()}")
    if not U.selects(C1):
        raise PreconditionError(f"{C1.describe()} is not selected by the ultrafilter")
    if C1 == U.carrier:
        return U
    if isinstance(U, Principal):
        return Principal(C1, U.point)
    return InducedOnMember(U, C1)


def induce_on_superset(U: UltrafilterDescriptor, C_lam: SpectrumSubset) -> UltrafilterDescriptor:
    if not U.carrier.issubset(C_lam):
        raise PreconditionError(f"{U.carrier.describe()} is not contained in {C_lam.describe()}")
    if C_lam == U.carrier:
        return U
    if isinstance(U, Principal):
        return Principal(C_lam, U.point)
    return InducedOnSuperset(U, C_lam)


# ---------------------------------------------------------------- closure

def ultrafilter_closure(C: SpectrumSubset) -> SpectrumSubset:
    """C together with the limits of all ultrafilters on C.

    A finite C carries only the principal ultrafilters, whose limits are its
    own points.  An infinite C also carries nonprincipal ones, and they all
    share the limit computed by :func:`ultrafilter_limit`.
    """
    if isinstance(C.ring, Modular) or not C.require_known_infinitude():
        limits = [ultrafilter_limit(Principal(C, P)) for P in C.points()]
        assert all(C.contains(P) for P in limits)
        return C
    P = ultrafilter_limit(Nonprincipal(C))
    return C.union(finite(C.ring, [P]))


def is_ultrafilter_closed(C: SpectrumSubset) -> bool:
    return ultrafilter_closure(C) == C


# ---------------------------------------------------------------- witness

@dataclass
class Witness:
    point: PrimeIdeal
    ultrafilter: UltrafilterDescriptor
    log: list

    def log_json(self) -> str:
        return json.dumps(self.log, indent=2)


def _common_ideal(C: SpectrumSubset) -> Ideal:
    """I = the intersection of the primes in C."""
    ring = C.ring
    if C.includes_generic or C.require_known_infinitude():
        return Ideal(ring, ring.zero)
    g = ring.one
    for P in C.closed_points():
        g = g * P.generator
    return Ideal.of(g)


def _sample_nonzero(ring, rng, k):
    out = []
    while len(out) < k:
        a = _random_element(ring, rng, zero_rate=0.0)
        if not a.is_zero():
            out.append(a)
    return out


def witness_ultrafilter(C: SpectrumSubset, rule: str = "lex-min", probes=(), samples: int = 50,
                        seed: int = 0) -> Witness:
    """A point of the closure outside C, with an ultrafilter on C converging to it.

    ``probes`` are extra subsets of the ambient spectrum; each one is put to
    the ultrafilter as a finite-stage selection and logged.
    """
    closure = patch_closure(C)
    if closure == C:
        raise NoWitnessError(f"{C.describe()} is already closed; there is no witness")
    ring = C.ring
    log = []
    I = _common_ideal(C)
    log.append({"stage": "intersection", "ideal": str(I),
                "note": "I is the intersection of the primes of C"})
    pool = closure.difference(C)
    Pbar = pool.points()[0]
    log.append({"stage": "witness_pool", "pool": pool.describe(), "point": str(Pbar),
                "note": "points are drawn from the patch closure minus C; "
                        "V(I) minus C is the pool only after passing to the regular hull, "
                        "where Zariski and patch closed sets agree"})
    log.append({"stage": "nonempty_traces", "lemma": "vnr.relatively_prime_lemma_check",
                "note": "a and ax-1 are comaximal in the regular hull, so no trace V_C(a), "
                        "a in the chosen prime, is empty"})
    # in the supported rings the pool is the generic point, and the zero ideal holds only 0
    assert Pbar.is_generic, Pbar
    base = [ring.zero]
    traces = [v_of(a).intersect(C) for a in base]
    log.append({"stage": "filter_base",
                "base": [{"a": str(a), "trace": t.describe(), "nonempty": not t.is_empty()}
                         for a, t in zip(base, traces)]})
    U = Nonprincipal(C, rule)
    for t in traces:
        if not U.selects(t):
            raise AssertionError(f"filter base member {t.describe()} was not selected")
    stages = []
    for B in probes:
        alg = boolean_subalgebra(C, [B.intersect(C)])
        atom = U.select(alg)
        stages.append({"probe": B.describe(), "atoms": alg.log(), "selected": atom.describe()})
    log.append({"stage": "extension", "rule": rule, "selections": stages,
                "choices": U.choices})
    limit = ultrafilter_limit(U)
    rng = random.Random(seed)
    checked = [ring.zero] + _sample_nonzero(ring, rng, max(samples - 1, 0))
    mismatches = [str(a) for a in checked if limit_contains(U, a).in_limit != Pbar.contains(a)]
    log.append({"stage": "verification", "limit": str(limit), "equals_witness": limit == Pbar,
                "sampled_elements": len(checked), "mismatches": mismatches})
    if limit != Pbar or mismatches:
        raise AssertionError(f"limit {limit} differs from witness {Pbar}: {mismatches}")
    return Witness(Pbar, U, log)


__all__ = [
    "AxiomReport", "FiniteUltrafilter", "InducedOnMember", "InducedOnSuperset",
    "MembershipVerdict", "Nonprincipal", "Principal", "SELECTION_RULES", "SelectionRule",
    "UltrafilterDescriptor", "Witness", "check_ultrafilter_axioms", "descriptor_from_json",
    "enumerate_ultrafilters", "induce_on_member", "induce_on_superset", "is_ultrafilter_closed",
    "limit_contains", "limit_primality_check", "random_element", "ultrafilter_closure",
    "ultrafilter_limit", "witness_ultrafilter",
]
