"""Points of Spec(R), the operators V and D, and subsets of the spectrum.

A :class:`SpectrumSubset` is a generic-point flag plus a closed part in one
of three normal forms:

``Finite``
    an explicit sorted tuple of closed points;
``Cofinite``
    all closed points except a sorted tuple (infinite-spectrum rings only);
``Predicate``
    either a union of residue classes of generators modulo a fixed modulus
    (``classes`` is set), or an opaque membership test with a declared
    infinitude flag.  Both carry finite ``included``/``excluded`` corrections.

Residue-class predicates are normalized to the smallest modulus and only
unit classes, so two of them are equal exactly when they describe the same
set of primes.  Their infinitude comes from Dirichlet's theorem (for Z and
for GF(p)[x]): a nonempty set of unit classes holds infinitely many primes,
and a non-unit class holds at most one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import islice
from math import gcd
from typing import Callable, Iterator

from . import intfactor, polyfp
from .errors import GrammarError, RefusedError, RingMismatchError
from .rings import Integers, Modular, PolyRing, RingElement, RingSpec


@dataclass(frozen=True)
class PrimeIdeal:
    """A point of Spec(R): ``gen`` is the canonical prime generator payload
    (an int for Z and Z/n, a coefficient tuple for GF(p)[x]) or None for
    the generic point, the zero ideal of a domain."""

    ring: RingSpec
    gen: object = None

    @property
    def is_generic(self) -> bool:
        return self.gen is None

    @property
    def generator(self) -> RingElement:
        return self.ring.zero if self.gen is None else self.ring.element(self.gen)

    @property
    def sort_key(self):
        if self.gen is None:
            return (0,)
        return (1, self.ring.sort_key(self.gen))

    def contains(self, a: RingElement) -> bool:
        if a.ring != self.ring:
            raise RingMismatchError(f"{a!r} is not an element of {self.ring}")
        if self.gen is None:
            return a.is_zero()
        if isinstance(self.ring, PolyRing):
            return not polyfp.mod(a.payload, self.gen, self.ring.p)
        return a.payload % self.gen == 0

    def norm(self) -> int:
        """Size of the residue field."""
        if isinstance(self.ring, PolyRing):
            return self.ring.p ** (len(self.gen) - 1)
        return self.gen

    def label(self) -> str:
        return "0" if self.gen is None else self.ring.render(self.gen)

    def __str__(self):
        return f"({self.label()})"

    def __repr__(self):
        return f"PrimeIdeal({self.ring}, {self})"


def contains(P: PrimeIdeal, a: RingElement) -> bool:
    return P.contains(a)


def generic_point(ring: RingSpec) -> PrimeIdeal:
    if not ring.is_domain:
        raise RingMismatchError(f"{ring} is not a domain; it has no generic point")
    return PrimeIdeal(ring, None)


def closed_point(ring: RingSpec, gen) -> PrimeIdeal:
    """The closed point with generator ``gen`` (payload or element), validated."""
    if isinstance(gen, RingElement):
        gen = gen.payload
    if isinstance(ring, PolyRing):
        g = polyfp.trim(gen if isinstance(gen, tuple) else (gen,), ring.p)
        if not g or g[-1] != 1 or not polyfp.is_irreducible(g, ring.p):
            raise GrammarError(f"{polyfp.render(g)} is not a monic irreducible over GF({ring.p})")
        return PrimeIdeal(ring, g)
    g = int(gen)
    if not intfactor.is_prime(g):
        raise GrammarError(f"{g} is not a prime")
    if isinstance(ring, Modular) and ring.n % g:
        raise GrammarError(f"{g} does not divide {ring.n}; ({g}) is not a prime of {ring}")
    return PrimeIdeal(ring, g)


def closed_points(ring: RingSpec) -> Iterator[PrimeIdeal]:
    """Closed points in canonical order (finite for Z/n, endless otherwise)."""
    if isinstance(ring, Modular):
        for p in intfactor.prime_divisors(ring.n):
            yield PrimeIdeal(ring, p)
    elif isinstance(ring, Integers):
        for p in intfactor.primes():
            yield PrimeIdeal(ring, p)
    else:
        for f in _irreducibles_cached(ring.p):
            yield PrimeIdeal(ring, f)


class _CachedStream:
    def __init__(self, source):
        self._source = source
        self._items = []

    def __iter__(self):
        i = 0
        while True:
            if i < len(self._items):
                yield self._items[i]
            else:
                self._items.append(next(self._source))
                yield self._items[i]
            i += 1


@lru_cache(maxsize=None)
def _irreducible_stream(p):
    return _CachedStream(polyfp.irreducibles(p))


def _irreducibles_cached(p):
    return iter(_irreducible_stream(p))


def prime_divisors(ring: RingSpec, payload) -> list[PrimeIdeal]:
    """Closed points containing a nonzero non-unit payload."""
    if isinstance(ring, PolyRing):
        _, fs = polyfp.factor(payload, ring.p)
        return [PrimeIdeal(ring, f) for f, _ in fs]
    if isinstance(ring, Modular):
        payload = gcd(payload, ring.n)
    return [PrimeIdeal(ring, q) for q in intfactor.prime_divisors(payload)]


# ---------------------------------------------------------------- ideals

@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal reduced to one canonical generator."""

    ring: RingSpec
    generator: RingElement

    @classmethod
    def of(cls, *elements) -> Ideal:
        if not elements:
            raise ValueError("an ideal needs at least one generator")
        ring = elements[0].ring
        if any(e.ring != ring for e in elements):
            raise RingMismatchError("ideal generators from different rings")
        if isinstance(ring, Integers):
            g = 0
            for e in elements:
                g = gcd(g, e.payload)
            return cls(ring, ring.element(g))
        if isinstance(ring, Modular):
            g = ring.n
            for e in elements:
                g = gcd(g, e.payload)
            return cls(ring, ring.element(g))
        g = ()
        for e in elements:
            g = polyfp.gcd(g, e.payload, ring.p)
        return cls(ring, ring.element(g))

    def is_zero(self) -> bool:
        return self.generator.is_zero()

    def is_unit(self) -> bool:
        return self.generator.is_unit()

    def __str__(self):
        return f"({self.generator})"


def ideal(*elements) -> Ideal:
    return Ideal.of(*elements)


# ---------------------------------------------------------------- PID helpers

class _IntArith:
    one = 1

    @staticmethod
    def canon(m):
        return abs(int(m))

    @staticmethod
    def reduce(r, m):
        return r % m

    @staticmethod
    def residues(m):
        return range(m)

    @staticmethod
    def coprime(r, m):
        return gcd(r, m) == 1

    @staticmethod
    def lcm(a, b):
        return a * b // gcd(a, b)

    @staticmethod
    def divisors(m):
        ds = [1]
        for q, e in intfactor.factor_int(m).items() if m > 1 else ():
            ds = [d * q**i for d in ds for i in range(e + 1)]
        return sorted(ds)

    @staticmethod
    def size(m):
        return m


class _PolyArith:
    one = (1,)

    def __init__(self, p):
        self.p = p

    def canon(self, m):
        return polyfp.monic(polyfp.trim(m, self.p), self.p)

    def reduce(self, r, m):
        return polyfp.mod(r, m, self.p)

    def residues(self, m):
        d = len(m) - 1
        from itertools import product

        for cs in product(range(self.p), repeat=d):
            yield polyfp.trim(cs, self.p)

    def coprime(self, r, m):
        return polyfp.gcd(r, m, self.p) == (1,) if r else len(m) == 1

    def lcm(self, a, b):
        return polyfp.lcm(a, b, self.p)

    def divisors(self, m):
        _, fs = polyfp.factor(m, self.p)
        ds = [(1,)]
        for q, e in fs:
            nxt = []
            for d in ds:
                acc = d
                for _ in range(e + 1):
                    nxt.append(acc)
                    acc = polyfp.mul(acc, q, self.p)
            ds = nxt
        return sorted(ds, key=polyfp.sort_key)

    def size(self, m):
        return self.p ** (len(m) - 1)


def _arith(ring):
    if isinstance(ring, Integers):
        return _IntArith
    if isinstance(ring, PolyRing):
        return _PolyArith(ring.p)
    raise TypeError(f"residue classes need Z or GF(p)[x], not {ring}")


@lru_cache(maxsize=4096)
def _units(ring, m) -> frozenset:
    A = _arith(ring)
    return frozenset(r for r in A.residues(m) if A.coprime(r, m))


@lru_cache(maxsize=4096)
def _reduction(ring, m, d) -> dict:
    """u -> u mod d over the units u mod m (d divides m)."""
    A = _arith(ring)
    return {u: A.reduce(u, d) for u in _units(ring, m)}


# ---------------------------------------------------------------- closed parts

@dataclass(frozen=True)
class Finite:
    points: tuple = ()

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.points)


@dataclass(frozen=True)
class Cofinite:
    excluded: tuple = ()

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.excluded)


@dataclass(frozen=True)
class Classes:
    """Primes whose generator reduces into ``residues`` (unit classes) mod ``modulus``."""

    modulus: object
    residues: tuple


@dataclass(frozen=True, eq=False)
class Predicate:
    test: Callable[[PrimeIdeal], bool] | None
    declared_infinite: bool | None
    description: str
    classes: Classes | None = None
    included: tuple = ()
    excluded: tuple = ()

    def _key(self):
        return (self.description, self.classes, self.included, self.excluded,
                self.declared_infinite)

    def __eq__(self, other):
        return isinstance(other, Predicate) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def _sorted_points(points) -> tuple:
    return tuple(sorted(set(points), key=lambda P: P.sort_key))


def _render_points(points) -> str:
    return "{" + ",".join(P.label() for P in points) + "}"


# ---------------------------------------------------------------- subsets

@dataclass(frozen=True)
class SpectrumSubset:
    ring: RingSpec
    includes_generic: bool
    closed_part: object = field(default_factory=Finite)

    def __post_init__(self):
        if isinstance(self.ring, Modular):
            if self.includes_generic or not isinstance(self.closed_part, Finite):
                raise ValueError("subsets of Spec(Z/n) are finite sets of closed points")
        if self.includes_generic and not self.ring.is_domain:
            raise ValueError(f"{self.ring} has no generic point")

    # membership ----------------------------------------------------------
    def contains(self, P: PrimeIdeal) -> bool:
        if P.ring != self.ring:
            raise RingMismatchError(f"{P!r} is not a point of Spec({self.ring})")
        if P.is_generic:
            return self.includes_generic
        return _closed_contains(self.ring, self.closed_part, P)

    __contains__ = contains

    def is_infinite(self) -> bool | None:
        """Whether the set of closed points is infinite; None when unknown."""
        part = self.closed_part
        if isinstance(part, Finite):
            return False
        if isinstance(part, Cofinite) or part.classes is not None:
            return True
        return part.declared_infinite

    def require_known_infinitude(self) -> bool:
        inf = self.is_infinite()
        if inf is None:
            raise RefusedError(
                f"{self.describe()}: infinitude of this predicate is not known; "
                "construct it with declared_infinite=True/False or a finite_bound")
        return inf

    def is_empty(self) -> bool:
        if self.includes_generic:
            return False
        part = self.closed_part
        if isinstance(part, Finite):
            return not part.points
        if isinstance(part, Cofinite) or part.classes is not None:
            return False
        if part.included or part.declared_infinite:
            return False
        raise RefusedError(f"{self.describe()}: emptiness of this predicate is not known")

    def closed_points(self, limit: int | None = None) -> Iterator[PrimeIdeal]:
        part = self.closed_part
        if isinstance(part, Finite):
            it = iter(part.points)
        else:
            it = (P for P in closed_points(self.ring) if _closed_contains(self.ring, part, P))
        return islice(it, limit) if limit is not None else it

    def points(self) -> list[PrimeIdeal]:
        """All points of a set with finitely many; generic first."""
        if not isinstance(self.closed_part, Finite):
            raise RefusedError(f"{self.describe()} has infinitely many points")
        head = [PrimeIdeal(self.ring, None)] if self.includes_generic else []
        return head + list(self.closed_part.points)

    # Boolean operations ---------------------------------------------------
    def union(self, other: SpectrumSubset) -> SpectrumSubset:
        return _binary(self, other, "or")

    def intersect(self, other: SpectrumSubset) -> SpectrumSubset:
        return _binary(self, other, "and")

    def complement(self) -> SpectrumSubset:
        return _complement(self)

    def difference(self, other: SpectrumSubset) -> SpectrumSubset:
        return _binary(self, _complement(other), "and")

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __invert__ = complement

    def issubset(self, other: SpectrumSubset) -> bool:
        return self.difference(other).is_empty()

    def with_generic(self, flag: bool = True) -> SpectrumSubset:
        return SpectrumSubset(self.ring, flag, self.closed_part)

    # rendering ------------------------------------------------------------
    def describe(self) -> str:
        part = self.closed_part
        if isinstance(part, Finite):
            body = _render_points(part.points)
        elif isinstance(part, Cofinite):
            if not part.excluded and self.includes_generic:
                return "all"
            body = "cofinite~" + _render_points(part.excluded)
        else:
            body = part.description
            if part.excluded:
                body += "~" + _render_points(part.excluded)
            if part.included:
                body += "|" + _render_points(part.included)
        return body + ("+generic" if self.includes_generic else "")

    def __str__(self):
        return self.describe()

    def to_json(self) -> dict:
        part = self.closed_part
        if isinstance(part, Finite):
            out = {"finite": [P.label() for P in part.points]}
        elif isinstance(part, Cofinite):
            out = {"cofinite_excluding": [P.label() for P in part.excluded]}
        else:
            out = {"predicate": part.description,
                   "declared_infinite": self.is_infinite(),
                   "excluded": [P.label() for P in part.excluded],
                   "included": [P.label() for P in part.included]}
            if part.classes is not None:
                out["infinitude_source"] = "dirichlet"
        out["generic"] = self.includes_generic
        return out

    @property
    def sort_key(self):
        part = self.closed_part
        if isinstance(part, Finite):
            return (0, tuple(P.sort_key for P in part.points), self.includes_generic)
        return (1, self.describe())


def _closed_contains(ring, part, P) -> bool:
    if isinstance(part, Finite):
        return P in part.members
    if isinstance(part, Cofinite):
        return P not in part.members
    if P in part.included:
        return True
    if P in part.excluded:
        return False
    if part.classes is not None:
        return _class_member(ring, part.classes, P)
    return bool(part.test(P))


def _class_member(ring, classes: Classes, P) -> bool:
    A = _arith(ring)
    m = classes.modulus
    if not A.coprime(P.gen, m):
        return False
    return A.reduce(P.gen, m) in classes.residues


# ---------------------------------------------------------------- constructors

def full(ring: RingSpec) -> SpectrumSubset:
    if isinstance(ring, Modular):
        return SpectrumSubset(ring, False, Finite(tuple(closed_points(ring))))
    return SpectrumSubset(ring, True, Cofinite(()))


def empty(ring: RingSpec) -> SpectrumSubset:
    return SpectrumSubset(ring, False, Finite(()))


def finite(ring: RingSpec, points, generic: bool = False) -> SpectrumSubset:
    pts = [P if isinstance(P, PrimeIdeal) else closed_point(ring, P) for P in points]
    if any(P.is_generic for P in pts):
        generic = True
        pts = [P for P in pts if not P.is_generic]
    return SpectrumSubset(ring, generic, Finite(_sorted_points(pts)))


def cofinite(ring: RingSpec, excluded, generic: bool = False) -> SpectrumSubset:
    exc = [P if isinstance(P, PrimeIdeal) else closed_point(ring, P) for P in excluded]
    if isinstance(ring, Modular):
        keep = [P for P in closed_points(ring) if P not in exc]
        return SpectrumSubset(ring, False, Finite(tuple(keep)))
    return SpectrumSubset(ring, generic, Cofinite(_sorted_points(exc)))


def all_closed(ring: RingSpec) -> SpectrumSubset:
    return cofinite(ring, ())


def residue_classes(ring: RingSpec, modulus, residues, generic: bool = False) -> SpectrumSubset:
    """Closed points whose generator reduces into ``residues`` modulo ``modulus``."""
    if isinstance(ring, Modular):
        raise GrammarError("residue-class sets are defined for Z and GF(p)[x]")
    A = _arith(ring)
    if not isinstance(modulus, RingElement):
        modulus = ring(modulus)
    m = A.canon(modulus.payload)
    if m in (0, ()):
        raise GrammarError("modulus must be nonzero")
    R = set()
    for r in residues:
        if not isinstance(r, RingElement):
            r = ring(r)
        R.add(A.reduce(r.payload, m))
    # a non-unit class holds at most the primes dividing the modulus
    inc = [P for P in prime_divisors(ring, m) if A.reduce(P.gen, m) in R] if A.size(m) > 1 else []
    units = frozenset(r for r in R if A.coprime(r, m))

    def truth(P):
        return P in inc or _class_member(ring, Classes(m, tuple(units)), P)

    relevant = set(inc) | set(prime_divisors(ring, m) if A.size(m) > 1 else [])
    part = _normalize(ring, m, units, truth, relevant)
    return SpectrumSubset(ring, generic, part)


def progression(ring: RingSpec, r, m, generic: bool = False) -> SpectrumSubset:
    """{(q) : q = r mod m}; infinite by Dirichlet when gcd(r, m) = 1."""
    return residue_classes(ring, m, [r], generic)


def predicate(ring: RingSpec, test: Callable[[PrimeIdeal], bool], *,
              declared_infinite: bool | None = None, description: str | None = None,
              finite_bound: int | None = None, generic: bool = False) -> SpectrumSubset:
    """A set of closed points given by a pure membership test.

    ``declared_infinite`` is trusted as given.  With ``finite_bound`` every
    member is asserted to have residue-field size below the bound, and the
    set is enumerated into a finite one immediately.
    """
    if isinstance(ring, Modular):
        return SpectrumSubset(ring, False, Finite(tuple(P for P in closed_points(ring) if test(P))))
    if finite_bound is not None:
        pts = []
        for P in closed_points(ring):
            if P.norm() >= finite_bound:
                break
            if test(P):
                pts.append(P)
        return SpectrumSubset(ring, generic, Finite(tuple(pts)))
    desc = description or f"predicate<{getattr(test, '__name__', 'anonymous')}>"
    return SpectrumSubset(ring, generic, Predicate(test, declared_infinite, desc))


# ---------------------------------------------------------------- algebra

_OPS = {"and": lambda x, y: x and y, "or": lambda x, y: x or y}


def _structured(ring, part):
    """(modulus, unit residues, relevant points) for Finite/Cofinite/class sets."""
    A = _arith(ring)
    if isinstance(part, Finite):
        return A.one, frozenset(), set(part.points)
    if isinstance(part, Cofinite):
        return A.one, _units(ring, A.one), set(part.excluded)
    c = part.classes
    return c.modulus, frozenset(c.residues), set(part.included) | set(part.excluded)


def _is_structured(part) -> bool:
    return not isinstance(part, Predicate) or part.classes is not None


def _normalize(ring, m, R, truth, relevant):
    A = _arith(ring)
    units_m = _units(ring, m)
    d, Rd = m, frozenset(R)
    if R and R != units_m:
        for cand in A.divisors(m):
            red = _reduction(ring, m, cand)
            Rc = frozenset(red[u] for u in R)
            if all((red[u] in Rc) == (u in R) for u in units_m):
                d, Rd = cand, Rc
                break
    elif R == units_m:
        d, Rd = A.one, _units(ring, A.one)
    if not R:
        d, Rd = A.one, frozenset()
    cls = Classes(d, tuple(sorted(Rd, key=ring.sort_key)))
    relevant = set(relevant)
    if A.size(m) > 1:
        relevant |= set(prime_divisors(ring, m))
    inc, exc = [], []
    for P in relevant:
        t = truth(P)
        c = bool(Rd) and _class_member(ring, cls, P)
        if t and not c:
            inc.append(P)
        elif c and not t:
            exc.append(P)
    if not Rd:
        return Finite(_sorted_points(inc))
    if A.size(d) == 1:
        return Cofinite(_sorted_points(exc))
    if len(Rd) == 1:
        desc = f"progression({ring.render(cls.residues[0])},{ring.render(d)})"
    else:
        desc = f"classes({ring.render(d)}:{','.join(ring.render(r) for r in cls.residues)})"
    return Predicate(None, True, desc, cls, _sorted_points(inc), _sorted_points(exc))


def _check_same(a: SpectrumSubset, b: SpectrumSubset):
    if a.ring != b.ring:
        raise RingMismatchError(f"subsets of Spec({a.ring}) and Spec({b.ring}) do not mix")


def _binary(a: SpectrumSubset, b: SpectrumSubset, op: str) -> SpectrumSubset:
    _check_same(a, b)
    f = _OPS[op]
    ring = a.ring
    generic = f(a.includes_generic, b.includes_generic)
    if isinstance(ring, Modular):
        pts = tuple(P for P in closed_points(ring) if f(a.contains(P), b.contains(P)))
        return SpectrumSubset(ring, False, Finite(pts))
    pa, pb = a.closed_part, b.closed_part
    fast = _finite_cofinite(ring, pa, pb, op)
    if fast is not None:
        return SpectrumSubset(ring, generic, fast)

    def truth(P):
        return f(_closed_contains(ring, pa, P), _closed_contains(ring, pb, P))

    if _is_structured(pa) and _is_structured(pb):
        A = _arith(ring)
        ma, Ra, rel_a = _structured(ring, pa)
        mb, Rb, rel_b = _structured(ring, pb)
        L = A.lcm(ma, mb)
        ra, rb = _reduction(ring, L, ma), _reduction(ring, L, mb)
        RL = frozenset(u for u in _units(ring, L) if f(ra[u] in Ra, rb[u] in Rb))
        part = _normalize(ring, L, RL, truth, rel_a | rel_b)
        return SpectrumSubset(ring, generic, part)
    return SpectrumSubset(ring, generic, _opaque_binary(ring, pa, pb, op, truth))


def _finite_cofinite(ring, pa, pb, op):
    """Direct set algebra when one side is Finite or both are Cofinite."""
    if isinstance(pb, Finite) and not isinstance(pa, Finite):
        pa, pb = pb, pa
    if isinstance(pa, Finite):
        if op == "and":
            return Finite(tuple(P for P in pa.points if _closed_contains(ring, pb, P)))
        if isinstance(pb, Finite):
            return Finite(_sorted_points(pa.points + pb.points))
        if isinstance(pb, Cofinite):
            return Cofinite(tuple(P for P in pb.excluded if P not in pa.members))
        return None
    if isinstance(pa, Cofinite) and isinstance(pb, Cofinite):
        if op == "and":
            return Cofinite(_sorted_points(pa.excluded + pb.excluded))
        return Cofinite(tuple(P for P in pa.excluded if P in pb.members))
    if isinstance(pa, Cofinite) and isinstance(pb, Predicate):
        pa, pb = pb, pa
    if op == "and" and isinstance(pb, Cofinite) and pa.classes is not None:
        # only the finite corrections change; the normal form is kept
        inc = tuple(P for P in pa.included if P not in pb.members)
        exc = set(pa.excluded) | {P for P in pb.excluded if _class_member(ring, pa.classes, P)}
        return Predicate(None, True, pa.description, pa.classes, inc, _sorted_points(exc))
    if isinstance(pa, Predicate) and isinstance(pb, Predicate) and pa.classes is not None \
            and pa.classes == pb.classes:
        ia, ib, ea, eb = set(pa.included), set(pb.included), set(pa.excluded), set(pb.excluded)
        inc, exc = (ia & ib, ea | eb) if op == "and" else (ia | ib, ea & eb)
        return Predicate(None, True, pa.description, pa.classes,
                         _sorted_points(inc), _sorted_points(exc))
    return None


def _opaque_binary(ring, pa, pb, op, truth):
    # one side is an opaque predicate
    if not isinstance(pa, Predicate) or pa.classes is not None:
        pa, pb = pb, pa
    if isinstance(pb, Finite):
        if op == "and":
            return Finite(tuple(P for P in pb.points if _closed_contains(ring, pa, P)))
        inc = set(pa.included) | set(pb.points)
        exc = set(pa.excluded) - set(pb.points)
        return Predicate(pa.test, pa.declared_infinite, pa.description, None,
                         _sorted_points(inc), _sorted_points(exc))
    if isinstance(pb, Cofinite):
        if op == "or":
            return Cofinite(tuple(P for P in pb.excluded if not _closed_contains(ring, pa, P)))
        exc = set(pa.excluded) | set(pb.excluded)
        inc = set(pa.included) - set(pb.excluded)
        return Predicate(pa.test, pa.declared_infinite, pa.description, None,
                         _sorted_points(inc), _sorted_points(exc))
    ia = pa.declared_infinite if pa.classes is None else True
    ib = pb.declared_infinite if pb.classes is None else True
    if op == "or":
        inf = True if (ia or ib) else (False if ia is False and ib is False else None)
    else:
        inf = False if (ia is False or ib is False) else None
    da = _part_desc(pa)
    db = _part_desc(pb)
    sym = "|" if op == "or" else "&"
    desc = f"({min(da, db)} {sym} {max(da, db)})"
    return Predicate(lambda P: truth(P), inf, desc)


def _part_desc(part) -> str:
    s = part.description
    if part.excluded:
        s += "~" + _render_points(part.excluded)
    if part.included:
        s += "|" + _render_points(part.included)
    return s


def _complement(a: SpectrumSubset) -> SpectrumSubset:
    ring = a.ring
    if isinstance(ring, Modular):
        pts = tuple(P for P in closed_points(ring) if not a.contains(P))
        return SpectrumSubset(ring, False, Finite(pts))
    generic = not a.includes_generic
    part = a.closed_part
    if isinstance(part, Finite):
        return SpectrumSubset(ring, generic, Cofinite(part.points))
    if isinstance(part, Cofinite):
        return SpectrumSubset(ring, generic, Finite(part.excluded))
    if part.classes is not None:
        m, R, rel = _structured(ring, part)
        comp = _units(ring, m) - R
        new = _normalize(ring, m, comp, lambda P: not _closed_contains(ring, part, P), rel)
        return SpectrumSubset(ring, generic, new)
    test = part.test
    return SpectrumSubset(ring, generic, Predicate(
        lambda P: not test(P), None, f"not({part.description})", None,
        part.excluded, part.included))


# ---------------------------------------------------------------- V, D, closure

def spec_enumerate(ring: RingSpec):
    """The full spectrum, plus an explicit point list (finite rings) or an
    endless stream of closed points in canonical order (infinite rings)."""
    S = full(ring)
    if isinstance(ring, Modular):
        return S, list(S.closed_part.points)
    return S, closed_points(ring)


def v_of(I) -> SpectrumSubset:
    """V(I), the primes containing I."""
    if isinstance(I, RingElement):
        I = Ideal.of(I)
    ring = I.ring
    g = I.generator
    if g.is_zero():
        return full(ring)
    if g.is_unit():
        return empty(ring)
    return SpectrumSubset(ring, False, Finite(_sorted_points(prime_divisors(ring, g.payload))))


def d_of(a: RingElement) -> SpectrumSubset:
    """D(a) = Spec(R) minus V(a)."""
    return v_of(Ideal.of(a)).complement()


def zariski_closure(S: SpectrumSubset) -> SpectrumSubset:
    """Smallest Zariski-closed superset.

    Spec(Z/n) is finite and zero-dimensional, hence discrete.  In the two
    one-dimensional rings a proper closed set is V(g) with g != 0, a finite
    set of closed points; anything containing the generic point or
    infinitely many closed points is dense.
    """
    ring = S.ring
    if isinstance(ring, Modular):
        return S
    if S.includes_generic:
        return full(ring)
    if S.require_known_infinitude():
        return full(ring)
    if isinstance(S.closed_part, Finite):
        return S
    # declared finite predicate: closed, but only expressible by enumeration
    return S
