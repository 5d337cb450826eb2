"""Von Neumann regular rings and the regular hull of Z/n.

T(Z/n) is modelled as the product of the prime fields F_p over the primes
p | n.  Elements are tuples of residues, one per component, and
everything is componentwise: the punctual inverse of a is the field inverse
where a component is nonzero and 0 where it is zero.

The hull map iota: Z/n -> T sends x to (x mod p)_p.  Its certificate
checks the two defining relations a^2 X_a = a and a X_a^2 = X_a with
X_a -> iota(a)^(-1), the hom laws, and the bijection of spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod

import numpy as np

from . import intfactor, kernels
from .errors import BoundsError, PreconditionError, RingMismatchError
from .rings import Modular, RingElement
from .spectrum import PrimeIdeal, closed_points

HULL_BOUND = 10**6
EXHAUSTIVE_BOUND = 1000
HOM_CHECK_BOUND = 10**4


# ---------------------------------------------------------------- the ring

@dataclass(frozen=True)
class VnrRing:
    """prod_{p | modulus} F_p."""

    modulus: int
    components: tuple

    @classmethod
    def of(cls, n: int) -> VnrRing:
        return cls(n, tuple(intfactor.prime_divisors(n)))

    def __post_init__(self):
        if tuple(intfactor.prime_divisors(self.modulus)) != tuple(self.components):
            raise PreconditionError(f"components {self.components} are not the primes of {self.modulus}")

    @property
    def size(self) -> int:
        return prod(self.components)

    def element(self, values) -> tuple:
        values = tuple(values)
        if len(values) != len(self.components):
            raise RingMismatchError(f"expected {len(self.components)} components, got {len(values)}")
        return tuple(v % p for v, p in zip(values, self.components))

    def from_int(self, x: int) -> tuple:
        return tuple(x % p for p in self.components)

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.components)

    @property
    def one(self) -> tuple:
        return (1,) * len(self.components)

    def add(self, a, b):
        return tuple((x + y) % p for x, y, p in zip(a, b, self.components))

    def sub(self, a, b):
        return tuple((x - y) % p for x, y, p in zip(a, b, self.components))

    def mul(self, a, b):
        return tuple(x * y % p for x, y, p in zip(a, b, self.components))

    def neg(self, a):
        return tuple(-x % p for x, p in zip(a, self.components))

    def elements(self):
        return product(*(range(p) for p in self.components))

    def idempotent(self, j: int) -> tuple:
        """The component idempotent f_j."""
        return tuple(int(i == j) for i in range(len(self.components)))

    def primes(self) -> list[int]:
        """Prime ideals Q_j = {t : t_j = 0}, by component index."""
        return list(range(len(self.components)))

    def in_prime(self, a, j: int) -> bool:
        return a[j] == 0

    def prime_label(self, j: int) -> str:
        return f"Q_{self.components[j]}"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "components": list(self.components)}

    def __str__(self):
        return " x ".join(f"F_{p}" for p in self.components) or "0"


# ---------------------------------------------------------------- inverses

def _as_vnr(T, a):
    if isinstance(T, VnrRing):
        return a if isinstance(a, tuple) else T.from_int(a)
    raise TypeError(f"expected a VnrRing, got {T!r}")


def punctual_inverse(T, a):
    """The unique x with a^2 x = a and x^2 a = x.

    ``T`` is a :class:`VnrRing` (tuple elements) or a regular Z/n, that is
    n squarefree (integer elements).
    """
    if isinstance(T, Modular):
        x = try_punctual_inverse(T, a)
        if x is None:
            raise PreconditionError(f"{a} has no punctual inverse in {T}; {T} is not regular")
        return x
    a = _as_vnr(T, a)
    return tuple(pow(v, -1, p) if v else 0 for v, p in zip(a, T.components))


def try_punctual_inverse(ring: Modular, a):
    """Punctual inverse in Z/n, or None.

    Modulo a prime power p^k the equations force x = a^(-1) when p does not
    divide a and x = 0 when p^k divides a; otherwise a^2 x = a has no
    solution.  The local answers are glued by CRT.
    """
    if isinstance(a, RingElement):
        a = a.payload
    n = ring.n
    a %= n
    x, m = 0, 1
    for p, k in intfactor.factor_int(n).items():
        q = p**k
        r = a % q
        if r == 0:
            loc = 0
        elif r % p:
            loc = pow(r, -1, q)
        else:
            return None
        x = intfactor.crt_pair(x, m, loc, q)
        m *= q
    return x


def e_of(T, a):
    """e(a) = a a^(-1), idempotent, generating the same ideal as a."""
    if isinstance(T, Modular):
        a = a.payload if isinstance(a, RingElement) else a % T.n
        e = a * punctual_inverse(T, a) % T.n
        assert e * e % T.n == e and e * a % T.n == a
        return e
    a = _as_vnr(T, a)
    e = T.mul(a, punctual_inverse(T, a))
    # e is idempotent, a = e a puts a in eT, and e = a a^(-1) puts e in aT
    assert T.mul(e, e) == e and T.mul(e, a) == a
    return e


def principal_generator(T, a, b):
    """g = e(a) + e(b)(1 - e(a)), with gT = aT + bT."""
    if isinstance(T, Modular):
        n = T.n
        a = a.payload if isinstance(a, RingElement) else a % n
        b = b.payload if isinstance(b, RingElement) else b % n
        ea, eb = e_of(T, a), e_of(T, b)
        g = (ea + eb * (1 - ea)) % n
        ia, ib = punctual_inverse(T, a), punctual_inverse(T, b)
        assert g * a % n == a and g * b % n == b
        assert (a * ia + b * (ib * (1 - ea))) % n == g
        return g
    a, b = _as_vnr(T, a), _as_vnr(T, b)
    ea, eb = e_of(T, a), e_of(T, b)
    g = T.add(ea, T.mul(eb, T.sub(T.one, ea)))
    ia, ib = punctual_inverse(T, a), punctual_inverse(T, b)
    assert T.mul(g, a) == a and T.mul(g, b) == b
    assert T.add(T.mul(a, ia), T.mul(b, T.mul(ib, T.sub(T.one, ea)))) == g
    return g


def ideal_set(T: VnrRing, a) -> frozenset:
    """aT as an explicit set (small T only)."""
    a = _as_vnr(T, a)
    return frozenset(T.mul(a, t) for t in T.elements())


# ---------------------------------------------------------------- the hull map

@dataclass(frozen=True)
class RingHom:
    """iota: Z/n -> T(Z/n), x -> (x mod p)_p."""

    source: Modular
    target: VnrRing

    def __call__(self, x) -> tuple:
        if isinstance(x, RingElement):
            if x.ring != self.source:
                raise RingMismatchError(f"{x!r} is not in {self.source}")
            x = x.payload
        return self.target.from_int(x)

    def contraction(self, j: int) -> PrimeIdeal:
        """iota^(-1)(Q_j), computed as a set and matched to a prime of Z/n."""
        n = self.source.n
        pre = frozenset(x for x in range(n) if self(x)[j] == 0)
        for P in closed_points(self.source):
            if pre == frozenset(range(0, n, P.gen)):
                return P
        raise AssertionError(f"preimage of Q_{j} is not a prime")  # pragma: no cover

    def verify(self) -> dict:
        """Unital, additive and multiplicative, over all pairs (n <= 10^4)."""
        n = self.source.n
        if n > HOM_CHECK_BOUND:
            raise BoundsError(f"exhaustive hom check is limited to n <= {HOM_CHECK_BOUND}")
        unital, add_bad, mul_bad = kernels.hom_check(n, list(self.target.components))
        return {"unital": bool(unital), "additive_violations": int(add_bad),
                "multiplicative_violations": int(mul_bad),
                "passed": bool(unital) and add_bad == 0 and mul_bad == 0}

    def kernel_size(self) -> int:
        return self.source.n // prod(self.target.components)

    def is_injective(self) -> bool:
        return self.kernel_size() == 1

    def is_bijective(self) -> bool:
        return self.is_injective() and self.target.size == self.source.n

    def table(self, limit: int = 64) -> list:
        return [[x, list(self(x))] for x in range(min(self.source.n, limit))]


def t_of(ring: Modular, bound: int = HULL_BOUND):
    """(T, iota) for Z/n, n <= bound."""
    if not isinstance(ring, Modular):
        raise PreconditionError(f"the finite hull model needs Z/n, not {ring}")
    if ring.n > bound:
        raise BoundsError(f"n = {ring.n} exceeds the hull bound {bound}")
    T = VnrRing.of(ring.n)
    return T, RingHom(ring, T)


def hull_certificate(T: VnrRing, iota: RingHom, exhaustive_bound: int = EXHAUSTIVE_BOUND) -> dict:
    """Defining relations over all of R, hom laws, injectivity and the
    spectrum bijection, as a JSON-ready report."""
    n = iota.source.n
    x = np.arange(n, dtype=np.int64)
    rel_bad = 0
    first = None
    for p in T.components:
        inv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
        r = x % p
        X = inv[r]
        bad = ((r * r % p) * X % p != r) | ((X * X % p) * r % p != X)
        rel_bad += int(bad.sum())
        if first is None and bad.any():
            first = int(np.argmax(bad))
    # kernel of iota, counted directly
    in_all = np.ones(n, dtype=bool)
    for p in T.components:
        in_all &= x % p == 0
    kernel = int(in_all.sum())
    cert = {
        "relations": {"checked": n, "violations": rel_bad, "first_counterexample": first,
                      "passed": rel_bad == 0},
        "kernel_size": kernel,
        "injective": kernel == 1,
        "bijective": kernel == 1 and T.size == n,
        "squarefree": intfactor.is_squarefree(n),
        "spectrum_bijection": [[T.prime_label(j), str(iota.contraction(j))] for j in T.primes()],
    }
    if n <= exhaustive_bound:
        cert["hom_laws"] = iota.verify()
    cert["passed"] = (rel_bad == 0 and cert["bijective"] == cert["squarefree"]
                      and cert.get("hom_laws", {"passed": True})["passed"])
    return cert


def is_vnr(ring: Modular, exhaustive_bound: int = 2000) -> bool:
    """Every element has a punctual inverse.  Exhaustive search for small n,
    the closed form of :func:`try_punctual_inverse` otherwise."""
    n = ring.n
    if n <= exhaustive_bound:
        counts, _, regular = kernels.punctual_search(n)
        assert all(c <= 1 for c in counts), "punctual inverse not unique"
        return all(regular)
    return all(try_punctual_inverse(ring, p) is not None for p in intfactor.prime_divisors(n))


# ---------------------------------------------------------------- contraction

@dataclass(frozen=True)
class ContractionReport:
    table: dict
    inverse: dict
    bijective: bool
    continuity_checked: int
    continuity_violations: int
    homeomorphism: bool
    note: str = ""

    def to_json(self) -> dict:
        return {"map": self.table, "inverse": self.inverse, "bijective": self.bijective,
                "continuity": {"elements": self.continuity_checked,
                               "violations": self.continuity_violations},
                "homeomorphism": self.homeomorphism, "note": self.note}

    @property
    def passed(self) -> bool:
        return self.bijective and self.continuity_violations == 0 and self.homeomorphism


def contraction_map(iota: RingHom) -> ContractionReport:
    """Q -> iota^(-1)(Q) with its certificates.

    Continuity: for every a in Z/n the preimage of V(a) is V(iota(a)).
    Both spectra are finite and both topologies in question are discrete
    (zero-dimensional T; isolated points of Spec(Z/n) in the patch
    topology), so a continuous bijection is a homeomorphism.
    """
    T = iota.target
    n = iota.source.n
    images = {j: iota.contraction(j) for j in T.primes()}
    table = {T.prime_label(j): str(P) for j, P in images.items()}
    inverse = {str(P): T.prime_label(j) for j, P in images.items()}
    spec_R = list(closed_points(iota.source))
    bijective = len(set(images.values())) == len(images) and set(images.values()) == set(spec_R)
    a = np.arange(n, dtype=np.int64)
    bad = np.zeros(n, dtype=bool)
    for j, P in images.items():
        in_V_a = a % P.gen == 0                    # P in V(a)
        in_V_iota = (a % T.components[j]) == 0     # Q_j in V(iota(a))
        bad |= in_V_a != in_V_iota
    viol = int(bad.sum())
    return ContractionReport(table, inverse, bijective, n, viol, bijective and viol == 0,
                             "finite discrete spaces: the bijection is a homeomorphism")


def zero_dimensional_check(T: VnrRing) -> dict:
    """Every prime of T is maximal.

    Every ideal of T is I_S = {t : t_j = 0 for j in S} for a set S of
    components, and membership depends only on the idempotent e(t).  So
    primality of I_S is decided on the idempotents e_A, e_B (A, B sets of
    components, e_A e_B = e_{A & B}).  The primes found must be exactly the
    Q_j, and no Q_j lies in another: f_k is in Q_j but not in Q_k.
    """
    k = len(T.components)
    subsets = range(1 << k)
    primes = []
    for S in subsets:
        if S == 0:
            continue  # the unit ideal
        prime = all(not (A & B & S == 0) or (A & S == 0) or (B & S == 0)
                    for A in subsets for B in subsets)
        if prime:
            primes.append(S)
    singletons = sorted(1 << j for j in range(k))
    strict = []
    for j in range(k):
        for i in range(k):
            if i != j:
                f = T.idempotent(i)
                if not (T.in_prime(f, j) and not T.in_prime(f, i)):
                    strict.append((T.prime_label(j), T.prime_label(i)))
    return {"primes": [T.prime_label(S.bit_length() - 1) for S in primes],
            "primes_are_components": sorted(primes) == singletons,
            "containments": strict, "passed": sorted(primes) == singletons and not strict}


# ---------------------------------------------------------------- small rings

@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring by its tables; element 0 is zero."""

    name: str
    add: np.ndarray
    mul: np.ndarray
    one: int
    labels: tuple = field(default=())

    @property
    def size(self) -> int:
        return len(self.add)

    def idempotents(self) -> list[int]:
        return [e for e in range(self.size) if self.mul[e, e] == e]

    def multiple(self, k: int, s: int) -> int:
        out = 0
        for _ in range(k):
            out = int(self.add[out, s])
        return out

    def axioms_hold(self) -> bool:
        A, M, n = self.add, self.mul, self.size
        r = np.arange(n)
        if not (A == A.T).all() or not (M == M.T).all():
            return False
        if not (A[0] == r).all() or not (M[self.one] == r).all():
            return False
        if not all((A[i] == 0).any() for i in r):
            return False
        for x in r:
            # indexed by (y, z): associativity of + and *, then distributivity
            if not (A[A[x][:, None], r[None, :]] == A[x][A]).all():
                return False
            if not (M[M[x][:, None], r[None, :]] == M[x][M]).all():
                return False
            if not (M[x][A] == A[M[x][:, None], M[x][None, :]]).all():
                return False
        return True


def _from_elements(name, elems, add, mul, one):
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    At = np.zeros((n, n), dtype=np.int64)
    Mt = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            At[i, j] = index[add(x, y)]
            Mt[i, j] = index[mul(x, y)]
    return FiniteRing(name, At, Mt, index[one], tuple(str(e) for e in elems))


def _zmod(m):
    return _from_elements(f"Z/{m}", list(range(m)), lambda a, b: (a + b) % m,
                          lambda a, b: a * b % m, 1 % m)


def _quotient(m, f, name):
    """Z/m[x]/(f) for monic f (little-endian coefficients)."""
    d = len(f) - 1
    elems = list(product(range(m), repeat=d))

    def add(a, b):
        return tuple((x + y) % m for x, y in zip(a, b))

    def mul(a, b):
        c = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                c[i + j] += x * y
        for k in range(len(c) - 1, d - 1, -1):
            t = c[k]
            for i in range(d + 1):
                c[k - d + i] -= t * f[i]
        return tuple(v % m for v in c[:d])

    return _from_elements(name, elems, add, mul, (1,) + (0,) * (d - 1))


def _product(R, S):
    elems = [(i, j) for i in range(R.size) for j in range(S.size)]
    return _from_elements(
        f"{R.name} x {S.name}", elems,
        lambda a, b: (int(R.add[a[0], b[0]]), int(S.add[a[1], b[1]])),
        lambda a, b: (int(R.mul[a[0], b[0]]), int(S.mul[a[1], b[1]])),
        (R.one, S.one))


def _z4_dual(c):
    """Z/4[x]/(2x, x^2 - c) for c in {0, 2}: elements a + bx, a in Z/4, b in Z/2."""
    elems = [(a, b) for a in range(4) for b in range(2)]
    return _from_elements(f"Z/4[x]/(2x,x^2-{c})" if c else "Z/4[x]/(2x,x^2)", elems,
                          lambda u, v: ((u[0] + v[0]) % 4, (u[1] + v[1]) % 2),
                          lambda u, v: ((u[0] * v[0] + c * u[1] * v[1]) % 4,
                                        (u[0] * v[1] + u[1] * v[0]) % 2),
                          (1, 0))


def _f2_xy():
    """F_2[x,y]/(x,y)^2."""
    elems = list(product(range(2), repeat=3))
    return _from_elements("F2[x,y]/(x,y)^2", elems,
                          lambda u, v: tuple((s + t) % 2 for s, t in zip(u, v)),
                          lambda u, v: (u[0] * v[0] % 2, (u[0] * v[1] + u[1] * v[0]) % 2,
                                        (u[0] * v[2] + u[2] * v[0]) % 2),
                          (1, 0, 0))


@lru_cache(maxsize=1)
def ring_catalog() -> tuple:
    """Commutative rings of size at most 8, one per isomorphism type listed."""
    zero = FiniteRing("0", np.zeros((1, 1), dtype=np.int64), np.zeros((1, 1), dtype=np.int64), 0, ("0",))
    Zm = {m: _zmod(m) for m in range(2, 9)}
    F4 = _quotient(2, (1, 1, 1), "F4")
    F8 = _quotient(2, (1, 1, 0, 1), "F8")
    rings = [zero, *Zm.values(), F4, F8,
             _quotient(2, (0, 0, 1), "F2[x]/(x^2)"),
             _quotient(2, (0, 0, 0, 1), "F2[x]/(x^3)"),
             _z4_dual(0), _z4_dual(2), _f2_xy(),
             _product(Zm[2], Zm[2]), _product(Zm[2], Zm[3]), _product(Zm[2], Zm[4]),
             _product(Zm[2], F4), _product(_product(Zm[2], Zm[2]), Zm[2]),
             _product(Zm[2], _quotient(2, (0, 0, 1), "F2[x]/(x^2)"))]
    return tuple(rings)


def homs_from_hull(T: VnrRing, S: FiniteRing) -> list[dict]:
    """All unital homs T -> S, as the images of the component idempotents
    together with the full table.

    A hom is additive, so it is fixed by the images s_j of the f_j:
    t -> sum t_j s_j.  Every tuple (s_j) in S^k is tried and the hom laws
    are checked over all pairs of T.
    """
    k = len(T.components)
    elems = list(T.elements())
    found = []
    for imgs in product(range(S.size), repeat=k):
        def phi(t):
            out = 0
            for tj, s in zip(t, imgs):
                out = int(S.add[out, S.multiple(tj, s)])
            return out

        table = {t: phi(t) for t in elems}
        if table[T.one] != S.one or table[T.zero] != 0:
            continue
        ok = all(table[T.add(u, v)] == S.add[table[u], table[v]] and
                 table[T.mul(u, v)] == S.mul[table[u], table[v]]
                 for u in elems for v in elems)
        if ok:
            found.append({"images": imgs, "table": table})
    return found


def epimorphism_evidence(iota: RingHom, targets=None) -> dict:
    """Count unital homs T -> S for each catalog ring S.

    At most one per S is the evidence: two homs T -> S agreeing after
    iota (they always do, Z/n having at most one hom to S) are then equal.
    This samples the epimorphism property; it does not prove it.
    """
    if iota.source.n > 10:
        raise BoundsError("epimorphism evidence is limited to n <= 10")
    T = iota.target
    rows = []
    for S in targets if targets is not None else ring_catalog():
        homs = homs_from_hull(T, S)
        composites = {tuple(h["table"][iota(x)] for x in range(iota.source.n)) for h in homs}
        rows.append({"target": S.name, "size": S.size, "homs": len(homs),
                     "idempotent_images": [[S.labels[i] for i in h["images"]] for h in homs],
                     "composites_agree": len(composites) <= 1})
    return {"source": str(iota.source), "hull": str(T), "targets": rows,
            "at_most_one_each": all(r["homs"] <= 1 for r in rows),
            "kind": "evidence over a finite catalog, not a proof"}


# ---------------------------------------------------------------- a and ax - 1

def relatively_prime_lemma_check(T: VnrRing, samples: int | None = None, seed: int = 0) -> dict:
    """With x the punctual inverse of a: a(ax - 1) = 0, and every prime
    contains exactly one of a and ax - 1.  Exhaustive unless ``samples``."""
    import random

    if samples is None:
        pool = T.elements()
        checked = T.size
    else:
        rng = random.Random(seed)
        pool = (tuple(rng.randrange(p) for p in T.components) for _ in range(samples))
        checked = samples
    bad = []
    for a in pool:
        x = punctual_inverse(T, a)
        u = T.sub(T.mul(a, x), T.one)
        if T.mul(a, u) != T.zero:
            bad.append({"a": list(a), "law": "a(ax-1)=0"})
        for j in T.primes():
            if T.in_prime(a, j) == T.in_prime(u, j):
                bad.append({"a": list(a), "law": "exactly one", "prime": T.prime_label(j)})
    return {"hull": str(T), "checked": checked, "violations": bad[:10],
            "violation_count": len(bad), "passed": not bad}


def sweep_laws(components) -> dict:
    """Exhaustive punctual-inverse and idempotent laws on prod F_p via the kernel."""
    m, inv_bad, idem_bad, ideal_bad, gen_bad, a, b = kernels.vnr_sweep(list(components))
    return {"size": m, "inverse": inv_bad, "idempotent": idem_bad, "ideal": ideal_bad,
            "generator": gen_bad, "first_bad": None if a < 0 else [a, b],
            "passed": inv_bad == idem_bad == ideal_bad == gen_bad == 0}


__all__ = [
    "ContractionReport", "FiniteRing", "RingHom", "VnrRing", "contraction_map", "e_of",
    "epimorphism_evidence", "homs_from_hull", "hull_certificate", "ideal_set", "is_vnr",
    "principal_generator", "punctual_inverse", "relatively_prime_lemma_check", "ring_catalog",
    "sweep_laws", "t_of", "try_punctual_inverse", "zero_dimensional_check",
]
