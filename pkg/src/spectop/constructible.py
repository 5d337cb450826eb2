"""Constructible sets, the patch topology, and finite Boolean subalgebras.

In Spec(Z) and Spec(GF(p)[x]) the constructible sets are exactly the
finite sets of closed points and the cofinite sets of closed points with or
without the generic point.  Closed-form patch closure in those rings:

* a closed point (g) has the patch-open neighbourhood V(g) = {(g)}, so it
  lies in the closure of S only if it lies in S;
* a basic constructible set containing the generic point is D(a) with
  a != 0 (V(I) contains (0) only for I = 0, and D(a) & D(b) = D(ab)), and
  D(a) misses only the finitely many primes dividing a.  So the generic
  point is in the closure of S iff S contains it or S has infinitely many
  closed points.

Spec(Z/n) is finite and every point is isolated: {(p)} = V(p) & D(n/p^k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce as _fold

from . import polyfp
from .errors import RefusedError, RingMismatchError
from .rings import Integers, Modular, RingElement
from .spectrum import (Cofinite, Finite, Ideal, PrimeIdeal, SpectrumSubset,
                       closed_points, d_of, v_of)


def is_constructible(S: SpectrumSubset) -> bool:
    if isinstance(S.ring, Modular):
        return True
    part = S.closed_part
    if isinstance(part, Finite):
        return not S.includes_generic
    return isinstance(part, Cofinite)


def boolean_op(op: str, A: SpectrumSubset, B: SpectrumSubset | None = None) -> SpectrumSubset:
    """``union``, ``intersect`` or ``complement`` (relative to Spec(R))."""
    if op == "complement":
        return A.complement()
    if B is None:
        raise ValueError(f"{op} needs two operands")
    if A.ring != B.ring:
        raise RingMismatchError(f"subsets of Spec({A.ring}) and Spec({B.ring}) do not mix")
    if op == "union":
        return A.union(B)
    if op == "intersect":
        return A.intersect(B)
    raise ValueError(f"unknown Boolean operation {op!r}")


def from_basic(a: RingElement, I: Ideal | RingElement) -> SpectrumSubset:
    """D(a) & V(I)."""
    return d_of(a).intersect(v_of(I))


def patch_closure(S: SpectrumSubset) -> SpectrumSubset:
    """Closure in the patch topology; refuses sets of unknown infinitude."""
    if isinstance(S.ring, Modular):
        return S
    if S.require_known_infinitude():
        return S.with_generic(True)
    return S


def is_patch_closed(S: SpectrumSubset) -> bool:
    return patch_closure(S) == S


def _killing_element(ring, points) -> RingElement:
    """A nonzero element lying in every given closed point."""
    out = ring.one
    for P in points:
        out = out * P.generator
    return out


def _default_probes(ring):
    if isinstance(ring, Integers):
        return [ring.element(v) for v in (1, 2, 6, 30, 210, 2310, 30030, 10**6, 2**31 - 1)]
    p = ring.p
    fs = [(0, 1), (1, 1), (1, 1, 1), (0, 0, 0, 1, 1), (1,) * 6]
    return [ring.element(polyfp.trim(f, p)) for f in fs]


def patch_membership(P: PrimeIdeal, S: SpectrumSubset, probes=None, search_limit: int = 10_000) -> bool:
    """Is P in the patch closure of S?  Decided from basic neighbourhoods.

    For a closed point the neighbourhood {P} = V(g) & D(h) is built and
    intersected with S.  For the generic point the neighbourhoods are the
    D(a), a != 0: if S has finitely many closed points the product of their
    generators gives a D(a) missing S; otherwise every probe D(a) is met by
    an explicit closed point of S found by enumeration.
    """
    ring = S.ring
    if P.ring != ring:
        raise RingMismatchError("point and set live in different spectra")
    if isinstance(ring, Modular):
        others = [Q for Q in closed_points(ring) if Q != P]
        nbhd = from_basic(_killing_element(ring, others), P.generator)
        assert nbhd.closed_part.points == (P,), nbhd
        return not nbhd.intersect(S).is_empty()
    if not P.is_generic:
        nbhd = from_basic(ring.one, P.generator)
        assert nbhd.closed_part == Finite((P,))
        return not nbhd.intersect(S).is_empty()
    if S.includes_generic:
        return True
    infinite = S.require_known_infinitude()
    if not infinite:
        if not isinstance(S.closed_part, Finite):
            raise RefusedError(f"{S.describe()} is declared finite but cannot be enumerated; "
                               "give it a finite_bound")
        pts = list(S.closed_points())
        nbhd = d_of(_killing_element(ring, pts))
        assert nbhd.intersect(S).is_empty()
        return False
    for a in probes if probes is not None else _default_probes(ring):
        if a.is_zero():
            continue
        nbhd = d_of(a)
        for i, Q in enumerate(S.closed_points()):
            if nbhd.contains(Q):
                break
            if i >= search_limit:
                raise RefusedError(f"no point of {S.describe()} found in D({a}) within {search_limit} primes")
    return True


# ---------------------------------------------------------------- atoms

@dataclass(frozen=True)
class Atom:
    subset: SpectrumSubset
    signs: tuple
    is_infinite: bool

    def describe(self) -> str:
        return self.subset.describe()


@dataclass(frozen=True)
class FiniteBooleanAlgebra:
    """Atoms of the Boolean algebra generated by traces G & C on the carrier C.

    ``signs[i]`` of an atom says whether it lies inside the i-th trace.
    """

    carrier: SpectrumSubset
    atoms: tuple
    generators: tuple = field(default=())

    def atom_containing(self, P: PrimeIdeal) -> Atom:
        for atom in self.atoms:
            if atom.subset.contains(P):
                return atom
        raise KeyError(P)

    def union_of(self, atoms) -> SpectrumSubset:
        return _fold(SpectrumSubset.union, (a.subset for a in atoms),
                     SpectrumSubset(self.carrier.ring, False, Finite(())))

    def trace(self, i: int) -> SpectrumSubset:
        return self.union_of(a for a in self.atoms if a.signs[i])

    def log(self) -> list[dict]:
        return [{"atom": a.describe(), "signs": list(a.signs), "infinite": a.is_infinite}
                for a in self.atoms]


def _atom_order(atom: Atom):
    part = atom.subset.closed_part
    if isinstance(part, Finite):
        return (0, tuple(P.sort_key for P in part.points), atom.subset.includes_generic)
    return (1, atom.describe())


def boolean_subalgebra(C: SpectrumSubset, generators) -> FiniteBooleanAlgebra:
    """Split C by each generator; empty pieces are dropped."""
    gens = tuple(generators)
    for G in gens:
        if G.ring != C.ring:
            raise RingMismatchError("generator and carrier live in different spectra")
    pieces = [(C, ())]
    for G in gens:
        nxt = []
        for piece, signs in pieces:
            inside = piece.intersect(G)
            outside = piece.difference(G)
            if not inside.is_empty():
                nxt.append((inside, signs + (True,)))
            if not outside.is_empty():
                nxt.append((outside, signs + (False,)))
        pieces = nxt
    atoms = []
    for piece, signs in pieces:
        inf = piece.require_known_infinitude() if not isinstance(C.ring, Modular) else False
        atoms.append(Atom(piece, signs, bool(inf)))
    atoms.sort(key=_atom_order)
    return FiniteBooleanAlgebra(C, tuple(atoms), gens)


__all__ = [
    "Atom", "FiniteBooleanAlgebra", "boolean_op", "boolean_subalgebra", "from_basic",
    "is_constructible", "is_patch_closed", "patch_closure", "patch_membership",
]
