"""The supported rings Z, Z/n and GF(p)[x], with exact canonical elements.

Ring strings follow the grammar ``Z``, ``Z/<n>``, ``GF(<p>)[x]``; elements
are decimal integers or polynomials such as ``x^3+2x+1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from . import intfactor, polyfp
from .errors import GrammarError, RingMismatchError, ZeroElementError


class RingSpec:
    """Base class; concrete rings are the three frozen dataclasses below."""

    infinite_spectrum: bool = True
    is_domain: bool = True

    def element(self, payload) -> RingElement:
        return RingElement(self, self._canon(payload))

    def __call__(self, value) -> RingElement:
        if isinstance(value, str):
            return self.parse(value)
        return self.element(value)

    @property
    def zero(self) -> RingElement:
        return self.element(self._zero)

    @property
    def one(self) -> RingElement:
        return self.element(self._one)

    def parse(self, text: str) -> RingElement:
        try:
            return self.element(self._parse(text.strip()))
        except (ValueError, TypeError) as exc:
            raise GrammarError(f"cannot parse element {text!r} of {self}: {exc}") from None


@dataclass(frozen=True)
class Integers(RingSpec):
    _zero = 0
    _one = 1

    def __str__(self):
        return "Z"

    def _canon(self, v):
        return int(v)

    def _parse(self, text):
        return int(text)

    def render(self, payload) -> str:
        return str(payload)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a in (1, -1)

    def sort_key(self, a):
        return (abs(a), a < 0)


@dataclass(frozen=True)
class Modular(RingSpec):
    n: int
    infinite_spectrum = False
    is_domain = False
    _zero = 0
    _one = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise GrammarError(f"Z/n needs an integer n >= 2, got {self.n!r}")

    def __str__(self):
        return f"Z/{self.n}"

    def _canon(self, v):
        return int(v) % self.n

    def _parse(self, text):
        return int(text)

    def render(self, payload) -> str:
        return str(payload)

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return a * b % self.n

    def neg(self, a):
        return -a % self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def sort_key(self, a):
        return a


@dataclass(frozen=True)
class PolyRing(RingSpec):
    """GF(p)[x]; payloads are little-endian coefficient tuples."""

    p: int
    _zero = ()
    _one = (1,)

    def __post_init__(self):
        if not isinstance(self.p, int) or not intfactor.is_prime(self.p):
            raise GrammarError(f"GF(p)[x] needs a prime p, got {self.p!r}")

    def __str__(self):
        return f"GF({self.p})[x]"

    def _canon(self, v):
        if isinstance(v, int):
            v = (v,)
        return polyfp.trim(v, self.p)

    def _parse(self, text):
        return polyfp.parse(text, self.p)

    def render(self, payload) -> str:
        return polyfp.render(payload)

    def add(self, a, b):
        return polyfp.add(a, b, self.p)

    def mul(self, a, b):
        return polyfp.mul(a, b, self.p)

    def neg(self, a):
        return polyfp.neg(a, self.p)

    def is_unit(self, a):
        return len(a) == 1

    def sort_key(self, a):
        return polyfp.sort_key(a)


_RING_RE = {
    "Z": re.compile(r"Z"),
    "mod": re.compile(r"Z/(\d+)"),
    "poly": re.compile(r"GF\((\d+)\)\[x\]"),
}


def parse_ring(text: str) -> RingSpec:
    s = text.replace(" ", "")
    if _RING_RE["Z"].fullmatch(s):
        return Integers()
    m = _RING_RE["mod"].fullmatch(s)
    if m:
        return Modular(int(m.group(1)))
    m = _RING_RE["poly"].fullmatch(s)
    if m:
        return PolyRing(int(m.group(1)))
    raise GrammarError(f"unknown ring {text!r}; expected Z, Z/<n> or GF(<p>)[x]")


@dataclass(frozen=True)
class RingElement:
    ring: RingSpec
    payload: object = field(compare=True)

    def _check(self, other):
        if not isinstance(other, RingElement):
            other = self.ring.element(other)
        if other.ring != self.ring:
            raise RingMismatchError(f"elements of {self.ring} and {other.ring} do not mix")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.add(self.payload, other.payload))

    __radd__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __pow__(self, e: int):
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.payload)

    @property
    def sort_key(self):
        return self.ring.sort_key(self.payload)

    def __str__(self):
        return self.ring.render(self.payload)

    def __repr__(self):
        return f"{self.ring}({self})"


def arith(op: str, a: RingElement, b: RingElement | None = None):
    """Dispatch ``add``, ``mul``, ``neg`` or ``eq`` on elements of one ring."""
    if b is not None and a.ring != b.ring:
        raise RingMismatchError(f"elements of {a.ring} and {b.ring} do not mix")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


@dataclass(frozen=True)
class Factorization:
    unit: RingElement
    factors: tuple[tuple[RingElement, int], ...]

    def expand(self) -> RingElement:
        out = self.unit
        for q, e in self.factors:
            out = out * q**e
        return out

    def primes(self) -> list[RingElement]:
        return [q for q, _ in self.factors]


def _modular_unit_part(a: int, g: int, n: int) -> int:
    # a = u * g (mod n) for some unit u; search the lifts of a/g mod n/g
    q = n // g
    base = (a // g) % q
    for k in range(g):
        u = base + k * q
        if gcd(u, n) == 1:
            return u
    raise AssertionError("no unit part found")  # pragma: no cover


def factor(a: RingElement) -> Factorization:
    """Complete factorization into canonical primes.

    In Z/n only the primes dividing gcd(lift(a), n) occur, with their
    multiplicities there, and the unit part is chosen so that the product
    reconstructs ``a`` exactly.
    """
    ring = a.ring
    if a.is_zero():
        raise ZeroElementError(f"cannot factor 0 in {ring}")
    if isinstance(ring, Integers):
        v = a.payload
        fs = intfactor.factor_int(v) if abs(v) > 1 else {}
        return Factorization(ring.element(1 if v > 0 else -1),
                             tuple((ring.element(q), e) for q, e in fs.items()))
    if isinstance(ring, Modular):
        g = gcd(a.payload, ring.n)
        fs = intfactor.factor_int(g) if g > 1 else {}
        u = _modular_unit_part(a.payload, g, ring.n)
        return Factorization(ring.element(u),
                             tuple((ring.element(q), e) for q, e in fs.items()))
    if isinstance(ring, PolyRing):
        lc, fs = polyfp.factor(a.payload, ring.p)
        return Factorization(ring.element((lc,)),
                             tuple((ring.element(q), e) for q, e in fs))
    raise TypeError(f"unsupported ring {ring!r}")


def is_prime_element(a: RingElement) -> bool:
    """Canonical prime test: positive prime integers, monic irreducibles."""
    ring = a.ring
    if isinstance(ring, Integers):
        return a.payload > 0 and intfactor.is_prime(a.payload)
    if isinstance(ring, Modular):
        return intfactor.is_prime(a.payload) and ring.n % a.payload == 0
    return a.payload[-1:] == (1,) and polyfp.is_irreducible(a.payload, ring.p)
