"""Polynomials over GF(p) as little-endian coefficient tuples.

The polynomial a_0 + a_1 x + ... + a_n x^n is the tuple (a_0, ..., a_n)
with a_n != 0; the zero polynomial is the empty tuple.  All functions
take the characteristic ``p`` explicitly and return canonical tuples.

Factorization is the classical pipeline: squarefree decomposition,
distinct-degree splitting, then equal-degree splitting (Cantor-Zassenhaus
for odd p, the trace map for p = 2).
"""

from __future__ import annotations

import random
from itertools import product

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def trim(coeffs, p: int) -> Poly:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out, p)


def neg(f: Poly, p: int) -> Poly:
    return tuple((-c) % p for c in f)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, neg(g, p), p)


def scale(f: Poly, c: int, p: int) -> Poly:
    return trim([c * x for x in f], p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - dg] = c
            for j, b in enumerate(g):
                r[i - dg + j] = (r[i - dg + j] - c * b) % p
    return trim(q, p), trim(r[:dg], p)


def mod(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    return scale(f, pow(f[-1], -1, p), p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def lcm(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ZERO
    return monic(divmod_(mul(f, g, p), gcd(f, g, p), p)[0], p)


def xgcd(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with s*f + t*g = d, d monic (or zero)."""
    r0, r1 = f, g
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return ZERO, ZERO, ZERO
    c = pow(r0[-1], -1, p)
    return scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)


def powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result = ONE if deg(m) > 0 else ZERO
    base = mod(f, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(f: Poly, p: int) -> Poly:
    return trim([i * c for i, c in enumerate(f)][1:], p)


def pth_root(f: Poly, p: int) -> Poly:
    # f' == 0 means only exponents divisible by p occur; Frobenius is the
    # identity on GF(p) so coefficients are unchanged
    return trim(f[::p], p)


def evaluate(f: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def sort_key(f: Poly) -> tuple:
    return (len(f), tuple(reversed(f)))


def monic_of_degree(d: int, p: int):
    """All monic polynomials of degree d in canonical order."""
    for tail in product(range(p), repeat=d):
        yield tuple(reversed(tail)) + (1,)


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Yun-style decomposition of a monic f into (squarefree part, multiplicity)."""
    out: list[tuple[Poly, int]] = []
    if deg(f) < 1:
        return out
    i = 1
    df = derivative(f, p)
    if not df:
        for g, e in squarefree_decomposition(pth_root(f, p), p):
            out.append((g, e * p))
        return out
    c = gcd(f, df, p)
    w = divmod_(f, c, p)[0]
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if deg(c) > 0:
        for g, e in squarefree_decomposition(pth_root(c, p), p):
            out.append((g, e * p))
    return out


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    out = []
    h = X
    d = 0
    rest = f
    while deg(rest) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, rest, p)
        g = gcd(sub(h, X, p), rest, p)
        if deg(g) > 0:
            out.append((g, d))
            rest = divmod_(rest, g, p)[0]
            h = mod(h, rest, p)
    if deg(rest) > 0:
        out.append((rest, deg(rest)))
    return out


def _split_once(f: Poly, d: int, p: int, rng: random.Random) -> Poly:
    n = deg(f)
    while True:
        a = trim([rng.randrange(p) for _ in range(n)], p)
        if deg(a) < 1:
            continue
        g = gcd(a, f, p)
        if 0 < deg(g) < n:
            return g
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = mod(mul(t, t, p), f, p)
                acc = add(acc, t, p)
            b = acc
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), ONE, p)
        g = gcd(b, f, p)
        if 0 < deg(g) < n:
            return g


def equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    if deg(f) == d:
        return [f]
    g = _split_once(f, d, p, rng)
    h = divmod_(f, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def factor(f: Poly, p: int, seed: int = 0) -> tuple[int, list[tuple[Poly, int]]]:
    """Return (leading coefficient, sorted [(monic irreducible, multiplicity)])."""
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    lc = f[-1]
    g = monic(f, p)
    rng = random.Random(seed)
    found: dict[Poly, int] = {}
    for part, mult in squarefree_decomposition(g, p):
        for block, d in distinct_degree(part, p):
            for q in equal_degree(block, d, p, rng):
                found[q] = found.get(q, 0) + mult
    return lc, sorted(found.items(), key=lambda kv: sort_key(kv[0]))


def is_irreducible(f: Poly, p: int) -> bool:
    """No factor of degree <= deg/2, checked via gcd(x^(p^i) - x, f)."""
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    g = monic(f, p)
    h = X
    for _ in range(n // 2):
        h = powmod(h, p, g, p)
        if deg(gcd(sub(h, X, p), g, p)) > 0:
            return False
    return True


def irreducibles(p: int):
    """Monic irreducibles over GF(p) in canonical order, without end."""
    d = 1
    while True:
        for f in monic_of_degree(d, p):
            if is_irreducible(f, p):
                yield f
        d += 1


def parse(text: str, p: int) -> Poly:
    import re

    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"[+-][^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"bad polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for t in terms:
        m = re.fullmatch(r"([+-])(\d*)(x(?:\^(\d+))?)?", t)
        if m is None or (not m.group(2) and not m.group(3)):
            raise ValueError(f"bad term {t!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        e = 0 if not m.group(3) else int(m.group(4) or 1)
        coeffs[e] = coeffs.get(e, 0) + sign * c
    top = max(coeffs)
    return trim([coeffs.get(i, 0) for i in range(top + 1)], p)


def render(f: Poly) -> str:
    if not f:
        return "0"
    parts = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            mono = "x" if e == 1 else f"x^{e}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts)
