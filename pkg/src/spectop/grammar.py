"""Text forms of spectrum subsets.

Grammar (whitespace ignored)::

    set       := base modifier* ["+generic"]
    base      := "all" | points | "cofinite~" points
               | "progression(" elem "," elem ")"
               | "classes(" elem ":" elem ("," elem)* ")"
               | "V(" elem ")" | "D(" elem ")"
    modifier  := "~" points        remove closed points
               | "|" points        add closed points
    points    := "{" [elem ("," elem)*] "}"

Points are written by generator: ``{2,3,5}``, ``{x,x+1}``.  Every set
produced by :meth:`SpectrumSubset.describe` for a finite, cofinite or
residue-class set parses back to an equal set.
"""

from __future__ import annotations

import re

from .errors import GrammarError
from .rings import Modular, RingSpec
from .spectrum import (SpectrumSubset, closed_point, cofinite, d_of, finite, full,
                       progression, residue_classes, v_of)

_POINTS = r"\{[^{}]*\}"


def _points(ring, text):
    body = text.strip()[1:-1].strip()
    if not body:
        return []
    return [closed_point(ring, ring.parse(tok).payload) for tok in body.split(",")]


def parse_set(ring: RingSpec, text: str) -> SpectrumSubset:
    s = text.replace(" ", "")
    if not s:
        raise GrammarError("empty set expression")
    generic = False
    if s.endswith("+generic"):
        generic = True
        s = s[: -len("+generic")]
        if isinstance(ring, Modular):
            raise GrammarError(f"Spec({ring}) has no generic point")
    mods = []
    while True:
        m = re.search(r"([~|])(" + _POINTS + r")$", s)
        if m is None or m.start() == 0 or s[: m.start()].endswith("cofinite"):
            break
        mods.append((m.group(1), m.group(2)))
        s = s[: m.start()]
    base = _base(ring, s, text)
    if generic:
        base = base.with_generic(True)
    for op, pts in reversed(mods):
        P = finite(ring, _points(ring, pts))
        base = base.difference(P) if op == "~" else base.union(P)
    return base


def _base(ring, s, original):
    try:
        if s == "all":
            return full(ring)
        if re.fullmatch(_POINTS, s):
            return finite(ring, _points(ring, s))
        m = re.fullmatch(r"cofinite~(" + _POINTS + ")", s)
        if m:
            return cofinite(ring, _points(ring, m.group(1)))
        m = re.fullmatch(r"progression\(([^,()]+),([^,()]+)\)", s)
        if m:
            return progression(ring, ring.parse(m.group(1)), ring.parse(m.group(2)))
        m = re.fullmatch(r"classes\(([^:()]+):([^()]+)\)", s)
        if m:
            residues = [ring.parse(t) for t in m.group(2).split(",")]
            return residue_classes(ring, ring.parse(m.group(1)), residues)
        m = re.fullmatch(r"([VD])\(([^()]+)\)", s)
        if m:
            a = ring.parse(m.group(2))
            return v_of(a) if m.group(1) == "V" else d_of(a)
    except GrammarError as exc:
        raise GrammarError(f"in {original!r}: {exc}") from None
    raise GrammarError(f"cannot parse set {original!r}")


def render_set(S: SpectrumSubset) -> str:
    return S.describe()
