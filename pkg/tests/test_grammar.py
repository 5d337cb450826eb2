import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectop.errors import GrammarError
from spectop.grammar import parse_set
from spectop.rings import parse_ring
from spectop.spectrum import closed_point, cofinite, d_of, finite, full, progression, v_of

Z = parse_ring("Z")
F3 = parse_ring("GF(3)[x]")
Z12 = parse_ring("Z/12")


def test_base_forms():
    assert parse_set(Z, "all") == full(Z)
    assert parse_set(Z, "{2, 3}") == finite(Z, [closed_point(Z, 2), closed_point(Z, 3)])
    assert parse_set(Z, "{}") == finite(Z, [])
    assert parse_set(Z, "cofinite~{2}") == cofinite(Z, [closed_point(Z, 2)])
    assert parse_set(Z, "progression(1,4)") == progression(Z, 1, 4)
    assert parse_set(Z, "classes(12:1,5)") == progression(Z, 1, 4)
    assert parse_set(Z, "V(12)") == v_of(Z(12))
    assert parse_set(Z, "D(12)") == d_of(Z(12))
    assert parse_set(Z, "progression(1,4)+generic") == progression(Z, 1, 4, generic=True)
    assert [str(P) for P in parse_set(F3, "{x+2, x}").points()] == ["(x)", "(x+2)"]


def test_modifiers():
    S = parse_set(Z, "progression(1,4)~{5,13}|{3}")
    assert not S.contains(closed_point(Z, 5)) and S.contains(closed_point(Z, 3))
    assert S.contains(closed_point(Z, 17))


@pytest.mark.parametrize("bad", ["", "progression(1)", "{2,", "V()", "frobnicate", "classes(0:1)"])
def test_bad_text(bad):
    with pytest.raises(GrammarError):
        parse_set(Z, bad)


def test_no_generic_in_finite_spectrum():
    with pytest.raises(GrammarError):
        parse_set(Z12, "{2}+generic")
    assert parse_set(Z12, "all") == full(Z12)


sets = st.one_of(
    st.lists(st.sampled_from([2, 3, 5, 7, 11]), max_size=3).map(
        lambda ps: "{" + ",".join(map(str, ps)) + "}"),
    st.lists(st.sampled_from([2, 3, 5, 7, 11]), max_size=3).map(
        lambda ps: "cofinite~{" + ",".join(map(str, ps)) + "}"),
    st.tuples(st.integers(0, 30), st.integers(1, 30)).map(lambda t: f"progression({t[0]},{t[1]})"),
    st.integers(-60, 60).map(lambda a: f"D({a})"),
)


@given(sets, st.booleans(), st.sampled_from(["", "~{3}", "|{2}", "~{5}|{7}"]))
def test_describe_roundtrip(text, generic, mods):
    S = parse_set(Z, text + mods)
    if generic:
        S = S.with_generic(True)
    assert parse_set(Z, S.describe()) == S


def test_polynomial_roundtrip():
    for text in ["{x,x+1}", "progression(1,x^2+1)", "D(x^3+x)", "cofinite~{x}+generic"]:
        S = parse_set(F3, text)
        assert parse_set(F3, S.describe()) == S
