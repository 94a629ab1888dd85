"""Polynomial arithmetic over F_p: ring ops, Frobenius, q-decomposition,
parsing and the canonical grevlex printer."""

import pytest
from hypothesis import given, settings, strategies as st

from frobdisc import PolyContext, parse_poly
from frobdisc.errors import ContextMismatchError, PolyParseError

P2 = PolyContext(2, ("x", "y"))
P3 = PolyContext(3, ("x", "y"))
P5 = PolyContext(5, ("x", "y"))
T3 = PolyContext(3, ("t",))


def test_context_rejects_bad_inputs():
    with pytest.raises(ValueError):
        PolyContext(4, ("x",))
    with pytest.raises(ValueError):
        PolyContext(2, ())
    with pytest.raises(ValueError):
        PolyContext(2, ("x", "x"))


def test_characteristic_two_cancellation():
    f = parse_poly("x + y", P2)
    assert (f + f).is_zero()
    assert f + f == P2.zero()


def test_freshman_dream():
    f = parse_poly("x + y", P2)
    assert f * f == parse_poly("x^2 + y^2", P2)
    assert f.frobenius(2) == parse_poly("x^4 + y^4", P2)


def test_product_mod_5():
    f = parse_poly("x + y", P5)
    g = parse_poly("x - y", P5)
    assert f * g == parse_poly("x^2 + 4*y^2", P5)


def test_frobenius_basics():
    t = parse_poly("t", T3)
    assert t.frobenius(1) == parse_poly("t^3", T3)
    one_plus = parse_poly("1 + t", T3)
    assert one_plus.frobenius(0) == one_plus


def test_q_decompose_examples():
    ctx = PolyContext(2, ("t",))
    d = parse_poly("t^3", ctx).q_decompose(1)
    assert d == {(1,): parse_poly("t", ctx)}

    d = parse_poly("x + y", P2).q_decompose(1)
    assert d == {(1, 0): P2.one(), (0, 1): P2.one()}

    ctx7 = PolyContext(7, ("t",))
    d = ctx7.one().q_decompose(2)
    assert d == {(0,): ctx7.one()}


def test_parse_examples():
    f = parse_poly("x^2*y + 3", P5)
    assert f.terms == {(2, 1): 1, (0, 0): 3}
    assert parse_poly("7*x", PolyContext(7, ("x",))).is_zero()
    ctx = PolyContext(2, ("x1",))
    assert parse_poly("x1 + x1", ctx).is_zero()


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError):
        parse_poly("x +", P2)
    try:
        parse_poly("x * z", P2)
    except PolyParseError as exc:
        assert "z" in str(exc)
    else:
        pytest.fail("unknown variable accepted")


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        parse_poly("x", P2) + parse_poly("x", P3)


def test_printer_is_grevlex_descending():
    f = parse_poly("y^3 + x^2 + x*y + 1", P5)
    assert str(f) == "y^3 + x^2 + x*y + 1"
    assert str(P5.zero()) == "0"


# -- randomized properties ------------------------------------------------

coeffs = st.integers(min_value=0, max_value=6)
exps = st.tuples(st.integers(0, 5), st.integers(0, 5))


def polys(ctx):
    return st.dictionaries(exps, coeffs, max_size=6).map(
        lambda terms: ctx.zero() + sum(
            (ctx.monomial(u, c) for u, c in terms.items()), ctx.zero()
        )
    )


@given(polys(P3), st.integers(1, 2))
@settings(max_examples=60, deadline=None)
def test_recomposition(f, e):
    q = 3**e
    total = P3.zero()
    for u, g in f.q_decompose(e).items():
        total = total + g.frobenius(e).shift(u)
    assert total == f
    for u in f.q_decompose(e):
        assert all(0 <= a < q for a in u)


@given(polys(P2), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_frobenius_composes(f, e1, e2):
    assert f.frobenius(e1 + e2) == f.frobenius(e1).frobenius(e2)


@given(polys(P5))
@settings(max_examples=60, deadline=None)
def test_parse_print_round_trip(f):
    assert parse_poly(str(f), P5) == f
