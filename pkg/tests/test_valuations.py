"""Monomial valuations, valuation ideals, graded sequences and their
asymptotic values."""

import random
from fractions import Fraction

import pytest

from frobdisc import (
    GradedSeq,
    Ideal,
    MonomialValuation,
    POS_INF,
    PolyContext,
    f_graded_value,
    graded_value,
    parse_graded_seq,
    parse_ideal,
    parse_poly,
    parse_valuation,
    retract,
)

P3 = PolyContext(3, ("x", "y"))
P7 = PolyContext(7, ("x", "y"))


def val(ctx, *alpha):
    return MonomialValuation(ctx, alpha)


def test_value_poly_examples():
    f = parse_poly("x^2 + y^3", P7)
    assert val(P7, 1, 1).value_poly(f) == 2
    assert val(P7, Fraction(1, 2), Fraction(1, 3)).value_poly(f) == 1
    assert val(P7, 1, 1).value_poly(P7.zero()) == POS_INF


def test_value_ideal_examples():
    assert val(P7, 1, 1).value_ideal(parse_ideal("[x, y]", P7)) == 1
    assert val(P7, 2, 3).value_ideal(parse_ideal("[x^3, x*y, y^2]", P7)) == 5
    assert val(P7, 0, 1).value_ideal(parse_ideal("[x]", P7)) == 0
    assert val(P7, 1, 1).value_ideal(Ideal.zero(P7)) == POS_INF


def test_multiplicativity_and_scaling():
    rng = random.Random(3)
    v = val(P3, Fraction(2, 3), Fraction(1, 2))
    for _ in range(20):
        f = P3.monomial((rng.randrange(4), rng.randrange(4)), rng.randrange(1, 3))
        g = P3.monomial((rng.randrange(4), rng.randrange(4)), rng.randrange(1, 3))
        assert v.value_poly(f * g) == v.value_poly(f) + v.value_poly(g)
        s = f + g
        if not s.is_zero():
            assert v.value_poly(s) >= min(v.value_poly(f), v.value_poly(g))
        assert v.scale(3).value_poly(f) == 3 * v.value_poly(f)


def test_valuation_ideal_examples():
    assert val(P3, 1, 1).valuation_ideal(2) == parse_ideal("[x^2, x*y, y^2]", P3)
    assert val(P3, 1, 2).valuation_ideal(2) == parse_ideal("[x^2, y]", P3)
    assert val(P3, 1, 1).valuation_ideal(0).is_unit()
    assert MonomialValuation.trivial(P3).valuation_ideal(1).is_zero()


def test_valuation_ideal_properties():
    v = val(P3, Fraction(1, 2), Fraction(4, 3))
    for s, t in ((1, 1), (Fraction(1, 2), 2), (Fraction(5, 3), Fraction(1, 3))):
        a, b, c = v.valuation_ideal(s), v.valuation_ideal(t), v.valuation_ideal(s + t)
        assert c.contains_ideal(a * b)
        assert v.value_ideal(a) >= s
    # equality when s lies in the value semigroup
    assert v.value_ideal(v.valuation_ideal(Fraction(1, 2))) == Fraction(1, 2)


def test_retract():
    assert retract(P3, (1, 2)) == val(P3, 1, 2)
    v = val(P3, Fraction(1, 2), 3)
    assert retract(P3, v.alpha) == v
    # order of vanishing along y = x^2: v(x) = 1, v(y) = 2, but
    # v(y - x^2) > 2 while the retraction only sees 2
    r = retract(P3, (1, 2))
    assert r.value_poly(parse_poly("y - x^2", P3)) == 2
    with pytest.raises(ValueError):
        retract(P3, (POS_INF, 1))


# -- graded sequences ----------------------------------------------------


def test_term_materialization():
    m = Ideal.maximal(P3)
    assert GradedSeq.powers(m).term(3) == m**3
    assert GradedSeq.constant(m).term(5) == m
    v = val(P3, 1, 1)
    assert GradedSeq.valuation_ideals(v).term(2) == m**2
    seq = GradedSeq.explicit([m, m**2])
    assert seq.term(2) == m**2
    with pytest.raises(ValueError):
        seq.term(3)


def test_twist_materialization():
    a = parse_ideal("[x]", P3)
    tw = GradedSeq.twist_powers(a, Fraction(1, 2))
    # ceil(t(p^e - 1)) for p = 3: e=1 -> 1, e=2 -> 4
    assert tw.term(1) == a
    assert tw.term(2) == a**4
    assert tw.is_f_graded and not tw.is_multiplicative


def test_check_gradedness():
    m = Ideal.maximal(P3)
    assert GradedSeq.powers(m).check_gradedness()
    assert GradedSeq.constant(m).check_gradedness()
    assert GradedSeq.twist_powers(parse_ideal("[x]", P3), Fraction(3, 2)).check_gradedness()
    bad = GradedSeq.explicit([m, m**3])  # a_1 * a_1 not inside a_2
    assert not bad.check_gradedness(prefix_len=2)


def test_graded_value_closed_forms():
    m = Ideal.maximal(P3)
    v = val(P3, 1, 1)
    assert graded_value(v, GradedSeq.powers(m), 4) == (1, True)
    assert graded_value(v, GradedSeq.valuation_ideals(v), 4) == (1, True)
    w = val(P3, 2, 3)
    enl = GradedSeq.enlarged(GradedSeq.powers(m), m, 1)
    value, exact = graded_value(w, enl, 4)
    assert value == 2 and exact  # min(v(m), 1 * v(m)) = 2
    # constant sequences only report a truncated inf
    value, exact = graded_value(v, GradedSeq.constant(m), 4)
    assert value == Fraction(1, 4) and not exact


def test_enlarged_law_matches_brute_force():
    rng = random.Random(41)
    for _ in range(15):
        exps = [
            (rng.randrange(1, 4), rng.randrange(0, 4)),
            (rng.randrange(0, 4), rng.randrange(1, 4)),
        ]
        a = Ideal.from_monomials(P3, exps)
        v = val(P3, rng.randrange(1, 4), rng.randrange(1, 4))
        s = rng.randrange(1, 3)
        seq = GradedSeq.enlarged(GradedSeq.powers(a), Ideal.maximal(P3), s)
        closed, exact = graded_value(v, seq, 4)
        assert exact
        brute = min(v.value_ideal(seq.term(m)) / m for m in range(1, 5))
        assert closed == brute
        assert closed == min(v.value_ideal(a), s * v.value_ideal(Ideal.maximal(P3)))


def test_f_graded_value():
    m = Ideal.maximal(P3)
    v = val(P3, 1, 1)
    assert f_graded_value(v, GradedSeq.twist_powers(m, 1), 4) == (1, True)
    value, exact = f_graded_value(v, GradedSeq.twist_powers(m, Fraction(1, 2)), 4)
    assert value == Fraction(1, 2) and exact  # t(p-1) = 1 is integral
    triv = MonomialValuation.trivial(P3)
    assert f_graded_value(triv, GradedSeq.twist_powers(m, Fraction(3, 2)), 4) == (0, True)
    # p = 2, t = 1/2: t(2^e - 1) is never integral, only a truncated inf
    P2 = PolyContext(2, ("x", "y"))
    m2 = Ideal.maximal(P2)
    value, exact = f_graded_value(
        MonomialValuation(P2, (1, 1)), GradedSeq.twist_powers(m2, Fraction(1, 2)), 3
    )
    assert not exact
    assert value >= Fraction(1, 2)


def test_valuation_ideal_lemma_one_sided():
    # inf_b w(b)/v(b) over monomial ideals is min_i w_i/v_i, and the
    # truncated graded value of the valuation-ideal sequence stays on
    # its upper side; so does every sampled ratio
    rng = random.Random(43)
    v = val(P3, 1, 2)
    seq = GradedSeq.valuation_ideals(v)
    for _ in range(10):
        w = val(P3, rng.randrange(1, 4), rng.randrange(1, 4))
        lower = min(wi / vi for wi, vi in zip(w.alpha, v.alpha))
        lhs, _ = graded_value(w, seq, 4)
        assert lhs >= lower
        b = Ideal.from_monomials(
            P3, [(rng.randrange(0, 3), rng.randrange(1, 3)) for _ in range(2)]
        )
        ratio = w.value_ideal(b).finite() / v.value_ideal(b).finite()
        assert ratio >= lower


def test_parsers():
    v = parse_valuation("val(1, 2/3)", P3)
    assert v.alpha == (Fraction(1), Fraction(2, 3))
    assert parse_graded_seq("powers([x, y])", P3).kind == "powers"
    assert parse_graded_seq("valids(val(1, 2))", P3).kind == "valids"
    tw = parse_graded_seq("twist([x, y], 3/2)", P3)
    assert tw.kind == "twist" and tw.t == Fraction(3, 2)
    enl = parse_graded_seq("enlarged(powers([x, y]), [x, y], 2)", P3)
    assert enl.kind == "enlarged" and enl.s == 2
    ex = parse_graded_seq("explicit([x]; [x^2])", P3)
    assert ex.kind == "explicit" and len(ex.prefix) == 2
