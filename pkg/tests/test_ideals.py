"""Groebner/monomial ideal arithmetic and the F-singularity tests built
on it: Fedder's criterion, compatibility, splitting primes, and the
bounded strong-F-regularity search."""

import random

import pytest

from frobdisc import (
    CartierMap,
    Ideal,
    PolyContext,
    fedder_fpure_hypersurface,
    is_compatible,
    parse_ideal,
    parse_poly,
    splitting_prime,
    strongly_fregular_search,
)

P2 = PolyContext(2, ("x", "y"))
P3 = PolyContext(3, ("x", "y"))
P5 = PolyContext(5, ("x", "y"))


def phi(ctx, e=1):
    return CartierMap.canonical(ctx, e=e)


def random_monomial_ideal(ctx, rng, max_deg=4, gens=3):
    exps = [
        tuple(rng.randrange(max_deg + 1) for _ in range(ctx.n)) for _ in range(gens)
    ]
    exps = [u for u in exps if any(u)]
    return Ideal.from_monomials(ctx, exps) if exps else Ideal.maximal(ctx)


# -- Groebner bases ------------------------------------------------------


def test_groebner_monomials_already_reduced():
    I = parse_ideal("[x, y]", P2)
    assert I == Ideal.maximal(P2)
    assert I.is_monomial


def test_groebner_nontrivial_reduction():
    I = parse_ideal("[x^2 - y, y^2]", P3)
    assert I.contains(parse_poly("x^4", P3))
    assert not I.contains(parse_poly("x^3", P3))
    assert not I.contains(parse_poly("x", P3))


def test_zero_and_unit_ideals():
    assert parse_ideal("[]", P2).is_zero()
    assert parse_ideal("[1]", P2).is_unit()
    assert Ideal.zero(P2).contains(P2.zero())
    assert not Ideal.zero(P2).contains(parse_poly("x", P2))


def test_membership_examples():
    assert parse_ideal("[x, y]", P2).contains(parse_poly("x^2*y", P2))
    I = parse_ideal("[x^2, y^2]", P2)
    assert not I.contains(parse_poly("x + y", P2))
    assert I.contains(parse_poly("(x + y)^2", P2))  # = x^2 + y^2 in char 2


def test_bracket_power():
    assert parse_ideal("[x, y]", P2).bracket_power(1) == parse_ideal("[x^2, y^2]", P2)
    I = Ideal.generated_by([parse_poly("x + y", P2)])
    assert I.bracket_power(1) == Ideal.generated_by([parse_poly("x^2 + y^2", P2)])

    rng = random.Random(2)
    for _ in range(10):
        J = random_monomial_ideal(P3, rng)
        assert J.bracket_power(1).bracket_power(1) == J.bracket_power(2)


def test_colon_examples():
    assert parse_ideal("[x^2, y^2]", P2).colon(parse_poly("x*y", P2)) == Ideal.maximal(P2)
    rng = random.Random(9)
    I = random_monomial_ideal(P5, rng)
    assert I.colon(P5.one()) == I
    for p, ctx in ((2, P2), (3, P3), (5, P5)):
        mq = Ideal.maximal(ctx).bracket_power(1)
        h = parse_poly(f"(x*y)^{p - 1}", ctx)
        assert mq.colon(h) == Ideal.maximal(ctx)


def test_colon_membership_consistency():
    rng = random.Random(17)
    for _ in range(15):
        I = random_monomial_ideal(P3, rng)
        f = parse_poly("x + y^2", P3)
        C = I.colon(f)
        for g in (parse_poly("x", P3), parse_poly("y", P3), parse_poly("x*y + 1", P3)):
            assert C.contains(g) == I.contains(g * f)


def test_colon_by_polynomial_groebner_path():
    # (x^2+y^2) : (x+y) = (x+y) in char 2
    I = Ideal.generated_by([parse_poly("x^2 + y^2", P2)])
    C = I.colon(parse_poly("x + y", P2))
    assert C == Ideal.generated_by([parse_poly("x + y", P2)])


def test_intersection():
    A = parse_ideal("[x]", P3)
    B = parse_ideal("[y]", P3)
    assert A.intersect(B) == parse_ideal("[x*y]", P3)
    # general (Groebner) route against the monomial fast path
    A2 = Ideal.generated_by([parse_poly("x", P3), parse_poly("y^2", P3)])
    B2 = Ideal.generated_by([parse_poly("y", P3)])
    from frobdisc.ideals import _eliminate_intersection

    assert _eliminate_intersection(A2, B2) == A2.intersect(B2)


def test_radical_monomial():
    I = parse_ideal("[x^3, x*y^2]", P3)
    assert I.radical_monomial() == parse_ideal("[x]", P3)
    J = parse_ideal("[x^2, y^3]", P3)
    assert J.radical_monomial() == Ideal.maximal(P3)


# -- Fedder and compatibility --------------------------------------------


def test_fedder_examples():
    for ctx in (P2, P3, P5):
        assert fedder_fpure_hypersurface(parse_poly("x*y", ctx))
    assert not fedder_fpure_hypersurface(parse_poly("x^2", P2))
    ctx7 = PolyContext(7, ("x", "y"))
    # cusp: fpt = 5/6 < 1, so never F-pure
    assert not fedder_fpure_hypersurface(parse_poly("x^2 + y^3", ctx7))
    # node x^2 - y^2: simple normal crossings after a linear change
    assert fedder_fpure_hypersurface(parse_poly("x^2 - y^2", P3))
    with pytest.raises(ValueError):
        fedder_fpure_hypersurface(parse_poly("1 + x", P2))


def test_fedder_matches_surjectivity():
    rng = random.Random(23)
    for _ in range(20):
        terms = {
            tuple(rng.randrange(3) for _ in range(2)): rng.randrange(1, 3)
            for _ in range(3)
        }
        terms.pop((0, 0), None)
        f = sum((P3.monomial(u, c) for u, c in terms.items()), P3.zero())
        if f.is_zero():
            continue
        psi = phi(P3).right_multiply(f ** (3 - 1))
        assert fedder_fpure_hypersurface(f) == psi.is_surjective_at_origin()


def test_compatibility_examples():
    psi = phi(P3).right_multiply(parse_poly("(x*y)^2", P3))
    assert is_compatible(parse_ideal("[x]", P3), psi)
    assert is_compatible(Ideal.zero(P3), psi)
    assert is_compatible(Ideal.unit(P3), psi)
    I = Ideal.generated_by([parse_poly("x + y", P2)])
    assert not is_compatible(I, phi(P2))


# -- splitting primes ----------------------------------------------------


def test_splitting_prime_three_regimes():
    for p, ctx in ((2, P2), (3, P3), (5, P5)):
        psi = phi(ctx).right_multiply(parse_poly(f"(x*y)^{p - 1}", ctx))
        assert splitting_prime(psi) == Ideal.maximal(ctx)
    assert splitting_prime(phi(P3)) == Ideal.zero(P3)
    psi_bad = phi(P2).right_multiply(parse_poly("x^2", P2))
    assert splitting_prime(psi_bad).is_unit()


def test_splitting_prime_coordinate_face():
    psi = phi(P3).right_multiply(parse_poly("x^2", P3))
    assert splitting_prime(psi) == parse_ideal("[x]", P3)


def test_splitting_prime_nonmonomial_reports_cap():
    # Fedder map of f = x + y: the iterates are (x+y, y^(3^k)), a chain
    # that descends to (x+y) without reaching it; the iteration refuses
    # to truncate silently
    from frobdisc.errors import IterationCapError

    f = parse_poly("x + y", P3)
    psi = phi(P3).right_multiply(f ** (3 - 1))
    assert is_compatible(Ideal.generated_by([f]), psi)
    with pytest.raises(IterationCapError):
        splitting_prime(psi, cap=8)


def test_splitting_prime_is_compatible_and_power_stable():
    corpus = [
        phi(P3).right_multiply(parse_poly("(x*y)^2", P3)),
        phi(P3).right_multiply(parse_poly("x^2", P3)),
        phi(P2).right_multiply(parse_poly("x*y", P2)),
        phi(P2),
    ]
    for psi in corpus:
        P = splitting_prime(psi)
        if not P.is_unit():
            assert is_compatible(P, psi)
        for m in (2, 3):
            assert splitting_prime(psi.power(m)) == P


def test_splitting_prime_outputs_look_prime():
    # the corpus only produces faces, principal primes, 0 and R
    for psi in (
        phi(P5).right_multiply(parse_poly("(x*y)^4", P5)),
        phi(P5).right_multiply(parse_poly("y^4", P5)),
    ):
        P = splitting_prime(psi)
        assert P.is_monomial
        assert P == P.radical_monomial()


# -- strong F-regularity search ------------------------------------------


def test_fregular_search_witness():
    assert strongly_fregular_search(phi(P2), parse_poly("x", P2), 4) == 1


def test_fregular_search_inconclusive():
    psi = phi(P3).right_multiply(parse_poly("x^2", P3))
    assert strongly_fregular_search(psi, parse_poly("x", P3), 4) is None


def test_fregular_search_agrees_with_trivial_splitting_prime():
    rng = random.Random(31)
    psi = phi(P3)  # splitting prime 0
    for _ in range(10):
        c = P3.monomial(
            (rng.randrange(3), rng.randrange(3)), rng.randrange(1, 3)
        )
        assert strongly_fregular_search(psi, c, 6) is not None
