"""F-pure thresholds, monomial log canonical thresholds, multiplier ideals.

The F-pure threshold side is purely Frobenius-combinatorial (powers of
f against bracket powers of the maximal ideal).  The lct / multiplier
ideal side reduces, for monomial data, to exact linear programs over
weight vectors; the optimal vertex doubles as the computing monomial
valuation and is re-verifiable through the valuations module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cartier import CartierMap
from .errors import UncertifiedResultError
from .ideals import Ideal
from .poly import MultiPoly
from .rational import NEG_INF, POS_INF, ExtRational
from .ratlp import OPTIMAL, UNBOUNDED, LinearProgram, lp_solve
from .valuations import GradedSeq, MonomialValuation


@dataclass(frozen=True)
class ThresholdReport:
    value: ExtRational
    computing_valuation: MonomialValuation | None = None
    certificate: tuple = ("exact-lp",)


@dataclass(frozen=True)
class MultiplierIdealReport:
    ideal: Ideal
    t: Fraction
    stabilized_at: int | None = None


# -- F-pure thresholds ---------------------------------------------------


def _prune(f: MultiPoly, q: int) -> MultiPoly:
    """Drop the terms lying in (x_1^q, ..., x_n^q)."""
    return MultiPoly(
        f.context,
        {u: c for u, c in f.terms.items() if all(a < q for a in u)},
        _checked=True,
    )


def nu(f: MultiPoly, e: int) -> int:
    """Largest r with f^r not in (x_1^(p^e), ..., x_n^(p^e))."""
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f.constant_term() != 0:
        raise ValueError("f must vanish at the origin")
    if e < 1:
        raise ValueError("e must be positive")
    q = f.context.p**e
    g = _prune(f, q)
    r = 0
    while not g.is_zero():
        r += 1
        g = _prune(g * f, q)
    return r


def fpt_approx(f: MultiPoly, e_max: int):
    """Nested intervals [nu/p^e, (nu+1)/p^e] for e = 1..e_max."""
    p = f.context.p
    results = []
    prev = None
    for e in range(1, e_max + 1):
        q = p**e
        n_e = nu(f, e)
        if prev is not None:
            assert n_e >= p * prev, "nu monotonicity violated"
        prev = n_e
        results.append((n_e, Fraction(n_e, q), Fraction(n_e + 1, q)))
    return results


def nu_monomial_ideal(a: Ideal, e: int) -> int:
    """Largest r with a^r not contained in m^[p^e], for monomial a."""
    if not a.is_monomial or a.is_zero():
        raise ValueError("a must be a nonzero monomial ideal")
    q = a.context.p**e
    r = 0
    power = a
    while any(all(x < q for x in u) for u in power.mono_exps):
        r += 1
        power = power * a
    return r


# -- log canonical thresholds --------------------------------------------


def _newton_lp(a: Ideal, cost):
    """min cost . alpha  s.t.  alpha . u >= 1 for the generators of a."""
    A = [[Fraction(e) for e in u] for u in a.mono_exps]
    b = [Fraction(1)] * len(A)
    return lp_solve(LinearProgram(cost, A, b))


def lct_monomial(a: Ideal, q_ideal: Ideal, psi: CartierMap) -> ThresholdReport:
    """Exact lct of a monomial ideal, with its computing valuation.

    Minimizes (sum alpha_i - (alpha.c)/(p^e-1) + alpha.u_g) over the
    region {alpha >= 0 : alpha.u >= 1 for all generators u of a},
    taking the best generator g of q_ideal.
    """
    if a.is_unit():
        raise ValueError("a must be a proper ideal")
    if not a.is_monomial or not q_ideal.is_monomial:
        raise ValueError("lct is computed for monomial ideals only")
    if a.is_zero() or q_ideal.is_zero():
        return ThresholdReport(POS_INF, None)
    c = psi.h_monomial_exponent()
    if c is None:
        raise ValueError("lct requires a monomial h")
    qe = psi.q - 1
    base_cost = [Fraction(1) - Fraction(ci, qe) for ci in c]
    best = None
    best_alpha = None
    unbounded = False
    for g in q_ideal.mono_exps:
        cost = [bc + Fraction(gi) for bc, gi in zip(base_cost, g)]
        result = _newton_lp(a, cost)
        if result.status == UNBOUNDED:
            unbounded = True
            break
        assert result.status == OPTIMAL
        if best is None or result.value < best:
            best = result.value
            best_alpha = result.x
    if unbounded:
        return ThresholdReport(NEG_INF, None)
    return ThresholdReport(
        ExtRational(best), MonomialValuation(a.context, best_alpha)
    )


def lct_graded(seq: GradedSeq, q_ideal: Ideal, psi: CartierMap, M: int) -> ThresholdReport:
    """sup over m <= M of m * lct(a_m): a certified lower bound for the
    sequence lct, exact for the powers and valuation-ideal kinds."""
    if M < 1:
        raise ValueError("M must be positive")
    if not seq.is_multiplicative:
        raise ValueError("lct_graded takes a multiplicative sequence")
    limit = min(M, len(seq.prefix)) if seq.kind == "explicit" else M
    best = None
    best_valuation = None
    for m in range(1, limit + 1):
        report = lct_monomial(seq.term(m), q_ideal, psi)
        scaled = report.value * m
        if best is None or scaled > best:
            best = scaled
            best_valuation = report.computing_valuation
    exact = seq.kind in ("powers", "valids")
    certificate = ("exact-lp",) if exact else ("truncated", limit)
    return ThresholdReport(best, best_valuation, certificate)


# -- multiplier ideals ---------------------------------------------------


def _check_origin_primary(a: Ideal):
    if not a.is_monomial or a.is_zero() or a.is_unit():
        raise ValueError("a must be a proper nonzero monomial ideal")
    n = a.context.n
    for i in range(n):
        if not any(
            u[i] > 0 and all(u[j] == 0 for j in range(n) if j != i)
            for u in a.mono_exps
        ):
            raise ValueError("a must contain a power of every variable")


def _jump_value(a: Ideal, u, cache) -> Fraction:
    """min alpha.(u+1) over the Newton region of a: the t at which x^u
    leaves the multiplier ideal."""
    u = tuple(u)
    if u not in cache:
        cost = [Fraction(e + 1) for e in u]
        result = _newton_lp(a, cost)
        assert result.status == OPTIMAL
        cache[u] = result.value
    return cache[u]


def multiplier_ideal_monomial(a: Ideal, t, deg_cap: int = 16) -> MultiplierIdealReport:
    """Minimal monomial generators of J(a^t): x^u is in iff the Newton
    LP optimum of alpha.(u+1) strictly exceeds t."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    _check_origin_primary(a)
    n = a.context.n
    cache = {}
    member = {}

    def is_member(u):
        if u not in member:
            # monotone: any member below u certifies membership
            if any(
                u[i] > 0 and member.get(u[:i] + (u[i] - 1,) + u[i + 1 :], False)
                for i in range(n)
            ):
                member[u] = True
            else:
                member[u] = _jump_value(a, u, cache) > t
        return member[u]

    box = itertools.product(range(deg_cap + 1), repeat=n)
    gens = []
    for u in sorted(box, key=lambda w: (sum(w), w)):
        if not is_member(u):
            continue
        below = [
            u[:i] + (u[i] - 1,) + u[i + 1 :] for i in range(n) if u[i] > 0
        ]
        if all(not is_member(w) for w in below):
            gens.append(u)
    # certification: every boundary point of the box must already be a
    # member, otherwise minimal generators may hide beyond the cap
    for u in itertools.product(range(deg_cap + 1), repeat=n):
        if max(u) == deg_cap and not is_member(u):
            raise UncertifiedResultError(
                f"generator frontier touches the degree cap {deg_cap}"
            )
    return MultiplierIdealReport(Ideal.from_monomials(a.context, gens), t)


def asymptotic_multiplier_ideal(
    seq: GradedSeq, t, M: int, deg_cap: int = 16
) -> MultiplierIdealReport:
    """Union over m <= M of J(a_m^(t/m)), with the observed
    stabilization level (None when the union still grew at step M)."""
    t = Fraction(t)
    if M < 1:
        raise ValueError("M must be positive")
    if not seq.is_multiplicative:
        raise ValueError("asymptotic multiplier ideals take a multiplicative sequence")
    limit = min(M, len(seq.prefix)) if seq.kind == "explicit" else M
    partials = []
    union = Ideal.zero(seq.context)
    for m in range(1, limit + 1):
        piece = multiplier_ideal_monomial(seq.term(m), t / m, deg_cap).ideal
        union = union + piece
        partials.append(union)
    stabilized_at = None
    for m, partial in enumerate(partials, start=1):
        if partial == partials[-1]:
            stabilized_at = m
            break
    if stabilized_at == limit and limit > 1 and partials[-1] != partials[-2]:
        stabilized_at = None
    return MultiplierIdealReport(union, t, stabilized_at)


def jumping_numbers(a: Ideal, bound) -> list:
    """All t <= bound where J(a^t) strictly drops, sorted ascending.
    The first entry is the lct."""
    bound = Fraction(bound)
    _check_origin_primary(a)
    n = a.context.n
    cache = {}
    jumps = set()
    degree = 0
    while True:
        shell = [
            u
            for u in itertools.product(range(degree + 1), repeat=n)
            if sum(u) == degree
        ]
        values = [_jump_value(a, u, cache) for u in shell]
        hits = [v for v in values if v <= bound]
        jumps.update(hits)
        if not hits:
            break
        degree += 1
    return sorted(jumps)
