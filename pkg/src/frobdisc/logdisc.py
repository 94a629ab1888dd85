"""Log discrepancies of Cartier maps at monomial valuations.

Three evaluation routes are provided and cross-checked by the test
suite: an exact closed form for monomial valuations, a brute-force
supremum search over monomials (always a lower bound, exact once the
search box contains the extremal witness), and a conservation route
through twisted graded sequences.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cartier import CartierMap
from .errors import ConservationUndefined, UndefinedExtendedOperation
from .ideals import Ideal, splitting_prime
from .poly import as_mono_frac, grevlex_key
from .rational import NEG_INF, ExtRational
from .ratlp import OPTIMAL, UNBOUNDED, LinearProgram, lp_solve
from .valuations import GradedSeq, MonomialValuation, f_graded_value, graded_value


@dataclass(frozen=True)
class LogDiscReport:
    value: ExtRational
    method: str  # "closed-form" | "oracle" | "conservation"
    witness: tuple | None = None  # (monomial exponent, power) for the oracle
    exact: bool = True


class Trichotomy(enum.Enum):
    NEG_INFINITY = "neg-infinity"
    ZERO = "zero"
    PLUS_INFINITY = "plus-infinity"


def excess(f, psi: CartierMap, v: MonomialValuation) -> ExtRational:
    """(v(f) - p^e v(psi(f))) / (p^e - 1), in [-inf, +inf)."""
    f = as_mono_frac(f)
    if f.num.is_zero():
        raise ValueError("f must be nonzero")
    q = psi.q
    vf = v.value_poly(f)
    vpf = v.value_poly(psi.apply(f))
    return (vf - q * vpf) / (q - 1)


def logdisc_monomial(psi: CartierMap, v: MonomialValuation) -> LogDiscReport:
    """Closed form: sum of the weights minus v(h)/(p^e - 1)."""
    total = sum(v.alpha, Fraction(0))
    vh = v.value_poly(psi.h()).finite()
    value = ExtRational(total - vh / (psi.q - 1))
    return LogDiscReport(value, "closed-form")


def _monomials_up_to(n, deg_bound):
    """All exponent vectors of total degree <= deg_bound, ascending grevlex."""
    out = []
    for d in range(deg_bound + 1):
        for bars in itertools.combinations(range(d + n - 1), n - 1):
            prev, u = -1, []
            for b in bars:
                u.append(b - prev - 1)
                prev = b
            u.append(d + n - 1 - 1 - prev)
            out.append(tuple(u))
    out.sort(key=grevlex_key)
    return out


def logdisc_oracle(
    psi: CartierMap, v: MonomialValuation, deg_bound: int, n_max: int
) -> LogDiscReport:
    """Brute-force sup of the excess over monomials f of degree at most
    deg_bound and powers n <= n_max.  Requires a monomial h; always a
    lower bound for the closed form, with the achieving (f, n) reported
    as witness, smallest in (n, grevlex) order among maximizers."""
    c = psi.h_monomial_exponent()
    if c is None:
        raise ValueError("the oracle requires a monomial h")
    if deg_bound < 1 or n_max < 1:
        return LogDiscReport(NEG_INF, "oracle", None, exact=False)
    q = psi.q
    n_vars = psi.context.n
    best = None
    witness = None
    for n in range(1, n_max + 1):
        Q = q**n
        k = (Q - 1) // (q - 1)
        c_n = tuple(k * a for a in c)
        for u in _monomials_up_to(n_vars, deg_bound):
            w = []
            for a, b in zip(u, c_n):
                shifted = a + b - (Q - 1)
                if shifted % Q:
                    w = None
                    break
                w.append(shifted // Q)
            if w is None:
                continue
            value = (v.weight(u) - Q * v.weight(w)) / (Q - 1)
            if best is None or value > best:
                best = value
                witness = (u, n)
    if best is None:
        return LogDiscReport(NEG_INF, "oracle", None, exact=False)
    return LogDiscReport(ExtRational(best), "oracle", witness)


def logdisc_twisted(
    psi: CartierMap,
    seq: GradedSeq,
    v: MonomialValuation,
    bound: int,
    t=None,
) -> LogDiscReport:
    """Conservation route: subtract the sequence's asymptotic value
    (times t, for a multiplicative sequence twisted to exponent t) from
    the closed form.  All three quantities must be finite."""
    base = logdisc_monomial(psi, v).value
    try:
        if seq.is_f_graded:
            shift, exact = f_graded_value(v, seq, bound)
        else:
            if t is None:
                raise ValueError("multiplicative twist needs an exponent t")
            value, exact = graded_value(v, seq, bound)
            shift = Fraction(t) * value
        result = base - shift
    except UndefinedExtendedOperation as exc:
        raise ConservationUndefined(str(exc)) from None
    if not (base.is_finite and result.is_finite):
        raise ConservationUndefined("conservation requires all three terms finite")
    return LogDiscReport(result, "conservation", exact=exact)


def logdisc_trivial(psi: CartierMap) -> Trichotomy:
    """Value at the trivial valuation: the F-purity trichotomy."""
    if not psi.is_surjective_at_origin():
        return Trichotomy.NEG_INFINITY
    if splitting_prime(psi) == Ideal.maximal(psi.context):
        return Trichotomy.ZERO
    return Trichotomy.PLUS_INFINITY


def mld_origin(psi: CartierMap, a: Ideal, t) -> ExtRational:
    """inf over monomial weights alpha >= 0 of
    sum(alpha) - (alpha.c)/(p^e - 1) - t * min_g(alpha . u_g),
    for monomial h = x^c and monomial a.  -inf when unbounded below."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    c = psi.h_monomial_exponent()
    if c is None:
        raise ValueError("mld requires a monomial h")
    if not a.is_monomial or a.is_zero():
        raise ValueError("a must be a nonzero monomial ideal")
    n = psi.context.n
    qe = psi.q - 1
    # variables: alpha_1..alpha_n, s with s <= alpha . u_g for all g
    cost = [Fraction(1) - Fraction(ci, qe) for ci in c] + [-t]
    A = [[Fraction(e) for e in u] + [Fraction(-1)] for u in a.mono_exps]
    b = [Fraction(0)] * len(A)
    result = lp_solve(LinearProgram(cost, A, b))
    if result.status == UNBOUNDED:
        return NEG_INF
    assert result.status == OPTIMAL
    return ExtRational(result.value)
