"""Ideal arithmetic: Groebner bases, bracket powers, colons, F-purity.

Every ideal is stored as a reduced Groebner basis under grevlex.  For
monomial ideals the reduced basis coincides with the minimal monomial
generating set, and most operations take a combinatorial fast path.
A single auxiliary elimination variable supports intersections (and
through them, colons by arbitrary polynomials).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatchError, IterationCapError, PolyParseError
from .poly import MultiPoly, PolyContext, grevlex_key, parse_poly

SPLITTING_PRIME_CAP = 64


# -- division and Buchberger ---------------------------------------------


def _normal_form(f, basis, key):
    """Fully reduce f modulo the marked basis; returns the remainder."""
    p = f.context.p
    leads = [(g.leading_exponent(), pow(g.leading_coeff(), -1, p), g) for g in basis]
    remainder = {}
    work = dict(f.terms)
    while work:
        u = max(work, key=key)
        c = work.pop(u)
        for lu, linv, g in leads:
            if all(a >= b for a, b in zip(u, lu)):
                # cancel c*x^u against g
                factor = (c * linv) % p
                shift = tuple(a - b for a, b in zip(u, lu))
                for v, d in g.terms.items():
                    w = tuple(a + b for a, b in zip(v, shift))
                    if w == u:
                        continue
                    s = (work.get(w, 0) - factor * d) % p
                    if s:
                        work[w] = s
                    else:
                        work.pop(w, None)
                break
        else:
            remainder[u] = c
    return MultiPoly(f.context, remainder, _checked=True)


def _spoly(f, g):
    p = f.context.p
    fu, gu = f.leading_exponent(), g.leading_exponent()
    lcm = tuple(max(a, b) for a, b in zip(fu, gu))
    finv = pow(f.leading_coeff(), -1, p)
    ginv = pow(g.leading_coeff(), -1, p)
    fs = f.shift(tuple(a - b for a, b in zip(lcm, fu))).scale(finv)
    gs = g.shift(tuple(a - b for a, b in zip(lcm, gu))).scale(ginv)
    return fs - gs


def _interreduce(basis, key):
    p = basis[0].context.p if basis else None
    basis = [g.scale(pow(g.leading_coeff(), -1, p)) for g in basis if not g.is_zero()]
    # drop generators whose lead is divisible by an earlier kept lead;
    # a proper divisor always sorts earlier, so one ascending pass suffices
    basis.sort(key=lambda g: key(g.leading_exponent()))
    kept = []
    for g in basis:
        lu = g.leading_exponent()
        if any(
            all(a >= b for a, b in zip(lu, h.leading_exponent())) for h in kept
        ):
            continue
        kept.append(g)
    # tail-reduce each against the others
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = _normal_form(g, others, key) if others else g
        if not r.is_zero():
            reduced.append(r.scale(pow(r.leading_coeff(), -1, p)))
    reduced.sort(key=lambda g: key(g.leading_exponent()))
    return reduced


def _buchberger(gens, key):
    """Reduced Groebner basis of the given generators under key."""
    G = [g for g in gens if not g.is_zero()]
    if not G:
        return []
    p = G[0].context.p
    G = [g.scale(pow(g.leading_coeff(), -1, p)) for g in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        i, j = pairs.pop()
        fu = G[i].leading_exponent()
        gu = G[j].leading_exponent()
        # Buchberger's first criterion: coprime leads reduce to zero
        if all(min(a, b) == 0 for a, b in zip(fu, gu)):
            continue
        r = _normal_form(_spoly(G[i], G[j]), G, key)
        if not r.is_zero():
            G.append(r.scale(pow(r.leading_coeff(), -1, p)))
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return _interreduce(G, key)


def _minimalize_monomials(exps):
    """Minimal elements of a set of exponent vectors under divisibility."""
    out = []
    for u in sorted(set(exps), key=grevlex_key):
        if not any(all(a >= b for a, b in zip(u, v)) for v in out):
            out.append(u)
    return out


# -- the ideal type ------------------------------------------------------


class Ideal:
    """An ideal of F_p[x_1,...,x_n], held as a reduced grevlex basis."""

    __slots__ = ("context", "basis", "mono_exps")

    def __init__(self, context, basis, mono_exps=None):
        self.context = context
        self.basis = tuple(basis)
        if mono_exps is None and all(
            g.is_monomial() and g.leading_coeff() == 1 for g in self.basis
        ):
            mono_exps = tuple(g.leading_exponent() for g in self.basis)
        self.mono_exps = tuple(mono_exps) if mono_exps is not None else None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx):
        return cls(ctx, (ctx.one(),))

    @classmethod
    def maximal(cls, ctx):
        """The irrelevant ideal (x_1, ..., x_n)."""
        return cls.from_monomials(ctx, [tuple(int(i == j) for j in range(ctx.n)) for i in range(ctx.n)])

    @classmethod
    def from_monomials(cls, ctx, exps):
        exps = _minimalize_monomials(tuple(u) for u in exps)
        return cls(ctx, tuple(ctx.monomial(u) for u in exps), mono_exps=exps)

    @classmethod
    def generated_by(cls, gens):
        """Reduced Groebner basis of arbitrary generators."""
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise ValueError("cannot infer the ring of the zero ideal; use Ideal.zero")
        ctx = gens[0].context
        for g in gens:
            if g.context != ctx:
                raise ContextMismatchError("generators from different rings")
        if all(g.is_monomial() for g in gens):
            return cls.from_monomials(ctx, [g.leading_exponent() for g in gens])
        return cls(ctx, _buchberger(gens, grevlex_key))

    # -- predicates ------------------------------------------------------

    @property
    def is_monomial(self):
        return self.mono_exps is not None

    def is_zero(self):
        return not self.basis

    def is_unit(self):
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.context == other.context and self.basis == other.basis

    def __hash__(self):
        return hash((self.context, self.basis))

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.basis) + "]"

    __repr__ = __str__

    # -- membership and containment --------------------------------------

    def contains(self, f):
        """Exact ideal membership of a polynomial."""
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        if self.is_monomial:
            return all(
                any(all(a >= b for a, b in zip(u, v)) for v in self.mono_exps)
                for u in f.terms
            )
        return _normal_form(f, self.basis, grevlex_key).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.basis)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.is_monomial and other.is_monomial:
            return Ideal.from_monomials(self.context, self.mono_exps + other.mono_exps)
        return Ideal.generated_by(list(self.basis) + list(other.basis))

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.context)
        if self.is_monomial and other.is_monomial:
            return Ideal.from_monomials(
                self.context,
                [
                    tuple(a + b for a, b in zip(u, v))
                    for u in self.mono_exps
                    for v in other.mono_exps
                ],
            )
        return Ideal.generated_by([f * g for f in self.basis for g in other.basis])

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative ideal power")
        result = Ideal.unit(self.context)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def intersect(self, other):
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.context)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        if self.is_monomial and other.is_monomial:
            return Ideal.from_monomials(
                self.context,
                [
                    tuple(max(a, b) for a, b in zip(u, v))
                    for u in self.mono_exps
                    for v in other.mono_exps
                ],
            )
        return _eliminate_intersection(self, other)

    def bracket_power(self, e):
        """The ideal generated by p^e-th powers of the generators."""
        if e < 1:
            raise ValueError("e must be positive")
        q = self.context.p**e
        if self.is_monomial:
            return Ideal.from_monomials(
                self.context, [tuple(a * q for a in u) for u in self.mono_exps]
            )
        return Ideal.generated_by([g.frobenius(e) for g in self.basis])

    def colon(self, f):
        """(I : f) = {g : g*f in I}."""
        if f.is_zero():
            raise ValueError("colon by zero")
        if self.is_zero():
            return Ideal.zero(self.context)
        if self.is_monomial and f.is_monomial():
            m = f.leading_exponent()
            return Ideal.from_monomials(
                self.context,
                [tuple(max(a - b, 0) for a, b in zip(u, m)) for u in self.mono_exps],
            )
        principal = Ideal.generated_by([f])
        meet = self.intersect(principal)
        return Ideal.generated_by([_exact_divide(g, f) for g in meet.basis]) if meet.basis else Ideal.zero(self.context)

    def colon_ideal(self, other):
        """(I : J) for an ideal J."""
        if other.is_zero():
            return Ideal.unit(self.context)
        result = None
        for g in other.basis:
            c = self.colon(g)
            result = c if result is None else result.intersect(c)
        return result

    def radical_monomial(self):
        """Radical of a monomial ideal (support vectors clipped to 0/1)."""
        if not self.is_monomial:
            raise ValueError("radical implemented for monomial ideals only")
        return Ideal.from_monomials(
            self.context, [tuple(min(a, 1) for a in u) for u in self.mono_exps]
        )


def _exact_divide(g, f):
    """Quotient of an exact division g = q*f; raises if not exact."""
    ctx = g.context
    p = ctx.p
    fu = f.leading_exponent()
    finv = pow(f.leading_coeff(), -1, p)
    quotient = {}
    work = dict(g.terms)
    while work:
        u = max(work, key=grevlex_key)
        c = work[u]
        if not all(a >= b for a, b in zip(u, fu)):
            raise ValueError("division is not exact")
        shift = tuple(a - b for a, b in zip(u, fu))
        factor = (c * finv) % p
        quotient[shift] = factor
        for v, d in f.terms.items():
            w = tuple(a + b for a, b in zip(v, shift))
            s = (work.get(w, 0) - factor * d) % p
            if s:
                work[w] = s
            else:
                work.pop(w, None)
    return MultiPoly(ctx, quotient, _checked=True)


def _eliminate_intersection(I, J):
    """I cap J via a tag variable and an elimination order."""
    ctx = I.context
    ext = PolyContext(ctx.p, ("#t",) + ctx.var_names, ctx.degree_cap)

    def lift(f, t_part):
        # multiply by t (t_part=True) or (1-t)
        terms = {}
        for u, c in f.terms.items():
            if t_part:
                terms[(1,) + u] = c
            else:
                terms[(0,) + u] = c
                terms[(1,) + u] = -c % ctx.p
        return MultiPoly(ext, terms, _checked=True)

    def elim_key(u):
        return (u[0], grevlex_key(u[1:]))

    gens = [lift(f, True) for f in I.basis] + [lift(g, False) for g in J.basis]
    basis = _buchberger(gens, elim_key)
    kept = []
    for g in basis:
        if all(u[0] == 0 for u in g.terms):
            kept.append(
                MultiPoly(ctx, {u[1:]: c for u, c in g.terms.items()}, _checked=True)
            )
    if not kept:
        return Ideal.zero(ctx)
    return Ideal.generated_by(kept)


def parse_ideal(text, ctx) -> Ideal:
    """Parse `[f1, f2, ...]`; `[]` is the zero ideal."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise PolyParseError("ideal must be bracketed, e.g. [x^2, x*y]")
    inner = s[1:-1].strip()
    if not inner:
        return Ideal.zero(ctx)
    gens = [parse_poly(part, ctx) for part in inner.split(",")]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return Ideal.zero(ctx)
    return Ideal.generated_by(gens)


# -- F-singularity tests -------------------------------------------------


def fedder_fpure_hypersurface(f) -> bool:
    """Fedder's criterion for R/f at the origin: f^(p-1) not in m^[p]."""
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f.constant_term() != 0:
        raise ValueError("f must vanish at the origin")
    p = f.context.p
    g = f ** (p - 1)
    return any(all(a < p for a in u) for u in g.terms)


def is_compatible(I: Ideal, psi) -> bool:
    """Whether psi(I) is contained in I, via h*I subset I^[p^e]."""
    if not psi.is_polynomial():
        raise ValueError("compatibility requires a polynomial h")
    if I.is_zero() or I.is_unit():
        return True
    bracket = I.bracket_power(psi.e)
    h = psi.h_num
    return all(bracket.contains(h * g) for g in I.basis)


def _min_order(f):
    """Lowest total degree among the terms of a nonzero polynomial."""
    return min(sum(u) for u in f.terms)


def splitting_prime(psi, cap=SPLITTING_PRIME_CAP) -> Ideal:
    """Largest psi-compatible ideal inside the irrelevant maximal ideal.

    Returns the unit ideal when psi is not surjective at the origin
    (not sharply F-pure).  Fixed-point iteration
    J <- J cap (J^[p^e] : h) starting from (x_1, ..., x_n); the chain
    descends to the splitting prime.

    A nonzero compatible ideal J satisfies h*J subset J^[p^e], so its
    minimal vanishing order d obeys ord(h) + d >= p^e * d, i.e.
    d <= ord(h)/(p^e - 1).  Once every generator of an iterate has
    order beyond that bound the splitting prime is provably zero; this
    is what terminates the iteration for strongly F-regular maps, whose
    chain otherwise descends forever.
    """
    if not psi.is_polynomial():
        raise ValueError("splitting prime requires a polynomial h")
    ctx = psi.context
    if not psi.is_surjective_at_origin():
        return Ideal.unit(ctx)
    h = psi.h_num
    if h.is_monomial():
        # closed form: the iterates are monomial, so the limit is a
        # monomial prime, i.e. a face (x_i : i in S); the face is
        # compatible exactly when c_i = p^e - 1 on S
        c = h.leading_exponent()
        q = psi.q
        return Ideal.from_monomials(
            ctx,
            [
                tuple(int(i == j) for j in range(ctx.n))
                for i in range(ctx.n)
                if c[i] == q - 1
            ],
        )
    order_bound = Fraction(_min_order(h), psi.q - 1)
    J = Ideal.maximal(ctx)
    for _ in range(cap):
        if min(_min_order(g) for g in J.basis) > order_bound:
            return Ideal.zero(ctx)
        refined = J.intersect(J.bracket_power(psi.e).colon(h))
        if refined == J:
            return J
        J = refined
    raise IterationCapError(f"splitting-prime iteration did not settle in {cap} steps")


def strongly_fregular_search(psi, c, e_max):
    """Look for a level e <= e_max at which c witnesses strong F-regularity.

    Returns the least such e, or None (inconclusive: never a negative
    certificate, since the defining condition quantifies over all e).
    """
    if c.is_zero():
        raise ValueError("witness element must be nonzero")
    if not psi.is_polynomial():
        raise ValueError("search requires a polynomial h")
    p = psi.context.p
    q = p**psi.e
    for e in range(1, e_max + 1):
        level = q**e  # p^(e * e_psi)
        exponent = (level - 1) // (q - 1)
        g = (psi.h_num**exponent) * c
        if any(all(a < level for a in u) for u in g.terms):
            return e
    return None
