"""Monomial valuations and graded sequences of ideals.

A monomial valuation is a rational weight vector alpha >= 0; its value
on a polynomial is the minimum of alpha . u over the support.  The
all-zero vector is the trivial valuation.  Graded sequences come in a
handful of structured kinds (constant, powers, valuation ideals,
twisted powers, enlarged, explicit prefixes) so that asymptotic values
can be reported with exactness certificates where closed forms exist.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PolyParseError
from .ideals import Ideal, parse_ideal
from .poly import as_mono_frac, parse_fraction_str
from .rational import POS_INF, ExtRational, ext


class MonomialValuation:
    """val_alpha with alpha a vector of nonnegative rationals."""

    __slots__ = ("context", "alpha")

    def __init__(self, context, alpha):
        alpha = tuple(Fraction(a) for a in alpha)
        if len(alpha) != context.n:
            raise ValueError("weight vector length must match the variable count")
        if any(a < 0 for a in alpha):
            raise ValueError("weights must be nonnegative")
        self.context = context
        self.alpha = alpha

    @classmethod
    def trivial(cls, ctx):
        return cls(ctx, (0,) * ctx.n)

    def is_trivial(self):
        return all(a == 0 for a in self.alpha)

    def scale(self, c):
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scaling factor must be positive")
        return MonomialValuation(self.context, tuple(c * a for a in self.alpha))

    def __eq__(self, other):
        if not isinstance(other, MonomialValuation):
            return NotImplemented
        return self.context == other.context and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.context, self.alpha))

    def __str__(self):
        return "val(" + ", ".join(str(a) for a in self.alpha) + ")"

    __repr__ = __str__

    # -- evaluation ------------------------------------------------------

    def weight(self, u) -> Fraction:
        return sum((a * e for a, e in zip(self.alpha, u)), Fraction(0))

    def value_poly(self, f) -> ExtRational:
        """min of alpha . u over the support; +inf on 0."""
        f = as_mono_frac(f)
        if f.num.is_zero():
            return POS_INF
        best = min(self.weight(u) for u in f.num.terms)
        return ExtRational(best - self.weight(f.den))

    def value_ideal(self, I: Ideal) -> ExtRational:
        """min over generators; exact for rank-one monomial valuations."""
        if I.is_zero():
            return POS_INF
        return min(self.value_poly(g) for g in I.basis)

    def valuation_ideal(self, s) -> Ideal:
        """The monomial ideal {f : v(f) >= s}."""
        s = Fraction(s)
        ctx = self.context
        if s <= 0:
            return Ideal.unit(ctx)
        if self.is_trivial():
            return Ideal.zero(ctx)
        bounds = [
            (-(-s // a) if a > 0 else 0) for a in self.alpha
        ]  # u_i <= ceil(s / alpha_i); zero-weight variables stay at 0
        gens = []

        def walk(prefix, weight):
            i = len(prefix)
            if i == ctx.n:
                u = tuple(prefix)
                if weight >= s and all(
                    u[j] == 0 or weight - self.alpha[j] < s for j in range(ctx.n)
                ):
                    gens.append(u)
                return
            limit = int(bounds[i])
            for e in range(limit + 1):
                w = weight + e * self.alpha[i]
                walk(prefix + [e], w)
                if w >= s:
                    break

        walk([], Fraction(0))
        return Ideal.from_monomials(ctx, gens)


def retract(ctx, coordinate_values) -> MonomialValuation:
    """Monomialization retraction: the monomial valuation w with
    w(x_i) = v(x_i), given the coordinate values of v.  The result
    bounds v from below on every polynomial."""
    values = []
    for a in coordinate_values:
        a = ext(a)
        if not a.is_finite:
            raise ValueError("coordinate value must be finite (center on the chart)")
        values.append(a.finite())
    return MonomialValuation(ctx, values)


# -- graded sequences ----------------------------------------------------

MULTIPLICATIVE_KINDS = ("constant", "powers", "valids", "explicit", "enlarged")
F_GRADED_KINDS = ("twist",)


class GradedSeq:
    """A graded or F-graded sequence of ideals, given by its recipe."""

    __slots__ = ("kind", "context", "ideal", "valuation", "t", "s", "inner", "prefix")

    def __init__(self, kind, context, ideal=None, valuation=None, t=None, s=None,
                 inner=None, prefix=None):
        self.kind = kind
        self.context = context
        self.ideal = ideal
        self.valuation = valuation
        self.t = Fraction(t) if t is not None else None
        self.s = s
        self.inner = inner
        self.prefix = tuple(prefix) if prefix is not None else None

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, a: Ideal):
        return cls("constant", a.context, ideal=a)

    @classmethod
    def powers(cls, a: Ideal):
        return cls("powers", a.context, ideal=a)

    @classmethod
    def valuation_ideals(cls, v: MonomialValuation):
        return cls("valids", v.context, valuation=v)

    @classmethod
    def explicit(cls, ideals):
        ideals = tuple(ideals)
        if not ideals:
            raise ValueError("explicit sequence needs at least one ideal")
        return cls("explicit", ideals[0].context, prefix=ideals)

    @classmethod
    def twist_powers(cls, a: Ideal, t):
        """F-graded: a_e = a^ceil(t (p^e - 1))."""
        if Fraction(t) < 0:
            raise ValueError("twist exponent must be nonnegative")
        return cls("twist", a.context, ideal=a, t=t)

    @classmethod
    def enlarged(cls, inner: "GradedSeq", m_ideal: Ideal, s: int):
        """c_j = sum_{i<=j} a_i m^{s(j-i)} (with a_0 = R)."""
        if not inner.is_multiplicative:
            raise ValueError("enlargement applies to multiplicative sequences")
        if s < 1:
            raise ValueError("s must be a positive integer")
        return cls("enlarged", inner.context, inner=inner, ideal=m_ideal, s=s)

    # -- structure -------------------------------------------------------

    @property
    def is_multiplicative(self):
        return self.kind in MULTIPLICATIVE_KINDS

    @property
    def is_f_graded(self):
        return self.kind in F_GRADED_KINDS

    def term(self, m) -> Ideal:
        """The m-th ideal of the sequence (m >= 1)."""
        if m < 1:
            raise ValueError("index must be positive")
        if self.kind == "constant":
            return self.ideal
        if self.kind == "powers":
            return self.ideal**m
        if self.kind == "valids":
            return self.valuation.valuation_ideal(m)
        if self.kind == "explicit":
            if m > len(self.prefix):
                raise ValueError(f"explicit prefix has only {len(self.prefix)} terms")
            return self.prefix[m - 1]
        if self.kind == "twist":
            p = self.context.p
            k = -((-self.t * (p**m - 1)) // 1)  # ceil
            return self.ideal ** int(k)
        if self.kind == "enlarged":
            total = Ideal.from_monomials(self.context, [])  # zero ideal
            for i in range(m + 1):
                part = Ideal.unit(self.context) if i == 0 else self.inner.term(i)
                total = total + part * (self.ideal ** (self.s * (m - i)))
            return total
        raise ValueError(f"unknown kind {self.kind}")

    def check_gradedness(self, prefix_len=3):
        """Spot-check the defining inclusions on a materialized prefix."""
        terms = [self.term(m) for m in range(1, prefix_len + 1)]
        if self.is_multiplicative:
            for i in range(1, prefix_len + 1):
                for j in range(1, prefix_len + 1 - i):
                    if not terms[i + j - 1].contains_ideal(terms[i - 1] * terms[j - 1]):
                        return False
            return True
        for i in range(1, prefix_len + 1):
            for j in range(1, prefix_len + 1 - i):
                prod = terms[i - 1].bracket_power(j) * terms[j - 1]
                if not terms[i + j - 1].contains_ideal(prod):
                    return False
        return True

    def __str__(self):
        if self.kind == "constant":
            return f"constant({self.ideal})"
        if self.kind == "powers":
            return f"powers({self.ideal})"
        if self.kind == "valids":
            return f"valids({self.valuation})"
        if self.kind == "explicit":
            return "explicit(" + "; ".join(str(I) for I in self.prefix) + ")"
        if self.kind == "twist":
            return f"twist({self.ideal}, {self.t})"
        return f"enlarged({self.inner}, {self.ideal}, {self.s})"

    __repr__ = __str__


def graded_value(v: MonomialValuation, seq: GradedSeq, M: int):
    """(inf_{m <= M} v(a_m)/m, exact?) for a multiplicative sequence.

    Exact closed forms: powers -> v(a); valuation ideals of v itself
    -> 1; enlarged -> min of the inner value and s * v(m).  The
    constant sequence reports its truncated inf with exact=False (its
    true limit is 0).
    """
    if M < 1:
        raise ValueError("M must be positive")
    if not seq.is_multiplicative:
        raise ValueError(f"{seq.kind} is not a multiplicative sequence")
    if seq.kind == "powers":
        return v.value_ideal(seq.ideal), True
    if seq.kind == "valids" and seq.valuation == v and not v.is_trivial():
        return ExtRational(1), True
    if seq.kind == "enlarged":
        inner_value, inner_exact = graded_value(v, seq.inner, M)
        m_value = v.value_ideal(seq.ideal)
        if m_value.is_finite:
            m_value = ExtRational(seq.s * m_value.finite())
        return min(inner_value, m_value), inner_exact
    limit = min(M, len(seq.prefix)) if seq.kind == "explicit" else M
    best = min(v.value_ideal(seq.term(m)) / m for m in range(1, limit + 1))
    return best, False


def f_graded_value(v: MonomialValuation, seq: GradedSeq, E: int):
    """(inf_{e <= E} v(a_e)/(p^e - 1), exact?) for an F-graded sequence.

    For twisted powers a_e = a^ceil(t(p^e-1)) the limit is t*v(a),
    certified exact as soon as t(p^e-1) is an integer for some e <= E.
    """
    if E < 1:
        raise ValueError("E must be positive")
    if not seq.is_f_graded:
        raise ValueError(f"{seq.kind} is not an F-graded sequence")
    p = seq.context.p
    va = v.value_ideal(seq.ideal)
    if not va.is_finite:
        return va, True
    t = seq.t
    if va.finite() == 0 or t == 0:
        return ExtRational(0), True
    for e in range(1, E + 1):
        if (t * (p**e - 1)).denominator == 1:
            return ExtRational(t * va.finite()), True
    best = min(
        Fraction(-((-t * (p**e - 1)) // 1)) * va.finite() / (p**e - 1)
        for e in range(1, E + 1)
    )
    return ExtRational(best), False


# -- parsing -------------------------------------------------------------


def parse_valuation(text, ctx) -> MonomialValuation:
    """Parse `val(1, 2/3, 0)`."""
    s = text.strip()
    if not (s.startswith("val(") and s.endswith(")")):
        raise PolyParseError("valuation must look like val(1, 2/3, 0)")
    entries = [parse_fraction_str(part) for part in s[4:-1].split(",")]
    return MonomialValuation(ctx, entries)


def _split_args(body):
    """Split on top-level commas."""
    parts, depth, current = [], 0, []
    for ch in body:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def parse_graded_seq(text, ctx) -> GradedSeq:
    """Parse `powers([x,y])`, `twist([x,y], 3/2)`, `valids(val(1,2))`,
    `enlarged(powers([x,y]), [x,y], 2)`, `constant([x])`, or
    `explicit([...]; [...]; ...)`."""
    s = text.strip()
    head, _, rest = s.partition("(")
    head = head.strip()
    if not rest.endswith(")"):
        raise PolyParseError(f"malformed graded sequence '{text}'")
    body = rest[:-1]
    if head == "powers":
        return GradedSeq.powers(parse_ideal(body, ctx))
    if head == "constant":
        return GradedSeq.constant(parse_ideal(body, ctx))
    if head == "valids":
        return GradedSeq.valuation_ideals(parse_valuation(body, ctx))
    if head == "twist":
        args = _split_args(body)
        if len(args) != 2:
            raise PolyParseError("twist takes an ideal and an exponent")
        return GradedSeq.twist_powers(parse_ideal(args[0], ctx), parse_fraction_str(args[1]))
    if head == "enlarged":
        args = _split_args(body)
        if len(args) != 3:
            raise PolyParseError("enlarged takes a sequence, an ideal, and s")
        return GradedSeq.enlarged(
            parse_graded_seq(args[0], ctx), parse_ideal(args[1], ctx), int(args[2])
        )
    if head == "explicit":
        return GradedSeq.explicit(
            [parse_ideal(part, ctx) for part in body.split(";")]
        )
    raise PolyParseError(f"unknown graded sequence kind '{head}'")
