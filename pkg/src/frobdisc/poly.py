"""Sparse multivariate polynomials over a prime field F_p.

A polynomial is a mapping from exponent vectors (length-n tuples of
nonnegative ints) to nonzero coefficients in {1, ..., p-1}.  All
operations are exact; there is no floating point anywhere in this
package.  The canonical term order is graded reverse lexicographic with
x_1 > ... > x_n, used both for printing and for Groebner bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from .errors import ContextMismatchError, DegreeCapError, PolyParseError

DEFAULT_DEGREE_CAP = 1 << 20


def grevlex_key(u):
    """Sort key: ascending under this key == ascending grevlex order."""
    return (sum(u), tuple(-e for e in reversed(u)))


@dataclass(frozen=True)
class PolyContext:
    """The ambient ring F_p[x_1, ..., x_n]."""

    p: int
    var_names: tuple
    degree_cap: int = DEFAULT_DEGREE_CAP

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if self.p < 2 or not gmpy2.is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if len(self.var_names) < 1:
            raise ValueError("at least one variable required")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be distinct")

    @property
    def n(self):
        return len(self.var_names)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c %= self.p
        if c == 0:
            return self.zero()
        return MultiPoly(self, {(0,) * self.n: c})

    def gen(self, i) -> "MultiPoly":
        u = [0] * self.n
        u[i] = 1
        return MultiPoly(self, {tuple(u): 1})

    def monomial(self, u, coeff=1) -> "MultiPoly":
        coeff %= self.p
        if coeff == 0:
            return self.zero()
        return MultiPoly(self, {tuple(u): coeff})


class MultiPoly:
    """Immutable sparse polynomial over F_p."""

    __slots__ = ("context", "terms", "_hash")

    def __init__(self, context, terms, _checked=False):
        self.context = context
        if not _checked:
            p, n = context.p, context.n
            clean = {}
            for u, c in terms.items():
                u = tuple(u)
                if len(u) != n or any(e < 0 for e in u):
                    raise ValueError(f"bad exponent vector {u}")
                c %= p
                if c:
                    clean[u] = c
            terms = clean
        self.terms = terms
        self._hash = None

    # -- basics ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * self.context.n}

    def constant_term(self):
        return self.terms.get((0,) * self.context.n, 0)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(u) for u in self.terms)

    def leading_exponent(self):
        """Largest exponent vector under grevlex; None for 0."""
        if not self.terms:
            return None
        return max(self.terms, key=grevlex_key)

    def leading_coeff(self):
        u = self.leading_exponent()
        return 0 if u is None else self.terms[u]

    def _same(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.context != self.context:
            raise ContextMismatchError("operands from different rings")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.context.const(other)
        self._same(other)
        p = self.context.p
        terms = dict(self.terms)
        for u, c in other.terms.items():
            s = (terms.get(u, 0) + c) % p
            if s:
                terms[u] = s
            else:
                terms.pop(u, None)
        return MultiPoly(self.context, terms, _checked=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.context.p
        return MultiPoly(
            self.context, {u: (-c) % p for u, c in self.terms.items()}, _checked=True
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.context.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        p = self.context.p
        terms = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                s = (terms.get(w, 0) + c * d) % p
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return MultiPoly(self.context, terms, _checked=True)

    __rmul__ = __mul__

    def scale(self, c):
        c %= self.context.p
        if c == 0:
            return self.context.zero()
        p = self.context.p
        return MultiPoly(
            self.context, {u: (k * c) % p for u, k in self.terms.items()}, _checked=True
        )

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power")
        if not self.is_zero() and self.total_degree() * m > self.context.degree_cap:
            raise DegreeCapError(
                f"degree {self.total_degree() * m} exceeds cap {self.context.degree_cap}"
            )
        result = self.context.one()
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def shift(self, u):
        """Multiply by the monomial x^u."""
        u = tuple(u)
        return MultiPoly(
            self.context,
            {tuple(a + b for a, b in zip(v, u)): c for v, c in self.terms.items()},
            _checked=True,
        )

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self.terms.items())))
        return self._hash

    # -- Frobenius -------------------------------------------------------

    def frobenius(self, e):
        """Return f^(p^e): coefficients are fixed, exponents scale by p^e."""
        if e < 0:
            raise ValueError("e must be nonnegative")
        if e == 0:
            return self
        q = self.context.p**e
        if not self.is_zero() and self.total_degree() * q > self.context.degree_cap:
            raise DegreeCapError(f"Frobenius level e={e} exceeds the degree cap")
        return MultiPoly(
            self.context,
            {tuple(a * q for a in u): c for u, c in self.terms.items()},
            _checked=True,
        )

    def q_decompose(self, e):
        """Write f = sum_u g_u^(p^e) * x^u with u in [0, p^e-1]^n.

        Returns {u: g_u} for the nonzero components.  F_p is perfect,
        so the decomposition is determined by splitting each exponent
        vector into quotient and remainder mod p^e.
        """
        if e < 1:
            raise ValueError("e must be positive")
        q = self.context.p**e
        parts = {}
        for u, c in self.terms.items():
            r = tuple(a % q for a in u)
            w = tuple(a // q for a in u)
            parts.setdefault(r, {})[w] = c
        return {
            r: MultiPoly(self.context, terms, _checked=True)
            for r, terms in parts.items()
        }

    # -- printing --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for u in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[u]
            factors = []
            for name, e in zip(self.context.var_names, u):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self})"


class MonoFrac:
    """A polynomial divided by a monomial x^den (coefficient 1).

    Normalized so that den shares no variable with every term of num.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        ctx = num.context
        den = tuple(den) if den is not None else (0,) * ctx.n
        if any(e < 0 for e in den):
            raise ValueError("denominator exponents must be nonnegative")
        if num.terms and any(den):
            common = [min(u[i] for u in num.terms) for i in range(ctx.n)]
            cancel = tuple(min(c, d) for c, d in zip(common, den))
            if any(cancel):
                num = MultiPoly(
                    ctx,
                    {
                        tuple(a - b for a, b in zip(u, cancel)): c
                        for u, c in num.terms.items()
                    },
                    _checked=True,
                )
                den = tuple(d - c for c, d in zip(cancel, den))
        if not num.terms:
            den = (0,) * ctx.n
        self.num = num
        self.den = den

    @property
    def context(self):
        return self.num.context

    def is_polynomial(self):
        return not any(self.den)

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            other = MonoFrac(other)
        if not isinstance(other, MonoFrac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        mono = str(self.context.monomial(self.den))
        return f"({self.num}) / {mono}"

    def __repr__(self):
        return f"MonoFrac({self})"


def as_mono_frac(f) -> MonoFrac:
    if isinstance(f, MonoFrac):
        return f
    return MonoFrac(f)


# -- parsing -------------------------------------------------------------
#
# Grammar (ASCII): expr := term (('+'|'-') term)*
#                  term := ('-')* factor ('*' factor)*
#                  factor := atom ('^' nat)?
#                  atom := nat | var | '(' expr ')'
# '^' binds tighter than '*' binds tighter than '+'/'-'.


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, message):
        raise PolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def parse(self):
        f = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return f

    def expr(self):
        f = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                f = f + self.term()
            elif ch == "-":
                self.pos += 1
                f = f - self.term()
            else:
                return f

    def term(self):
        negate = False
        while self.peek() == "-":
            self.pos += 1
            negate = not negate
        f = self.factor()
        while self.peek() == "*":
            self.pos += 1
            f = f * self.factor()
        return -f if negate else f

    def factor(self):
        f = self.atom()
        if self.peek() == "^":
            self.pos += 1
            f = f ** self.nat()
        return f

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start : self.pos])

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            f = self.expr()
            self.eat(")")
            return f
        if ch.isdigit():
            return self.ctx.const(self.nat())
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            try:
                return self.ctx.gen(self.ctx.var_names.index(name))
            except ValueError:
                self.pos = start
                self.error(f"unknown variable '{name}'")
        self.error("expected a coefficient, variable, or '('")


def parse_poly(text, ctx) -> MultiPoly:
    """Parse a polynomial; integer coefficients reduce silently mod p."""
    return _Parser(text, ctx).parse()


def parse_fraction_str(text) -> Fraction:
    """Parse 'a' or 'a/b' into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad rational '{text}': {exc}") from None
