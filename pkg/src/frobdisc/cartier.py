"""p^{-e}-linear maps psi = Phi^e . h on F_p[x_1,...,x_n].

Phi^e is the canonical generator in degree e: the projection of a
polynomial onto its (x_1...x_n)^{p^e-1} component in the p^e-power
basis.  h may live in the localization at monomials (a polynomial
divided by a monomial), which covers every map needed on the charts
this package works with.
"""

from __future__ import annotations

from .errors import PolyParseError
from .poly import MonoFrac, MultiPoly, as_mono_frac, parse_poly


class CartierMap:
    """psi = Phi^e . h with h = h_num / x^h_den."""

    __slots__ = ("context", "e", "h_num", "h_den")

    def __init__(self, context, e, h_num, h_den=None):
        if e < 1:
            raise ValueError("e must be positive")
        if h_num.is_zero():
            raise ValueError("degenerate map: h = 0")
        frac = MonoFrac(h_num, h_den)
        self.context = context
        self.e = e
        self.h_num = frac.num
        self.h_den = frac.den

    @classmethod
    def canonical(cls, ctx, e=1):
        """The generator Phi^e (h = 1)."""
        return cls(ctx, e, ctx.one())

    @property
    def q(self):
        return self.context.p**self.e

    def h(self) -> MonoFrac:
        return MonoFrac(self.h_num, self.h_den)

    def is_polynomial(self):
        return not any(self.h_den)

    def h_monomial_exponent(self):
        """Exponent c with h = x^c (possibly with negative entries from
        the denominator), or None if h is not a coefficient-1 monomial."""
        if not self.h_num.is_monomial() or self.h_num.leading_coeff() != 1:
            return None
        u = self.h_num.leading_exponent()
        return tuple(a - b for a, b in zip(u, self.h_den))

    def __eq__(self, other):
        if not isinstance(other, CartierMap):
            return NotImplemented
        return (
            self.context == other.context
            and self.e == other.e
            and self.h_num == other.h_num
            and self.h_den == other.h_den
        )

    def __hash__(self):
        return hash((self.context, self.e, self.h_num, self.h_den))

    def __str__(self):
        s = f"phi^{self.e} * ({self.h_num})"
        if any(self.h_den):
            s += f" / {self.context.monomial(self.h_den)}"
        return s

    __repr__ = __str__

    # -- evaluation ------------------------------------------------------

    def apply(self, f) -> MonoFrac:
        """psi(f) = Phi^e(h * f) for f a polynomial or monomial fraction."""
        f = as_mono_frac(f)
        q = self.q
        num = self.h_num * f.num
        den = tuple(a + b for a, b in zip(self.h_den, f.den))
        # Phi^e(g / x^d) = Phi^e(g * x^(qk-d)) / x^k with k = ceil(d/q)
        k = tuple(-(-d // q) for d in den)
        lifted = num.shift(tuple(q * a - d for a, d in zip(k, den)))
        target = (q - 1,) * self.context.n
        component = lifted.q_decompose(self.e).get(target, self.context.zero())
        return MonoFrac(component, k)

    def apply_poly(self, f) -> MultiPoly:
        """apply() for callers that expect a polynomial result."""
        return self.apply(f).as_poly()

    def apply_monomial_exponent(self, u):
        """Fast path: psi(x^u) for monomial h; the result is a monomial
        x^w (returns w) or zero (returns None).  Entries of u and w may
        be negative (fraction-field monomials)."""
        c = self.h_monomial_exponent()
        if c is None:
            raise ValueError("fast path requires a monomial h")
        q = self.q
        w = []
        for a in (m + e for m, e in zip(u, c)):
            shifted = a - (q - 1)
            if shifted % q:
                return None
            w.append(shifted // q)
        return tuple(w)

    # -- algebra ---------------------------------------------------------

    def compose(self, other) -> "CartierMap":
        """self . other, a map in degree e1 + e2 with h = h1^(p^e2) h2."""
        if other.context != self.context:
            raise ValueError("context mismatch")
        q2 = self.context.p**other.e
        num = self.h_num.frobenius(other.e) * other.h_num
        den = tuple(q2 * a + b for a, b in zip(self.h_den, other.h_den))
        return CartierMap(self.context, self.e + other.e, num, den)

    def power(self, m) -> "CartierMap":
        """psi^m = Phi^(me) . h^((p^(me)-1)/(p^e-1))."""
        if m < 1:
            raise ValueError("m must be positive")
        k = (self.q**m - 1) // (self.q - 1)
        return CartierMap(
            self.context, m * self.e, self.h_num**k, tuple(k * a for a in self.h_den)
        )

    def right_multiply(self, f) -> "CartierMap":
        """psi . f, satisfying (psi . f)(g) = psi(f g)."""
        if f.is_zero():
            raise ValueError("right multiplication by zero")
        return CartierMap(self.context, self.e, self.h_num * f, self.h_den)

    def left_multiply(self, f) -> "CartierMap":
        """f . psi, satisfying (f . psi)(g) = f psi(g) = psi(f^(p^e) g)."""
        if f.is_zero():
            raise ValueError("left multiplication by zero")
        return CartierMap(self.context, self.e, self.h_num * f.frobenius(self.e), self.h_den)

    # -- F-purity --------------------------------------------------------

    def is_surjective_at_origin(self) -> bool:
        """Fedder-style test: h not in (x_1^q, ..., x_n^q)."""
        if not self.is_polynomial():
            raise ValueError("surjectivity test requires a polynomial h")
        q = self.q
        return any(all(a < q for a in u) for u in self.h_num.terms)


def parse_cartier(text, ctx) -> CartierMap:
    """Parse `phi^<e> * (<h-poly>) [/ <monomial>]`."""
    s = text.strip()
    if not s.startswith("phi"):
        raise PolyParseError("Cartier map must start with 'phi'")
    s = s[3:].lstrip()
    e = 1
    if s.startswith("^"):
        s = s[1:].lstrip()
        i = 0
        while i < len(s) and s[i].isdigit():
            i += 1
        if i == 0:
            raise PolyParseError("expected an exponent after 'phi^'")
        e = int(s[:i])
        s = s[i:].lstrip()
    num_text, den_text = s, None
    if "/" in s:
        num_text, den_text = s.rsplit("/", 1)
    num_text = num_text.strip()
    if num_text.startswith("*"):
        num_text = num_text[1:].strip()
    h = parse_poly(num_text, ctx) if num_text else ctx.one()
    den = None
    if den_text is not None:
        mono = parse_poly(den_text, ctx)
        if not mono.is_monomial() or mono.leading_coeff() != 1:
            raise PolyParseError("denominator must be a coefficient-1 monomial")
        den = mono.leading_exponent()
    return CartierMap(ctx, e, h, den)
