"""Extended rational arithmetic.

Finite values are ``fractions.Fraction`` (always reduced, positive
denominator); the two infinities are the singletons ``POS_INF`` and
``NEG_INF``.  Arithmetic follows the usual extension to the two-point
compactification, and the four expressions

    (+inf) + (-inf),  (-inf) + (+inf),
    (+inf) - (+inf),  (-inf) - (-inf),
    0 * (+-inf),      (+-inf) * 0

raise :class:`UndefinedExtendedOperation` rather than produce a value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UndefinedExtendedOperation

__all__ = ["ExtRational", "POS_INF", "NEG_INF", "ext"]


class ExtRational:
    """A rational number or one of the two infinities.

    Instances are immutable; finite values are normalized through
    ``Fraction``.  Comparison and arithmetic accept plain ``int`` and
    ``Fraction`` operands.
    """

    __slots__ = ("sign", "value")

    def __init__(self, value=0, _sign=0):
        if _sign:
            self.sign = _sign  # +1 or -1, infinite
            self.value = None
        else:
            self.sign = 0
            self.value = Fraction(value)

    # -- predicates ------------------------------------------------------

    @property
    def is_finite(self):
        return self.sign == 0

    @property
    def is_pos_inf(self):
        return self.sign > 0

    @property
    def is_neg_inf(self):
        return self.sign < 0

    def finite(self) -> Fraction:
        """The underlying Fraction; raises on infinities."""
        if self.sign:
            raise UndefinedExtendedOperation(f"{self} is not finite")
        return self.value

    # -- helpers ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExtRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ExtRational(other)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.sign and other.sign:
            if self.sign != other.sign:
                raise UndefinedExtendedOperation("(+inf) + (-inf) is undefined")
            return self
        if self.sign:
            return self
        if other.sign:
            return other
        return ExtRational(self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        if self.sign:
            return NEG_INF if self.sign > 0 else POS_INF
        return ExtRational(-self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.sign and other.sign and self.sign == other.sign:
            raise UndefinedExtendedOperation("(+-inf) - (+-inf) is undefined")
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.sign or other.sign:
            if (self.sign == 0 and self.value == 0) or (
                other.sign == 0 and other.value == 0
            ):
                raise UndefinedExtendedOperation("0 * (+-inf) is undefined")
            s = (self.sign or (1 if self.value > 0 else -1)) * (
                other.sign or (1 if other.value > 0 else -1)
            )
            return POS_INF if s > 0 else NEG_INF
        return ExtRational(self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.sign or other.value == 0:
            raise UndefinedExtendedOperation("division by zero or an infinity")
        if self.sign:
            return self if other.value > 0 else -self
        return ExtRational(self.value / other.value)

    # -- comparison ------------------------------------------------------

    def _cmp(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.sign or other.sign:
            a = self.sign * 2 if self.sign else 0
            b = other.sign * 2 if other.sign else 0
            return (a > b) - (a < b)
        return (self.value > other.value) - (self.value < other.value)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.sign:
            return hash(("ExtRational", self.sign))
        return hash(self.value)

    def __repr__(self):
        return f"ExtRational({self})"

    def __str__(self):
        if self.sign > 0:
            return "+inf"
        if self.sign < 0:
            return "-inf"
        return str(self.value)


POS_INF = ExtRational(_sign=1)
NEG_INF = ExtRational(_sign=-1)


def ext(value) -> ExtRational:
    """Coerce an int/Fraction/ExtRational to ExtRational."""
    if isinstance(value, ExtRational):
        return value
    return ExtRational(value)
