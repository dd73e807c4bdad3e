"""Exact rationals without eager normalization, plus directed decimal rendering.

The interval bounds in this package produce fractions whose numerators and
denominators run to millions of digits. ``gmpy2.mpq`` canonicalizes on every
construction, and a single GCD at that scale costs around a second, which is
slower than the entire bound computation. ``Ratio`` therefore keeps the exact
numerator/denominator pair as-is; comparisons use cross multiplication and
rendering uses integer division, neither of which needs lowest terms.

Use ``reduce()`` to obtain a canonical ``mpq`` when the operands are small.
"""

from __future__ import annotations

import numbers

import gmpy2
from gmpy2 import mpq, mpz


class Ratio:
    """An exact fraction stored as an unreduced numerator/denominator pair.

    The denominator is always positive. Arithmetic multiplies through without
    computing GCDs, so results stay exact but may grow; that is the intended
    trade-off for the multi-million-digit endpoints of interval bounds.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = mpz(num)
        den = mpz(den)
        if den == 0:
            raise ZeroDivisionError("Ratio with zero denominator")
        if den < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Ratio is immutable")

    # .numerator/.denominator make Ratio interchangeable with int/Fraction/mpq
    # wherever only the exact value matters (e.g. the decimal renderers below)
    @property
    def numerator(self):
        return self.num

    @property
    def denominator(self):
        return self.den

    @classmethod
    def from_rational(cls, value) -> "Ratio":
        """Build from anything with numerator/denominator (int, Fraction, mpq)."""
        if isinstance(value, Ratio):
            return value
        return cls(value.numerator, value.denominator)

    def reduce(self) -> mpq:
        """Canonical mpq in lowest terms. May be slow for huge operands."""
        return mpq(self.num, self.den)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Ratio):
            return other
        if isinstance(other, numbers.Rational) or isinstance(other, type(mpq(0))):
            return Ratio(other.numerator, other.denominator)
        if isinstance(other, type(mpz(0))):
            return Ratio(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ratio(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ratio(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ratio(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num == 0:
            raise ZeroDivisionError("division by zero Ratio")
        return Ratio(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Ratio(-self.num, self.den)

    def __abs__(self):
        return Ratio(abs(self.num), self.den)

    # -- comparisons (cross multiplication; denominators are positive) ------

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        left = self.num * o.den
        right = o.num * self.den
        return (left > right) - (left < right)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        # must agree with the canonical value's hash; only safe to call when
        # the operands are small enough for a reduction
        return hash(self.reduce())

    def __float__(self) -> float:
        # mpfr conversion avoids both GCDs and overflow for huge operands
        return float(gmpy2.mpfr(self.num) / gmpy2.mpfr(self.den))

    def __repr__(self) -> str:
        if self.num.num_digits() <= 30 and self.den.num_digits() <= 30:
            return f"Ratio({self.num}, {self.den})"
        return (
            f"Ratio(~{float(self)!r}, "
            f"<{self.num.num_digits()}-digit>/<{self.den.num_digits()}-digit>)"
        )


# -- directed decimal rendering ---------------------------------------------
#
# Interval endpoints must never be rounded inward: the printed interval has to
# contain the exact one. These render any exact rational (anything exposing
# numerator/denominator) to a fixed number of decimal places with the stated
# rounding direction.


def _scaled(value, digits: int):
    if digits < 1:
        raise ValueError("digits must be >= 1")
    num = mpz(value.numerator)
    den = mpz(value.denominator)
    if den < 0:
        num, den = -num, -den
    return divmod(num * mpz(10) ** digits, den)


def _format_scaled(q, digits: int) -> str:
    sign = "-" if q < 0 else ""
    s = str(abs(q)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_floor(value, digits: int) -> str:
    """Decimal string rounded toward minus infinity (lower endpoints)."""
    q, _ = _scaled(value, digits)
    return _format_scaled(q, digits)


def decimal_ceil(value, digits: int) -> str:
    """Decimal string rounded toward plus infinity (upper endpoints)."""
    q, r = _scaled(value, digits)
    if r:
        q += 1
    return _format_scaled(q, digits)


def decimal_nearest(value, digits: int) -> str:
    """Decimal string rounded to nearest, ties to even (single values)."""
    q, r = _scaled(value, digits)
    den = mpz(value.denominator)
    if den < 0:
        den = -den
    twice = 2 * r
    if twice > den or (twice == den and q % 2):
        q += 1
    return _format_scaled(q, digits)
