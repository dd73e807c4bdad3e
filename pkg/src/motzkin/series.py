"""Exact truncated formal power series and polynomials over rationals.

Coefficients are arbitrary-precision rationals (``gmpy2.mpq``), so every
operation in this module is exact: there is no floating point and no rounding
anywhere. Truncation order is always explicit; ring operations on inputs of
order N produce outputs of order N.
"""

from __future__ import annotations

from typing import Iterable, Union

from gmpy2 import mpq

#: The exact coefficient type used throughout the package. Values are always
#: stored in lowest terms with a positive denominator (gmpy2 guarantees this).
Rational = mpq

RationalLike = Union[int, Rational]


def as_rational(value) -> Rational:
    """Coerce ints, Fractions and mpq values to the package Rational type."""
    return mpq(value)


class TruncatedSeries:
    """A formal power series truncated at a fixed order N.

    Stores the coefficients of x^0 .. x^N. Instances are immutable; all
    arithmetic returns new series of the same order and raises ``ValueError``
    when orders are mixed (truncation must never happen silently).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = tuple(mpq(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        if order is not None and order != len(cs) - 1:
            raise ValueError(f"got {len(cs)} coefficients for order {order}")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([mpq(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([mpq(1)] + [mpq(0)] * order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        if order < 1:
            raise ValueError("order must be >= 1 to represent x")
        return cls([mpq(0), mpq(1)] + [mpq(0)] * (order - 1))

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> Rational:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ ({self.order} vs {other.order}); "
                "truncate explicitly before combining"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(_convolve(self._coeffs, other._coeffs))
        if isinstance(other, (int, type(mpq(0)))):
            q = mpq(other)
            return TruncatedSeries(q * c for c in self._coeffs)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Return the same series truncated at a lower (or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by x^k, keeping the truncation order (top terms fall off)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        n = self.order
        return TruncatedSeries((mpq(0),) * min(k, n + 1) + self._coeffs[: n + 1 - k])

    def inv(self) -> "TruncatedSeries":
        """Multiplicative inverse: returns t with self * t = 1 up to the order.

        Raises:
            ZeroDivisionError: if the constant term is zero.
        """
        s = self._coeffs
        if s[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        n = self.order
        out = [mpq(0)] * (n + 1)
        out[0] = 1 / s[0]
        for m in range(1, n + 1):
            acc = mpq(0)
            for i in range(1, m + 1):
                if s[i]:
                    acc += s[i] * out[m - i]
            out[m] = -acc / s[0]
        return TruncatedSeries(out)

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1: returns t with t * t = self.

        Coefficients are matched term by term in t^2 = self, which keeps
        everything rational. Only the branch with t(0) = 1 is supported.

        Raises:
            ValueError: if the constant term is not 1.
        """
        s = self._coeffs
        if s[0] != 1:
            raise ValueError("series square root requires constant term 1")
        n = self.order
        out = [mpq(0)] * (n + 1)
        out[0] = mpq(1)
        for m in range(1, n + 1):
            acc = mpq(0)
            for i in range(1, m):
                if out[i]:
                    acc += out[i] * out[m - i]
            out[m] = (s[m] - acc) / 2
        return TruncatedSeries(out)


def _convolve(a: tuple, b: tuple) -> list:
    # schoolbook Cauchy product truncated at the common order; exact rational
    # coefficients dominate cost, so no fancy multiplication is warranted
    n = len(a) - 1
    out = [mpq(0)] * (n + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


class Polynomial:
    """An exact polynomial with rational coefficients, stored without trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [mpq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, n: int) -> Rational:
        """Coefficient of x^n (zero beyond the degree)."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        return self._coeffs[n] if n < len(self._coeffs) else mpq(0)

    def lowest_exponent(self) -> int:
        """Smallest exponent with a nonzero coefficient; -1 for the zero polynomial."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = ", ".join(str(c) for c in self._coeffs)
        return f"Polynomial([{terms}])"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial.zero()
            a, b = self._coeffs, other._coeffs
            out = [mpq(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            out[i + j] += ai * bj
            return Polynomial(out)
        if isinstance(other, (int, type(mpq(0)))):
            q = mpq(other)
            return Polynomial(q * c for c in self._coeffs)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift_up(self, k: int = 1) -> "Polynomial":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return Polynomial((mpq(0),) * k + self._coeffs)

    def __call__(self, value) -> Rational:
        """Evaluate exactly at a rational point (Horner)."""
        q = mpq(value)
        acc = mpq(0)
        for c in reversed(self._coeffs):
            acc = acc * q + c
        return acc

    def to_series(self, order: int) -> TruncatedSeries:
        """View the polynomial as a series truncated at the given order."""
        cs = list(self._coeffs[: order + 1])
        cs += [mpq(0)] * (order + 1 - len(cs))
        return TruncatedSeries(cs)


def eval_poly(p: Polynomial, value) -> Rational:
    """Exact polynomial evaluation; function form of ``Polynomial.__call__``."""
    return p(value)
