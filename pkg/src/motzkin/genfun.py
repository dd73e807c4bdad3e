"""Generating functions for Motzkin-tree vertex statistics, as exact series.

Everything here is driven by two structural facts about Motzkin trees:

* the tree class satisfies M(x) = x + x*M(x) + x*M(x)^2 (root is a leaf, has
  one child, or has two children), equivalently
  M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2x);
* counting marked vertices over all trees divides the root series by
  sqrt(1 - 2x - 3x^2): a statistic S with root-series F(x) has vertex series
  F(x) / sqrt(1 - 2x - 3x^2).

The radicand 1 - 2x - 3x^2 is exposed as ``DELTA``. All series have exact
integer coefficients (stored as rationals); 1/(2x) factors are handled by
verifying that the low coefficients vanish and shifting, never by Laurent
series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq, mpz

from .series import Polynomial, TruncatedSeries

#: The radicand 1 - 2x - 3x^2; its root at x = 1/3 drives all asymptotics.
DELTA = Polynomial([1, -2, -3])


@lru_cache(maxsize=None)
def sqrt_delta_series(order: int) -> TruncatedSeries:
    """sqrt(1 - 2x - 3x^2) as an exact series."""
    return DELTA.to_series(order).sqrt()


@lru_cache(maxsize=None)
def inv_sqrt_delta_series(order: int) -> TruncatedSeries:
    """1 / sqrt(1 - 2x - 3x^2); its coefficients are the central trinomial numbers."""
    return sqrt_delta_series(order).inv()


@lru_cache(maxsize=None)
def motzkin_series(order: int) -> TruncatedSeries:
    """The Motzkin tree-count series, solved coefficient by coefficient.

    Peels the functional equation M = x + x*M + x*M^2: the coefficient of x^n
    on the right depends only on coefficients below n, so a single pass
    suffices and the constant term is forced to zero.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    m = [mpz(0)] * (order + 1)
    for n in range(1, order + 1):
        acc = mpz(1) if n == 1 else mpz(0)
        acc += m[n - 1]
        for left in range(1, n - 1):
            acc += m[left] * m[n - 1 - left]
        m[n] = acc
    return TruncatedSeries(m)


@lru_cache(maxsize=None)
def motzkin_closed_form(order: int) -> TruncatedSeries:
    """The Motzkin series computed from (1 - x - sqrt(DELTA)) / (2x).

    Works one order higher, checks that the numerator's x^0 and x^1
    coefficients vanish (they must, or the algebra is broken), then shifts
    down by one and halves.

    Raises:
        ArithmeticError: if the low numerator coefficients fail to vanish.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    root = sqrt_delta_series(order + 1)
    numer = [-c for c in root.coeffs]
    numer[0] += 1
    numer[1] -= 1
    if numer[0] != 0 or numer[1] != 0:
        raise ArithmeticError("1 - x - sqrt(1-2x-3x^2) must start at x^2")
    return TruncatedSeries([mpq(0)] + [c / 2 for c in numer[2:]])


@lru_cache(maxsize=None)
def leaves_series(order: int) -> TruncatedSeries:
    """Series counting leaves over all trees: x / sqrt(1 - 2x - 3x^2)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return inv_sqrt_delta_series(order).shift_up(1)


@lru_cache(maxsize=None)
def protected_root_series(k: int, order: int) -> TruncatedSeries:
    """Series counting trees whose root is k-protected.

    A root is k-protected when every child is (k-1)-protected, which gives
    the recurrence F_k = x*F_{k-1} + x*F_{k-1}^2 with F_0 = M (every root is
    0-protected, leaves included).
    """
    if k < 0:
        raise ValueError("protection level must be >= 0")
    r = motzkin_series(order)
    for _ in range(k):
        r = (r + r * r).shift_up(1)
    return r


def protected_series(k: int, order: int) -> TruncatedSeries:
    """Series counting k-protected vertices over all trees."""
    return protected_root_series(k, order) * inv_sqrt_delta_series(order)


# -- the pair decomposition of the protected root series ---------------------
#
# 2x * F_k(x) = U_k(x) + V_k(x) * sqrt(1 - 2x - 3x^2) with U_k, V_k
# polynomials. Substituting into F_{k+1} = x*F_k + x*F_k^2 gives
#   U_{k+1} = x*U_k + (U_k^2 + V_k^2 * DELTA) / 2
#   V_{k+1} = x*V_k + U_k*V_k
# and the division by 2 must be exact at every step (integer coefficients
# throughout); a parity failure would mean the decomposition is wrong.


@dataclass(frozen=True)
class SqrtPair:
    """Polynomial pair (u, v) with 2x*F_k = u + v*sqrt(1 - 2x - 3x^2)."""

    u: Polynomial
    v: Polynomial
    level: int


_DELTA_INTS = (mpz(1), mpz(-2), mpz(-3))


def _ipoly_mul(a: list, b: list) -> list:
    out = [mpz(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _ipoly_sqr(a: list) -> list:
    n = len(a)
    out = [mpz(0)] * (2 * n - 1)
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        out[2 * i] += ai * ai
        twice = 2 * ai
        for j in range(i + 1, n):
            if a[j]:
                out[i + j] += twice * a[j]
    return out


def _ipoly_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _ipoly_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


# levels computed so far: _PAIR_LEVELS[k] = (U_k, V_k) as mpz coefficient lists
_PAIR_LEVELS: list[tuple[list, list]] = [([mpz(1), mpz(-1)], [mpz(-1)])]


def sqrt_pair(k: int) -> SqrtPair:
    """The pair (U_k, V_k); level 0 is (1 - x, -1), read off the closed form.

    Raises:
        ArithmeticError: if a division by 2 in the recurrence is inexact
            (invariant violation; cannot happen if the algebra is right).
    """
    if k < 0:
        raise ValueError("level must be >= 0")
    while len(_PAIR_LEVELS) <= k:
        u, v = _PAIR_LEVELS[-1]
        w = _ipoly_add(_ipoly_sqr(u), _ipoly_mul(_ipoly_sqr(v), list(_DELTA_INTS)))
        for c in w:
            if c & 1:
                raise ArithmeticError(
                    f"inexact division by 2 in pair recurrence at level {len(_PAIR_LEVELS)}"
                )
        half = [c >> 1 for c in w]
        new_u = _ipoly_trim(_ipoly_add([mpz(0)] + u, half))
        new_v = _ipoly_trim(_ipoly_add([mpz(0)] + v, _ipoly_mul(u, v)))
        _PAIR_LEVELS.append((new_u, new_v))
    u, v = _PAIR_LEVELS[k]
    return SqrtPair(u=Polynomial(u), v=Polynomial(v), level=k)


# -- balanced vertices --------------------------------------------------------
#
# Trees whose root is balanced of rank k are counted by a *polynomial* (all
# root-to-leaf paths have length exactly k, so at most 2^(k+1) - 1 vertices),
# with the same recurrence shape as the protected roots:
#   B_0 = x,   B_k = x*B_{k-1} + x*B_{k-1}^2.

_BALANCED_POLYS: list[list] = [[mpz(0), mpz(1)]]


def balanced_poly(k: int) -> Polynomial:
    """Polynomial counting trees whose root is balanced of rank k.

    Degree is at most 2^(k+1) - 1 (full binary tree) and the lowest term is
    x^(k+1) (the path), so cost doubles per level; fine for k up to ~14.
    """
    if k < 0:
        raise ValueError("rank must be >= 0")
    while len(_BALANCED_POLYS) <= k:
        b = _BALANCED_POLYS[-1]
        nxt = [mpz(0)] + _ipoly_add(b, _ipoly_sqr(b))
        _BALANCED_POLYS.append(_ipoly_trim(nxt))
    return Polynomial(_BALANCED_POLYS[k])


def _truncated_balanced_polys(order: int):
    # yields (k, B_k truncated at `order`) while the lowest term x^(k+1) still
    # fits; truncation commutes with the recurrence because coefficients of
    # x^n in B_k depend only on coefficients below n in B_{k-1}
    b = [mpz(0), mpz(1)] + [mpz(0)] * (order - 1)
    k = 0
    while k + 1 <= order:
        yield k, b
        sq = [mpz(0)] * (order + 1)
        for i in range(1, order + 1):
            bi = b[i]
            if not bi:
                continue
            ii = 2 * i
            if ii <= order:
                sq[ii] += bi * bi
            twice = 2 * bi
            for j in range(i + 1, order + 1 - i):
                if b[j]:
                    sq[i + j] += twice * b[j]
        nxt = [mpz(0)] * (order + 1)
        for i in range(order):
            nxt[i + 1] = b[i] + sq[i]
        b = nxt
        k += 1


@lru_cache(maxsize=None)
def balanced_series(k: int, order: int) -> TruncatedSeries:
    """Series counting balanced vertices of rank k over all trees."""
    if k < 0:
        raise ValueError("rank must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [mpz(0)] * (order + 1)
    for level, b in _truncated_balanced_polys(order):
        if level == k:
            coeffs = b
            break
    return TruncatedSeries(coeffs) * inv_sqrt_delta_series(order)


@lru_cache(maxsize=None)
def _balanced_root_sum_series(order: int) -> TruncatedSeries:
    # sum over k of B_k, truncated; only levels with k+1 <= order contribute
    total = [mpz(0)] * (order + 1)
    for _, b in _truncated_balanced_polys(order):
        for i, c in enumerate(b):
            total[i] += c
    return TruncatedSeries(total)


@lru_cache(maxsize=None)
def balanced_total_series(order: int) -> TruncatedSeries:
    """Series counting balanced vertices of every rank over all trees."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return _balanced_root_sum_series(order) * inv_sqrt_delta_series(order)


def balanced_root_count(n: int) -> int:
    """Number of n-vertex trees whose root is balanced.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    return int(_balanced_root_sum_series(n)[n])


@lru_cache(maxsize=None)
def eb_series(order: int) -> TruncatedSeries:
    """Series of total rank over balanced vertices: sum over k of k * (rank-k series)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    total = [mpz(0)] * (order + 1)
    for k, b in _truncated_balanced_polys(order):
        if k:
            for i, c in enumerate(b):
                if c:
                    total[i] += k * c
    return TruncatedSeries(total) * inv_sqrt_delta_series(order)
