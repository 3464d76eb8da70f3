"""Exact big-rational combinatorics.

Everything in this module is computed in exact arithmetic: Stirling numbers
of both kinds are Python ints, all other quantities are `fractions.Fraction`
values (always canonical, denominator > 0).  The Bernoulli convention is
B1 = -1/2.

Rational arguments only.  Callers with non-rational arguments should fetch
the exact coefficient tuples (`bernoulli_polynomial_coeffs`,
`apostol_bernoulli_coeffs`) and do the final Horner step in floating point.

All caches grow monotonically under a lock, so concurrent callers always
observe values identical to a fresh recomputation.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "StirlingTable",
    "stirling1",
    "stirling2",
    "exp_polynomial_coeffs",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_polynomial_coeffs",
    "apostol_bernoulli",
    "apostol_bernoulli_coeffs",
    "harmonic_number",
]

RationalLike = Fraction | int


class StirlingTable:
    """Triangular table of Stirling numbers, grown on demand by recurrence.

    kind="first" holds the unsigned first-kind numbers indexed (k, n):
    the recurrence is value(k+1, n) = k*value(k, n) + value(k, n-1).
    kind="second" holds second-kind numbers indexed (n, k):
    value(n+1, k) = k*value(n, k) + value(n, k-1).
    Entries above the diagonal are 0 and are not stored.
    """

    def __init__(self, kind: str):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind: {kind!r}")
        self.kind = kind
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def value(self, row: int, col: int) -> int:
        if row < 0 or col < 0:
            raise ValueError("Stirling indices must be non-negative")
        if col > row:
            return 0
        if row >= len(self._rows):
            self._grow(row)
        return self._rows[row][col]

    def _grow(self, row_max: int) -> None:
        with self._lock:
            while len(self._rows) <= row_max:
                r = len(self._rows) - 1  # index of the last complete row
                prev = self._rows[-1]
                row = [0] * (r + 2)
                for c in range(r + 2):
                    above = prev[c] if c <= r else 0
                    left = prev[c - 1] if 1 <= c <= r + 1 else 0
                    if self.kind == "first":
                        row[c] = r * above + left
                    else:
                        row[c] = c * above + left
                self._rows.append(row)

    def row(self, r: int) -> tuple[int, ...]:
        self.value(r, 0)
        return tuple(self._rows[r])


_STIRLING1 = StirlingTable("first")
_STIRLING2 = StirlingTable("second")


def stirling1(k: int, n: int) -> int:
    """Unsigned Stirling number of the first kind for (k, n).

    Counts permutations of k elements with n cycles; equivalently the
    coefficient magnitude in the inverse exponential-polynomial basis
    change.  Zero when n > k, or when k > 0 and n = 0.
    """
    return _STIRLING1.value(k, n)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind for (n, k): partitions of an
    n-set into k blocks.  Zero when k > n."""
    return _STIRLING2.value(n, k)


def exp_polynomial_coeffs(n: int) -> tuple[int, ...]:
    """Coefficient list (ascending powers) of the n-th exponential (Bell)
    polynomial, whose coefficients are the second-kind Stirling numbers."""
    return _STIRLING2.row(n)


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n (B1 = -1/2), exact.

    Computed by the defining recurrence sum_{j<=n} C(n+1, j) B_j = 0 and
    memoized; no floating-point shortcut is used since these feed a
    delicately cancelling asymptotic series.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= len(_bernoulli_cache):
        with _bernoulli_lock:
            for m in range(len(_bernoulli_cache), n + 1):
                if m > 2 and m % 2 == 1:
                    _bernoulli_cache.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(m):
                    acc += comb(m + 1, j) * _bernoulli_cache[j]
                _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def bernoulli_polynomial_coeffs(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients (ascending powers) of the Bernoulli polynomial
    B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(comb(n, m) * bernoulli_number(n - m) for m in range(n + 1))


def bernoulli_polynomial(n: int, x: RationalLike) -> Fraction:
    """B_n(x) at a rational point, exact."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_polynomial_coeffs(n)):
        acc = acc * x + c
    return acc


# Apostol-Bernoulli values beta_n(a, lam) are defined by the generating
# function z*e^(a*z) / (lam*e^z - 1) = sum_n beta_n(a, lam) z^n / n!.
# Multiplying through by (lam*e^z - 1) and matching coefficients of z^n/n!
# gives, for lam != 1,
#
#   (lam - 1)*beta_n + lam * sum_{j<n} C(n, j)*beta_j = n * a^(n-1)
#
# (right side 0 for n = 0).  For fixed lam each beta_n is a polynomial of
# degree <= n-1 in a, so the recurrence is run once on coefficient vectors
# per lam and evaluated afterwards.  Validated against the closed forms
# beta_0 = 0, beta_1 = 1/(lam-1), beta_2 = (2a(lam-1) - 2lam)/(lam-1)^2
# in the test suite.
_apostol_cache: dict[Fraction, list[tuple[Fraction, ...]]] = {}
_apostol_lock = threading.Lock()


def apostol_bernoulli_coeffs(n: int, lam: RationalLike) -> tuple[Fraction, ...]:
    """Exact coefficients (ascending powers of the first argument) of the
    n-th Apostol-Bernoulli value as a polynomial in a, for fixed rational
    lam != 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lam = Fraction(lam)
    if lam == 1:
        raise ValueError(
            "apostol-bernoulli undefined at lambda=1; use bernoulli_polynomial"
        )
    with _apostol_lock:
        rows = _apostol_cache.setdefault(lam, [(Fraction(0),)])
        d = lam - 1
        while len(rows) <= n:
            m = len(rows)
            # rhs = m * a^(m-1)  minus the lam-weighted binomial convolution
            acc = [Fraction(0)] * m
            acc[m - 1] = Fraction(m)
            for j in range(m):
                cj = lam * comb(m, j)
                for p, coeff in enumerate(rows[j]):
                    acc[p] -= cj * coeff
            rows.append(tuple(c / d for c in acc))
        return rows[n]


def apostol_bernoulli(n: int, a: RationalLike, lam: RationalLike) -> Fraction:
    """Apostol-Bernoulli value beta_n(a, lam) at rational (a, lam), exact.

    Raises for lam = 1, where the family degenerates to the Bernoulli
    polynomials and the recurrence divides by lam - 1.
    """
    a = Fraction(a)
    acc = Fraction(0)
    for c in reversed(apostol_bernoulli_coeffs(n, lam)):
        acc = acc * a + c
    return acc


_harmonic_cache: list[Fraction] = [Fraction(0)]
_harmonic_lock = threading.Lock()


def harmonic_number(k: int) -> Fraction:
    """Harmonic number H_k = 1 + 1/2 + ... + 1/k, exact; H_0 = 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k >= len(_harmonic_cache):
        with _harmonic_lock:
            for m in range(len(_harmonic_cache), k + 1):
                _harmonic_cache.append(_harmonic_cache[m - 1] + Fraction(1, m))
    return _harmonic_cache[k]
