"""Exact binomial sums behind the truncation error of a Chebyshev-truncated monomial.

Everything here works on Python integers and :class:`fractions.Fraction`,
so results are exact at any size.  ``Natural`` and ``Rational`` are plain
aliases for those two types.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

Natural = int
Rational = Fraction

#: Largest ``n`` accepted by :func:`coin_toss_oracle` (it enumerates ``2**n`` cases).
COIN_TOSS_LIMIT = 25


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def _check_nonneg(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")


def _check_degree(n: int, k: int) -> None:
    _check_nonneg("n", n)
    _check_nonneg("k", k)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}")


def binomial(n: int, j: int) -> Natural:
    """Return C(n, j), with C(n, j) = 0 for j > n.

    Uses the running product C(n, i) = C(n, i-1) * (n-i+1) / i, which stays
    integral after every division.
    """
    _check_nonneg("n", n)
    _check_nonneg("j", j)
    if j > n:
        return 0
    j = min(j, n - j)
    c = 1
    for i in range(1, j + 1):
        c = c * (n - j + i) // i
    return c


def tail_sum(n: int, lo: int) -> Natural:
    """Sum C(n, j) for j = lo..n."""
    _check_nonneg("n", n)
    _check_nonneg("lo", lo)
    if lo > n:
        return 0
    if lo == 0:
        return 1 << n
    c = binomial(n, lo)
    total = c
    for j in range(lo, n):
        c = c * (n - j) // (j + 1)
        total += c
    return total


def p_exact(n: int, k: int) -> Rational:
    """Exact sup-norm error of the degree-``k`` truncated Chebyshev series of x**n.

    Equal to ``2**(1-n) * tail_sum(n, (n+k)//2 + 1)``.  Raises
    :class:`DomainError` when ``k > n`` rather than clamping.
    """
    _check_degree(n, k)
    return Fraction(tail_sum(n, (n + k) // 2 + 1), 1 << (n - 1))


@lru_cache(maxsize=None)
def _spread_histogram(n: int) -> tuple[tuple[int, int], ...]:
    # |#heads - #tails| over all 2**n toss sequences, one bit per toss
    counts = Counter(abs(2 * seq.bit_count() - n) for seq in range(1 << n))
    return tuple(sorted(counts.items()))


def coin_toss_oracle(n: int, k: int) -> Rational:
    """Probability that ``n`` fair tosses give ``|#heads - #tails| > k``.

    Computed by brute-force enumeration of every toss sequence, so it is an
    independent check on :func:`p_exact`.  Limited to ``n <= 25``.
    """
    _check_nonneg("k", k)
    _check_nonneg("n", n)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > COIN_TOSS_LIMIT:
        raise DomainError(f"n={n} exceeds the enumeration limit {COIN_TOSS_LIMIT}")
    hits = sum(count for spread, count in _spread_histogram(n) if spread > k)
    return Fraction(hits, 1 << n)


def partial_sum_bound(n: int, k: int) -> tuple[Natural, float]:
    """Both sides of sum_{j<=k} C(n, j) <= 2**n * exp(-(n - 2k)**2 / (2n)).

    Valid for ``0 <= k <= n/2``; the left side is exact, the right side a float.
    """
    _check_nonneg("n", n)
    _check_nonneg("k", k)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if 2 * k > n:
        raise DomainError(f"k={k} exceeds n/2 for n={n}")
    lhs = c = 1
    for j in range(k):
        c = c * (n - j) // (j + 1)
        lhs += c
    rhs = math.ldexp(math.exp(-((n - 2 * k) ** 2) / (2 * n)), n)
    return lhs, rhs
