"""Error of the truncated Chebyshev approximation of x**n and degree selection.

The truncation ``phi_k`` of the Chebyshev series of ``x**n`` has sup-norm
error exactly ``p(n, k) = 2**(1-n) * sum_{j > (n+k)//2} C(n, j)``, attained
at ``x = 1``.  That quantity is within a factor ``4e`` of the best possible
degree-``k`` error and coincides with it for ``k = n - 1``; neither of those
two facts is checked numerically here, since no best-approximation
(Remez) solver is part of the package.

Beside the exact value this module offers:

* the concentration bound ``2 exp(-k**2 / (2n))``,
* two erfc-based estimates (``2 erfc(k/sqrt(n))`` for ``p`` and
  ``erfc(k/sqrt(n)) / 2`` for the best error); both are heuristics and are
  never used as bounds,
* the degree rule ``k >= sqrt(2n ln(2/eps))`` and an exact minimal-degree
  search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np
from scipy.special import gammaln, logsumexp

from .chebyshev import cheb_nodes, clenshaw_eval, monomial_expansion, truncate
from .exact_combinatorics import DomainError, _check_degree, p_exact

#: Above this ``n`` the tail sum is evaluated in log space instead of exactly.
EXACT_PATH_LIMIT = 5000

# Abramowitz & Stegun 7.1.26, |error| <= 1.5e-7
_AS_P = 0.3275911
_AS_A = (0.254829592, -0.284496736, 1.421413741, -1.453152027, 1.061405429)


@dataclass(frozen=True)
class ErrorReport:
    """Exact error of ``phi_k`` for one ``(n, k)`` pair, with bounds and estimates.

    ``exact`` is ``None`` when ``n`` is past the exact-path limit; then
    ``exact_float`` comes from the log-space evaluation and ``exact_path``
    is False.
    """

    n: int
    k: int
    exact: Fraction | None
    exact_float: float
    hoeffding: float
    erfc_p_estimate: float
    erfc_best_estimate: float
    exact_path: bool = True


@dataclass(frozen=True)
class DegreePlan:
    n: int
    epsilon: float
    k: int
    method: Literal["bound", "exact"]
    achieved: Fraction | float

    @property
    def achieved_float(self) -> float:
        return float(self.achieved)


def exact_error(n: int, k: int) -> Fraction:
    """Sup-norm error ``||x**n - phi_k||`` on [-1, 1], as an exact fraction."""
    return p_exact(n, k)


def log_error(n: int, k: int) -> float:
    """Natural log of ``p(n, k)`` via log-gamma binomials; ``-inf`` for k = n."""
    _check_degree(n, k)
    lo = (n + k) // 2 + 1
    if lo > n:
        return -math.inf
    j = np.arange(lo, n + 1, dtype=float)
    log_binom = gammaln(n + 1.0) - gammaln(j + 1.0) - gammaln(n - j + 1.0)
    return float(logsumexp(log_binom)) - (n - 1) * math.log(2.0)


def float_error(n: int, k: int, exact_limit: int = EXACT_PATH_LIMIT) -> float:
    """``p(n, k)`` as a float, exact-then-rounded up to ``exact_limit``."""
    if n <= exact_limit:
        return float(p_exact(n, k))
    return math.exp(log_error(n, k))


def hoeffding_bound(n: int, k: int) -> float:
    """Upper bound ``2 exp(-k**2 / (2n))`` on ``p(n, k)``."""
    if n < 1 or k < 0:
        raise DomainError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    return 2.0 * math.exp(-(k * k) / (2.0 * n))


def erfc(z):
    """Complementary error function, absolute error below 1.5e-7.

    Rational approximation in ``t = 1/(1 + p|z|)``; negative arguments use
    ``erfc(-z) = 2 - erfc(z)``.  Accepts scalars or arrays.
    """
    za = np.asarray(z, dtype=float)
    a = np.abs(za)
    t = 1.0 / (1.0 + _AS_P * a)
    poly = t * (_AS_A[0] + t * (_AS_A[1] + t * (_AS_A[2] + t * (_AS_A[3] + t * _AS_A[4]))))
    tail = poly * np.exp(-a * a)
    out = np.where(za < 0, 2.0 - tail, tail)
    return float(out) if out.ndim == 0 else out


def estimates(n: int, k: int, exact_limit: int = EXACT_PATH_LIMIT) -> ErrorReport:
    _check_degree(n, k)
    if n <= exact_limit:
        exact = p_exact(n, k)
        exact_float = float(exact)
    else:
        exact = None
        exact_float = math.exp(log_error(n, k))
    e = erfc(k / math.sqrt(n))
    return ErrorReport(
        n=n,
        k=k,
        exact=exact,
        exact_float=exact_float,
        hoeffding=hoeffding_bound(n, k),
        erfc_p_estimate=2.0 * e,
        erfc_best_estimate=0.5 * e,
        exact_path=exact is not None,
    )


def _check_tolerance(n: int, epsilon: float) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not 0.0 < epsilon <= 1.0:
        raise DomainError(f"epsilon must lie in (0, 1], got {epsilon}")


def select_degree_bound(
    n: int, epsilon: float, exact_limit: int = EXACT_PATH_LIMIT
) -> DegreePlan:
    """Degree from the concentration bound: ``k = ceil(sqrt(2n ln(2/eps)))``, capped at n."""
    _check_tolerance(n, epsilon)
    k = min(n, math.ceil(math.sqrt(2.0 * n * math.log(2.0 / epsilon))))
    achieved = p_exact(n, k) if n <= exact_limit else math.exp(log_error(n, k))
    return DegreePlan(n=n, epsilon=epsilon, k=k, method="bound", achieved=achieved)


def select_degree_exact(
    n: int, epsilon: float, exact_limit: int = EXACT_PATH_LIMIT
) -> DegreePlan:
    """Smallest ``k`` with ``p(n, k) <= epsilon``, by bisection on the exact error.

    ``p(n, k)`` is nonincreasing in ``k`` and flat on pairs ``{k, k+1}``
    with ``n + k`` even, so the answer is 0 or has ``n + k`` even.
    """
    _check_tolerance(n, epsilon)
    if n > exact_limit:
        raise DomainError(f"n={n} exceeds the exact-path limit {exact_limit}")
    lo, hi = 0, n  # p(n, n) = 0 <= epsilon
    while lo < hi:
        mid = (lo + hi) // 2
        if p_exact(n, mid) <= epsilon:
            hi = mid
        else:
            lo = mid + 1
    return DegreePlan(n=n, epsilon=epsilon, k=lo, method="exact", achieved=p_exact(n, lo))


def select_degree(
    n: int,
    epsilon: float,
    method: Literal["bound", "exact"] = "exact",
    exact_limit: int = EXACT_PATH_LIMIT,
) -> DegreePlan:
    """Dispatch on ``method``; ``"exact"`` falls back to the bound past ``exact_limit``."""
    if method == "bound" or n > exact_limit:
        return select_degree_bound(n, epsilon, exact_limit)
    if method == "exact":
        return select_degree_exact(n, epsilon, exact_limit)
    raise ValueError(f"unknown method {method!r}")


def float_power(x, n: int):
    """``x**n`` for float arrays by repeated squaring."""
    base = np.array(x, dtype=float)
    result = np.ones_like(base)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def sup_grid(m: int) -> np.ndarray:
    """``cheb_nodes(m)`` with the endpoints 1 and -1 added, in decreasing order."""
    return np.concatenate(([1.0], cheb_nodes(m), [-1.0]))


def grid_sup_error(n: int, k: int, m: int) -> float:
    """Largest ``|x**n - phi_k(x)|`` over the Chebyshev nodes of order ``m`` plus ``x = +-1``."""
    if m < 2:
        raise DomainError(f"grid size must be at least 2, got {m}")
    _check_degree(n, k)
    phi = truncate(monomial_expansion(n), k)
    x = sup_grid(m)
    return float(np.max(np.abs(float_power(x, n) - clenshaw_eval(phi, x))))
