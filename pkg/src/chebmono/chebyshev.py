"""Chebyshev-basis polynomials with exact rational coefficients.

A :class:`ChebSeries` with coefficients ``c[0..m]`` stands for

    c[0]/2 + c[1] T_1(x) + ... + c[m] T_m(x)

i.e. the constant term always enters halved.  Every evaluation and
conversion in this module applies that convention; a plain ``T_0`` is
therefore stored as ``c[0] = 2``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exact_combinatorics import DomainError, binomial

#: Largest degree accepted by :func:`to_power_basis`.
POWER_BASIS_LIMIT = 512


class OutOfDomainWarning(UserWarning):
    """Evaluation point lies outside [-1, 1]; the value is an extrapolation."""


@dataclass(frozen=True)
class ChebSeries:
    """Immutable Chebyshev series with exact coefficients (j=0 term halved).

    Trailing zero coefficients are stripped on construction, so ``degree``
    is the true degree.  The zero series is ``ChebSeries((0,))``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[int | Fraction]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def basis(cls, j: int, scale: int | Fraction = 1) -> ChebSeries:
        """The series ``scale * T_j``."""
        if j < 0:
            raise DomainError(f"negative Chebyshev index {j}")
        cs = [Fraction(0)] * (j + 1)
        cs[j] = Fraction(scale) * (2 if j == 0 else 1)
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    def __add__(self, other: ChebSeries) -> ChebSeries:
        m = max(len(self), len(other))
        a = self.coeffs + (Fraction(0),) * (m - len(self))
        b = other.coeffs + (Fraction(0),) * (m - len(other))
        return ChebSeries(x + y for x, y in zip(a, b))

    def __neg__(self) -> ChebSeries:
        return ChebSeries(-c for c in self.coeffs)

    def __sub__(self, other: ChebSeries) -> ChebSeries:
        return self + (-other)

    def primed_sum(self) -> Fraction:
        """Value at x = 1, where every T_j equals one."""
        return self.coeffs[0] / 2 + sum(self.coeffs[1:], Fraction(0))

    def float_coeffs(self) -> np.ndarray:
        """Coefficients as correctly rounded doubles (tiny ones underflow to 0)."""
        return np.array([float(c) for c in self.coeffs])

    def log2_coeffs(self) -> tuple[np.ndarray, np.ndarray]:
        """``(sign, log2|c|)`` per coefficient, safe where doubles underflow.

        Zero coefficients get sign 0 and ``-inf``.
        """
        signs = np.zeros(len(self), dtype=int)
        logs = np.full(len(self), -np.inf)
        for j, c in enumerate(self.coeffs):
            if c:
                signs[j] = 1 if c > 0 else -1
                num, den = abs(c.numerator), c.denominator
                # shift both to ~64 significant bits before taking logs
                sn = max(num.bit_length() - 64, 0)
                sd = max(den.bit_length() - 64, 0)
                logs[j] = math.log2(num >> sn) + sn - math.log2(den >> sd) - sd
        return signs, logs

    def __call__(self, x):
        return clenshaw_eval(self, x)


def monomial_expansion(n: int) -> ChebSeries:
    """Exact Chebyshev series of x**n.

    ``c_j = 2**(1-n) * C(n, (n-j)/2)`` when ``n - j`` is even, else 0.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    den = 1 << (n - 1)
    cs = [Fraction(0)] * (n + 1)
    c = 1  # C(n, i) with j = n - 2i
    for i in range(n // 2 + 1):
        cs[n - 2 * i] = Fraction(c, den)
        c = c * (n - i) // (i + 1)
    return ChebSeries(cs)


def truncate(series: ChebSeries, k: int) -> ChebSeries:
    """Keep terms j = 0..k of ``series``."""
    if k < 0 or k > series.degree:
        raise DomainError(f"cannot truncate degree-{series.degree} series at k={k}")
    return ChebSeries(series.coeffs[: k + 1])


def _warn_if_outside(x) -> None:
    if np.any(np.abs(x) > 1):
        warnings.warn(
            "evaluation outside [-1, 1]; the truncation error bound does not apply",
            OutOfDomainWarning,
            stacklevel=3,
        )


def clenshaw_eval(series: ChebSeries, x, coeffs: Sequence[float] | None = None):
    """Evaluate ``series`` at float ``x`` (scalar or array) by Clenshaw's recurrence.

    Points with ``|x| > 1`` are still evaluated but raise an
    :class:`OutOfDomainWarning`.  ``coeffs`` lets callers pass precomputed
    float coefficients.
    """
    c = series.float_coeffs() if coeffs is None else np.asarray(coeffs, dtype=float)
    xa = np.asarray(x, dtype=float)
    _warn_if_outside(xa)
    b1 = np.zeros_like(xa)
    b2 = np.zeros_like(xa)
    two_x = 2.0 * xa
    for cj in c[:0:-1]:
        b1, b2 = cj + two_x * b1 - b2, b1
    out = 0.5 * c[0] + xa * b1 - b2
    return float(out) if out.ndim == 0 else out


def eval_exact(series: ChebSeries, x: int | Fraction) -> Fraction:
    """Clenshaw's recurrence in exact rational arithmetic; ``x`` must lie in [-1, 1]."""
    x = Fraction(x)
    if abs(x) > 1:
        raise DomainError(f"x={x} outside [-1, 1]")
    b1 = b2 = Fraction(0)
    two_x = 2 * x
    for cj in series.coeffs[:0:-1]:
        b1, b2 = cj + two_x * b1 - b2, b1
    return series.coeffs[0] / 2 + x * b1 - b2


def cheb_nodes(m: int) -> np.ndarray:
    """Roots of T_m in decreasing order.

    Written as ``sin(pi*(m-2j-1)/(2m))``, equal to ``cos((2j+1)pi/(2m))``
    but exactly antisymmetric and with an exact zero at the middle.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return np.sin(np.pi * np.arange(m - 1, -m, -2) / (2 * m))


def to_power_basis(series: ChebSeries) -> list[Fraction]:
    """Monomial coefficients ``a[0..m]`` with sum a_i x**i equal to ``series``."""
    m = series.degree
    if m > POWER_BASIS_LIMIT:
        raise DomainError(f"degree {m} exceeds the power-basis limit {POWER_BASIS_LIMIT}")
    out = [Fraction(0)] * (m + 1)
    out[0] = series.coeffs[0] / 2
    t_prev, t_cur = [1], [0, 1]  # T_0, T_1 as integer power coefficients
    for j in range(1, m + 1):
        cj = series.coeffs[j]
        if cj:
            for i, a in enumerate(t_cur):
                if a:
                    out[i] += cj * a
        t_next = [0] + [2 * a for a in t_cur]
        for i, a in enumerate(t_prev):
            t_next[i] -= a
        t_prev, t_cur = t_cur, t_next
    return out
