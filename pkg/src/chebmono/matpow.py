"""Approximate ``A**n @ v`` for symmetric ``A`` with k matrix-vector products.

For symmetric ``A`` with spectrum in [-1, 1], applying the degree-``k``
truncation ``phi_k`` of the Chebyshev series of ``x**n`` to ``A`` gives

    ||A**n v - phi_k(A) v||_2 <= p(n, k) ||v||_2

(up to rounding), at a cost of exactly ``k`` products with ``A``.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .approx_error import EXACT_PATH_LIMIT, select_degree
from .chebyshev import monomial_expansion, truncate
from .exact_combinatorics import DomainError

SYMMETRY_TOL = 1e-12


class SpectrumWarning(UserWarning):
    """Row sums suggest the spectrum may leave [-1, 1]."""


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense symmetric matrix.

    Symmetry is checked on construction.  Containment of the spectrum in
    [-1, 1] is the caller's responsibility; a Gershgorin-style warning
    fires when some absolute row sum exceeds one, which is sufficient but
    not necessary for trouble.
    """

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DomainError(f"expected a nonempty square matrix, got shape {a.shape}")
        if not np.all(np.abs(a - a.T) <= SYMMETRY_TOL):
            raise DomainError("matrix is not symmetric within 1e-12")
        if np.max(np.sum(np.abs(a), axis=1)) > 1.0 + SYMMETRY_TOL:
            warnings.warn(
                "an absolute row sum exceeds 1; the spectrum may not lie in [-1, 1]",
                SpectrumWarning,
                stacklevel=3,
            )
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.entries @ v

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> SymMatrix:
        """Read ``dim`` on the first line, then ``dim`` rows of ``dim`` floats."""
        with open(path) as f:
            lines = [ln for ln in f.read().splitlines() if ln.strip()]
        if not lines:
            raise ValueError(f"{path}: empty matrix file")
        dim = int(lines[0].strip())
        rows = [[float(t) for t in ln.split()] for ln in lines[1:]]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"{path}: expected {dim} rows of {dim} values")
        return cls(np.array(rows))


def read_vector(path: str | os.PathLike) -> np.ndarray:
    """Whitespace-separated floats, on one line or one per line."""
    with open(path) as f:
        values = [float(t) for t in f.read().split()]
    if not values:
        raise ValueError(f"{path}: empty vector file")
    return np.array(values)


@dataclass
class MatVecCounter:
    """Wraps a matvec callable and counts how often it is applied."""

    matvec: Callable[[np.ndarray], np.ndarray]
    count: int = field(default=0)

    def __call__(self, v: np.ndarray) -> np.ndarray:
        self.count += 1
        return self.matvec(v)


def _as_matrix(A) -> SymMatrix:
    return A if isinstance(A, SymMatrix) else SymMatrix(A)


def _check_vector(A: SymMatrix, v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (A.dim,):
        raise DomainError(f"vector of shape {v.shape} does not match dimension {A.dim}")
    return v


def monomial_coeffs(n: int, k: int) -> np.ndarray:
    """Float coefficients of ``phi_k`` for ``x**n``, rounded once from exact values."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    c = np.zeros(k + 1)
    f = truncate(monomial_expansion(n), k).float_coeffs()
    c[: len(f)] = f
    return c


def cheb_apply(
    matvec: Callable[[np.ndarray], np.ndarray], v: np.ndarray, coeffs: np.ndarray
) -> tuple[np.ndarray, int]:
    """Sum' c_j T_j(A) v for an operator given only through ``matvec``.

    Forward three-term recurrence on the vectors ``T_j(A) v``; uses
    ``len(coeffs) - 1`` products.  Returns the result and the product count.
    """
    counter = MatVecCounter(matvec)
    v = np.asarray(v, dtype=float)
    result = 0.5 * coeffs[0] * v
    t_prev, t_cur = v, None
    for j in range(1, len(coeffs)):
        if j == 1:
            t_cur = counter(v)
        else:
            t_prev, t_cur = t_cur, 2.0 * counter(t_cur) - t_prev
        if coeffs[j]:
            result = result + coeffs[j] * t_cur
    return result, counter.count


def cheb_matpow(A, v, n: int, k: int) -> tuple[np.ndarray, int]:
    """``phi_k(A) v`` approximating ``A**n v``; returns ``(result, matvecs)`` with matvecs == k."""
    A = _as_matrix(A)
    v = _check_vector(A, v)
    return cheb_apply(A.matvec, v, monomial_coeffs(n, k))


def repeated_matpow(A, v, n: int) -> tuple[np.ndarray, int]:
    """Reference ``A**n v`` by ``n`` successive products."""
    A = _as_matrix(A)
    v = _check_vector(A, v)
    counter = MatVecCounter(A.matvec)
    for _ in range(n):
        v = counter(v)
    return v, counter.count


def auto_matpow(
    A, v, n: int, epsilon: float, exact_limit: int = EXACT_PATH_LIMIT
) -> tuple[np.ndarray, int, int]:
    """Pick the smallest safe degree for ``epsilon`` then run :func:`cheb_matpow`.

    Returns ``(result, k_used, matvecs)``.
    """
    plan = select_degree(n, epsilon, "exact", exact_limit)
    result, matvecs = cheb_matpow(A, v, n, plan.k)
    return result, plan.k, matvecs
