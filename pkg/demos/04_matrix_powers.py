"""
Matrix powers with few products
===============================

For a symmetric matrix with eigenvalues in [-1, 1], phi_k(A) v
approximates A**n v using k matrix-vector products instead of n, and
the error is at most p(n, k) ||v||.
"""

import warnings

import numpy as np

from chebmono import SpectrumWarning, auto_matpow, cheb_matpow, p_exact, repeated_matpow

rng = np.random.default_rng(0)
dim = 400
q, _ = np.linalg.qr(rng.standard_normal((dim, dim)))
A = (q * rng.uniform(-1, 1, dim)) @ q.T
A = 0.5 * (A + A.T)
v = rng.standard_normal(dim)

# row sums exceed 1 here even though the spectrum is inside [-1, 1]
warnings.simplefilter("ignore", SpectrumWarning)

n = 300
ref, n_products = repeated_matpow(A, v, n)
for k in (20, 40, 60, 80):
    y, used = cheb_matpow(A, v, n, k)
    err = np.linalg.norm(y - ref) / np.linalg.norm(v)
    print(f"k={k:3d} matvecs={used:3d}  relative error {err:.2e}  certificate {float(p_exact(n, k)):.2e}")

y, k, used = auto_matpow(A, v, n, 1e-8)
print(f"eps=1e-8: k={k}, {used} products instead of {n_products}, "
      f"error {np.linalg.norm(y - ref) / np.linalg.norm(v):.2e}")
