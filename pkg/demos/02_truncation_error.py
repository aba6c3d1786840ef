"""
How well can a low-degree polynomial match x**n?
================================================

Dropping the Chebyshev terms above degree k gives a polynomial phi_k
whose maximum error on [-1, 1] is exactly a binomial tail sum,
p(n, k).  We compare it with the concentration bound
2 exp(-k^2 / 2n) and the erfc heuristic, for n = 75.

If matplotlib is installed the curves are drawn; otherwise a table is
printed.
"""

import numpy as np

from chebmono import estimates, grid_sup_error, monomial_expansion, truncate

n = 75
ks = np.arange(0, 51)
reports = [estimates(n, int(k)) for k in ks]
p = np.array([r.exact_float for r in reports])
bound = np.array([r.hoeffding for r in reports])
heuristic = np.array([r.erfc_p_estimate for r in reports])

print(" k   p(75,k)        bound          erfc estimate")
for k in (0, 5, 10, 15, 20, 25, 30, 40, 50):
    print(f"{k:2d}  {p[k]:.6e}  {bound[k]:.6e}  {heuristic[k]:.6e}")

# the error is attained: a fine grid finds the same maximum
for k in (5, 15, 25):
    print(f"k={k:2d}: grid max {grid_sup_error(n, k, 10001):.15f}  exact {p[k]:.15f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    x = np.linspace(0, 1, 500)
    left.plot(x, x**n, "k", lw=2, label=f"x^{n}")
    for k in (5, 15, 25):
        left.plot(x, truncate(monomial_expansion(n), k)(x), label=f"phi_{k}")
    left.legend()
    right.semilogy(ks, p, "o-", label="p(n, k)")
    right.semilogy(ks, bound, "--", label="2 exp(-k^2/2n)")
    right.set_xlabel("k")
    right.legend()
    fig.tight_layout()
    fig.savefig("truncation_error.png", dpi=120)
    print("wrote truncation_error.png")
