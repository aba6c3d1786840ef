"""
Choosing the degree for a tolerance
===================================

The bound gives k = ceil(sqrt(2 n ln(2/eps))) without any binomial
sums.  Bisection on the exact error finds the smallest sufficient k,
which is usually a few degrees lower.
"""

from chebmono import select_degree_bound, select_degree_exact

print("    n      eps   k_bound  k_exact   achieved(exact)")
for n, eps in [(50, 1e-2), (75, 1e-3), (75, 1e-6), (500, 1e-6), (2000, 1e-8), (5000, 1e-12)]:
    b = select_degree_bound(n, eps)
    e = select_degree_exact(n, eps)
    print(f"{n:5d}  {eps:7.0e}  {b.k:7d}  {e.k:7d}   {e.achieved_float:.3e}")

# past the exact-path limit only the bound is used; the achieved error
# then comes from a log-space evaluation
big = select_degree_bound(100_000, 1e-10)
print(f"n = 100000: k = {big.k}, achieved ~ {big.achieved_float:.3e}")
