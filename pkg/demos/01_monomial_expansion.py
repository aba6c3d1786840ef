"""
Chebyshev coefficients of a monomial
====================================

x**n has a finite Chebyshev series with nonnegative rational
coefficients.  Only every other coefficient is nonzero, and the
constant term enters halved.
"""

from fractions import Fraction

from chebmono import eval_exact, monomial_expansion, to_power_basis

# x**3 = 3/4 T_1(x) + 1/4 T_3(x)
s = monomial_expansion(3)
print("x^3 coefficients:", [str(c) for c in s.coeffs])

# x**2 = 1/2 + 1/2 T_2(x): c_0 = 1 is stored, but contributes c_0/2
print("x^2 coefficients:", [str(c) for c in monomial_expansion(2).coeffs])

# the coefficients of a larger power, as floats
s12 = monomial_expansion(12)
for j, c in enumerate(s12.float_coeffs()):
    print(f"  c_{j:<2} = {c:.6f}")

# the series reproduces x**n exactly in rational arithmetic
x = Fraction(-5, 7)
assert eval_exact(s12, x) == x**12
print("exact at x = -5/7:", eval_exact(s12, x) == x**12)

# and converting back to the monomial basis gives a single 1
print("power basis of the x^12 series:", [str(a) for a in to_power_basis(s12)])
