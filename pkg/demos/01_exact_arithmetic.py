"""Exact polynomial and rational-function arithmetic.

Every coefficient is a Fraction and every denominator is a product of
affine-linear factors, so equality of any two expressions is decided
bit for bit: no epsilons anywhere.
"""

from fractions import Fraction

from skewgt import Context, Poly, RatFunc, linear_factor
from skewgt.polys import elementary_symmetric, shifted_vandermonde, vandermonde

ctx = Context.triangle(3)
x = lambda k, i: Poly.var(ctx, (k, i))

print("== polynomials ==")
p = (x(2, 1) + x(2, 2)) * (x(2, 1) - x(2, 2))
print("(x21 + x22)(x21 - x22) =", p)

q = p.exact_div_linear((2, 1), (2, 2), Fraction(0))
print("divided exactly by (x21 - x22):", q)

print("row Vandermonde V3 =", vandermonde(ctx, 3))
print("shifted V3 with offsets (2, -1) =", shifted_vandermonde(ctx, 3, [2, -1]))
print("elementary symmetric e32 =", elementary_symmetric(ctx, 3, 2))

print()
print("== rational functions ==")
f, sign = linear_factor((2, 2), (2, 1), 0)
r = RatFunc(x(1, 1) - x(2, 1), [f], sign)
print("(x11 - x21)/(x22 - x21) stored canonically as:", r)

print("multiplying by the denominator cancels it exactly:",
      r * RatFunc(x(2, 2) - x(2, 1)))

print("shifting x21 by 1 stays in the factored class:",
      r.shifted({(2, 1): 1}))

swap = {(2, 1): (2, 2), (2, 2): (2, 1)}
print("swapping the row-2 variables:", r.permuted(swap))

g, s2 = linear_factor((2, 1), (2, 2), 0)
opposite = RatFunc(Poly.one(ctx), [g], s2) + RatFunc(Poly.one(ctx), [f], sign)
print("1/(x21 - x22) + 1/(x22 - x21) =", opposite)
