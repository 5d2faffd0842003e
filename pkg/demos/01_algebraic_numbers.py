"""Exact algebraic numbers: no floats, no epsilon.

Every number is represented by an irreducible integer polynomial plus
an isolating interval (or a real/imaginary pair for complex values),
so arithmetic and comparisons are exact.
"""

from twistcert import IntPoly, quad_complex_roots, real_roots

# the three real roots of x^3 - x, isolated in disjoint intervals
roots = real_roots(IntPoly([0, -1, 0, 1]))
print("roots of x^3 - x:", roots)

# sqrt(2) and sqrt(3) as the positive roots of their quadratics
s2 = real_roots(IntPoly([-2, 0, 1]))[-1]
s3 = real_roots(IntPoly([-3, 0, 1]))[-1]
print("sqrt2 =", s2)
print("sqrt3 =", s3)

# their sum has degree 4; the minimal polynomial comes out exactly
total = s2 + s3
print("sqrt2 + sqrt3 =", total)
print("its minimal polynomial has coefficients", total.minpoly.coeffs)

# products collapse when they become rational
print("sqrt2 * sqrt2 =", s2 * s2)
print("sqrt2 * sqrt3 =", s2 * s3)

# complex roots come in conjugate pairs; here 1 +- 2i
plus, minus = quad_complex_roots(IntPoly([5, -2, 1]))
print("roots of x^2 - 2x + 5:", plus, "and", minus)
print("their product is the constant term:", plus * minus)
print("their sum is minus the linear term:", plus + minus)

# equality is decidable: sqrt2 + sqrt3 minus sqrt3 is literally sqrt2
print("(sqrt2 + sqrt3) - sqrt3 == sqrt2:", total - s3 == s2)
