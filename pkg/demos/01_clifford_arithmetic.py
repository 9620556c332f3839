"""Exact Clifford arithmetic: products, involutions, norms, parsing.

Run:  python demos/01_clifford_arithmetic.py
"""

from fractions import Fraction

from cliffmod import Multivector

n = 4

print("== generators and their relations ==")
e1, e2 = Multivector.basis(n, 1), Multivector.basis(n, 2)
print("e1 * e2       =", (e1 * e2).to_string())
print("e2 * e1       =", (e2 * e1).to_string())
print("e1 * e1       =", (e1 * e1).to_string())
print("e1*e2 + e2*e1 =", (e1 * e2 + e2 * e1).to_string())

print()
print("== exact rational coefficients survive every operation ==")
a = Multivector.from_string(n, "1/2 + 3*e1 - 2/3*e12")
b = Multivector.from_string(n, "2 - e2 + e134")
prod = a * b
print("a             =", a.to_string())
print("b             =", b.to_string())
print("a * b         =", prod.to_string())
print("exact?        ", prod.is_exact)

print()
print("== the two anti-automorphisms ==")
print("conjugate(a*b) == conjugate(b)*conjugate(a):",
      (a * b).conjugate() == b.conjugate() * a.conjugate())
print("reverse(a*b)   == reverse(b)*reverse(a):  ",
      (a * b).reverse() == b.reverse() * a.reverse())

print()
print("== norms: Sc(a conj(a)) equals the coefficient square sum ==")
print("norm_sq(a)    =", a.norm_sq(), "=", sum(c * c for c in a.coeffs.values()))

print()
print("== vectors invert exactly ==")
x = Multivector.vector([Fraction(3), Fraction(0), Fraction(4), Fraction(0)])
from cliffmod import vector_inverse
xi = vector_inverse(x)
print("x             =", x.to_string())
print("x^-1          =", xi.to_string())
print("x * x^-1      =", (x * xi).to_string())

print()
print("== zero divisors exist, but products of nonzero vectors invert ==")
z = Multivector.from_string(n, "1 + e123")
print("(1 + e123)^2  =", (z * z).to_string(), " (proportional to itself: not invertible)")
from cliffmod import clifford_group_inverse
g = x * Multivector.vector([1, 1, 0, 0])
gi = clifford_group_inverse(g)
print("g = x * (e1+e2); g * g^-1 =", (g * gi).to_string())
