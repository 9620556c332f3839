"""Vahlen matrices acting on upper half-space by Moebius transformations.

Run:  python demos/02_mobius_action.py
"""

from fractions import Fraction

from cliffmod.clifford import Multivector
from cliffmod.vahlen import (make_dilatation, make_inversion, make_translation,
                             mat_inv, mat_mul, mobius_apply, pseudo_det, is_vahlen)

n = 4

print("== the generators and their actions ==")
x = Multivector.vector([Fraction(1, 2), Fraction(0), Fraction(0), Fraction(2)])
t = make_translation(Multivector.basis(n, 1))
j = make_inversion(n)
d = make_dilatation(n, Fraction(3, 2))
print("x       =", x.to_string())
print("T<x>    =", mobius_apply(t, x).to_string(), "  (shift by e1)")
print("J<x>    =", mobius_apply(j, x).to_string(), "  (x / |x|^2)")
print("D<x>    =", mobius_apply(d, x).to_string(), "  (scale by (3/2)^2)")

print()
print("== words compose; the represented map is the composition ==")
m = mat_mul(mat_mul(t, j), t)
print("word    =", m.word)
print("entries =", m.to_strings())
print("pseudo-determinant =", pseudo_det(m).to_string())
print("Vahlen conditions hold:", is_vahlen(m))
lhs = mobius_apply(m, x)
rhs = mobius_apply(t, mobius_apply(j, mobius_apply(t, x)))
print("(T J T)<x> == T<J<T<x>>>:", lhs == rhs)

print()
print("== exact inverses invert the action ==")
mi = mat_inv(m)
print("inverse word =", mi.word)
roundtrip = mobius_apply(mi, mobius_apply(m, x))
print("M^-1<M<x>> =", roundtrip.to_string(), " equals x:", roundtrip == x)

print()
print("== the half-space is preserved ==")
pts = [Multivector.vector([0.3, -0.8, 0.1, h]) for h in (0.05, 0.7, 3.0)]
for pt in pts:
    img = mobius_apply(m.to_float(), pt)
    print(f"x_n = {float(pt.component(n)):5.2f} -> image x_n = {float(img.component(n)):8.5f}")
