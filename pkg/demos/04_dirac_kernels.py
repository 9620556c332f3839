"""Fundamental solutions of iterated Dirac operators and their derivatives.

Run:  python demos/04_dirac_kernels.py
"""

import random

from cliffmod.clifford import Multivector
from cliffmod.kernels import (KernelJet, dirac_fd, dirac_power_fd, fd_partial,
                              kernel_multiplicativity_check, q0, q_m)

n = 4
rng = random.Random(5)

print("== the base kernel for the two weight parities ==")
x = Multivector.vector([3.0, 0.0, 4.0, 0.0])
print("x        =", x.to_string())
print("q0(x, 1) =", q0(x, 1).to_string(), "  (vector / |x|^{n+1-s})")
print("q0(x, 2) =", q0(x, 2).to_string(), "              (|x|^{s-n})")

print()
print("== multiplicativity on random vector pairs ==")
worst = 0.0
for _ in range(200):
    a = Multivector.vector([rng.uniform(-2, 2) for _ in range(n)])
    b = Multivector.vector([rng.uniform(-2, 2) for _ in range(n)])
    for s in (1, 2, 3):
        worst = max(worst, kernel_multiplicativity_check(a, b, s))
print(f"worst |q0(ab) - q0(b) q0(a)| over 200 pairs, s=1..3:  {worst:.2e}")

print()
print("== the weight-1 kernel is annihilated by the Dirac operator ==")
pt = Multivector.vector([0.3, -0.7, 1.1, 0.9])
print(f"{'h':>8s} {'|D q0| by central differences':>30s}")
for h in (1e-2, 1e-3, 1e-4):
    print(f"{h:8.0e} {dirac_fd(lambda y: q0(y, 1), pt, h).norm():30.3e}")
print("(the h^2 decay identifies pure stencil error: the true value is 0)")

print()
print("== the weight-2 kernel needs the operator twice ==")
once = dirac_fd(lambda y: q0(y, 2), pt, 1e-3).norm()
twice = dirac_power_fd(lambda y: q0(y, 2), pt, 1e-3, 2).norm()
print(f"|D   q0(., 2)| = {once:.3e}   (not annihilated)")
print(f"|D^2 q0(., 2)| = {twice:.3e}   (annihilated)")

print()
print("== jet-computed derivative kernels against finite differences ==")
base = Multivector.vector([1.0, -0.5, 0.75, 1.25])
jet = KernelJet(base, 1, 3)
print(f"{'m':>14s} {'|q_m| (jet)':>12s} {'|jet - FD|':>12s}")
for m in ((0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 1, 0), (2, 0, 0, 1)):
    jv = jet.q_m(m)
    fv = fd_partial(lambda y: q0(y, 1), base, m, 1e-3, richardson=True)
    print(f"{str(m):>14s} {jv.norm():12.4e} {(jv - fv).norm():12.2e}")
print("one-off values come from q_m(); shared-point tables from KernelJet")
assert (q_m(base, (1, 0, 0, 0), 1) - jet.q_m((1, 0, 0, 0))).norm() == 0.0
