"""Truncated Eisenstein series: partial sums, large-height limits,
signed cancellation, and convergence diagnostics.

Run:  python demos/05_eisenstein_limits.py
"""

from cliffmod.clifford import Multivector
from cliffmod.congruence import GroupDescriptor
from cliffmod.series import (SeriesSpec, abscissa_diagnostic, odd_weight_eisenstein,
                             scalar_eisenstein, tail_report)

print("== scalar series: partial sums by word-length level ==")
group = GroupDescriptor.full(5, 1)
spec = SeriesSpec("scalar", group, s=2, word_limit=8)
x = Multivector.vector([0.2, -0.1, 0.3, 0.0, 1.0])
res = scalar_eisenstein(x, spec)
for lvl, val in res.partial_sums:
    print(f"level {lvl}: {val.scalar_part():.8f}")
print(f"value over {res.n_terms} cosets; {res.coset_count_c0} of them have c = 0")

print()
print("== the value at e_n * t approaches the c = 0 coset count ==")
target = float(res.coset_count_c0)
print(f"{'t':>6s} {'series value':>14s} {'error':>10s}")
for t in (10, 30, 100):
    xt = Multivector.vector([0.0, 0.0, 0.0, 0.0, float(t)])
    v = scalar_eisenstein(xt, spec).value.scalar_part()
    print(f"{t:6d} {v:14.8f} {abs(v - target):10.2e}")

print()
print("== odd weights cancel in +-M pairs whenever -I is in the group ==")
x4 = Multivector.vector([0.25, -0.1, 0.3, 1.2])
for g in (GroupDescriptor.full(4, 1), GroupDescriptor.theta(4, 1),
          GroupDescriptor.principal(4, 1, 3)):
    ospec = SeriesSpec("oddweight", g, s=1, word_limit=6)
    norm = odd_weight_eisenstein(x4, ospec).value.norm()
    print(f"{g.label:14s} |series| = {norm:.2e}")

print()
print("== tail diagnostics separate converging from diverging exponents ==")
rep = tail_report(res)
print(f"scalar series increments: final delta {rep['final_delta']:.2e}, "
      f"tail ratio {rep['tail_ratio']:.3f} -> "
      f"{'decaying' if rep['tail_decreasing'] else 'growing'}")
diag = abscissa_diagnostic(GroupDescriptor.full(4, 1), [3.5, 1.5], word_limit=8)
for alpha, d in diag.items():
    print(f"comparison sum alpha={alpha}: tail ratio {d['tail_ratio']:.3f} "
          f"({'above' if not d['below_abscissa'] else 'below'} the abscissa p+1)")
