"""Congruence subgroups and their translation-coset representatives.

Run:  python demos/03_congruence_cosets.py
"""

from cliffmod.congruence import (GroupDescriptor, contains_neg_identity, enumerate_cosets,
                                 gamma_ball, same_coset, translation_lattice)
from cliffmod.vahlen import mat_mul, make_translation
from cliffmod.clifford import Multivector

n, p, L = 4, 1, 6

print(f"== word ball sizes (n={n}, p={p}) ==")
for limit in (2, 4, 6):
    print(f"word length <= {limit}: {len(gamma_ball(n, p, limit)):4d} distinct matrices")

print()
print(f"== subgroup variants at word length <= {L} ==")
groups = [GroupDescriptor.full(n, p), GroupDescriptor.principal(n, p, 2),
          GroupDescriptor.principal(n, p, 3), GroupDescriptor.theta(n, p),
          GroupDescriptor.upper0(n, p, 2), GroupDescriptor.lower0(n, p, 2)]
header = f"{'group':14s} {'cosets':>6s} {'c=0':>4s} {'-I':>5s} {'lattice':>8s}"
print(header)
for g in groups:
    reps = enumerate_cosets(g, L)
    c0 = sum(1 for r in reps if r.is_c_zero())
    scale = translation_lattice(g).scale
    print(f"{g.label:14s} {len(reps):6d} {c0:4d} {str(contains_neg_identity(g)):>5s} "
          f"{scale:6d}Z^p")

print()
print("== the first few representatives of the full group ==")
for r in enumerate_cosets(GroupDescriptor.full(n, p), L)[:6]:
    e = r.matrix.to_strings()
    print(f"height {r.height:>4}  word {'.'.join(r.matrix.word) or '(identity)':24s} "
          f"(c, d) = ({e['c']}, {e['d']})")

print()
print("== coset keys agree with the group-theoretic test ==")
full = GroupDescriptor.full(n, p)
reps = enumerate_cosets(full, 4)
a, b = reps[1].matrix, reps[2].matrix
t = make_translation(Multivector.basis(n, 1))
print("distinct reps share a coset?     ", same_coset(a, b, full))
print("a and (translation * a) do?      ", same_coset(mat_mul(t, a), a, full))
