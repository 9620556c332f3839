"""Hypercomplex modular groups, congruence subgroups, coset enumeration.

For 1 <= p <= n-1 the group Gamma_p is generated by the translations
T_{e_1}..T_{e_p} and the inversion J.  Its entries live in the standard
order O_p, the integer span of all blades over e_1..e_p.  Congruence
conditions are imposed coefficientwise mod a level N:

- full:          no condition
- principal[N]:  a - 1, b, c, d - 1 all in N O_p
- upper0[N]:     b in N O_p
- lower0[N]:     c in N O_p
- theta:         union of principal[2] and principal[2] * J

Membership testing requires generator-word provenance (a matrix built
by multiplying T/J generators); entries alone cannot certify that a
matrix belongs to Gamma_p.  Cosets of the translation subgroup are
canonically keyed by the exact bottom row (c, d): two members share a
coset of T(Lambda)\\Lambda exactly when their bottom rows agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .clifford import Multivector
from .vahlen import VahlenMatrix, make_inversion, make_translation, mat_inv, mat_mul

VARIANTS = ("full", "principal", "upper0", "lower0", "theta")

_VARIANT_LABEL = {
    "full": "Gamma_{p}",
    "principal": "Gamma_{p}[{N}]",
    "upper0": "Gamma_{p}^0[{N}]",
    "lower0": "Gamma_{p}_0[{N}]",
    "theta": "Gamma_{p}_theta",
}


@dataclass(frozen=True)
class GroupDescriptor:
    """A congruence subgroup of Gamma_p acting on H^+ in R^n."""

    n: int
    p: int
    variant: str
    level: int | None = None

    def __post_init__(self):
        if not 1 <= self.p <= self.n - 1:
            raise ValueError(f"need 1 <= p <= n-1, got p={self.p}, n={self.n}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        if self.variant in ("principal", "upper0", "lower0"):
            if not isinstance(self.level, int) or self.level < 2:
                raise ValueError(f"variant {self.variant!r} needs an integer level >= 2")
        elif self.level is not None:
            raise ValueError(f"variant {self.variant!r} takes no level")

    @classmethod
    def full(cls, n: int, p: int) -> "GroupDescriptor":
        return cls(n, p, "full")

    @classmethod
    def principal(cls, n: int, p: int, level: int) -> "GroupDescriptor":
        return cls(n, p, "principal", level)

    @classmethod
    def upper0(cls, n: int, p: int, level: int) -> "GroupDescriptor":
        return cls(n, p, "upper0", level)

    @classmethod
    def lower0(cls, n: int, p: int, level: int) -> "GroupDescriptor":
        return cls(n, p, "lower0", level)

    @classmethod
    def theta(cls, n: int, p: int) -> "GroupDescriptor":
        return cls(n, p, "theta")

    @property
    def label(self) -> str:
        return _VARIANT_LABEL[self.variant].format(p=self.p, N=self.level)


# ---- the standard order ---------------------------------------------------


def in_order(a: Multivector, p: int, level: int = 1) -> bool:
    """Whether every coefficient of `a` lies in level*Z over blades of e_1..e_p.

    Exact coefficients are required; float input raises TypeError so a
    rounding artifact can never silently certify membership.
    """
    if not a.is_exact:
        raise TypeError("order membership needs exact coefficients")
    span = (1 << p) - 1
    for mask, c in a.coeffs.items():
        if mask & ~span:
            return False
        f = Fraction(c)
        if f.denominator != 1 or f.numerator % level:
            return False
    return True


# ---- generators and word certification -------------------------------------


def gamma_generators(n: int, p: int) -> list[VahlenMatrix]:
    """T_{e_1}..T_{e_p}, their inverses, and J: a generating set of Gamma_p."""
    gens = []
    for i in range(1, p + 1):
        e = Multivector.basis(n, i)
        gens.append(make_translation(e))
        gens.append(make_translation(-e))
    gens.append(make_inversion(n))
    return gens


def certified_in_gamma(m: VahlenMatrix, p: int) -> bool:
    """True when the provenance word uses only J and integer translations
    supported on e_1..e_p, i.e. the matrix is certified to lie in Gamma_p."""
    if m.word is None:
        return False
    for tok in m.word:
        if tok == "J":
            continue
        if tok.startswith("T(") and tok.endswith(")"):
            try:
                b = Multivector.from_string(m.dim, tok[2:-1])
            except ValueError:
                return False
            if b.is_vector() and b.is_exact and in_order(b, p):
                continue
        return False
    return True


def is_member(m: VahlenMatrix, group: GroupDescriptor) -> bool:
    """Membership in the congruence subgroup, certified by provenance.

    Raises ValueError when the matrix has no generator-word certificate
    for Gamma_p (entries alone cannot decide that).
    """
    if m.dim != group.n:
        raise ValueError(f"matrix dim {m.dim} does not match group n={group.n}")
    if not certified_in_gamma(m, group.p):
        raise ValueError("membership requires generator-word provenance over Gamma_p "
                         "(build the matrix from make_translation/make_inversion products)")
    return _congruence_conditions(m, group)


def _congruence_conditions(m: VahlenMatrix, group: GroupDescriptor) -> bool:
    p, variant, level = group.p, group.variant, group.level
    if variant == "full":
        return True
    if variant == "principal":
        one = Multivector.scalar(group.n, 1)
        return (in_order(m.a - one, p, level) and in_order(m.b, p, level)
                and in_order(m.c, p, level) and in_order(m.d - one, p, level))
    if variant == "upper0":
        return in_order(m.b, p, level)
    if variant == "lower0":
        return in_order(m.c, p, level)
    # theta: principal[2] or principal[2] * J
    pr2 = GroupDescriptor.principal(group.n, p, 2)
    if _congruence_conditions(m, pr2):
        return True
    j_inv = mat_inv(make_inversion(group.n))
    return _congruence_conditions(mat_mul(m, j_inv), pr2)


# ---- translation lattices ---------------------------------------------------


@dataclass(frozen=True)
class TranslationLattice:
    """The lattice of offsets b with T_b in the group: scale * Z^p."""

    p: int
    scale: int

    def contains(self, b: Multivector) -> bool:
        return b.is_vector() and in_order(b, self.p, self.scale)

    def basis_vectors(self, n: int) -> list[Multivector]:
        return [Multivector.basis(n, i) * self.scale for i in range(1, self.p + 1)]


def translation_lattice(group: GroupDescriptor) -> TranslationLattice:
    """T(G) for each variant.

    full and lower0 keep the whole of Z^p (a lower-triangular congruence
    does not constrain b); principal[N] and upper0[N] force b into N Z^p;
    theta gives 2 Z^p because an element of principal[2] * J always has
    d even, so it cannot be a translation.
    """
    if group.variant in ("full", "lower0"):
        return TranslationLattice(group.p, 1)
    if group.variant in ("principal", "upper0"):
        return TranslationLattice(group.p, group.level)
    return TranslationLattice(group.p, 2)


def is_translation(m: VahlenMatrix) -> bool:
    n = m.dim
    one, zero = Multivector.scalar(n, 1), Multivector.zero(n)
    return m.a == one and m.d == one and m.c == zero and m.b.is_vector()


# ---- cosets of the translation subgroup -------------------------------------


def _mv_key(v: Multivector) -> tuple:
    items = []
    for mask in sorted(v.coeffs):
        c = Fraction(v.coeffs[mask])
        items.append((mask, c.numerator, c.denominator))
    return tuple(items)


def bottom_row_key(m: VahlenMatrix) -> tuple:
    """Canonical exact key (c, d) labelling the coset T(G) m."""
    if not m.is_exact():
        raise TypeError("coset keys need exact entries")
    return (_mv_key(m.c), _mv_key(m.d))


def same_coset(m1: VahlenMatrix, m2: VahlenMatrix, group: GroupDescriptor) -> bool:
    """Oracle: m1, m2 lie in one T(G)-coset iff m1 m2^{-1} is a lattice translation."""
    if not (is_member(m1, group) and is_member(m2, group)):
        raise ValueError("same_coset needs two members of the group")
    q = mat_mul(m1, mat_inv(m2))
    return is_translation(q) and translation_lattice(group).contains(q.b)


@dataclass(frozen=True)
class CosetRep:
    """A shortest-word representative of one coset of T(G) in G."""

    matrix: VahlenMatrix
    key: tuple
    word_length: int
    height: float  # |c e_n + d|, the growth weight of the bottom row

    def is_c_zero(self) -> bool:
        return self.matrix.c.is_zero()


@lru_cache(maxsize=32)
def _gamma_ball(n: int, p: int, max_len: int) -> tuple[VahlenMatrix, ...]:
    """All distinct Gamma_p elements that are generator words of length <= max_len.

    Breadth-first over right multiplication, deduplicated on exact
    entries, so each element is reached by a shortest word and the
    enumeration order is deterministic.
    """
    gens = gamma_generators(n, p)
    start = VahlenMatrix.identity(n)
    seen = {_matrix_key(start)}
    out = [start]
    frontier = [start]
    for _ in range(max_len):
        new_frontier = []
        for m in frontier:
            for g in gens:
                q = mat_mul(m, g)
                k = _matrix_key(q)
                if k not in seen:
                    seen.add(k)
                    out.append(q)
                    new_frontier.append(q)
        frontier = new_frontier
    return tuple(out)


def _matrix_key(m: VahlenMatrix) -> tuple:
    return (_mv_key(m.a), _mv_key(m.b), _mv_key(m.c), _mv_key(m.d))


def gamma_ball(n: int, p: int, max_len: int) -> list[VahlenMatrix]:
    if max_len < 0:
        raise ValueError("word length bound must be >= 0")
    return list(_gamma_ball(n, p, max_len))


def enumerate_cosets(group: GroupDescriptor, max_len: int) -> list[CosetRep]:
    """Representatives of T(G)\\G found within generator words of length <= max_len.

    The list is sorted by (height, word_length, key) so truncated series
    built on it are reproducible.  Raising max_len never removes cosets:
    the ball only grows and keys are stable.
    """
    e_n = Multivector.basis(group.n, group.n)
    reps: dict[tuple, VahlenMatrix] = {}
    for m in _gamma_ball(group.n, group.p, max_len):
        if not _congruence_conditions(m, group):
            continue
        k = bottom_row_key(m)
        if k not in reps:
            reps[k] = m
    out = []
    for k, m in reps.items():
        height = (m.c * e_n + m.d).norm()
        out.append(CosetRep(matrix=m, key=k, word_length=len(m.word), height=height))
    out.sort(key=lambda r: (r.height, r.word_length, r.key))
    return out


def contains_neg_identity(group: GroupDescriptor) -> bool:
    """Whether -I belongs to the group; -I = J J makes this a membership call."""
    j = make_inversion(group.n)
    neg_id = mat_mul(j, j)
    return is_member(neg_id, group)
