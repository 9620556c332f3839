"""Truncated lattice and coset series attached to the Dirac kernels.

Two truncation parameters appear throughout and are reported, never
hidden: `box_radius` R bounds lattice points in the sup norm, and
`word_limit` L bounds the generator-word length of the coset
representatives a series is summed over.  Every coset series records
its partial sums level by level so convergence diagnostics work on the
actual summation order (height-sorted within each word-length level).

Weights must satisfy the convergence constraint p < n - 1 - s (scalar /
one-sided series, with s the kernel weight) or p < min(n, 2n - 2 - s - t)
for the two-sided series; SeriesSpec enforces this at construction, and
`coset_norm_sums` exposes the growth of sum |c e_n + d|^{-alpha} that
the constraint comes from (convergence abscissa alpha = p + 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .clifford import Multivector
from .congruence import (CosetRep, GroupDescriptor, contains_neg_identity,
                         enumerate_cosets, translation_lattice)
from .kernels import KernelJet, left_factor, q0_general
from .vahlen import mobius_apply

_SERIES_KINDS = ("scalar", "vector", "oddweight", "biregular", "poincare")


@dataclass(frozen=True)
class SeriesSpec:
    """Parameters of one truncated series, validated for convergence."""

    kind: str
    group: GroupDescriptor
    s: int
    t: int | None = None
    m: tuple[int, ...] | None = None
    word_limit: int = 6
    box_radius: int = 4

    def __post_init__(self):
        if self.kind not in _SERIES_KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}; choose from {_SERIES_KINDS}")
        n, p = self.group.n, self.group.p
        if not isinstance(self.s, int) or not 1 <= self.s < n:
            raise ValueError(f"weight s must be an integer in 1..{n - 1}, got {self.s}")
        if self.word_limit < 0 or self.box_radius < 1:
            raise ValueError("need word_limit >= 0 and box_radius >= 1")
        if self.kind == "biregular":
            if self.t is None or not isinstance(self.t, int) or not 1 <= self.t < n:
                raise ValueError("biregular series needs a second weight t in 1..n-1")
            if self.s % 2 == 0 or self.t % 2 == 0:
                raise ValueError("biregular series needs odd weights on both sides")
            bound = min(n, 2 * n - 2 - self.s - self.t)
            if not p < bound:
                raise ValueError(f"two-sided convergence needs p < min(n, 2n-2-s-t) = {bound}, got p={p}")
        else:
            if self.t is not None:
                raise ValueError(f"{self.kind} series takes no second weight")
            if not p < n - 1 - self.s:
                raise ValueError(f"convergence needs p < n - 1 - s = {n - 1 - self.s}, got p={p} "
                                 "(the coset sums diverge at and below the abscissa p + 1)")
        if self.kind == "oddweight" and self.s % 2 == 0:
            raise ValueError("odd-weight series needs odd s")
        if self.kind == "vector":
            if self.m is None:
                raise ValueError("vector series needs a derivative multi-index m")
            _check_multi_index(self.m, n, minimum=3)
        elif self.m is not None:
            raise ValueError(f"{self.kind} series takes no multi-index")


def _check_multi_index(m, n: int, minimum: int):
    m = tuple(m)
    if len(m) != n or any(not isinstance(k, int) or k < 0 for k in m):
        raise ValueError(f"multi-index must be {n} nonnegative integers, got {m}")
    total = sum(m)
    if total < minimum or total % 2 == 0:
        raise ValueError(f"need |m| odd and >= {minimum}, got |m| = {total}")


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series plus its level-by-level partial sums."""

    value: Multivector
    partial_sums: list[tuple[int, Multivector]] = field(compare=False)
    coset_count_c0: int = 0
    n_terms: int = 0

    def partial_at(self, level: int) -> Multivector:
        for lvl, val in self.partial_sums:
            if lvl == level:
                return val
        raise KeyError(f"no partial sum recorded at level {level}")


# ---- pure lattice series ----------------------------------------------------


def _box_points(dim: int, radius: int, include_zero: bool):
    """Z^dim points with sup norm <= radius, a symmetric exhaustion."""
    ranges = [range(-radius, radius + 1)] * dim
    out = [()]
    for r in ranges:
        out = [t + (k,) for t in out for k in r]
    if not include_zero:
        zero = (0,) * dim
        out = [t for t in out if t != zero]
    return out


def zeta_m(m, n: int, box_radius: int) -> Multivector:
    """Lattice kernel sum  sum_{omega in Z^{n-1}, 0 < |omega|_inf <= R} q_m(omega).

    Needs |m| >= 3 odd: the summand then decays like |omega|^{-n-|m|+1}
    and the symmetric box exhaustion converges absolutely.
    """
    m = tuple(m)
    _check_multi_index(m, n, minimum=3)
    if box_radius < 1:
        raise ValueError("box_radius must be >= 1")
    total = Multivector.zero(n)
    order = sum(m)
    for pt in _box_points(n - 1, box_radius, include_zero=False):
        x = Multivector.vector(list(pt) + [0])
        total = total + KernelJet(x, 1, order).q_m(m)
    return total


def zeta_m_table(ms, n: int, box_radius: int) -> dict:
    """Several zeta_m values sharing one kernel jet per lattice point."""
    ms = [tuple(m) for m in ms]
    for m in ms:
        _check_multi_index(m, n, minimum=3)
    order = max(sum(m) for m in ms)
    totals = {m: Multivector.zero(n) for m in ms}
    for pt in _box_points(n - 1, box_radius, include_zero=False):
        kj = KernelJet(Multivector.vector(list(pt) + [0]), 1, order)
        for m in ms:
            totals[m] = totals[m] + kj.q_m(m)
    return totals


def epsilon_m(z: Multivector, m, n: int | None = None, box_radius: int = 4) -> Multivector:
    """Shifted lattice sum  sum_{|omega|_inf <= R} q_m(z + omega), z not in Z^{n-1}."""
    n = z.dim if n is None else n
    m = tuple(m)
    _check_multi_index(m, n, minimum=3)
    if not z.is_vector():
        raise ValueError("epsilon_m needs a grade-1 argument")
    total = Multivector.zero(n)
    order = sum(m)
    for pt in _box_points(n - 1, box_radius, include_zero=True):
        x = z + Multivector.vector(list(pt) + [0]).to_float()
        if x.norm() < 1e-12:
            raise ValueError("epsilon_m hit a lattice pole; the argument must avoid Z^{n-1}")
        total = total + KernelJet(x, 1, order).q_m(m)
    return total


def lattice_G_m(x: Multivector, m, box_radius: int = 4) -> Multivector:
    """Two-parameter lattice series  sum_{(alpha, omega) != 0} q_m(alpha x + omega)
    over |alpha| <= R, |omega|_inf <= R, for x in the upper half-space."""
    n = x.dim
    m = tuple(m)
    _check_multi_index(m, n, minimum=3)
    if not x.is_vector() or not float(x.component(n)) > 0:
        raise ValueError("lattice_G_m needs a vector with positive last component")
    xf = x.to_float()
    order = sum(m)
    total = Multivector.zero(n)
    zero_shift = (0,) * (n - 1)
    for alpha in range(-box_radius, box_radius + 1):
        for pt in _box_points(n - 1, box_radius, include_zero=True):
            if alpha == 0 and pt == zero_shift:
                continue
            arg = xf * float(alpha) + Multivector.vector(list(pt) + [0]).to_float()
            total = total + KernelJet(arg, 1, order).q_m(m)
    return total


# ---- coset series -----------------------------------------------------------


def _negated_key(key: tuple) -> tuple:
    return tuple(tuple((mask, -num, den) for mask, num, den in part) for part in key)


def series_cosets(group: GroupDescriptor, word_limit: int) -> list[CosetRep]:
    """The exhaustion a truncated coset series is summed over.

    When -I lies in the group, cosets come in (c, d) / (-c, -d) pairs
    and signed summands cancel pairwise; a word-length ball need not
    contain both partners, so representatives whose partner is missing
    are dropped.  This is the coset analogue of the symmetric lattice
    boxes: it makes signed truncations cancel exactly instead of up to
    a stray unpaired term.
    """
    reps = enumerate_cosets(group, word_limit)
    if not contains_neg_identity(group):
        return reps
    keys = {rep.key for rep in reps}
    return [rep for rep in reps if _negated_key(rep.key) in keys]


def _coset_term_sum(spec: SeriesSpec, term_fn) -> SeriesResult:
    """Shared driver: sum term_fn(rep) over representatives, recording
    partial sums after each word-length level (height-sorted inside)."""
    reps = series_cosets(spec.group, spec.word_limit)
    n = spec.group.n
    by_level: dict[int, list[CosetRep]] = {}
    for rep in reps:
        by_level.setdefault(rep.word_length, []).append(rep)
    total = Multivector.zero(n)
    partials: list[tuple[int, Multivector]] = []
    n_terms = 0
    for level in range(spec.word_limit + 1):
        for rep in by_level.get(level, ()):
            total = total + term_fn(rep)
            n_terms += 1
        partials.append((level, total))
    c0 = sum(1 for rep in reps if rep.is_c_zero())
    return SeriesResult(value=total, partial_sums=partials, coset_count_c0=c0, n_terms=n_terms)


def _denominator(rep: CosetRep, x: Multivector) -> Multivector:
    mf = rep.matrix.to_float()
    return mf.c * x + mf.d


def scalar_eisenstein(x: Multivector, spec: SeriesSpec) -> SeriesResult:
    """sum over cosets of |c x + d|^{s - n}, for even s (scalar-valued)."""
    if spec.kind != "scalar":
        raise ValueError("spec.kind must be 'scalar'")
    if spec.s % 2:
        raise ValueError("scalar series needs even s")
    _require_half_space(x)
    n = spec.group.n
    xf = x.to_float()

    def term(rep: CosetRep) -> Multivector:
        den = _denominator(rep, xf)
        return Multivector.scalar(n, den.norm() ** float(spec.s - n))

    return _coset_term_sum(spec, term)


def odd_weight_eisenstein(x: Multivector, spec: SeriesSpec) -> SeriesResult:
    """sum over cosets of q0(c x + d) for odd s; identically zero whenever
    -I lies in the group (terms cancel in +-M pairs)."""
    if spec.kind != "oddweight":
        raise ValueError("spec.kind must be 'oddweight'")
    _require_half_space(x)
    xf = x.to_float()

    def term(rep: CosetRep) -> Multivector:
        return q0_general(_denominator(rep, xf), spec.s)

    return _coset_term_sum(spec, term)


def vector_eisenstein(x: Multivector, spec: SeriesSpec) -> SeriesResult:
    """sum over cosets of q0(c x + d) G_m(M<x> + e_n): the lattice average
    of the derivative kernel, made automorphic."""
    if spec.kind != "vector":
        raise ValueError("spec.kind must be 'vector'")
    if spec.s % 2 == 0:
        raise ValueError("vector series needs odd s")
    _require_half_space(x)
    n = spec.group.n
    xf = x.to_float()
    e_n = Multivector.basis(n, n).to_float()

    def term(rep: CosetRep) -> Multivector:
        mf = rep.matrix.to_float()
        image = mobius_apply(mf, xf)
        return q0_general(_denominator(rep, xf), spec.s) * lattice_G_m(image + e_n, spec.m, spec.box_radius)

    return _coset_term_sum(spec, term)


def poincare_general(f_tilde, spec: SeriesSpec):
    """General one-sided series  x -> sum q0(c x + d) f~(M<x>).

    f~ must be invariant under the group's translation lattice
    (caller-asserted; see `translation_invariance_residual`).  Returns
    an evaluator mapping points to SeriesResult.
    """
    if spec.kind != "poincare":
        raise ValueError("spec.kind must be 'poincare'")

    def evaluate(x: Multivector) -> SeriesResult:
        _require_half_space(x)
        xf = x.to_float()

        def term(rep: CosetRep) -> Multivector:
            mf = rep.matrix.to_float()
            return q0_general(_denominator(rep, xf), spec.s) * f_tilde(mobius_apply(mf, xf))

        return _coset_term_sum(spec, term)

    return evaluate


def biregular_eisenstein(x: Multivector, y: Multivector, spec: SeriesSpec) -> SeriesResult:
    """Two-sided series  sum conj(rev(q0_s(c x + d))) q0_t(y rev(c) + rev(d))
    over cosets; left-regular in x and right-regular in y."""
    if spec.kind != "biregular":
        raise ValueError("spec.kind must be 'biregular'")
    _require_half_space(x)
    _require_half_space(y)
    xf, yf = x.to_float(), y.to_float()

    def term(rep: CosetRep) -> Multivector:
        mf = rep.matrix.to_float()
        left = left_factor(mf.c * xf + mf.d, spec.s)
        right = q0_general(yf * mf.c.reverse() + mf.d.reverse(), spec.t)
        return left * right

    return _coset_term_sum(spec, term)


def _require_half_space(x: Multivector):
    if not x.is_vector() or not float(x.component(x.dim)) > 0:
        raise ValueError("series are evaluated on the open upper half-space (x_n > 0)")


def translation_invariance_residual(f, group: GroupDescriptor, points) -> float:
    """max |f(x + b) - f(x)| over lattice basis offsets b and sample points:
    a spot check for poincare_general inputs."""
    lat = translation_lattice(group)
    worst = 0.0
    for x in points:
        fx = f(x)
        for b in lat.basis_vectors(group.n):
            diff = f(x + b.to_float()) - fx
            worst = max(worst, diff.norm())
    return worst


# ---- convergence diagnostics -------------------------------------------------


def coset_norm_sums(group: GroupDescriptor, alpha: float, word_limit: int) -> list[tuple[int, float]]:
    """Cumulative sums of |c e_n + d|^{-alpha} by word-length level.

    This is the comparison series behind every convergence statement;
    it has abscissa alpha = p + 1 (diverges at and below, converges
    above, in the full-group limit).
    """
    reps = series_cosets(group, word_limit)
    totals = []
    running = 0.0
    by_level: dict[int, list[CosetRep]] = {}
    for rep in reps:
        by_level.setdefault(rep.word_length, []).append(rep)
    for level in range(word_limit + 1):
        for rep in by_level.get(level, ()):
            running += rep.height ** (-alpha)
        totals.append((level, running))
    return totals


def tail_report(result_or_partials) -> dict:
    """Level-to-level increments of a partial-sum record.

    Returns dict with levels, increment norms, the final increment, and
    `tail_ratio`: (mass of the last half of the increments) / (mass of
    the first half); a ratio below 1 indicates decay of new
    contributions, the truncated-series analogue of convergence.
    """
    if isinstance(result_or_partials, SeriesResult):
        partials = result_or_partials.partial_sums
        values = [val for _, val in partials]
        deltas = [(values[i] - values[i - 1]).norm() for i in range(1, len(values))]
        levels = [lvl for lvl, _ in partials]
    else:
        partials = list(result_or_partials)
        levels = [lvl for lvl, _ in partials]
        vals = [float(v) for _, v in partials]
        deltas = [abs(vals[i] - vals[i - 1]) for i in range(1, len(vals))]
    if len(deltas) < 2:
        raise ValueError("tail_report needs at least two recorded levels")
    half = len(deltas) // 2
    head, tail = sum(deltas[:half]), sum(deltas[half:])
    ratio = math.inf if head == 0 and tail > 0 else (tail / head if head else 0.0)
    return {
        "levels": levels,
        "deltas": deltas,
        "final_delta": deltas[-1],
        "tail_ratio": ratio,
        "tail_decreasing": ratio < 1.0,
    }


def abscissa_diagnostic(group: GroupDescriptor, alphas, word_limit: int) -> dict:
    """tail_report of coset_norm_sums for each exponent, flagging the
    expected divergence at alpha <= p + 1."""
    out = {}
    for alpha in alphas:
        rep = tail_report(coset_norm_sums(group, alpha, word_limit))
        rep["alpha"] = alpha
        rep["below_abscissa"] = alpha <= group.p + 1
        out[alpha] = rep
    return out
