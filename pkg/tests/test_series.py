"""Series layer: spec validation, lattice sums against finite-difference
oracles, coset sums against explicit loops, signed cancellation, and the
convergence diagnostics."""

import math
import random

import pytest

from cliffmod.clifford import Multivector
from cliffmod.congruence import GroupDescriptor, contains_neg_identity, enumerate_cosets
from cliffmod.kernels import fd_partial, q0, q0_general, left_factor
from cliffmod.series import (SeriesResult, SeriesSpec, abscissa_diagnostic, biregular_eisenstein,
                             coset_norm_sums, epsilon_m, lattice_G_m, odd_weight_eisenstein,
                             poincare_general, scalar_eisenstein, series_cosets, tail_report,
                             translation_invariance_residual, vector_eisenstein, zeta_m,
                             zeta_m_table)
from cliffmod.vahlen import mobius_apply

FULL41 = GroupDescriptor.full(4, 1)
FULL51 = GroupDescriptor.full(5, 1)


# ---- spec validation ---------------------------------------------------------


def test_spec_accepts_valid_combinations():
    SeriesSpec("scalar", FULL51, 2)
    SeriesSpec("oddweight", FULL41, 1)
    SeriesSpec("vector", FULL41, 1, m=(0, 0, 0, 3))
    SeriesSpec("poincare", FULL41, 1)
    SeriesSpec("biregular", FULL41, 1, t=1)


def test_spec_rejections():
    with pytest.raises(ValueError):
        SeriesSpec("fourier", FULL41, 1)
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL51, 0)
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL51, 5)
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL41, 2)  # p = 1 not < n-1-s = 1
    with pytest.raises(ValueError):
        SeriesSpec("oddweight", FULL51, 2)  # even weight
    with pytest.raises(ValueError):
        SeriesSpec("vector", FULL41, 1)  # missing m
    with pytest.raises(ValueError):
        SeriesSpec("vector", FULL41, 1, m=(0, 0, 0, 2))  # even |m|
    with pytest.raises(ValueError):
        SeriesSpec("vector", FULL41, 1, m=(0, 0, 1))  # wrong length
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL51, 2, m=(0, 0, 0, 0, 3))
    with pytest.raises(ValueError):
        SeriesSpec("biregular", FULL41, 1)  # missing t
    with pytest.raises(ValueError):
        SeriesSpec("biregular", FULL41, 1, t=2)  # even t
    with pytest.raises(ValueError):
        SeriesSpec("biregular", FULL41, 3, t=3)  # bound min(n, 2n-2-s-t) = 0
    with pytest.raises(ValueError):
        SeriesSpec("poincare", FULL41, 1, t=1)
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL51, 2, word_limit=-1)
    with pytest.raises(ValueError):
        SeriesSpec("scalar", FULL51, 2, box_radius=0)


def test_partial_at_lookup():
    res = SeriesResult(Multivector.scalar(4, 1.0), [(0, Multivector.zero(4))])
    assert res.partial_at(0).is_zero()
    with pytest.raises(KeyError):
        res.partial_at(3)


# ---- lattice sums ------------------------------------------------------------


def test_zeta_matches_fd_oracle():
    n, m = 4, (0, 0, 0, 3)
    got = zeta_m(m, n, 1)
    total = Multivector.zero(n)
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                if (a, b, c) == (0, 0, 0):
                    continue
                w = Multivector.vector([float(a), float(b), float(c), 0.0])
                total = total + fd_partial(lambda y: q0(y, 1), w, m, 1e-3, richardson=True)
    assert (got - total).norm() < 1e-5 * max(1.0, got.norm())


def test_zeta_table_consistent():
    ms = [(0, 0, 0, 3), (1, 2, 0, 0), (0, 0, 3, 0)]
    table = zeta_m_table(ms, 4, 2)
    for m in ms:
        assert (table[m] - zeta_m(m, 4, 2)).norm() < 1e-13


def test_zeta_parity_vanishing():
    # each component of d^m q0 is odd in some coordinate for this m, so
    # the per-axis symmetric box cancels exactly
    assert zeta_m((1, 1, 1, 0), 4, 2).norm() < 1e-12


def test_epsilon_pole_and_shift():
    z = Multivector.vector([0.5, 0.25, 0.0, 0.0])
    val = epsilon_m(z, (0, 0, 0, 3), box_radius=2)
    assert val.norm() > 0
    with pytest.raises(ValueError):
        epsilon_m(Multivector.vector([1.0, 0.0, 0.0, 0.0]), (0, 0, 0, 3), box_radius=2)
    with pytest.raises(ValueError):
        epsilon_m(Multivector.scalar(4, 0.5), (0, 0, 0, 3))


def test_lattice_G_m_splits_off_zeta():
    # the alpha = 0 slice of G_m is exactly zeta_m; the rest decays as the
    # base point moves up the axis
    m = (0, 0, 0, 3)
    zeta = zeta_m(m, 4, 2)
    diffs = []
    for t in (2.0, 4.0, 8.0):
        x = Multivector.vector([0.0, 0.0, 0.0, t])
        diffs.append((lattice_G_m(x, m, box_radius=2) - zeta).norm())
    assert diffs[0] > diffs[1] > diffs[2]
    with pytest.raises(ValueError):
        lattice_G_m(Multivector.vector([0.0, 0.0, 0.0, -1.0]), m)
    with pytest.raises(ValueError):
        lattice_G_m(Multivector.vector([0.0, 0.0, 0.0, 1.0]), (1, 0, 0, 0))


# ---- coset exhaustion --------------------------------------------------------


def test_series_cosets_sign_closure():
    for group in (FULL41, GroupDescriptor.theta(4, 1), GroupDescriptor.principal(4, 1, 2)):
        reps = series_cosets(group, 5)
        keys = {r.key for r in reps}
        for key in keys:
            negated = tuple(tuple((mask, -num, den) for mask, num, den in part) for part in key)
            assert negated in keys


def test_series_cosets_without_neg_identity_is_plain_enumeration():
    g = GroupDescriptor.principal(4, 1, 3)
    assert not contains_neg_identity(g)
    assert series_cosets(g, 6) == enumerate_cosets(g, 6)


# ---- coset series ------------------------------------------------------------


def scalar_point():
    return Multivector.vector([0.3, 0.1, -0.2, 0.4, 1.2])


def test_scalar_series_equals_explicit_loop():
    spec = SeriesSpec("scalar", FULL51, 2, word_limit=4)
    x = scalar_point()
    res = scalar_eisenstein(x, spec)
    total = 0.0
    for rep in series_cosets(FULL51, 4):
        mf = rep.matrix.to_float()
        total += (mf.c * x + mf.d).norm() ** float(spec.s - spec.group.n)
    assert res.value.scalar_part() == pytest.approx(total, rel=1e-12)
    assert res.value.is_scalar()
    assert res.partial_at(spec.word_limit).scalar_part() == pytest.approx(res.value.scalar_part())
    # positive terms: partial sums are nondecreasing
    vals = [v.scalar_part() for _, v in res.partial_sums]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    assert res.coset_count_c0 == 2  # (0, 1) and (0, -1); the rest need longer words
    assert res.n_terms == len(series_cosets(FULL51, 4))


def test_scalar_series_requires_even_weight_and_half_space():
    spec = SeriesSpec("scalar", FULL51, 2, word_limit=2)
    with pytest.raises(ValueError):
        scalar_eisenstein(Multivector.vector([0.0, 0.0, 0.0, 0.0, -1.0]), spec)
    with pytest.raises(ValueError):
        scalar_eisenstein(Multivector.scalar(5, 1.0), spec)
    odd_spec = SeriesSpec("oddweight", FULL51, 1, word_limit=2)
    with pytest.raises(ValueError):
        scalar_eisenstein(scalar_point(), odd_spec)
    with pytest.raises(ValueError):
        odd_weight_eisenstein(scalar_point(), spec)


def test_odd_weight_collapse():
    x = scalar_point()
    spec = SeriesSpec("oddweight", FULL51, 1, word_limit=4)
    assert odd_weight_eisenstein(x, spec).value.norm() < 1e-12
    # without -I the series survives
    g3 = GroupDescriptor.principal(5, 1, 3)
    spec3 = SeriesSpec("oddweight", g3, 1, word_limit=4)
    assert odd_weight_eisenstein(x, spec3).value.norm() > 0.1


def test_vector_series_is_a_poincare_series():
    m = (0, 0, 0, 3)
    vspec = SeriesSpec("vector", FULL41, 1, m=m, word_limit=2, box_radius=1)
    pspec = SeriesSpec("poincare", FULL41, 1, word_limit=2)
    e_n = Multivector.basis(4, 4).to_float()
    f_tilde = lambda u: lattice_G_m(u + e_n, m, box_radius=1)
    x = Multivector.vector([0.2, -0.1, 0.3, 1.1])
    direct = vector_eisenstein(x, vspec)
    via_poincare = poincare_general(f_tilde, pspec)(x)
    assert (direct.value - via_poincare.value).norm() < 1e-14 * max(1.0, direct.value.norm())
    assert direct.n_terms == via_poincare.n_terms


def test_vector_series_weight_parity():
    with pytest.raises(ValueError):
        # spec construction itself allows even s only when convergent;
        # the evaluator then rejects the parity
        vector_eisenstein(Multivector.vector([0.0, 0.0, 0.0, 0.0, 1.0]),
                          SeriesSpec("vector", FULL51, 2, m=(0, 0, 0, 0, 3), word_limit=2))


def test_biregular_series_equals_explicit_loop():
    spec = SeriesSpec("biregular", FULL41, 1, t=1, word_limit=3)
    x = Multivector.vector([0.25, -0.4, 0.1, 1.3])
    y = Multivector.vector([-0.3, 0.2, 0.0, 0.9])
    res = biregular_eisenstein(x, y, spec)
    total = Multivector.zero(4)
    for rep in series_cosets(FULL41, 3):
        mf = rep.matrix.to_float()
        left = left_factor(mf.c * x + mf.d, 1)
        right = q0_general(y * mf.c.reverse() + mf.d.reverse(), 1)
        total = total + left * right
    assert (res.value - total).norm() < 1e-12 * max(1.0, total.norm())
    with pytest.raises(ValueError):
        biregular_eisenstein(x, Multivector.vector([0.0, 0.0, 0.0, -0.5]), spec)


def test_translation_invariance_residual():
    f = lambda x: Multivector.scalar(4, 2.5)
    pts = [Multivector.vector([0.1, 0.2, 0.3, 1.0])]
    assert translation_invariance_residual(f, FULL41, pts) == 0.0
    g = lambda x: Multivector.scalar(4, float(x.component(1)))
    assert translation_invariance_residual(g, FULL41, pts) == pytest.approx(1.0)


# ---- diagnostics -------------------------------------------------------------


def test_coset_norm_sums_monotone():
    sums = coset_norm_sums(FULL41, 3.5, 6)
    assert [lvl for lvl, _ in sums] == list(range(7))
    vals = [v for _, v in sums]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    expect = sum(rep.height ** -3.5 for rep in series_cosets(FULL41, 6))
    assert vals[-1] == pytest.approx(expect, rel=1e-12)


def test_tail_report_shapes():
    spec = SeriesSpec("scalar", FULL51, 2, word_limit=6)
    res = scalar_eisenstein(scalar_point(), spec)
    rep = tail_report(res)
    assert rep["levels"] == list(range(7))
    assert len(rep["deltas"]) == 6
    assert rep["final_delta"] == rep["deltas"][-1]
    assert rep["tail_decreasing"] == (rep["tail_ratio"] < 1.0)
    with pytest.raises(ValueError):
        tail_report([(0, 1.0)])
    with pytest.raises(ValueError):
        tail_report(SeriesResult(Multivector.zero(4), [(0, Multivector.zero(4)), (1, Multivector.zero(4))]))


def test_abscissa_diagnostic_flags():
    diag = abscissa_diagnostic(FULL41, [1.5, 3.5], word_limit=6)
    assert diag[1.5]["below_abscissa"] is True
    assert diag[3.5]["below_abscissa"] is False
    assert diag[3.5]["tail_ratio"] < diag[1.5]["tail_ratio"]
