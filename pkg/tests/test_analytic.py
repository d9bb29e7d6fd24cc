import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from hawking_concurrence import analytic as an
from hawking_concurrence.errors import BadParam, DegenerateQuadratic
from hawking_concurrence.hawking import R_MAX, HawkingFrame, Sector
from hawking_concurrence.pipeline import numeric_concurrence

SECTORS = list(Sector)
QUARTER = HawkingFrame(R_MAX, R_MAX)
frames = st.builds(HawkingFrame, st.floats(0, R_MAX), st.floats(0, R_MAX))


def test_frozen_values():
    assert an.concurrence_bf(Sector.AI_BI, 1.0, QUARTER, 0.1) == pytest.approx(0.45 - math.sqrt(0.0475), abs=1e-15)
    assert an.concurrence_pd(Sector.AI_BI, 1.0, QUARTER, 0.75) == pytest.approx(0.25, abs=1e-15)
    assert an.concurrence_pf(Sector.AI_BI, 1.0, QUARTER, 0.25) == pytest.approx(0.25, abs=1e-15)
    th = an.bf_thresholds(Sector.AI_BI, 1.0, QUARTER)
    assert th.lo_threshold == pytest.approx(1 - 1 / math.sqrt(2), abs=1e-14)
    assert th.hi_threshold == pytest.approx(1 / math.sqrt(2), abs=1e-14)


@pytest.mark.parametrize("sector", SECTORS)
def test_vacuum_at_full_weight_is_product_of_kept_amplitudes(sector):
    fr = HawkingFrame(0.3, 0.5)
    P, _, R, _ = an.sector_trig(sector, fr.ra, fr.rb)
    assert an.concurrence_vacuum(sector, 1.0, fr) == pytest.approx(P * R, abs=1e-15)


def test_separability_edge():
    p = np.linspace(0, 1, 101)
    got = an.concurrence_vacuum(Sector.AI_BI, p, HawkingFrame(0, 0))
    assert np.allclose(got, np.maximum(0, (3 * p - 1) / 2), atol=1e-15)


@pytest.mark.parametrize("channel", [None, "pd", "pf", "bf"])
@pytest.mark.parametrize("sector", SECTORS)
def test_against_numeric_route(channel, sector):
    ks = np.linspace(0, 1, 9)
    for p in (0.2, 0.55, 0.9, 1.0):
        for fr in (HawkingFrame(0.1, 0.7), HawkingFrame(0.6, 0.2)):
            ana = np.array([an.concurrence(channel, sector, p, fr, k) for k in ks])
            num = numeric_concurrence(channel, sector, p, fr, ks)
            assert np.abs(ana - num).max() < 1e-9


@given(st.sampled_from(SECTORS), st.floats(0, 1), frames)
def test_bit_flip_symmetric_for_every_weight(sector, p, fr):
    k = np.linspace(0, 1, 41)
    c = an.concurrence_bf(sector, p, fr, k)
    assert np.allclose(c, c[::-1], atol=1e-10)


@given(st.sampled_from(SECTORS), st.floats(0, 1), frames)
def test_bit_flip_dead_zone_contains_half_and_is_monotone(sector, p, fr):
    th = an.bf_thresholds(sector, p, fr)
    assert th.lo_threshold <= 0.5 <= th.hi_threshold
    assert an.concurrence_bf(sector, p, fr, 0.5) == 0.0
    k = np.linspace(0, 0.5, 51)
    assert np.all(np.diff(an.concurrence_bf(sector, p, fr, k)) <= 1e-12)


@given(st.sampled_from(SECTORS), st.floats(0.4, 1), frames)
def test_thresholds_are_branch_zeros(sector, p, fr):
    th = an.bf_thresholds(sector, p, fr)
    if th.lo_threshold == 0.0 and th.hi_threshold == 1.0:
        return
    lo, _ = an.bf_branches(sector, p, fr, th.lo_threshold)
    _, hi = an.bf_branches(sector, p, fr, th.hi_threshold)
    assert abs(lo) < 1e-9 and abs(hi) < 1e-9


def test_separable_start_gives_full_dead_zone():
    th = an.bf_thresholds(Sector.AI_BI, 0.2, HawkingFrame(0.1, 0.1))
    assert (th.lo_threshold, th.hi_threshold) == (0.0, 1.0)
    assert th.branch_at(0.3) is an.Branch.DEAD


def test_branch_labels():
    th = an.PiecewiseBranch(0.3, 0.7)
    assert [th.branch_at(k) for k in (0.1, 0.3, 0.5, 0.7, 0.9)] == [
        an.Branch.LOW, an.Branch.LOW, an.Branch.DEAD, an.Branch.HIGH, an.Branch.HIGH
    ]


@given(st.sampled_from(SECTORS), frames)
def test_p1_threshold_formulas_agree(sector, fr):
    gen = an.bf_thresholds(sector, 1.0, fr)
    if gen.lo_threshold == 0.0 and gen.hi_threshold == 1.0:
        return
    if sector in (Sector.AI_BI, Sector.AII_BII):
        # the explicit form divides by x + y and cancels as it shrinks
        x, y = (np.sin if sector is Sector.AI_BI else np.cos)(np.array([fr.ra, fr.rb])) ** 2
        assume(x + y > 1e-3)
    explicit = an.bf_thresholds_p1(sector, fr)
    assert explicit.lo_threshold == pytest.approx(gen.lo_threshold, abs=1e-10)
    assert explicit.hi_threshold == pytest.approx(gen.hi_threshold, abs=1e-10)


@pytest.mark.parametrize("sector", SECTORS)
@pytest.mark.parametrize("r", [0.2, 0.5, R_MAX])
def test_equal_frame_threshold_formulas_agree(sector, r):
    gen = an.bf_thresholds(sector, 1.0, HawkingFrame(r, r))
    eq = an.bf_thresholds_equal(sector, r)
    assert eq.lo_threshold == pytest.approx(gen.lo_threshold, abs=1e-12)
    assert eq.hi_threshold == pytest.approx(gen.hi_threshold, abs=1e-12)


@given(st.sampled_from(SECTORS), frames)
def test_p1_branch_formulas_agree(sector, fr):
    k = np.linspace(0, 1, 21)
    assert np.allclose(an.concurrence_bf_p1(sector, fr, k), an.concurrence_bf(sector, 1.0, fr, k), atol=1e-12)


def test_explicit_thresholds_undefined_at_zero_frame():
    with pytest.raises(BadParam):
        an.bf_thresholds_p1(Sector.AI_BI, HawkingFrame(0.0, 0.0))


def test_vanishing_kept_amplitude_is_dead_everywhere():
    fr = HawkingFrame(1e-300, 0.5)
    assert np.all(an.concurrence_bf(Sector.AII_BII, 0.5, fr, np.linspace(0, 1, 11)) == 0.0)


def test_coefficient_table_roots():
    tab = an.bf_coefficients(Sector.AI_BI, 1.0, QUARTER)
    assert min(an.quadratic_roots(*tab.low)) == pytest.approx(1 - 1 / math.sqrt(2), abs=1e-14)
    assert max(an.quadratic_roots(*tab.high)) == pytest.approx(1 / math.sqrt(2), abs=1e-14)


def test_quadratic_roots():
    assert an.quadratic_roots(1, -3, 2) == pytest.approx([1, 2])
    tiny = an.quadratic_roots(1, -1e8, 1)
    assert tiny[0] == pytest.approx(1e-8, rel=1e-12)
    assert an.quadratic_roots(0, 2, -1) == [0.5]
    assert an.quadratic_roots(1, 0, 1) == []
    assert an.quadratic_roots(1, -2, 1) == [1.0, 1.0]
    with pytest.raises(DegenerateQuadratic):
        an.quadratic_roots(0, 0, 1)


@pytest.mark.parametrize("k", np.linspace(0, 0.99, 12))
def test_phase_damping_alive_until_full_strength(k):
    assert an.concurrence_pd(Sector.AI_BI, 1.0, HawkingFrame(0.4, 0.4), k) > 0
    assert an.concurrence_pd(Sector.AI_BI, 1.0, HawkingFrame(0.4, 0.4), 1.0) == 0.0


def test_phase_flip_revival_is_symmetric():
    k = np.linspace(0, 1, 21)
    c = an.concurrence_pf(Sector.AI_BI, 1.0, HawkingFrame(0.2, 0.3), k)
    assert np.allclose(c, c[::-1], atol=1e-15)
    assert c[10] == 0.0


@pytest.mark.parametrize("mode", list(an.TradeoffMode))
def test_tradeoff_sums(mode):
    for k in np.linspace(0, 0.5, 6):
        fr = HawkingFrame(0.25, 0.65)
        assert an.tradeoff_sum(mode, 1.0, fr, k) == pytest.approx(an.tradeoff_target(mode, k), abs=1e-12)


def test_tradeoff_needs_full_weight():
    with pytest.raises(BadParam):
        an.tradeoff_sum("none", 0.9, QUARTER)


def test_dispatch_errors():
    with pytest.raises(ValueError):
        an.concurrence("amp", Sector.AI_BI, 1.0, QUARTER, 0.1)
    with pytest.raises(BadParam):
        an.concurrence("pd", Sector.AI_BI, 1.0, QUARTER, 1.5)
    with pytest.raises(BadParam):
        an.concurrence_vacuum(Sector.AI_BI, -0.1, QUARTER)


def test_package_exports_the_function():
    import hawking_concurrence

    assert hawking_concurrence.concurrence is an.concurrence
