import numpy as np
import pytest

from hawking_concurrence.errors import BadParam
from hawking_concurrence.hawking import HawkingFrame, Sector
from hawking_concurrence.pipeline import dilated_isotropic, numeric_concurrence, numeric_grid


def test_dilated_stack_shape_and_trace():
    big = dilated_isotropic(np.array([0.2, 0.9]), 0.3, np.array([0.1, 0.7]))
    assert big.shape == (2, 16, 16)
    assert np.allclose(np.trace(big, axis1=-2, axis2=-1), 1.0)


def test_scalar_and_array_k():
    fr = HawkingFrame(0.2, 0.4)
    single = numeric_concurrence("bf", Sector.AI_BI, 1.0, fr, 0.1)
    assert isinstance(single, float)
    many = numeric_concurrence("bf", Sector.AI_BI, 1.0, fr, [0.0, 0.1])
    assert many.shape == (2,) and many[1] == pytest.approx(single, abs=1e-15)
    assert numeric_concurrence(None, Sector.AI_BI, 1.0, HawkingFrame(0, 0)) == pytest.approx(1.0, abs=1e-14)


def test_grid_matches_pointwise():
    p = np.array([1.0, 0.5, 1.0, 0.8])
    ra = np.array([0.1, 0.1, 0.1, 0.6])
    rb = np.array([0.3, 0.3, 0.3, 0.0])
    k = np.array([0.2, 0.2, 0.9, 0.5])
    got = numeric_grid("pd", Sector.AII_BI, p, ra, rb, k)
    expect = [numeric_concurrence("pd", Sector.AII_BI, *a[:1], HawkingFrame(*a[1:3]), a[3])
              for a in zip(p, ra, rb, k)]
    assert np.allclose(got, expect, atol=1e-15)


def test_rejects_bad_inputs():
    with pytest.raises(BadParam):
        numeric_concurrence("pf", Sector.AI_BI, 1.2, HawkingFrame(0, 0), 0.1)
    with pytest.raises(BadParam):
        numeric_grid("pf", Sector.AI_BI, [1.0], [0.0], [0.0], [-0.5])
