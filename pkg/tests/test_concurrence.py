import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import random_density, random_unitary, random_xstate_matrix, reference_concurrence
from hawking_concurrence.concurrence import (
    concurrence_values,
    concurrence_wootters,
    concurrence_xstate,
    matrix_sqrt_psd,
    spin_flip,
    xstate_spectrum,
)
from hawking_concurrence.errors import NotPositive
from hawking_concurrence.quantum_core import BlochXParams, bloch_to_density, density_to_bloch, tensor

BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)


def test_bell_and_product():
    assert concurrence_wootters(np.outer(BELL, BELL)).value == pytest.approx(1.0, abs=1e-14)
    prod = tensor(np.diag([1.0, 0.0]), np.diag([0.3, 0.7]))
    assert concurrence_wootters(prod).value == pytest.approx(0.0, abs=1e-14)
    assert concurrence_wootters(np.eye(4) / 4).value == 0.0


def test_isotropic_half_weight():
    # max(0, (3p - 1)/2) at p = 1/2
    q = BlochXParams(0, 0, 0.5, 0.5, -0.5)
    assert concurrence_wootters(bloch_to_density(q)).value == pytest.approx(0.25, abs=1e-14)
    assert concurrence_xstate(q).value == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("p", np.linspace(0, 1, 11))
def test_isotropic_family(p):
    q = BlochXParams(0, 0, p, p, -p)
    res = concurrence_xstate(q)
    assert res.value == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-15)
    assert res.clamped == ((3 * p - 1) / 2 < 0)


@given(st.integers(0, 2**32 - 1), st.sampled_from([1, 2, 3, 4]))
def test_wootters_matches_numpy_reference(seed, rank):
    rho = random_density(np.random.default_rng(seed), 4, rank)
    assert concurrence_wootters(rho).value == pytest.approx(reference_concurrence(rho), abs=1e-7)


@given(st.integers(0, 2**32 - 1))
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 4, rank=2)
    u = tensor(random_unitary(rng), random_unitary(rng))
    turned = u @ rho @ u.conj().T
    assert concurrence_wootters(turned).value == pytest.approx(concurrence_wootters(rho).value, abs=1e-12)


@given(st.integers(0, 2**32 - 1))
def test_mixing_with_noise_never_increases(seed):
    rho = random_density(np.random.default_rng(seed), 4, rank=1)
    lam = np.linspace(0, 1, 21)
    mixed = (1 - lam)[:, None, None] * rho + lam[:, None, None] * np.eye(4) / 4
    c = concurrence_values(mixed)
    assert np.all(np.diff(c) <= 1e-12)
    assert c[-1] == 0.0


@given(st.integers(0, 2**32 - 1))
def test_xstate_closed_form_matches_wootters(seed):
    m = random_xstate_matrix(np.random.default_rng(seed))
    q = density_to_bloch(m)
    assert concurrence_xstate(q).value == pytest.approx(concurrence_wootters(m).value, abs=1e-12)


@given(st.integers(0, 2**32 - 1))
def test_xstate_spectrum_matches_eigenvalues(seed):
    m = random_xstate_matrix(np.random.default_rng(seed))
    lam = np.sort(np.linalg.eigvals(m @ spin_flip(m)).real)
    assert np.allclose(np.sort(xstate_spectrum(density_to_bloch(m))), lam, atol=1e-12)


def test_matrix_sqrt(rng):
    rho = random_density(rng, 4, rank=2)
    root = matrix_sqrt_psd(rho)
    assert np.allclose(root @ root, rho, atol=1e-14)


def test_result_fields():
    res = concurrence_wootters(np.outer(BELL, BELL))
    assert len(res.sqrt_eigs) == 4 and list(res.sqrt_eigs) == sorted(res.sqrt_eigs, reverse=True)
    assert not res.clamped


def test_batched_values(rng):
    mats = random_xstate_matrix(rng, 50)
    expect = [concurrence_xstate(density_to_bloch(m)).value for m in mats]
    assert np.allclose(concurrence_values(mats), expect, atol=1e-13)


@pytest.mark.parametrize("rho", [np.diag([1.1, -0.1, 0, 0]), np.eye(2) / 2, np.eye(16) / 16])
def test_rejects_invalid(rho):
    with pytest.raises(NotPositive):
        concurrence_wootters(rho)


def test_stack_input(rng):
    mats = random_xstate_matrix(rng, 30)
    res = concurrence_wootters(mats)
    assert res.value.shape == (30,) and res.sqrt_eigs.shape == (30, 4) and res.clamped.shape == (30,)
    for m, v in zip(mats, res.value):
        assert concurrence_wootters(m).value == pytest.approx(v, abs=1e-15)
    mats[7] = np.diag([1.1, -0.1, 0, 0])
    with pytest.raises(NotPositive, match=r"matrix \(7,\)"):
        concurrence_wootters(mats)
