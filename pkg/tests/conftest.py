import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def random_xstate_matrix(rng, n=None):
    """Valid real X-states: random populations, coherences inside the PSD disc."""
    shape = () if n is None else (n,)
    pops = rng.dirichlet(np.ones(4), size=shape)
    a, b, c, d = (pops[..., i] for i in range(4))
    z1 = rng.uniform(-1, 1, size=shape) * np.sqrt(a * d)
    z2 = rng.uniform(-1, 1, size=shape) * np.sqrt(b * c)
    m = np.zeros(shape + (4, 4))
    for i, v in enumerate((a, b, c, d)):
        m[..., i, i] = v
    m[..., 0, 3] = m[..., 3, 0] = z1
    m[..., 1, 2] = m[..., 2, 1] = z2
    return m


def random_density(rng, dim=4, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=2):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def reference_concurrence(rho):
    """Textbook route with numpy only: eigenvalues of rho rho~."""
    yy = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
    lam = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
    sq = np.sort(np.sqrt(np.clip(lam.real, 0, None)))[::-1]
    return max(0.0, sq[0] - sq[1] - sq[2] - sq[3])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
