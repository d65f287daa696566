import numpy as np
import pytest

from spinforge.linalg import COMPLEX, dagger
from spinforge.system import SpinSystem, two_spin


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


@pytest.fixture
def homo2():
    """Two-spin homonuclear system, J = 10 Hz, resolved shifts."""
    return two_spin(j=10.0, shifts=(120.0, -80.0))


@pytest.fixture
def hetero2():
    """Two-spin heteronuclear (1H/13C-like) system with 4:1 polarisations."""
    return two_spin(
        j=10.0,
        shifts=(150.0, -60.0),
        species=("1H", "13C"),
        polarisation=(4e-5, 1e-5),
    )


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return (q * (np.diag(r) / np.abs(np.diag(r)))).astype(COMPLEX)


def random_density(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = z @ dagger(z)
    return (m / np.trace(m)).astype(COMPLEX)


def random_hermitian(rng, dim, scale=1.0):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (scale * (z + dagger(z)) / 2).astype(COMPLEX)


def random_spin_system(rng, n, max_shift=200.0, max_j=20.0):
    j = np.zeros((n, n))
    for i in range(n):
        for k in range(i + 1, n):
            j[i, k] = j[k, i] = rng.uniform(-max_j, max_j)
    return SpinSystem(
        species=tuple("1H" for _ in range(n)),
        shift_hz=tuple(rng.uniform(-max_shift, max_shift) for _ in range(n)),
        j_hz=j,
        polarisation=tuple(1e-5 for _ in range(n)),
        t1_s=tuple(10.0 for _ in range(n)),
        t2_s=tuple(1.0 for _ in range(n)),
    )
