import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_complex(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_hermitian(rng, n):
    g = random_complex(rng, n, n)
    return g + g.conj().T


def random_spd(rng, n, shift=None):
    """Hermitian positive definite with moderate conditioning."""
    g = random_complex(rng, n, n)
    s = g @ g.conj().T
    if shift is None:
        shift = 0.1 * n
    return s + shift * np.eye(n)
