import numpy as np
import pytest


def random_density(rng, dim=4, rank=None):
    """Random density matrix from a Ginibre factor of the given rank."""
    k = rank if rank is not None else dim
    a = rng.normal(size=(dim, k)) + 1j * rng.normal(size=(dim, k))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_hermitian(rng, dim=4, scale=1.0):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * 0.5 * (a + a.conj().T)


def random_unitary(rng, dim=2):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_separable(rng, n_terms=6):
    """Random mixture of product states (separable by construction)."""
    rho = np.zeros((4, 4), dtype=complex)
    w = rng.dirichlet(np.ones(n_terms))
    for i in range(n_terms):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        v = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
        rho += w[i] * np.outer(v, v.conj())
    return rho


def random_input_qubit(rng):
    from entpot import single_qubit

    p = rng.uniform()
    u = rng.uniform()
    phi = rng.uniform(0.0, 2.0 * np.pi)
    return single_qubit(p, u * np.sqrt(p * (1.0 - p)) * np.exp(1j * phi))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
