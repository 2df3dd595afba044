"""Dense complex linear algebra for 2x2 and 4x4 operators.

All entropic quantities are returned in bits (base-2 logarithms); natural
logarithms only appear as intermediates.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    NotAState,
    NotHermitian,
    SingularState,
    SupportViolation,
    WrongDimension,
)

HERM_TOL = 1e-10     # elementwise Hermiticity tolerance
EIG_CLIP = 1e-10     # eigenvalues in [-EIG_CLIP, 0] are treated as exact zeros
ENTROPY_EPS = 1e-15  # eigenvalues below this contribute nothing to entropies
SUPPORT_EPS = 1e-14  # below this an eigenvalue counts as outside the support
LOG_FLOOR = 1e-12    # solver floor for "strictly positive" states


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.conj().T)


class HermitianEigen(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns, paired with eigenvalues


def _check_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise WrongDimension(f"expected a square matrix, got shape {m.shape}")


def hermitian_eig(m: np.ndarray, tol: float = HERM_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian if the matrix is asymmetric beyond `tol`.
    """
    m = np.asarray(m, dtype=complex)
    _check_square(m)
    if np.abs(m - m.conj().T).max() > tol:
        raise NotHermitian(f"matrix is not Hermitian within {tol}")
    w, v = np.linalg.eigh(hermitian_part(m))
    return HermitianEigen(w, v)


def partial_transpose(rho: np.ndarray, subsystem: str = "second") -> np.ndarray:
    """Partial transpose of a 4x4 two-qubit operator.

    Basis order is |00>, |01>, |10>, |11| with qubit 1 (x) qubit 2; the
    operation is an involution and preserves trace and Hermiticity.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise WrongDimension(f"partial transpose needs a 4x4 matrix, got {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if subsystem in ("second", 2):
        r = r.transpose(0, 3, 2, 1)
    elif subsystem in ("first", 1):
        r = r.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'first' or 'second', got {subsystem!r}")
    return r.reshape(4, 4)


def _state_eigs(rho: np.ndarray, tol: float = HERM_TOL) -> np.ndarray:
    """Eigenvalues of a density matrix, validated and clipped at zero."""
    eig = hermitian_eig(rho, tol)
    w = eig.eigenvalues
    if abs(w.sum() - 1.0) > 1e-10:
        raise NotAState(f"trace is {w.sum():.12f}, expected 1")
    if w.min() < -EIG_CLIP:
        raise NotAState(f"minimum eigenvalue {w.min():.3e} below -{EIG_CLIP}")
    return np.maximum(w, 0.0)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits; 0*log 0 := 0."""
    w = _state_eigs(rho)
    w = w[w > ENTROPY_EPS]
    return float(-(w * np.log2(w)).sum())


def relative_entropy(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Quantum relative entropy S(rho||sigma) in bits.

    Raises SupportViolation when rho has weight outside the support of
    sigma (the relative entropy is then infinite).
    """
    w_r = _state_eigs(rho)
    eig_s = hermitian_eig(sigma)
    w_s = _state_eigs(sigma)
    v_s = eig_s.eigenvectors
    # weight of rho on each eigenvector of sigma
    weights = np.real(np.einsum("ij,jk,ki->i", v_s.conj().T, rho, v_s))
    outside = w_s <= SUPPORT_EPS
    if np.any(weights[outside] > 1e-10):
        raise SupportViolation("rho has support outside supp(sigma)")
    wr = w_r[w_r > ENTROPY_EPS]
    tr_rho_log_rho = float((wr * np.log2(wr)).sum())
    inside = ~outside
    tr_rho_log_sigma = float(weights[inside] @ np.log2(w_s[inside]))
    return tr_rho_log_rho - tr_rho_log_sigma


def log_frechet_derivative(sigma: np.ndarray, direction: np.ndarray) -> np.ndarray:
    """Frechet derivative of the base-2 matrix log at sigma along `direction`.

    Daleckii-Krein formula in sigma's eigenbasis: coefficient
    (ln a - ln b)/(a - b), with the limit 1/a on near-degenerate pairs.
    Eigenvalues below LOG_FLOOR are clipped there (and the spectrum
    renormalized to the original trace) before differentiating.
    """
    eig = hermitian_eig(sigma)
    w, v = eig.eigenvalues, eig.eigenvectors
    if w.min() < -1e-8:
        raise SingularState(f"state has eigenvalue {w.min():.3e}; not PSD")
    tr = w.sum()
    w = np.maximum(w, LOG_FLOOR)
    w = w * (tr / w.sum())
    d = np.asarray(direction, dtype=complex)
    if d.shape != sigma.shape:
        raise WrongDimension("direction must match sigma's shape")
    if np.abs(d - d.conj().T).max() > HERM_TOL:
        raise NotHermitian("direction must be Hermitian")
    wi = w[:, None]
    wj = w[None, :]
    diff = wi - wj
    near = np.abs(diff) < 1e-12
    coeff = np.where(
        near,
        2.0 / (wi + wj),
        np.log(np.where(near, 1.0, wi / wj)) / np.where(near, 1.0, diff),
    )
    dv = v.conj().T @ d @ v
    out = v @ (dv * coeff) @ v.conj().T / np.log(2.0)
    return hermitian_part(out)
