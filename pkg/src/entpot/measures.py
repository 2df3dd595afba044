"""Entanglement measures for two-qubit states.

Negativity and concurrence are direct spectral computations.  The relative
entropy of entanglement (REE) is a convex minimization over the PPT set
(which equals the separable set for two qubits); the jitted kernel lives in
_ree_core and the closed forms for the three solvable families are exposed
through ree_closed_form.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _ree_core
from .errors import NonPhysicalSpectrum, OutOfDomain
from .linalg import (
    ENTROPY_EPS,
    LOG_FLOOR,
    hermitian_part,
    partial_transpose,
    relative_entropy,
)

_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_Y, _Y)

PPT_TOL = 1e-10  # partial-transpose eigenvalues above -PPT_TOL count as separable


def negativity(rho: np.ndarray) -> float:
    """N(rho) = max(0, -2 min eig rho^PT)."""
    w = np.linalg.eigvalsh(hermitian_part(partial_transpose(rho)))
    return float(max(0.0, -2.0 * w[0]))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence from the spectrum of rho (Y x Y) rho* (Y x Y).

    The lambda_j (square roots of that spectrum) equal the singular values
    of sqrt(rho) (YxY) sqrt(rho)^T, which avoids squaring and keeps the
    accuracy of C near machine precision; conjugation is taken in the
    computational basis.  Eigenvalues of rho below -1e-8 raise
    NonPhysicalSpectrum; smaller negatives are clipped to zero.
    """
    rho = np.asarray(rho, dtype=complex)
    w, v = np.linalg.eigh(hermitian_part(rho))
    if w.min() < -1e-8:
        raise NonPhysicalSpectrum(f"state has eigenvalue {w.min():.3e}")
    w = np.where(w < 1e-14, 0.0, w)
    root = (v * np.sqrt(w)) @ v.conj().T
    lam = np.linalg.svd(root @ _YY @ root.T, compute_uv=False)
    return float(max(0.0, 2.0 * lam.max() - lam.sum()))


def binary_entropy(y: float) -> float:
    """h(y) = -y log2 y - (1-y) log2(1-y)."""
    if not -1e-12 <= y <= 1.0 + 1e-12:
        raise OutOfDomain(f"binary entropy argument must lie in [0, 1], got {y}")
    y = min(max(y, 0.0), 1.0)
    if y in (0.0, 1.0):
        return 0.0
    return float(-y * np.log2(y) - (1.0 - y) * np.log2(1.0 - y))


def eof(concurrence_value: float) -> float:
    """Entanglement of formation as a function of the concurrence."""
    c = concurrence_value
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise OutOfDomain(f"concurrence must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - c * c)))


def ree_closed_form(family: str, parameter: float) -> float:
    """Exact REE of the pure, Horodecki and Bell-diagonal families.

    The parameter is the negativity N for 'pure' and 'bell_diagonal' and the
    mixing probability p for 'horodecki'.
    """
    if not -1e-12 <= parameter <= 1.0 + 1e-12:
        raise OutOfDomain(f"parameter must lie in [0, 1], got {parameter}")
    t = min(max(parameter, 0.0), 1.0)
    if family == "pure":
        return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - t * t)))
    if family == "horodecki":
        out = (t - 2.0) * np.log2(1.0 - t / 2.0)
        if t < 1.0:
            out += (1.0 - t) * np.log2(1.0 - t)
        return float(out)
    if family == "bell_diagonal":
        return 1.0 - binary_entropy(0.5 * (1.0 + t))
    raise OutOfDomain(f"unknown family {family!r}")


@dataclass(frozen=True)
class MomentResidual:
    """Measurable partial-transpose moments and the negativity identity residual."""

    pi2: float
    pi3: float
    det: float
    residual: float


def negativity_moment_residual(rho: np.ndarray) -> MomentResidual:
    """Residual of 48 D + 3N^4 + 6N^3 - 6N^2 Pi2' - 4N(3 Pi2' - 2 Pi3').

    Pi_n' = Tr[(rho^PT)^n] - 1 and D = det rho^PT; the combination vanishes
    identically, so the residual measures numerical consistency between the
    eigensolved negativity and the moment representation.
    """
    w = np.linalg.eigvalsh(hermitian_part(partial_transpose(rho)))
    n = max(0.0, -2.0 * w[0])
    pi2 = float((w ** 2).sum() - 1.0)
    pi3 = float((w ** 3).sum() - 1.0)
    det = float(np.prod(w))
    residual = abs(48.0 * det + 3.0 * n ** 4 + 6.0 * n ** 3 - 6.0 * n * n * pi2
                   - 4.0 * n * (3.0 * pi2 - 2.0 * pi3))
    return MomentResidual(pi2=pi2, pi3=pi3, det=det, residual=residual)


def _proj_simplex(w: np.ndarray) -> np.ndarray:
    u = np.sort(w)[::-1]
    cs = np.cumsum(u)
    ks = np.arange(1, w.size + 1)
    k = ks[u + (1.0 - cs) / ks > 0][-1]
    tau = (1.0 - cs[k - 1]) / k
    return np.maximum(w + tau, 0.0)


def _proj_spectrahedron(a: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(hermitian_part(a))
    return (v * _proj_simplex(w)) @ v.conj().T


def project_ppt(x: np.ndarray, tol: float = 1e-13, max_cycles: int = 2000) -> np.ndarray:
    """Frobenius-nearest PPT state via Dykstra's alternating projections.

    Alternates between the trace-1 PSD spectrahedron in the plain and
    partially transposed pictures, with Dykstra correction terms.
    """
    x = np.asarray(x, dtype=complex)
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    z = x
    for _ in range(max_cycles):
        y = _proj_spectrahedron(x + p)
        p = x + p - y
        z = partial_transpose(_proj_spectrahedron(partial_transpose(y + q)))
        q = y + q - z
        if np.abs(y - z).max() < tol:
            break
        x = z
    return z


@dataclass(frozen=True)
class ReeResult:
    """REE value (bits) with the closest separable state and solver diagnostics."""

    value: float
    css: np.ndarray
    iterations: int
    converged: bool
    final_step_norm: float


def _floor_state(sigma: np.ndarray, floor: float = LOG_FLOOR) -> np.ndarray:
    w, v = np.linalg.eigh(hermitian_part(sigma))
    w = np.maximum(w, floor)
    w = w / w.sum()
    return (v * w) @ v.conj().T


def ree_numerical(rho: np.ndarray, tol: float = 1e-9, max_iter: int = 20000) -> ReeResult:
    """Relative entropy of entanglement of a two-qubit state.

    Deterministic for fixed (rho, tol, max_iter).  A PPT input returns
    value 0 with itself as the closest separable state.  Non-convergence is
    reported through the `converged` flag, never raised.
    """
    rho = np.ascontiguousarray(hermitian_part(np.asarray(rho, dtype=complex)))
    w_pt = np.linalg.eigvalsh(hermitian_part(partial_transpose(rho)))
    if w_pt[0] >= -PPT_TOL:
        return ReeResult(0.0, rho.copy(), 0, True, 0.0)
    w_rho = np.linalg.eigvalsh(rho)
    wpos = w_rho[w_rho > ENTROPY_EPS]
    tr_rho_log_rho = float((wpos * np.log2(wpos)).sum())
    val, sigma, iters, conv, min_pt, step = _ree_core._central_path(
        rho, tr_rho_log_rho, tol, max_iter, _ree_core.BASIS
    )
    css = sigma
    if min_pt < 0.0:
        css = _floor_state(project_ppt(sigma))
    value = relative_entropy(rho, css)
    return ReeResult(max(value, 0.0), css, int(iters), bool(conv), float(step))
