"""Local decoherence channels: phase damping and amplitude damping.

Channels act independently on the two output modes through 2x2 Kraus sets;
closed-form outputs for the partially entangled pure input
sqrt(q)|01> + sqrt(1-q)|10> are provided alongside the generic Kraus route.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import NotTracePreserving, OutOfDomain
from .states import BELL_VECTORS, GeneralizedHorodeckiParams, generalized_horodecki, psi_q_vector

KRAUS_TOL = 1e-12
DEGENERATE_WEIGHT = 1e-12


def _check_range(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise OutOfDomain(f"{name} must lie in [0, 1], got {value}")
    return float(value)


def pdc_kraus(kappa: float) -> list[np.ndarray]:
    """Phase-damping Kraus pair {|0><0| + sqrt(1-k)|1><1|, sqrt(k)|1><1|}."""
    k = _check_range("kappa", kappa)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - k)]], dtype=complex)
    e1 = np.array([[0.0, 0.0], [0.0, np.sqrt(k)]], dtype=complex)
    return [e0, e1]


def adc_kraus(gamma: float) -> list[np.ndarray]:
    """Amplitude-damping Kraus pair {|0><0| + sqrt(1-g)|1><1|, sqrt(g)|0><1|}."""
    g = _check_range("gamma", gamma)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - g)]], dtype=complex)
    e1 = np.array([[0.0, np.sqrt(g)], [0.0, 0.0]], dtype=complex)
    return [e0, e1]


def identity_kraus() -> list[np.ndarray]:
    return [np.eye(2, dtype=complex)]


def validate_kraus(ops: Sequence[np.ndarray], tol: float = KRAUS_TOL) -> None:
    """Check the completeness relation sum_i E_i^dag E_i = I."""
    acc = np.zeros((2, 2), dtype=complex)
    for e in ops:
        acc += e.conj().T @ e
    if np.abs(acc - np.eye(2)).max() > tol:
        raise NotTracePreserving(f"Kraus completeness violated by {np.abs(acc - np.eye(2)).max():.3e}")


def apply_local_channel(
    rho: np.ndarray,
    kraus_q1: Sequence[np.ndarray],
    kraus_q2: Sequence[np.ndarray],
) -> np.ndarray:
    """Apply independent single-qubit channels to both qubits of rho."""
    validate_kraus(kraus_q1)
    validate_kraus(kraus_q2)
    out = np.zeros((4, 4), dtype=complex)
    for e in kraus_q1:
        for f in kraus_q2:
            k = np.kron(e, f)
            out += k @ rho @ k.conj().T
    return out


def pdc_on_pure(q: float, kappa1: float, kappa2: float) -> np.ndarray:
    """Closed-form phase-damped image of sqrt(q)|01> + sqrt(1-q)|10>.

    In the Bell basis: (1/2 - y)|b1><b1| + (1/2 + y)|b2><b2|
    + (q - 1/2)(|b1><b2| + h.c.) with y = sqrt(q(1-q)(1-k1)(1-k2)).
    """
    q = _check_range("q", q)
    k1 = _check_range("kappa1", kappa1)
    k2 = _check_range("kappa2", kappa2)
    y = np.sqrt(q * (1.0 - q) * (1.0 - k1) * (1.0 - k2))
    b1, b2 = BELL_VECTORS[0], BELL_VECTORS[1]
    rho = (
        (0.5 - y) * np.outer(b1, b1.conj())
        + (0.5 + y) * np.outer(b2, b2.conj())
        + (q - 0.5) * (np.outer(b1, b2.conj()) + np.outer(b2, b1.conj()))
    )
    return rho


def adc_on_pure(q: float, gamma1: float, gamma2: float) -> tuple[np.ndarray, GeneralizedHorodeckiParams]:
    """Closed-form amplitude-damped image of sqrt(q)|01> + sqrt(1-q)|10>.

    The output is the generalized Horodecki state with pure-component weight
    w = q(1-g2) + (1-q)(1-g1) and balance q' = q(1-g2)/w; under full decay
    (w ~ 0) the vacuum is returned with q' := 0 by convention.
    """
    q = _check_range("q", q)
    g1 = _check_range("gamma1", gamma1)
    g2 = _check_range("gamma2", gamma2)
    w = q * (1.0 - g2) + (1.0 - q) * (1.0 - g1)
    if w < DEGENERATE_WEIGHT:
        params = GeneralizedHorodeckiParams(0.0, 0.0)
        return generalized_horodecki(0.0, 0.0), params
    qp = q * (1.0 - g2) / w
    qp = min(max(qp, 0.0), 1.0)
    params = GeneralizedHorodeckiParams(float(w), float(qp))
    return generalized_horodecki(w, qp), params


def pdc_pair(kappa1: float, kappa2: float) -> tuple[list[np.ndarray], list[np.ndarray]]:
    return pdc_kraus(kappa1), pdc_kraus(kappa2)


def adc_pair(gamma1: float, gamma2: float) -> tuple[list[np.ndarray], list[np.ndarray]]:
    return adc_kraus(gamma1), adc_kraus(gamma2)


def _psi_q_density(q: float) -> np.ndarray:
    v = psi_q_vector(q)
    return np.outer(v, v.conj())
