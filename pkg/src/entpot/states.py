"""Constructors for single-qubit inputs and two-qubit output states.

Two-qubit matrices use the computational basis |00>, |01>, |10>, |11>
(mode 1 tensor mode 2).  All constructors return trace-normalized 4x4
complex arrays.  The singlet convention is |psi-> = (|01> - |10>)/sqrt(2);
its projector matches the balanced beam-splitter output at p = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import OutOfDomain

COHERENCE_TOL = 1e-12

_S2 = 1.0 / np.sqrt(2.0)

# Bell basis: beta_1 = |psi->, beta_2 = |psi+>, beta_3 = |phi->, beta_4 = |phi+>
BELL_VECTORS = (
    np.array([0, _S2, -_S2, 0], dtype=complex),
    np.array([0, _S2, _S2, 0], dtype=complex),
    np.array([_S2, 0, 0, -_S2], dtype=complex),
    np.array([_S2, 0, 0, _S2], dtype=complex),
)


@dataclass(frozen=True)
class SingleQubitState:
    """Qubit spanned by the vacuum and the single-photon state.

    p is the excitation (mixing) probability, x the coherence between
    |0> and |1>; physicality requires |x|^2 <= p(1-p).
    """

    p: float
    x: complex

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise OutOfDomain(f"p must lie in [0, 1], got {self.p}")
        if abs(self.x) ** 2 > self.p * (1.0 - self.p) + COHERENCE_TOL:
            raise OutOfDomain(
                f"|x|^2 = {abs(self.x)**2:.6g} exceeds p(1-p) = {self.p*(1-self.p):.6g}"
            )

    @property
    def phi(self) -> float:
        return float(np.angle(self.x))

    def matrix(self) -> np.ndarray:
        return np.array([[1.0 - self.p, self.x], [np.conj(self.x), self.p]], dtype=complex)


def single_qubit(p: float, x: complex) -> SingleQubitState:
    """State with populations (1-p, p) and coherence x."""
    return SingleQubitState(float(p), complex(x))


def pure_qubit(p: float, phi: float = 0.0) -> SingleQubitState:
    """Pure superposition sqrt(1-p)|0> + e^{i phi} sqrt(p)|1>."""
    if not 0.0 <= p <= 1.0:
        raise OutOfDomain(f"p must lie in [0, 1], got {p}")
    x = np.sqrt(p * (1.0 - p)) * np.exp(1j * phi)
    if p in (0.0, 1.0):
        x = 0.0 + 0.0j
    return SingleQubitState(float(p), complex(x))


@dataclass(frozen=True)
class BeamSplitterConfig:
    """Lossless beam splitter of angle theta; transmissivity T = cos^2(theta/2)."""

    theta: float = np.pi / 2

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi:
            raise OutOfDomain(f"theta must lie in [0, pi], got {self.theta}")

    @property
    def t(self) -> float:
        return float(np.cos(self.theta / 2))

    @property
    def r(self) -> float:
        return float(np.sin(self.theta / 2))

    @property
    def transmissivity(self) -> float:
        return self.t ** 2

    @property
    def reflectivity(self) -> float:
        return self.r ** 2


class GeneralizedHorodeckiParams(NamedTuple):
    p: float  # weight of the entangled pure component
    q: float  # balance of the pure component sqrt(q)|01> + sqrt(1-q)|10>


def _normalized(rho: np.ndarray) -> np.ndarray:
    return rho / np.real(np.trace(rho))


def balanced_bs_output(sigma: SingleQubitState) -> np.ndarray:
    """Two-qubit output of a balanced lossless beam splitter fed with sigma and vacuum."""
    p, x = sigma.p, sigma.x
    xc = np.conj(x)
    rho = np.array(
        [
            [1.0 - p, -x * _S2, x * _S2, 0.0],
            [-xc * _S2, p / 2.0, -p / 2.0, 0.0],
            [xc * _S2, -p / 2.0, p / 2.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
        dtype=complex,
    )
    return _normalized(rho)


def tunable_bs_output(sigma: SingleQubitState, bs: BeamSplitterConfig) -> np.ndarray:
    """Output of a beam splitter of arbitrary angle; balanced case at theta = pi/2."""
    p, x = sigma.p, sigma.x
    xc = np.conj(x)
    t, r = bs.t, bs.r
    rho = np.array(
        [
            [1.0 - p, -x * r, x * t, 0.0],
            [-xc * r, p * r * r, -p * r * t, 0.0],
            [xc * t, -p * r * t, p * t * t, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
        dtype=complex,
    )
    return _normalized(rho)


def horodecki_state(p: float) -> np.ndarray:
    """Mixture p |psi-><psi-| + (1-p)|00><00| (balanced output of a dephased qubit)."""
    return balanced_bs_output(single_qubit(p, 0.0))


def psi_q_vector(q: float) -> np.ndarray:
    """Partially entangled pure state sqrt(q)|01> + sqrt(1-q)|10>."""
    if not 0.0 <= q <= 1.0:
        raise OutOfDomain(f"q must lie in [0, 1], got {q}")
    return np.array([0.0, np.sqrt(q), np.sqrt(1.0 - q), 0.0], dtype=complex)


def generalized_horodecki(p: float, q: float) -> np.ndarray:
    """Mixture p |psi_q><psi_q| + (1-p)|00><00|."""
    if not 0.0 <= p <= 1.0:
        raise OutOfDomain(f"p must lie in [0, 1], got {p}")
    v = psi_q_vector(q)
    rho = p * np.outer(v, v.conj())
    rho[0, 0] += 1.0 - p
    return _normalized(rho)


def bell_diagonal(weights: Sequence[float]) -> np.ndarray:
    """Mixture of the four Bell states with the given weights (must sum to 1)."""
    w = np.asarray(weights, dtype=float)
    if w.shape != (4,):
        raise OutOfDomain(f"need exactly 4 weights, got {w.shape}")
    if w.min() < 0.0:
        raise OutOfDomain(f"weights must be nonnegative, got {w}")
    if abs(w.sum() - 1.0) > 1e-12:
        raise OutOfDomain(f"weights must sum to 1, got {w.sum()}")
    rho = np.zeros((4, 4), dtype=complex)
    for wi, b in zip(w, BELL_VECTORS):
        rho += wi * np.outer(b, b.conj())
    return _normalized(rho)


def werner(N: float) -> np.ndarray:
    """Werner state parametrized by its negativity N."""
    if not 0.0 <= N <= 1.0:
        raise OutOfDomain(f"N must lie in [0, 1], got {N}")
    b = BELL_VECTORS[0]
    rho = (1.0 + 2.0 * N) / 3.0 * np.outer(b, b.conj()) + (1.0 - N) / 6.0 * np.eye(4)
    return _normalized(rho)


def pure_output(p: float) -> np.ndarray:
    """Projector onto sqrt(1-p)|00> + sqrt(p/2)(|10> - |01>)."""
    if not 0.0 <= p <= 1.0:
        raise OutOfDomain(f"p must lie in [0, 1], got {p}")
    v = np.array([np.sqrt(1.0 - p), -np.sqrt(p / 2.0), np.sqrt(p / 2.0), 0.0], dtype=complex)
    return _normalized(np.outer(v, v.conj()))
