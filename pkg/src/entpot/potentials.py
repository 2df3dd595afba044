"""Entanglement potentials: measures of the beam-splitter output state.

Standard potentials use the balanced lossless splitter; generalized
potentials allow a tunable angle and local damping on the output modes,
applied in the fixed order splitter -> amplitude damping -> phase damping.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import adc_pair, apply_local_channel, pdc_pair
from .errors import OutOfDomain
from .measures import concurrence, negativity, ree_numerical
from .states import BeamSplitterConfig, SingleQubitState, balanced_bs_output, single_qubit, tunable_bs_output


@dataclass(frozen=True)
class PotentialTriple:
    """Negativity, concurrence and REE potentials of a single-qubit state."""

    np: float
    cp: float
    reep: float
    converged: bool = True


@dataclass(frozen=True)
class GeneralizedPipeline:
    """Tunable splitter plus optional damping of the output modes.

    adc and pdc are (coefficient_mode1, coefficient_mode2) pairs; None means
    the channel is absent.  Application order is fixed: splitter, then
    amplitude damping, then phase damping.
    """

    bs: BeamSplitterConfig = BeamSplitterConfig()
    adc: tuple[float, float] | None = None
    pdc: tuple[float, float] | None = None


def potentials_of_state(rho: np.ndarray, ree_tol: float = 1e-9) -> PotentialTriple:
    """Measure triple of an already-built two-qubit state."""
    res = ree_numerical(rho, tol=ree_tol)
    return PotentialTriple(
        np=negativity(rho),
        cp=concurrence(rho),
        reep=res.value,
        converged=res.converged,
    )


def standard_potentials(sigma: SingleQubitState, ree_tol: float = 1e-9) -> PotentialTriple:
    """NP, CP and REEP through the balanced lossless beam splitter."""
    return potentials_of_state(balanced_bs_output(sigma), ree_tol=ree_tol)


def pipeline_output(sigma: SingleQubitState, pipe: GeneralizedPipeline) -> np.ndarray:
    """Two-qubit state after the tunable splitter and optional damping."""
    rho = tunable_bs_output(sigma, pipe.bs)
    if pipe.adc is not None:
        rho = apply_local_channel(rho, *adc_pair(*pipe.adc))
    if pipe.pdc is not None:
        rho = apply_local_channel(rho, *pdc_pair(*pipe.pdc))
    return rho


def generalized_potentials(
    sigma: SingleQubitState,
    pipe: GeneralizedPipeline,
    ree_tol: float = 1e-9,
) -> PotentialTriple:
    """GNP, GCP and GREEP of the pipeline output state."""
    return potentials_of_state(pipeline_output(sigma, pipe), ree_tol=ree_tol)


def coherence_from_negativity(p: float, N: float) -> float:
    """Coherence magnitude |x| for which the balanced output has negativity N.

    |x| = (1/2) sqrt((1 + p/N)[2N(N+1) - (N+p)^2]), valid for mixing
    parameters p between N (pure state) and sqrt(2N(N+1)) - N (dephased).
    """
    if not 0.0 < N <= 1.0:
        raise OutOfDomain(f"N must lie in (0, 1], got {N}")
    p_hi = np.sqrt(2.0 * N * (N + 1.0)) - N
    if p < N - 1e-12 or p > p_hi + 1e-12:
        raise OutOfDomain(f"p = {p} outside [{N}, {p_hi}] for N = {N}")
    p = min(max(p, N), p_hi)
    bracket = 2.0 * N * (N + 1.0) - (N + p) ** 2
    bracket = max(bracket, 0.0)
    x = 0.5 * np.sqrt((1.0 + p / N) * bracket)
    # round p(1-p) corner cases down to the physical coherence bound
    return float(min(x, np.sqrt(max(p * (1.0 - p), 0.0))))


def sigma_prime(p: float, N: float, phi: float = 0.0) -> SingleQubitState:
    """State of mixing p and coherence f(p, N) e^{i phi}; its NP equals N."""
    x = coherence_from_negativity(p, N) * np.exp(1j * phi)
    return single_qubit(p, x)
