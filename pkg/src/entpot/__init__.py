"""Entanglement potentials of single-qubit optical states.

Quantifies nonclassicality through the entanglement (negativity,
concurrence, relative entropy of entanglement) that a state generates when
combined with the vacuum on a beam splitter, including tunable-splitter and
damping-channel generalizations, boundary families and their special
crossing points.
"""

from .states import (
    BeamSplitterConfig,
    GeneralizedHorodeckiParams,
    SingleQubitState,
    balanced_bs_output,
    bell_diagonal,
    generalized_horodecki,
    horodecki_state,
    pure_output,
    pure_qubit,
    single_qubit,
    tunable_bs_output,
    werner,
)
from .measures import (
    MomentResidual,
    ReeResult,
    binary_entropy,
    concurrence,
    eof,
    negativity,
    negativity_moment_residual,
    ree_closed_form,
    ree_numerical,
)

__all__ = [
    "BeamSplitterConfig",
    "GeneralizedHorodeckiParams",
    "SingleQubitState",
    "balanced_bs_output",
    "bell_diagonal",
    "generalized_horodecki",
    "horodecki_state",
    "pure_output",
    "pure_qubit",
    "single_qubit",
    "tunable_bs_output",
    "werner",
    "MomentResidual",
    "ReeResult",
    "binary_entropy",
    "concurrence",
    "eof",
    "negativity",
    "negativity_moment_residual",
    "ree_closed_form",
    "ree_numerical",
]

__version__ = "0.1.0"
