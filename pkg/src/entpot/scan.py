"""Monte-Carlo scans of input qubits and containment checks against envelopes.

Sampling uses the counter-based Philox generator keyed by (seed, record
index), so any subset of records can be reproduced independently and in
parallel; record i of a scan is the same on every platform and worker
partition.  Sampling law: p uniform on [0,1], |x| = u sqrt(p(1-p)) with u
uniform, phase uniform on [0, 2pi).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator

from .boundaries import BoundaryCurve, horodecki_mixing_from_negativity
from .errors import ContainmentViolation, EntPotError, OutOfDomain
from .measures import ree_closed_form
from .potentials import PotentialTriple, standard_potentials
from .states import SingleQubitState, single_qubit

PHI_CHECK_STRIDE = 100  # spot-check phase invariance on 1% of records
PHI_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class ScanConfig:
    n_states: int
    seed: int
    ree_tol: float = 1e-9

    def __post_init__(self):
        if self.n_states < 1:
            raise OutOfDomain("n_states must be at least 1")
        if self.seed < 0:
            raise OutOfDomain("seed must be a nonnegative integer")


@dataclass(frozen=True)
class ScanRecord:
    index: int
    p: float
    x_abs: float
    phi: float
    potentials: PotentialTriple


def sample_state(seed: int, index: int) -> SingleQubitState:
    """Deterministic input-qubit draw for one record of a seeded scan."""
    gen = np.random.Generator(np.random.Philox(key=[seed, index]))
    p = gen.uniform()
    u = gen.uniform()
    phi = gen.uniform(0.0, 2.0 * np.pi)
    x = u * np.sqrt(p * (1.0 - p)) * np.exp(1j * phi)
    return single_qubit(p, x)


def run_scan(cfg: ScanConfig) -> list[ScanRecord]:
    """Evaluate the potential triple for every sampled record.

    Unconverged REE solves are flagged on the record, never dropped.  Every
    PHI_CHECK_STRIDE-th record is recomputed at zero phase and must agree.
    """
    records = []
    for i in range(cfg.n_states):
        s = sample_state(cfg.seed, i)
        t = standard_potentials(s, ree_tol=cfg.ree_tol)
        if i % PHI_CHECK_STRIDE == 0:
            t0 = standard_potentials(single_qubit(s.p, abs(s.x)), ree_tol=cfg.ree_tol)
            drift = max(abs(t.np - t0.np), abs(t.cp - t0.cp), abs(t.reep - t0.reep))
            if drift > PHI_CHECK_TOL:
                raise EntPotError(f"phase invariance violated at record {i}: drift {drift:.2e}")
        records.append(ScanRecord(i, s.p, abs(s.x), s.phi, t))
    return records


def failure_count(records: Sequence[ScanRecord]) -> int:
    return sum(1 for r in records if not r.potentials.converged)


def _invert_increasing(f, target: float, lo: float = 0.0, hi: float = 1.0) -> float:
    """Inverse of a monotone increasing scalar function by bisection."""
    if target <= f(lo):
        return lo
    if target >= f(hi):
        return hi
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def pure_concurrence_at_ree(e: float) -> float:
    """C of the pure family at REE e (lower envelope of the (REE, C) plane)."""
    return _invert_increasing(lambda c: ree_closed_form("pure", c), e)


def horodecki_concurrence_at_ree(e: float) -> float:
    """C of the Horodecki family at REE e (upper envelope of the (REE, C) plane)."""
    return _invert_increasing(lambda p: ree_closed_form("horodecki", p), e)


def horodecki_concurrence_at_negativity(n: float) -> float:
    """C of the Horodecki family at negativity n (upper envelope of (N, C))."""
    return horodecki_mixing_from_negativity(n)


def bell_negativity_at_ree(e: float) -> float:
    """N of the Bell-diagonal family at REE e (two-qubit upper bound in (REE, N))."""
    return _invert_increasing(lambda n: ree_closed_form("bell_diagonal", n), e)


def horodecki_negativity_at_ree(e: float) -> float:
    """N of the Horodecki family at REE e."""
    p = _invert_increasing(lambda t: ree_closed_form("horodecki", t), e)
    return float(np.sqrt((1.0 - p) ** 2 + p * p) - (1.0 - p))


@dataclass(frozen=True)
class ContainmentReport:
    plane: str
    n_records: int
    n_violations: int
    max_excess: float
    min_bell_gap: float | None = None


def containment_report(
    records: Sequence[ScanRecord],
    curves: Sequence[BoundaryCurve],
    plane: str,
    tol: float = 1e-5,
) -> ContainmentReport:
    """Check that every record stays inside the plane's boundary envelopes.

    Planes n-c and ree-c test against the exact pure/Horodecki closed forms;
    ree-n needs the sampled rho_Z curve among `curves` for the upper envelope
    and also reports the (always positive) gap to the Bell-diagonal bound.
    Raises ContainmentViolation when any record escapes by more than tol.
    """
    if plane not in ("n-c", "ree-c", "ree-n"):
        raise OutOfDomain(f"unknown plane {plane!r}")
    offenders = []
    max_excess = -np.inf
    min_gap = None
    if plane == "ree-n":
        rho_z = next((c for c in curves if c.kind == "rho_Z" and c.plane == "ree-n"), None)
        if rho_z is None:
            raise OutOfDomain("ree-n containment needs the rho_Z boundary curve")
        envelope = PchipInterpolator(rho_z.abscissa, rho_z.ordinate, extrapolate=False)
        min_gap = np.inf
    for r in records:
        t = r.potentials
        if plane == "n-c":
            excess = max(t.np - t.cp, t.cp - horodecki_concurrence_at_negativity(t.np))
        elif plane == "ree-c":
            excess = max(
                pure_concurrence_at_ree(t.reep) - t.cp,
                t.cp - horodecki_concurrence_at_ree(t.reep),
            )
        else:
            e = min(max(t.reep, 0.0), 1.0)
            env = float(envelope(e)) if 0.0 <= e <= 1.0 else 1.0
            # the pure and completely-dephased families are rigorous lower
            # bounds on the sigma_Z envelope; clamping guards records hugging
            # those families against interpolation sag between curve nodes
            env = max(env, pure_concurrence_at_ree(e), horodecki_negativity_at_ree(e))
            excess = t.np - env
            min_gap = min(min_gap, bell_negativity_at_ree(e) - t.np)
        max_excess = max(max_excess, excess)
        if excess > tol:
            offenders.append(r.index)
    if offenders:
        raise ContainmentViolation(
            f"{len(offenders)} records escape the {plane} envelope (max excess {max_excess:.3e})",
            offenders=offenders,
        )
    return ContainmentReport(
        plane=plane,
        n_records=len(records),
        n_violations=0,
        max_excess=float(max_excess) if records else 0.0,
        min_bell_gap=None if min_gap is None else float(min_gap),
    )
