"""Boundary families of the measure planes and their special points.

Closed-form families (pure, Horodecki, Bell-diagonal) are sampled directly;
the optimally-dephased inputs (sigma_Z) and the REE-maximal generalized
Horodecki states (rho_A) require a scalar optimization of the numerical REE
per sample.  Special points are the three parameter values where these
families cross or merge in the (REE, N) plane.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfDomain, RootNotBracketed, UnsupportedPair
from .measures import negativity, ree_closed_form, ree_numerical
from .potentials import coherence_from_negativity
from .states import SingleQubitState, balanced_bs_output, generalized_horodecki, single_qubit

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0

# "optimizer reached the interval endpoint" predicate width; the interior
# extremum approaches the endpoint linearly near the merge points, so this
# width directly biases the detected merge parameter.  The REE solver's
# value noise (~1e-9) keeps the optimizer reproducible at this scale.
ENDPOINT_TOL = 1e-6


def horodecki_negativity(p: float) -> float:
    """Negativity of the Horodecki state as a function of its mixing p."""
    return float(np.sqrt((1.0 - p) ** 2 + p * p) - (1.0 - p))


def horodecki_mixing_from_negativity(N: float) -> float:
    """Inverse of horodecki_negativity: p = sqrt(2N(1+N)) - N."""
    return float(np.sqrt(2.0 * N * (1.0 + N)) - N)


def q_from_negativity(p: float, N: float, branch: str = "minus") -> float:
    """Balance q of the generalized Horodecki state with weight p and negativity N.

    q = (1/2p)[p +- sqrt(p^2 - N^2 - 2N(1-p))]; the two branches are related
    by q <-> 1-q (a swap of the output modes) and share all measures.
    """
    if p <= 0.0:
        raise OutOfDomain("p must be positive")
    disc = p * p - N * N - 2.0 * N * (1.0 - p)
    if disc < -1e-12:
        raise OutOfDomain(
            f"negative discriminant: p = {p} below sqrt(2N(1+N)) - N for N = {N}"
        )
    root = np.sqrt(max(disc, 0.0))
    q = (p - root) / (2.0 * p) if branch == "minus" else (p + root) / (2.0 * p)
    return float(min(max(q, 0.0), 1.0))


def q_from_concurrence(p: float, C: float, branch: str = "minus") -> float:
    """Balance q of the generalized Horodecki state with weight p and concurrence C."""
    if not 0.0 < C <= p:
        raise OutOfDomain(f"need p >= C > 0, got p = {p}, C = {C}")
    inner = 1.0 - (C / p) ** 2
    root = np.sqrt(max(inner, 0.0))
    q = 0.5 * (1.0 - root) if branch == "minus" else 0.5 * (1.0 + root)
    return float(min(max(q, 0.0), 1.0))


def _minimize_scalar(f, a: float, b: float, xtol: float) -> tuple[float, float]:
    """Golden-section search refined by three parabolic steps.

    f is assumed unimodal on [a, b]; all evaluations go through a cache so
    repeated points (golden-section reuse, parabolic refinement) cost one
    solve each.  Returns the best evaluated point.
    """
    cache: dict[float, float] = {}

    def fc(x):
        if x not in cache:
            cache[x] = f(x)
        return cache[x]

    lo, hi = a, b
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    f_c, f_d = fc(c), fc(d)
    while hi - lo > xtol:
        if f_c < f_d:
            hi, d, f_d = d, c, f_c
            c = hi - GOLDEN * (hi - lo)
            f_c = fc(c)
        else:
            lo, c, f_c = c, d, f_d
            d = lo + GOLDEN * (hi - lo)
            f_d = fc(d)
    # three parabolic refinements through the current best triple
    for _ in range(3):
        xs = sorted(cache)
        i = int(np.argmin([cache[x] for x in xs]))
        if i == 0 or i == len(xs) - 1:
            break
        x1, x2, x3 = xs[i - 1], xs[i], xs[i + 1]
        f1, f2, f3 = cache[x1], cache[x2], cache[x3]
        num = (x2 - x1) ** 2 * (f2 - f3) - (x2 - x3) ** 2 * (f2 - f1)
        den = (x2 - x1) * (f2 - f3) - (x2 - x3) * (f2 - f1)
        if den == 0.0 or not np.isfinite(num / den):
            break
        u = x2 - 0.5 * num / den
        if not a < u < b or abs(u - x2) < 1e-12:
            break
        fc(u)
    x_best = min(cache, key=cache.get)
    return x_best, cache[x_best]


def sigma_z_interval(N: float) -> tuple[float, float]:
    """Admissible mixing range [N, sqrt(2N(N+1)) - N] at fixed negativity N."""
    return float(N), horodecki_mixing_from_negativity(N)


def optimal_sigma_Z(
    N: float, tol: float = 1e-6, ree_tol: float = 1e-9
) -> tuple[SingleQubitState, float]:
    """Optimally-dephased input: minimizes REEP among states of fixed NP = N.

    Returns the state sigma(p_opt, f(p_opt, N)) and its REEP.  The minimizer
    sits at the dephased endpoint for N above the third special point and
    approaches the pure endpoint as N -> 0.
    """
    if not 0.0 < N <= 1.0:
        raise OutOfDomain(f"N must lie in (0, 1], got {N}")
    p_lo, p_hi = sigma_z_interval(N)
    xtol = min(tol, 1e-7)

    def objective(p):
        x = coherence_from_negativity(p, N)
        return ree_numerical(balanced_bs_output(single_qubit(p, x)), tol=ree_tol).value

    if p_hi - p_lo < 1e-12:
        p_opt = p_lo
        val = objective(p_opt)
    else:
        p_opt, val = _minimize_scalar(objective, p_lo, p_hi, xtol)
    state = single_qubit(p_opt, coherence_from_negativity(p_opt, N))
    return state, float(val)


def optimal_rho_A(
    N: float, tol: float = 1e-6, ree_tol: float = 1e-9
) -> tuple[np.ndarray, float]:
    """REE-maximal generalized Horodecki state at fixed negativity N.

    Maximizes the REE of rho_GH(p, q) with q tied to N over the admissible
    weight range; the minus branch of the q inversion is used (the plus
    branch is the mode-swapped state with identical measures).
    """
    if not 0.0 < N <= 1.0:
        raise OutOfDomain(f"N must lie in (0, 1], got {N}")
    p_lo = horodecki_mixing_from_negativity(N)
    xtol = min(tol, 1e-7)

    def neg_objective(p):
        q = q_from_negativity(p, N, "minus")
        return -ree_numerical(generalized_horodecki(p, q), tol=ree_tol).value

    if 1.0 - p_lo < 1e-12:
        p_opt = 1.0
        val = -neg_objective(p_opt)
    else:
        p_opt, nval = _minimize_scalar(neg_objective, p_lo, 1.0, xtol)
        val = -nval
    rho = generalized_horodecki(p_opt, q_from_negativity(p_opt, N, "minus"))
    return rho, float(val)


def optimal_rho_A_mixing(N: float, ree_tol: float = 1e-9) -> float:
    """Optimal weight p of rho_A(N); 1 means the family has merged into pure states."""
    if 1.0 - horodecki_mixing_from_negativity(N) < 1e-12:
        return 1.0
    rho, _ = optimal_rho_A(N, ree_tol=ree_tol)
    # weight of the pure component is 1 - <00|rho|00>
    return float(1.0 - rho[0, 0].real)


def _bisect_sign_change(f, lo: float, hi: float, xtol: float) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise RootNotBracketed(f"no sign change on [{lo}, {hi}]")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def _bisect_predicate(pred, lo: float, hi: float, xtol: float) -> float:
    """Smallest x in [lo, hi] where a monotone predicate turns true."""
    if pred(lo):
        raise RootNotBracketed(f"predicate already true at {lo}")
    if not pred(hi):
        raise RootNotBracketed(f"predicate still false at {hi}")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class SpecialPoints:
    """Crossing/merging coordinates of the boundary families in (REE, N)."""

    n1: float
    e1: float
    n2: float
    e2: float
    n3: float
    e3: float

    def __post_init__(self):
        if not (self.n1 < self.n2 < self.n3 and self.e1 < self.e2 < self.e3):
            raise ValueError(f"special points out of order: {self}")


def special_points(tol: float = 1e-4, ree_tol: float = 1e-9) -> SpecialPoints:
    """The three special points of the (REE, N) plane.

    Point 1: pure and completely-dephased inputs give equal REEP (closed
    forms, bisection on the difference).  Point 2: smallest N where the
    rho_A weight optimizer reaches p = 1 (pure limit).  Point 3: smallest N
    where the sigma_Z mixing optimizer reaches the dephased endpoint.
    """
    def gap(N):
        p_m = horodecki_mixing_from_negativity(N)
        return ree_closed_form("pure", N) - ree_closed_form("horodecki", p_m)

    n1 = _bisect_sign_change(gap, 0.1, 0.9, 1e-10)
    e1 = ree_closed_form("pure", n1)

    def rho_a_merged(N):
        return 1.0 - optimal_rho_A_mixing(N, ree_tol=ree_tol) < ENDPOINT_TOL

    n2 = _bisect_predicate(rho_a_merged, 0.40, 0.65, tol)
    e2 = ree_closed_form("pure", n2)

    def sigma_z_merged(N):
        state, _ = optimal_sigma_Z(N, ree_tol=ree_tol)
        return sigma_z_interval(N)[1] - state.p < ENDPOINT_TOL

    n3 = _bisect_predicate(sigma_z_merged, 0.45, 0.75, tol)
    e3 = ree_closed_form("horodecki", horodecki_mixing_from_negativity(n3))
    return SpecialPoints(n1=n1, e1=e1, n2=n2, e2=e2, n3=n3, e3=e3)


PLANES = {
    "n-c": ("N", "C"),
    "ree-c": ("E_R", "C"),
    "ree-n": ("E_R", "N"),
}

_CLOSED_FORM_KINDS = ("pure", "horodecki", "bell_diagonal")
_OPTIMIZER_KINDS = ("rho_A", "rho_Z", "gh_fixed_p")


@dataclass(frozen=True)
class BoundaryCurve:
    """Sampled boundary family in one measure plane.

    abscissa is strictly increasing; params holds the generating state
    parameters per sample (one row each), documented by param_names.
    """

    kind: str
    plane: str
    axes: tuple[str, str]
    abscissa: np.ndarray
    ordinate: np.ndarray
    params: np.ndarray
    param_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if np.any(np.diff(self.abscissa) <= 0.0):
            raise ValueError(f"{self.kind} curve abscissa is not strictly increasing")


def _graded_grid(n: int) -> np.ndarray:
    """Grid on (0, 1) clustered quadratically at both ends (singular slopes)."""
    k = np.arange(1, n + 1)
    return np.sin(0.5 * np.pi * k / (n + 1)) ** 2


def boundary_curve(
    kind: str,
    n_samples: int,
    measure_pair: str,
    p_fixed: float | None = None,
    ree_tol: float = 1e-9,
    tol: float = 1e-6,
) -> BoundaryCurve:
    """Sample one boundary family in one measure plane.

    Closed-form kinds (pure, horodecki, bell_diagonal) support every plane;
    rho_A, rho_Z and gh_fixed_p are defined in the (REE, N) plane only.
    gh_fixed_p needs the fixed weight p_fixed.
    """
    if measure_pair not in PLANES:
        raise UnsupportedPair(f"unknown plane {measure_pair!r}")
    if n_samples < 2:
        raise OutOfDomain("n_samples must be at least 2")
    axes = PLANES[measure_pair]

    if kind in _CLOSED_FORM_KINDS:
        t = np.linspace(0.0, 1.0, n_samples)
        if kind == "pure":
            n_vals, c_vals = t, t
            e_vals = np.array([ree_closed_form("pure", x) for x in t])
            params, names = t[:, None], ("p",)
        elif kind == "horodecki":
            n_vals = np.array([horodecki_negativity(x) for x in t])
            c_vals = t
            e_vals = np.array([ree_closed_form("horodecki", x) for x in t])
            params, names = t[:, None], ("p",)
        else:
            n_vals, c_vals = t, t
            e_vals = np.array([ree_closed_form("bell_diagonal", x) for x in t])
            params, names = ((1.0 + t) / 2.0)[:, None], ("lambda_max",)
        if measure_pair == "n-c":
            absc, ord_ = n_vals, c_vals
        elif measure_pair == "ree-c":
            absc, ord_ = e_vals, c_vals
        else:
            absc, ord_ = e_vals, n_vals
        return BoundaryCurve(kind, measure_pair, axes, absc, ord_, params, names)

    if kind not in _OPTIMIZER_KINDS:
        raise UnsupportedPair(f"unknown curve kind {kind!r}")
    if measure_pair != "ree-n":
        raise UnsupportedPair(f"{kind} is defined only in the (REE, N) plane")

    if kind == "gh_fixed_p":
        if p_fixed is None:
            raise OutOfDomain("gh_fixed_p requires p_fixed")
        n_max = horodecki_negativity(p_fixed)  # q = 1/2 extreme
        t = np.linspace(0.0, 1.0, n_samples)[1:] * n_max
        absc, ordv, params = [], [], []
        for n_target in t:
            q = q_from_negativity(p_fixed, n_target, "minus")
            val = ree_numerical(generalized_horodecki(p_fixed, q), tol=ree_tol).value
            absc.append(val)
            ordv.append(n_target)
            params.append((p_fixed, q))
        return BoundaryCurve(
            kind, measure_pair, axes,
            np.array(absc), np.array(ordv), np.array(params), ("p", "q"),
        )

    grid = _graded_grid(n_samples - 2)
    absc, ordv, params = [0.0], [0.0], [(0.0, 0.0)]
    for n_target in grid:
        if kind == "rho_Z":
            state, val = optimal_sigma_Z(n_target, tol=tol, ree_tol=ree_tol)
            params.append((state.p, abs(state.x)))
        else:
            rho, val = optimal_rho_A(n_target, tol=tol, ree_tol=ree_tol)
            params.append((1.0 - rho[0, 0].real, n_target))
        absc.append(val)
        ordv.append(n_target)
    absc.append(1.0)
    ordv.append(1.0)
    params.append((1.0, 0.0) if kind == "rho_Z" else (1.0, 1.0))
    names = ("p_z", "x_z") if kind == "rho_Z" else ("p", "n")
    a = np.array(absc)
    o = np.array(ordv)
    pm = np.array(params)
    keep = np.zeros(a.size, dtype=bool)
    last = -np.inf
    for i, v in enumerate(a):
        if v > last:
            keep[i] = True
            last = v
    return BoundaryCurve(kind, measure_pair, axes, a[keep], o[keep], pm[keep], names)
