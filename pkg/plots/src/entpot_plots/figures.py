"""Figure assembly: scatter regions with boundary curves, and profiles.

All figures are deterministic given their input files: fixed styling, no
randomness.  Rendering is headless (Agg); the output format follows the
file extension (.png or .svg).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import CsvTable, SchemaMismatch, read_curve, read_points, read_scan

PLANE_COLUMNS = {
    "n-c": ("np", "cp"),
    "ree-c": ("reep", "cp"),
    "ree-n": ("reep", "np"),
}

AXIS_LABELS = {
    "n-c": ("negativity N", "concurrence C"),
    "ree-c": ("relative entropy of entanglement E_R", "concurrence C"),
    "ree-n": ("relative entropy of entanglement E_R", "negativity N"),
}

CURVE_STYLE = {
    "pure": dict(color="black", ls="-", marker="D", markevery=0.12, ms=3.5, label="pure"),
    "horodecki": dict(color="tab:blue", ls="-", marker="o", markevery=0.12, ms=3.5, label="Horodecki"),
    "bell": dict(color="tab:red", ls="-.", label="Bell-diagonal"),
    "rho-a": dict(color="tab:red", ls="-.", lw=1.4, label="optimal gen. Horodecki"),
    "rho-z": dict(color="tab:green", ls="-", lw=1.6, label="optimally dephased"),
    "gh-fixed-p": dict(color="tab:purple", ls=":", label="gen. Horodecki (fixed weight)"),
}

FIGURE_PLANES = {"1a": "n-c", "1b": "ree-c", "1c": "ree-n", "2": "ree-n", "3": "ree-n"}


@dataclass
class FigureSpec:
    figure: str                 # one of 1a, 1b, 1c, 2, 3, 4
    scan: str | None = None
    curves: list[str] = field(default_factory=list)
    points: str | None = None
    out: str = "figure.png"
    annotate: bool = True


def _style_for(table: CsvTable) -> dict:
    kind = str(table.meta.get("kind", "")).lower()
    return dict(CURVE_STYLE.get(kind, dict(color="gray", ls="-", label=kind or "curve")))


def _plot_curves(ax, curves: list[CsvTable], plane: str) -> None:
    for table in curves:
        if table.meta.get("plane") and table.meta["plane"] != plane:
            raise SchemaMismatch(
                f"{table.path}: curve is in plane {table.meta['plane']!r}, figure needs {plane!r}"
            )
        ax.plot(table.column("abscissa"), table.column("ordinate"), **_style_for(table))


def _curve_by_kind(curves: list[CsvTable], kind: str) -> CsvTable | None:
    for table in curves:
        if str(table.meta.get("kind", "")).lower() == kind:
            return table
    return None


def _interp(table: CsvTable, x: np.ndarray) -> np.ndarray:
    return np.interp(x, table.column("abscissa"), table.column("ordinate"))


def render_region_figure(spec: FigureSpec) -> str:
    """Scatter-plus-boundary figure for planes 1a/1b/1c, region figure 2, or 3."""
    if spec.figure not in FIGURE_PLANES:
        raise SchemaMismatch(f"unknown region figure {spec.figure!r}")
    plane = FIGURE_PLANES[spec.figure]
    curves = [read_curve(p) for p in spec.curves]
    fig, ax = plt.subplots(figsize=(5.2, 4.2), dpi=150)

    if spec.figure == "2":
        _shade_regions(ax, curves)
    if spec.scan is not None:
        scan = read_scan(spec.scan)
        xcol, ycol = PLANE_COLUMNS[plane]
        if scan.data.shape[0]:
            ax.scatter(
                scan.column(xcol), scan.column(ycol),
                s=2.0, c="#4a6fa5", alpha=0.35, linewidths=0, label="sampled outputs",
            )
    _plot_curves(ax, curves, plane)

    if spec.points is not None and spec.annotate:
        pts = read_points(spec.points)
        for k in (1, 2, 3):
            e, n = pts[f"e{k}"], pts[f"n{k}"]
            if plane == "ree-n":
                ax.plot([e], [n], marker="*", ms=11, color="black", zorder=5)
                ax.annotate(
                    f"({e:.3f}, {n:.3f})", (e, n),
                    textcoords="offset points", xytext=(6, -10), fontsize=7,
                )
    xl, yl = AXIS_LABELS[plane]
    ax.set_xlabel(xl)
    ax.set_ylabel(yl)
    ax.set_xlim(0.0, 1.0)
    ax.set_ylim(0.0, 1.0)
    if spec.annotate:
        ax.legend(fontsize=7, loc="upper left", framealpha=0.9)
    ax.grid(alpha=0.25, lw=0.4)
    fig.tight_layout()
    _save(fig, spec.out)
    plt.close(fig)
    return spec.out


def _save(fig, out: str) -> None:
    # strip the volatile date from SVG metadata so renders are byte-stable
    if out.endswith(".svg"):
        fig.savefig(out, metadata={"Date": None})
    else:
        fig.savefig(out)


def _shade_regions(ax, curves: list[CsvTable]) -> None:
    """Reachable (yellow) and unreachable-by-balanced-splitter (red) regions.

    Needs the rho-z, bell, rho-a, pure and horodecki curves in the (REE, N)
    plane.  The yellow region lies between the lower envelope of the
    pure/Horodecki curves and the optimally-dephased upper envelope; the red
    crescents extend up to the Bell-diagonal curve and down to the optimal
    generalized Horodecki curve.
    """
    needed = {k: _curve_by_kind(curves, k) for k in ("rho-z", "bell", "rho-a", "pure", "horodecki")}
    missing = [k for k, v in needed.items() if v is None]
    if missing:
        raise SchemaMismatch(f"figure 2 needs curves {missing} in the ree-n plane")
    e = np.linspace(0.0, 1.0, 600)
    n_upper = _interp(needed["rho-z"], e)
    n_bell = _interp(needed["bell"], e)
    n_pure = _interp(needed["pure"], e)
    n_horo = _interp(needed["horodecki"], e)
    n_lower = np.minimum(n_pure, n_horo)
    n_rho_a = _interp(needed["rho-a"], e)
    ax.fill_between(e, n_lower, n_upper, color="#f7e463", alpha=0.8, lw=0, label="balanced-splitter outputs")
    ax.fill_between(e, n_upper, n_bell, color="#e05c5c", alpha=0.75, lw=0, label="dephasing reachable")
    ax.fill_between(e, n_rho_a, n_lower, color="#e05c5c", alpha=0.75, lw=0)


def render_profile_figure(spec: FigureSpec) -> str:
    """Mixing/coherence profiles of the optimally-dephased inputs (figure 4).

    Reads the rho-z curve (ordinate N, params p_z and x_z) and overlays the
    pure and completely-dephased profiles p = N, p = sqrt(2N(1+N)) - N and
    the straight chord of p_z, which makes its curvature visible.
    """
    if spec.figure != "4":
        raise SchemaMismatch(f"render_profile_figure handles figure 4, got {spec.figure!r}")
    if not spec.curves:
        raise SchemaMismatch("figure 4 needs the rho-z curve")
    table = read_curve(spec.curves[0])
    n = table.column("ordinate")
    p_z = table.column("param1")
    x_z = table.column("param2")
    inner = (n > 0.0) & (n < 1.0)
    n, p_z, x_z = n[inner], p_z[inner], x_z[inner]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8.6, 3.6), dpi=150)
    ax1.plot(n, p_z, color="tab:green", lw=1.6, label="optimally dephased")
    ax1.plot(n, n, color="black", ls="--", lw=1.0, label="pure")
    ax1.plot(n, np.sqrt(2 * n * (1 + n)) - n, color="tab:blue", ls=":", lw=1.2, label="completely dephased")
    if spec.annotate and n.size >= 2:
        chord = p_z[0] + (p_z[-1] - p_z[0]) * (n - n[0]) / (n[-1] - n[0])
        ax1.plot(n, chord, color="gray", ls="-.", lw=0.8, label="chord of p_z")
    ax1.set_xlabel("negativity potential N")
    ax1.set_ylabel("mixing parameter p")
    ax1.legend(fontsize=7)
    ax1.grid(alpha=0.25, lw=0.4)

    ax2.plot(n, x_z, color="tab:green", lw=1.6, label="optimally dephased")
    ax2.plot(n, np.sqrt(n * (1 - n)), color="black", ls="--", lw=1.0, label="pure")
    ax2.plot(n, np.zeros_like(n), color="tab:blue", ls=":", lw=1.2, label="completely dephased")
    ax2.set_xlabel("negativity potential N")
    ax2.set_ylabel("coherence |x|")
    ax2.legend(fontsize=7)
    ax2.grid(alpha=0.25, lw=0.4)

    fig.tight_layout()
    _save(fig, spec.out)
    plt.close(fig)
    return spec.out


def render(spec: FigureSpec) -> str:
    if spec.figure == "4":
        return render_profile_figure(spec)
    return render_region_figure(spec)
