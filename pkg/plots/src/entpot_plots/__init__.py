"""Offline rendering of entpot CSV output into region and profile figures."""

from .figures import FigureSpec, render, render_profile_figure, render_region_figure
from .io import SchemaMismatch, read_curve, read_points, read_scan

__all__ = [
    "FigureSpec",
    "render",
    "render_profile_figure",
    "render_region_figure",
    "SchemaMismatch",
    "read_curve",
    "read_points",
    "read_scan",
]
