"""Figure rendering for traveling-wave solver data files.

Consumes the solver's emitted JSON/CSV files only; the solver package
itself is never imported.
"""

from .figures import (
    PlotError,
    render_branches,
    render_convergence,
    render_profiles,
    render_surface,
)
from .formats import FormatError

__all__ = [
    "FormatError",
    "PlotError",
    "render_branches",
    "render_convergence",
    "render_profiles",
    "render_surface",
]
