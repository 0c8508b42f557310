"""File-to-image transforms for the four figure kinds.

Each renderer takes input paths plus an output path, draws one figure, and
writes it; there is no display backend and no interactive state.  Input
problems raise FormatError or PlotError so the CLI can exit with a message.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import asymptote, reconstruct
from .formats import (
    _load_json,
    load_branch,
    load_convergence,
    load_speed_csv,
    load_state,
    load_surface,
)


class PlotError(ValueError):
    """Nothing to draw, or inputs inconsistent with the requested figure."""


# marker conventions for branch endpoints, matching the dataset taxonomy
_END_MARKERS = {
    "staticWave": dict(marker="o", color="red", label="static wave"),
    "selfIntersection": dict(marker="^", color="black", label="self-intersection"),
}


def _finish(fig, out_path: str) -> str:
    fig.savefig(out_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return out_path


def render_branches(paths: list[str], out_path: str, overlay: bool = True) -> str:
    """Speed vs displacement for each branch, with asymptote overlays."""
    if not paths:
        raise PlotError("no branch files given")
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    h_max = 0.0
    overlays: list[tuple[asymptote.Asymptote, str]] = []
    for path in paths:
        if path.endswith(".csv"):
            h, c = load_speed_csv(path)
            ax.plot(h, c, ".-", ms=4, label=path.rsplit("/", 1)[-1])
            h_max = max(h_max, float(h.max(initial=0.0)))
            continue
        branch = load_branch(path)
        if not branch.points:
            raise PlotError(f"{path}: branch holds no points")
        label = branch.provenance or path.rsplit("/", 1)[-1]
        if len(branch.points) == 1:
            ax.plot(branch.h, branch.c, "o", label=label)
        else:
            ax.plot(branch.h, branch.c, ".-", ms=4, label=label)
        h_max = max(h_max, float(branch.h.max()))
        if overlay:
            sign = asymptote.branch_sign(branch)
            overlays.append((asymptote.resonant_asymptote(branch, sign), label))
    for asym, label in overlays:
        grid = np.linspace(0.0, h_max, 64)
        ax.plot(grid, asym.speed_at(grid), "-", lw=1.0, alpha=0.7,
                label=f"asymptote ({label})")
    ax.set_xlabel("crest-to-trough displacement h")
    ax.set_ylabel("wave speed c")
    ax.legend(fontsize=8)
    return _finish(fig, out_path)


def _profile_inputs(path: str) -> list[tuple[np.ndarray, float, str]]:
    """Yield (coefficients, wavelength, label) rows for one input file."""
    if path.endswith(".csv"):
        raise PlotError(f"{path}: profiles need coefficient files, not CSV")
    if "points" not in _load_json(path):
        state = load_state(path)
        mval = float(state.config.get("params.M", 2.0 * np.pi))
        return [(state.a, mval, path.rsplit("/", 1)[-1])]
    branch = load_branch(path)
    if not branch.points:
        raise PlotError(f"{path}: branch holds no points")
    mval = branch.param("params.M")
    rows = []
    # first, middle, last spreads amplitude without crowding the axes
    picks = sorted({0, len(branch.points) // 2, len(branch.points) - 1})
    for i in picks:
        point = branch.points[i]
        rows.append((point.a, mval, f"h={point.h:.3g}"))
    return rows


def render_profiles(paths: list[str], out_path: str, samples: int = 512) -> str:
    """Reconstructed interface shapes, one curve per selected state."""
    if not paths:
        raise PlotError("no input files given")
    fig, ax = plt.subplots(figsize=(6.0, 3.5))
    for path in paths:
        for coeffs, mval, label in _profile_inputs(path):
            _, x, y = reconstruct.curve_from_coefficients(coeffs, mval, samples)
            ax.plot(x, y, lw=1.2, label=label)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal", adjustable="datalim")
    ax.legend(fontsize=8)
    return _finish(fig, out_path)


def render_surface(path: str, out_path: str) -> str:
    """Branch family over the sheet-mass axis with endpoint markers."""
    surface = load_surface(path)
    populated = [
        (atilde, branch)
        for atilde, branch in zip(surface.atilde, surface.branches)
        if branch.points
    ]
    if not populated:
        raise PlotError(f"{path}: every branch in the surface is empty")
    fig = plt.figure(figsize=(7.0, 5.0))
    ax = fig.add_subplot(projection="3d")
    seen_markers = set()
    for atilde, branch in populated:
        mass = np.full(len(branch.points), atilde)
        ax.plot(branch.h, mass, branch.c, lw=1.2)
        style = _END_MARKERS.get(branch.termination)
        if style is not None:
            label = style["label"] if branch.termination not in seen_markers else None
            seen_markers.add(branch.termination)
            ax.scatter(
                [branch.h[-1]], [atilde], [branch.c[-1]],
                marker=style["marker"], color=style["color"], s=40, label=label,
            )
    dropped = len(surface.branches) - len(populated)
    title = f"{len(populated)} branches"
    if dropped:
        title += f" ({dropped} empty omitted)"
    ax.set_title(title)
    ax.set_xlabel("displacement h")
    ax.set_ylabel("sheet mass")
    ax.set_zlabel("speed c")
    if seen_markers:
        ax.legend(fontsize=8)
    return _finish(fig, out_path)


def render_convergence(path: str, out_path: str) -> str:
    """Coefficient-decay overlay of the low and high resolution runs."""
    data = load_convergence(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    floor = 1e-17
    for key, style in (("spectrum_low", "o-"), ("spectrum_high", "s-")):
        spec = data[key]
        mag = np.maximum(
            np.abs(np.asarray(spec["a"], dtype=float)),
            np.abs(np.asarray(spec["b"], dtype=float)),
        )
        n_label = data["n_low" if key == "spectrum_low" else "n_high"]
        modes = np.arange(1, len(mag) + 1)
        ax.semilogy(modes, np.maximum(mag, floor), style, ms=3, label=f"n = {n_label}")
    ax.set_xlabel("mode number")
    ax.set_ylabel("coefficient magnitude")
    ax.legend(fontsize=8)
    return _finish(fig, out_path)
