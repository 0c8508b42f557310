"""File formats: branch/surface JSON, mode-table CSV, convergence reports.

JSON floats use Python's shortest round-trip repr, so stored values carry
full double precision.  CSV files are UTF-8 with LF line endings.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .continuation import BranchPoint, BranchRecord, SurfaceRecord
from .model import GridSpec, PhysicalParams, SpectralWaveState
from .residual import AmplitudeConstraint, traveling_wave_residual


def _point_to_dict(point: BranchPoint) -> dict:
    return {
        "a": [float(v) for v in point.state.a],
        "b": [float(v) for v in point.state.b],
        "c": float(point.state.c),
        "h": float(point.h),
        "param_id": point.param_id,
        "step": float(point.step),
    }


def branch_to_dict(record: BranchRecord, mapping: dict[str, str]) -> dict:
    return {
        "config": dict(mapping),
        "points": [_point_to_dict(p) for p in record.points],
        "termination": record.termination,
        "provenance": record.provenance,
    }


def save_branch(path: str, record: BranchRecord, mapping: dict[str, str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(branch_to_dict(record, mapping), fh, indent=1)
        fh.write("\n")


def params_from_mapping(mapping: dict[str, str]) -> PhysicalParams:
    return PhysicalParams(
        S=float(mapping["params.S"]),
        A=float(mapping["params.A"]),
        Atilde=float(mapping["params.Atilde"]),
        tau1=float(mapping["params.tau1"]),
        gamma_bar=float(mapping["params.gamma_bar"]),
        M=float(mapping["params.M"]),
    )


def load_branch(path: str) -> tuple[BranchRecord, dict[str, str]]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    mapping = data["config"]
    params = params_from_mapping(mapping)
    points = tuple(
        BranchPoint(
            SpectralWaveState(np.array(p["a"]), np.array(p["b"]), p["c"]),
            p["h"],
            p["param_id"],
            p["step"],
        )
        for p in data["points"]
    )
    record = BranchRecord(points, params, data["termination"], data.get("provenance", ""))
    return record, mapping


def branch_csv(path: str, record: BranchRecord) -> None:
    """Speed-amplitude export: one row per branch point."""
    lines = ["h,c,param_id,step"]
    for p in record.points:
        lines.append(f"{p.h!r},{p.state.c!r},{p.param_id},{p.step!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def save_mode_table(path: str, rows: list[dict]) -> None:
    header = "k,lambda_at_cplus,c_plus,c_minus,R,kernel_dim,partner"

    def fmt(value) -> str:
        if value is None:
            return ""
        if isinstance(value, float):
            # normalize numpy scalars so the cell is a plain round-trip repr
            return repr(float(value))
        return str(value)

    lines = [header]
    for row in rows:
        lines.append(
            ",".join(
                fmt(row.get(col))
                for col in ("k", "lambda_at_cplus", "c_plus", "c_minus", "R", "kernel_dim", "partner")
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def save_surface(outdir: str, surface: SurfaceRecord, mapping: dict[str, str]) -> list[str]:
    """One JSON per branch plus an index file; returns the branch paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for i, (atilde, branch) in enumerate(zip(surface.atilde, surface.branches)):
        branch_map = dict(mapping)
        branch_map["params.Atilde"] = repr(atilde)
        name = f"branch_{i:03d}.json"
        save_branch(os.path.join(outdir, name), branch, branch_map)
        paths.append(name)
    index = {
        "config": dict(mapping),
        "atilde": [float(v) for v in surface.atilde],
        "branches": paths,
        "terminations": [b.termination for b in surface.branches],
    }
    with open(os.path.join(outdir, "surface.json"), "w", encoding="utf-8", newline="\n") as fh:
        json.dump(index, fh, indent=1)
        fh.write("\n")
    return paths


def save_state(path: str, state: SpectralWaveState, mapping: dict[str, str], extra: dict | None = None) -> None:
    data = {
        "config": dict(mapping),
        "a": [float(v) for v in state.a],
        "b": [float(v) for v in state.b],
        "c": float(state.c),
    }
    if extra:
        data.update(extra)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def save_convergence(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def point_constraint(point: BranchPoint) -> AmplitudeConstraint:
    """Reconstruct the pin that produced a stored point."""
    if point.param_id == "h":
        return AmplitudeConstraint.displacement(point.h)
    mode = int(point.param_id[1:])
    return AmplitudeConstraint.fourier_mode("a", mode, float(point.state.a[mode - 1]))


def verify_branch(record: BranchRecord, grid: GridSpec, tol: float) -> float:
    """Cold re-evaluation of every stored point; returns the worst residual."""
    worst = 0.0
    for point in record.points:
        res = traveling_wave_residual(point.state, record.params, point_constraint(point), grid)
        worst = max(worst, res.norm)
    if worst > tol:
        raise AssertionError(f"stored branch fails re-evaluation: {worst:.3e} > {tol:.3e}")
    return worst
