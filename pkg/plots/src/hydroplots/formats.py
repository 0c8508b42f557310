"""Readers for the wave-solver data files.

This package talks to the solver only through its emitted files: branch and
surface JSON, single-state JSON, convergence JSON, and the h,c CSV export.
Every reader validates the keys it relies on and reports the offending path,
so a stale or foreign file fails with a usable message instead of a
KeyError three calls deeper.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

import numpy as np


class FormatError(ValueError):
    """Input file missing, unparseable, or not matching the contract."""


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object at top level")
    return data


def _require(data: dict, keys: tuple[str, ...], path: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise FormatError(f"{path}: missing keys {missing}")


@dataclass(frozen=True)
class BranchPoint:
    a: np.ndarray
    b: np.ndarray
    c: float
    h: float
    param_id: str
    step: float


@dataclass(frozen=True)
class Branch:
    config: dict[str, str]
    points: tuple[BranchPoint, ...]
    termination: str
    provenance: str
    path: str

    @property
    def h(self) -> np.ndarray:
        return np.array([p.h for p in self.points])

    @property
    def c(self) -> np.ndarray:
        return np.array([p.c for p in self.points])

    def param(self, key: str) -> float:
        try:
            return float(self.config[key])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"{self.path}: bad config entry {key!r}") from exc


def load_branch(path: str) -> Branch:
    data = _load_json(path)
    _require(data, ("config", "points", "termination"), path)
    points = []
    for i, p in enumerate(data["points"]):
        _require(p, ("a", "b", "c", "h", "param_id", "step"), f"{path} point {i}")
        points.append(
            BranchPoint(
                np.asarray(p["a"], dtype=float),
                np.asarray(p["b"], dtype=float),
                float(p["c"]),
                float(p["h"]),
                str(p["param_id"]),
                float(p["step"]),
            )
        )
    return Branch(
        config=data["config"],
        points=tuple(points),
        termination=str(data["termination"]),
        provenance=str(data.get("provenance", "")),
        path=path,
    )


@dataclass(frozen=True)
class Surface:
    config: dict[str, str]
    atilde: tuple[float, ...]
    branches: tuple[Branch, ...]
    path: str


def load_surface(path: str) -> Surface:
    """Read a surface index and every branch file it references."""
    data = _load_json(path)
    _require(data, ("config", "atilde", "branches", "terminations"), path)
    base = os.path.dirname(os.path.abspath(path))
    branches = tuple(load_branch(os.path.join(base, name)) for name in data["branches"])
    if len(branches) != len(data["atilde"]):
        raise FormatError(f"{path}: atilde/branches length mismatch")
    return Surface(
        config=data["config"],
        atilde=tuple(float(v) for v in data["atilde"]),
        branches=branches,
        path=path,
    )


@dataclass(frozen=True)
class StateFile:
    config: dict[str, str]
    a: np.ndarray
    b: np.ndarray
    c: float
    extra: dict
    path: str


def load_state(path: str) -> StateFile:
    data = _load_json(path)
    _require(data, ("config", "a", "b", "c"), path)
    extra = {k: v for k, v in data.items() if k not in ("config", "a", "b", "c")}
    return StateFile(
        config=data["config"],
        a=np.asarray(data["a"], dtype=float),
        b=np.asarray(data["b"], dtype=float),
        c=float(data["c"]),
        extra=extra,
        path=path,
    )


def load_convergence(path: str) -> dict:
    data = _load_json(path)
    _require(
        data,
        ("config", "n_low", "n_high", "h", "c_low", "c_high", "dc", "spectrum_low", "spectrum_high"),
        path,
    )
    for key in ("spectrum_low", "spectrum_high"):
        _require(data[key], ("a", "b"), f"{path}:{key}")
    return data


def load_speed_csv(path: str) -> tuple[np.ndarray, np.ndarray]:
    """Read the h,c columns of a speed-amplitude CSV export."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not rows or "h" not in rows[0] or "c" not in rows[0]:
        raise FormatError(f"{path}: expected columns h,c")
    h = np.array([float(r["h"]) for r in rows])
    c = np.array([float(r["c"]) for r in rows])
    return h, c
