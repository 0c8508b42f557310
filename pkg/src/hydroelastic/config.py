"""Flat key-value run configuration shared by all CLI commands.

A config file holds `key = value` lines (# comments allowed); every key can
also be overridden on the command line with --set key=value.  Unknown keys
are rejected so typos fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import wilton
from .continuation import ContinuationPolicy, SolverOptions
from .model import TWO_PI, GridSpec, PhysicalParams, SpectralWaveState

_DEFAULTS: dict[str, str] = {
    "params.S": repr(1.0 / 9.0),
    "params.A": "1.0",
    "params.Atilde": "0.2",
    "params.tau1": "2.0",
    "params.gamma_bar": "0.0",
    "params.M": repr(TWO_PI),
    "grid.n": "128",
    "grid.K": "",  # empty: derive (n - 4) // 4
    "solver.tol": "1e-8",
    "solver.max_iter": "200",
    "solver.fd_step": "1e-7",
    "solver.backtracking": "1",
    "continuation.step": "0.01",
    "continuation.step_min": "1e-6",
    "continuation.step_max": "",
    "continuation.max_points": "400",
    "continuation.grow": "1.3",
    "continuation.shrink": "0.5",
    "continuation.easy_iterations": "10",
    "continuation.easy_runs": "2",
    "continuation.self_intersect_tol": "1e-3",
    "continuation.static_speed_factor": "1e-3",
    "continuation.support_eps": "1e-10",
    "guess.kind": "wilton",  # wilton | stokes | resonance | flat
    "guess.sign": "1",
    "guess.k": "2",
    "guess.eps": "1e-3",
    "guess.ratio": "1.0",
    "solve.target": "",  # empty: use the seed's own displacement
    "analyze.kmax": "8",
    "converge.points": "20",
    "surface.atilde": "0.01,0.2",
}


class ConfigError(ValueError):
    """Bad key, bad value, or an inconsistent combination."""


def parse_kv_text(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _merge(file_map: dict[str, str], overrides: list[str]) -> dict[str, str]:
    merged = dict(_DEFAULTS)
    for key, value in file_map.items():
        if key not in _DEFAULTS:
            raise ConfigError(f"unknown config key {key!r}")
        merged[key] = value
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"--set needs key=value, got {item!r}")
        key, value = item.split("=", 1)
        key = key.strip()
        if key not in _DEFAULTS:
            raise ConfigError(f"unknown config key {key!r}")
        merged[key] = value.strip()
    return merged


def _as_float(mapping: dict[str, str], key: str) -> float:
    try:
        return float(mapping[key])
    except ValueError as exc:
        raise ConfigError(f"{key} must be a number, got {mapping[key]!r}") from exc


def _as_int(mapping: dict[str, str], key: str) -> int:
    try:
        return int(mapping[key])
    except ValueError as exc:
        raise ConfigError(f"{key} must be an integer, got {mapping[key]!r}") from exc


def _as_bool(mapping: dict[str, str], key: str) -> bool:
    value = mapping[key].lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{key} must be boolean-like, got {mapping[key]!r}")


@dataclass(frozen=True)
class RunConfig:
    """Validated, typed view of one merged key-value mapping."""

    params: PhysicalParams
    grid_n: int
    grid_modes: int
    solver: SolverOptions
    policy: ContinuationPolicy
    guess_kind: str
    guess_sign: int
    guess_k: int
    guess_eps: float
    guess_ratio: float
    solve_target: float | None
    analyze_kmax: int
    converge_points: int
    surface_atilde: tuple[float, ...]
    mapping: dict[str, str] = field(repr=False)

    @property
    def grid(self) -> GridSpec:
        return GridSpec(self.grid_n)


def build_config(file_map: dict[str, str] | None = None, overrides: list[str] | None = None) -> RunConfig:
    mapping = _merge(file_map or {}, overrides or [])

    try:
        params = PhysicalParams(
            S=_as_float(mapping, "params.S"),
            A=_as_float(mapping, "params.A"),
            Atilde=_as_float(mapping, "params.Atilde"),
            tau1=_as_float(mapping, "params.tau1"),
            gamma_bar=_as_float(mapping, "params.gamma_bar"),
            M=_as_float(mapping, "params.M"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    grid_n = _as_int(mapping, "grid.n")
    if grid_n < 8 or grid_n % 2:
        raise ConfigError("grid.n must be even and >= 8")
    if mapping["grid.K"].strip():
        grid_modes = _as_int(mapping, "grid.K")
    else:
        grid_modes = (grid_n - 4) // 4
    if not 1 <= grid_modes <= grid_n // 2 - 1:
        raise ConfigError(f"grid.K must lie in [1, n/2 - 1], got {grid_modes}")

    tol = _as_float(mapping, "solver.tol")
    fd_step = _as_float(mapping, "solver.fd_step")
    if tol <= 0 or fd_step <= 0:
        raise ConfigError("solver tolerances must be positive")
    solver = SolverOptions(
        tol=tol,
        max_iter=_as_int(mapping, "solver.max_iter"),
        fd_step=fd_step,
        backtracking=_as_bool(mapping, "solver.backtracking"),
    )

    step = _as_float(mapping, "continuation.step")
    step_min = _as_float(mapping, "continuation.step_min")
    if step <= 0 or step_min <= 0:
        raise ConfigError("continuation steps must be positive")
    step_max = (
        _as_float(mapping, "continuation.step_max")
        if mapping["continuation.step_max"].strip()
        else None
    )
    policy = ContinuationPolicy(
        step=step,
        step_min=step_min,
        step_max=step_max,
        max_points=_as_int(mapping, "continuation.max_points"),
        grow=_as_float(mapping, "continuation.grow"),
        shrink=_as_float(mapping, "continuation.shrink"),
        easy_iterations=_as_int(mapping, "continuation.easy_iterations"),
        easy_runs=_as_int(mapping, "continuation.easy_runs"),
        self_intersect_tol=_as_float(mapping, "continuation.self_intersect_tol"),
        static_speed_factor=_as_float(mapping, "continuation.static_speed_factor"),
        support_eps=_as_float(mapping, "continuation.support_eps"),
    )

    kind = mapping["guess.kind"]
    if kind not in ("wilton", "stokes", "resonance", "flat"):
        raise ConfigError(f"unknown guess.kind {kind!r}")

    target_raw = mapping["solve.target"].strip()
    solve_target = float(target_raw) if target_raw else None

    atilde = []
    for piece in mapping["surface.atilde"].split(","):
        piece = piece.strip()
        if piece:
            atilde.append(float(piece))
    if not atilde:
        raise ConfigError("surface.atilde must list at least one value")

    return RunConfig(
        params=params,
        grid_n=grid_n,
        grid_modes=grid_modes,
        solver=solver,
        policy=policy,
        guess_kind=kind,
        guess_sign=1 if _as_float(mapping, "guess.sign") >= 0 else -1,
        guess_k=_as_int(mapping, "guess.k"),
        guess_eps=_as_float(mapping, "guess.eps"),
        guess_ratio=_as_float(mapping, "guess.ratio"),
        solve_target=solve_target,
        analyze_kmax=_as_int(mapping, "analyze.kmax"),
        converge_points=_as_int(mapping, "converge.points"),
        surface_atilde=tuple(atilde),
        mapping=mapping,
    )


def load_config(path: str | None, overrides: list[str] | None = None) -> RunConfig:
    file_map: dict[str, str] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            file_map = parse_kv_text(fh.read())
    return build_config(file_map, overrides)


def make_seed(cfg: RunConfig, params: PhysicalParams | None = None) -> SpectralWaveState:
    """Build the configured initial guess at the configured truncation."""
    p = params if params is not None else cfg.params
    num = cfg.grid_modes
    if cfg.guess_kind == "flat":
        return SpectralWaveState.flat(num)
    if cfg.guess_kind == "wilton":
        coeffs = wilton.wilton_coefficients(p, cfg.guess_sign)
        return wilton.wilton_initial_guess(cfg.guess_eps, coeffs, num)
    if cfg.guess_kind == "stokes":
        return wilton.stokes_initial_guess(cfg.guess_k, cfg.guess_eps, p, num, cfg.guess_sign)
    return wilton.higher_resonance_guess(cfg.guess_k, cfg.guess_eps, p, num, cfg.guess_ratio)
