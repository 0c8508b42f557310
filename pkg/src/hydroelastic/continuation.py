"""Branch continuation in amplitude, with automatic parameter switching.

A branch starts from a small-amplitude seed and is continued in total
displacement h.  Near folds in h the solver starts failing; the step is
halved, and once it underflows the driving parameter switches to the next
supported sine coefficient of theta (ascending wavenumber, skipping
coefficients with no support).  The sign of that coefficient's recent drift
sets the marching direction so the branch does not retrace itself.

Branches end for exactly one of four recorded reasons: the curve touches
itself, the wave becomes static (|c| falls below a fraction of the starting
speed), the point budget runs out, or the solver fails with no parameter
left to switch to.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import curve as curve_mod
from .broyden import SolveReport, broyden_solve
from .errors import WaveError
from .model import GridSpec, PhysicalParams, SpectralWaveState, synthesize
from .residual import AmplitudeConstraint, residual_function

TERMINATIONS = ("selfIntersection", "staticWave", "maxPoints", "solverFailure")


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-8
    max_iter: int = 200
    fd_step: float = 1e-7
    backtracking: bool = True


@dataclass(frozen=True)
class ContinuationPolicy:
    step: float = 0.01  # initial displacement step
    step_min: float = 1e-6
    step_max: float | None = None  # default 10 * step
    max_points: int = 400
    grow: float = 1.3  # applied after `easy_runs` cheap solves in a row
    shrink: float = 0.5
    easy_iterations: int = 10
    easy_runs: int = 2
    self_intersect_tol: float = 1e-3
    static_speed_factor: float = 1e-3  # static wave when |c| <= factor * |c_start|
    support_eps: float = 1e-10

    @property
    def step_cap(self) -> float:
        return self.step_max if self.step_max is not None else 10.0 * self.step


@dataclass(frozen=True)
class BranchPoint:
    state: SpectralWaveState
    h: float
    param_id: str  # "h" or "a<j>"
    step: float  # step in the driving parameter used to reach this point


@dataclass(frozen=True)
class BranchRecord:
    points: tuple[BranchPoint, ...]
    params: PhysicalParams
    termination: str
    provenance: str = ""

    @property
    def speeds(self) -> np.ndarray:
        return np.array([p.state.c for p in self.points])

    @property
    def displacements(self) -> np.ndarray:
        return np.array([p.h for p in self.points])


@dataclass(frozen=True)
class SurfaceRecord:
    params_base: PhysicalParams
    atilde: tuple[float, ...]
    branches: tuple[BranchRecord, ...]


def _constraint(param_id: str, target: float) -> AmplitudeConstraint:
    if param_id == "h":
        return AmplitudeConstraint.displacement(target)
    return AmplitudeConstraint.fourier_mode("a", int(param_id[1:]), target)


def _param_value(param_id: str, state: SpectralWaveState, h: float) -> float:
    if param_id == "h":
        return h
    return float(state.a[int(param_id[1:]) - 1])


def _state_displacement(state: SpectralWaveState, params: PhysicalParams, grid: GridSpec) -> float:
    theta, _ = synthesize(state, grid, params.gamma_bar)
    return curve_mod.displacement(curve_mod.renormalized_curve(theta, params.M))


def continue_branch(
    guess: SpectralWaveState,
    params: PhysicalParams,
    policy: ContinuationPolicy = ContinuationPolicy(),
    solver: SolverOptions = SolverOptions(),
    grid: GridSpec | None = None,
    provenance: str = "",
) -> BranchRecord:
    """Track one solution branch starting from ``guess``."""
    if grid is None:
        grid = GridSpec.for_modes(guess.K)

    def solve(param_id: str, target: float, x0: np.ndarray) -> SolveReport | None:
        fn = residual_function(params, _constraint(param_id, target), grid)
        try:
            report = broyden_solve(
                fn,
                x0,
                tol=solver.tol,
                max_iter=solver.max_iter,
                fd_step=solver.fd_step,
                backtracking=solver.backtracking,
            )
        except WaveError:
            return None
        return report if report.converged else None

    # First point: pin the seed at its own displacement.
    h_seed = _state_displacement(guess, params, grid)
    report = solve("h", h_seed, guess.pack())
    if report is None:
        return BranchRecord((), params, "solverFailure", provenance)
    state = SpectralWaveState.unpack(report.x)
    h = _state_displacement(state, params, grid)
    points: list[BranchPoint] = [BranchPoint(state, h, "h", 0.0)]
    c_start = abs(state.c)

    param_id = "h"
    direction = 1.0
    step = policy.step
    easy = 0
    termination = "maxPoints"

    def next_param(after: str) -> tuple[str, float, float] | None:
        """Next supported theta harmonic above `after`, with drift direction/step."""
        start = 1 if after == "h" else int(after[1:]) + 1
        last = points[-1].state
        prev = points[-2].state if len(points) > 1 else None
        for j in range(start, last.K + 1):
            if abs(last.a[j - 1]) < policy.support_eps:
                continue
            drift = last.a[j - 1] - (prev.a[j - 1] if prev is not None else 0.0)
            if drift != 0.0:
                ndir = float(np.sign(drift))
            elif last.a[j - 1] != 0.0:
                ndir = float(np.sign(last.a[j - 1]))
            else:
                ndir = 1.0
            nstep = float(min(max(abs(drift), 10.0 * policy.step_min), policy.step))
            return f"a{j}", ndir, nstep
        return None

    while len(points) < policy.max_points:
        t_last = _param_value(param_id, points[-1].state, points[-1].h)
        target = t_last + direction * step

        x0 = points[-1].state.pack()
        if len(points) > 1 and points[-2].param_id == param_id:
            t_prev = _param_value(param_id, points[-2].state, points[-2].h)
            if t_last != t_prev:
                slope = (points[-1].state.pack() - points[-2].state.pack()) / (t_last - t_prev)
                x0 = x0 + slope * (target - t_last)

        report = solve(param_id, target, x0)
        if report is None:
            easy = 0
            step *= policy.shrink
            if step < policy.step_min:
                switched = next_param(param_id)
                if switched is None:
                    termination = "solverFailure"
                    break
                param_id, direction, step = switched
            continue

        state = SpectralWaveState.unpack(report.x)
        h = _state_displacement(state, params, grid)
        points.append(BranchPoint(state, h, param_id, direction * step))

        theta, _ = synthesize(state, grid, params.gamma_bar)
        cs = curve_mod.renormalized_curve(theta, params.M)
        crossed, _dist = curve_mod.self_intersects(cs, policy.self_intersect_tol)
        if crossed:
            termination = "selfIntersection"
            break

        if abs(state.c) <= policy.static_speed_factor * c_start:
            refined = _refine_static(points, param_id, solve)
            if refined is not None:
                points.append(refined)
            termination = "staticWave"
            break

        if report.iterations < policy.easy_iterations:
            easy += 1
            if easy >= policy.easy_runs:
                step = min(step * policy.grow, policy.step_cap)
                easy = 0
        else:
            easy = 0

    return BranchRecord(tuple(points), params, termination, provenance)


def _refine_static(points: list[BranchPoint], param_id: str, solve) -> BranchPoint | None:
    """One secant pass targeting c = 0 along the driving parameter."""
    if len(points) < 2:
        return None
    p1, p2 = points[-2], points[-1]
    if p1.param_id != p2.param_id:
        return None
    c1, c2 = p1.state.c, p2.state.c
    if c1 == c2:
        return None
    t1 = _param_value(param_id, p1.state, p1.h)
    t2 = _param_value(param_id, p2.state, p2.h)
    t_star = t2 - c2 * (t2 - t1) / (c2 - c1)
    report = solve(param_id, t_star, p2.state.pack())
    if report is None:
        return None
    state = SpectralWaveState.unpack(report.x)
    if abs(state.c) >= abs(c2):
        return None
    return BranchPoint(state, p2.h, param_id, t_star - t2)


def build_surface(
    guess_family,
    params_base: PhysicalParams,
    atilde_values,
    policy: ContinuationPolicy = ContinuationPolicy(),
    solver: SolverOptions = SolverOptions(),
    grid: GridSpec | None = None,
) -> SurfaceRecord:
    """Continue one branch per sheet-mass value; failures stay in the record.

    ``guess_family`` maps each parameter instance to a seed state.
    """
    branches = []
    for atilde in atilde_values:
        p = replace(params_base, Atilde=float(atilde))
        tag = f"Atilde={atilde:g}"
        try:
            seed = guess_family(p)
            branches.append(continue_branch(seed, p, policy, solver, grid, provenance=tag))
        except WaveError:
            branches.append(BranchRecord((), p, "solverFailure", tag))
    return SurfaceRecord(params_base, tuple(float(v) for v in atilde_values), tuple(branches))
