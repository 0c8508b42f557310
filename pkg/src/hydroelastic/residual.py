"""Collocation residual of the traveling-wave system.

Two grid equations are assembled and projected onto sine modes 1..K:

  momentum balance (from the sheet strength evolution):
      -(S/sigma^3) (theta'''' + (3/2) theta'^2 theta'' - tau1 sigma^2 theta'')
      - 2 Atilde (cos theta)'
      + (1/sigma) (Vw gamma)'
      - A [ (gamma^2)'/(4 sigma^2) + 2 sigma (sin theta - sin_bar) + (Vw^2)' ]

  kinematic balance:  c sin theta + Re(W* N)

with Vw = c cos theta - Re(W* T) the relative tangential flow.  Both
equations are odd in alpha for the symmetric states in scope, so their sine
coefficients 1..K plus one amplitude pin give a square system in
(a_1..a_K, b_1..b_K, c).  All nonlinear products are formed pointwise on the
oversampled grid; truncation back to K happens in the projection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import curve as curve_mod
from . import spectral
from .birkhoff_rott import evaluate_w_star, normal_component, tangent_component
from .errors import BlowupError
from .model import GridSpec, PhysicalParams, SpectralWaveState, synthesize


@dataclass(frozen=True)
class AmplitudeConstraint:
    """Scalar pin closing the system: either total displacement or one coefficient."""

    kind: str  # "displacement" | "fourier_mode"
    target: float
    mode: int = 0  # 1-based wavenumber, fourier_mode only
    coeff: str = "a"  # "a" (sine of theta) or "b" (cosine of gamma)

    def __post_init__(self) -> None:
        if self.kind not in ("displacement", "fourier_mode"):
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "fourier_mode":
            if self.mode < 1:
                raise ValueError("mode index must be >= 1")
            if self.coeff not in ("a", "b"):
                raise ValueError("coeff must be 'a' or 'b'")

    @classmethod
    def displacement(cls, target: float) -> AmplitudeConstraint:
        return cls("displacement", float(target))

    @classmethod
    def fourier_mode(cls, coeff: str, mode: int, target: float) -> AmplitudeConstraint:
        return cls("fourier_mode", float(target), mode, coeff)


@dataclass(frozen=True)
class ResidualVector:
    """Projected residual rows; stack() orders them like the packed state."""

    f_theta: np.ndarray  # sine rows of the momentum balance
    f_gamma: np.ndarray  # sine rows of the kinematic balance
    f_amp: float

    def stack(self) -> np.ndarray:
        return np.concatenate([self.f_theta, self.f_gamma, [self.f_amp]])

    @property
    def norm(self) -> float:
        return float(np.max(np.abs(self.stack())))


def compute_xi(theta: np.ndarray, params: PhysicalParams, sigma: float) -> np.ndarray:
    """Curvature-elastic interior terms (everything under S/sigma^3 except theta'''')."""
    d1 = spectral.derivative(theta, 1)
    d2 = spectral.derivative(theta, 2)
    bend = 1.5 * d1**2 * d2 - params.tau1 * sigma**2 * d2
    mass = (2.0 * params.Atilde * sigma**3 / params.S) * spectral.derivative(np.cos(theta), 1)
    return bend + mass


def compute_omega_tilde(
    theta: np.ndarray,
    gamma: np.ndarray,
    c: float,
    params: PhysicalParams,
) -> np.ndarray:
    """Renormalized vorticity-balance right side on the grid."""
    cs = curve_mod.renormalized_curve(theta, params.M)
    w = evaluate_w_star(cs, gamma)
    vw = c * np.cos(theta) - tangent_component(cs, w.w_star)
    M, A = params.M, params.A
    return spectral.derivative(vw * gamma, 1) - A * (
        (np.pi * cs.cos_bar / (2.0 * M)) * spectral.derivative(gamma**2, 1)
        + (M**2 / (2.0 * np.pi**2 * cs.cos_bar**2)) * (np.sin(theta) - cs.sin_bar)
        + (M / (2.0 * np.pi * cs.cos_bar)) * spectral.derivative(vw**2, 1)
    )


def grid_equations(
    state: SpectralWaveState,
    params: PhysicalParams,
    grid: GridSpec,
) -> tuple[np.ndarray, np.ndarray, curve_mod.CurveSampling]:
    """Pointwise residual equations before projection, plus the curve."""
    theta, gamma = synthesize(state, grid, params.gamma_bar)
    cs = curve_mod.renormalized_curve(theta, params.M)
    sigma = cs.sigma
    w = evaluate_w_star(cs, gamma)
    vw = state.c * np.cos(theta) - tangent_component(cs, w.w_star)

    S, A = params.S, params.A
    d2 = spectral.derivative(theta, 2)
    d4 = spectral.derivative(theta, 4)
    dth = spectral.derivative(theta, 1)
    eq_momentum = (
        -(S / sigma**3) * (d4 + 1.5 * dth**2 * d2 - params.tau1 * sigma**2 * d2)
        - 2.0 * params.Atilde * spectral.derivative(np.cos(theta), 1)
        + spectral.derivative(vw * gamma, 1) / sigma
        - A
        * (
            spectral.derivative(gamma**2, 1) / (4.0 * sigma**2)
            + 2.0 * sigma * (np.sin(theta) - cs.sin_bar)
            + spectral.derivative(vw**2, 1)
        )
    )
    eq_kinematic = state.c * np.sin(theta) + normal_component(cs, w.w_star)
    return eq_momentum, eq_kinematic, cs


def traveling_wave_residual(
    state: SpectralWaveState,
    params: PhysicalParams,
    constraint: AmplitudeConstraint,
    grid: GridSpec | None = None,
) -> ResidualVector:
    """Assemble the full projected residual for one candidate state."""
    if grid is None:
        grid = GridSpec.for_modes(state.K)
    num = state.K
    eq_momentum, eq_kinematic, cs = grid_equations(state, params, grid)

    f_theta = spectral.sine_coefficients(eq_momentum, num)
    f_gamma = spectral.sine_coefficients(eq_kinematic, num)

    if constraint.kind == "displacement":
        f_amp = curve_mod.displacement(cs) - constraint.target
    else:
        source = state.a if constraint.coeff == "a" else state.b
        if constraint.mode > num:
            raise ValueError("constraint mode exceeds the truncation")
        f_amp = float(source[constraint.mode - 1]) - constraint.target

    out = ResidualVector(f_theta, f_gamma, f_amp)
    if not np.all(np.isfinite(out.stack())):
        raise BlowupError("non-finite residual")
    return out


def parity_leakage(
    state: SpectralWaveState,
    params: PhysicalParams,
    grid: GridSpec | None = None,
) -> float:
    """Largest cosine-mode (or mean) content of either residual equation.

    Both equations are odd functions of alpha for symmetric states, so this
    should sit at roundoff; it is the cheap detector for assembly mistakes.
    """
    if grid is None:
        grid = GridSpec.for_modes(state.K)
    num = state.K
    eq_momentum, eq_kinematic, _ = grid_equations(state, params, grid)
    return float(
        max(
            np.max(np.abs(spectral.cosine_coefficients(eq_momentum, num))),
            np.max(np.abs(spectral.cosine_coefficients(eq_kinematic, num))),
            abs(float(eq_momentum.mean())),
            abs(float(eq_kinematic.mean())),
        )
    )


def residual_function(
    params: PhysicalParams,
    constraint: AmplitudeConstraint,
    grid: GridSpec,
):
    """Vector-to-vector closure for the quasi-Newton solver."""

    def fn(x: np.ndarray) -> np.ndarray:
        st = SpectralWaveState.unpack(x)
        return traveling_wave_residual(st, params, constraint, grid).stack()

    return fn
