"""Small-amplitude expansions at the 1:2 resonance, plus branch seeds.

At a resonant bending modulus the kernel is spanned by modes 1 and 2 and the
wave expansion rides both from the start.  Solving the second-order
solvability system in closed form gives the speed correction c1 and the
mode-2/mode-1 amplitude ratio t2; their signs select the two ripple branches.
Requires zero mean shear and period 2 pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import curve as curve_mod
from . import linear
from .errors import NoTravelingWaveError, PreconditionError, WiltonExistenceError
from .model import TWO_PI, GridSpec, PhysicalParams, SpectralWaveState, synthesize


def _require_symmetric_setup(params: PhysicalParams) -> None:
    if params.gamma_bar != 0.0:
        raise PreconditionError("expansion requires zero mean shear")
    if not np.isclose(params.M, TWO_PI, rtol=0.0, atol=1e-12):
        raise PreconditionError("expansion requires period 2*pi")


def linear_speed_c0(k: int, params: PhysicalParams) -> float:
    """Positive linear wave speed sqrt(S k^3/2 + S tau1 k/2 + A/k)."""
    _require_symmetric_setup(params)
    kk = abs(int(k))
    if kk < 1:
        raise ValueError("k must be a nonzero integer")
    rad = params.S * kk**3 / 2.0 + params.S * params.tau1 * kk / 2.0 + params.A / kk
    if rad < 0.0:
        raise NoTravelingWaveError(f"negative speed-squared at mode {kk}")
    return float(np.sqrt(rad))


@dataclass(frozen=True)
class WiltonCoefficients:
    """First- and second-order expansion data for one ripple branch."""

    c0: float
    c1: float
    t2: float
    sign_branch: int


def wilton_coefficients(params: PhysicalParams, sign_branch: int = +1) -> WiltonCoefficients:
    """Closed-form (c1, t2) on the selected branch.

    Exists only under the sign stipulation
    (A c0^2 - Atilde)(2 A c0^2 + Atilde) >= 0, and t2 blows up when
    A c0^2 = Atilde.
    """
    _require_symmetric_setup(params)
    pres = linear.p_poly(2, 1, params)
    if abs(pres) > 1e-8 * linear._p_scale(2, 1, params):
        raise PreconditionError("parameters are not at the 1:2 resonance")
    sign = 1 if sign_branch >= 0 else -1
    c0 = linear_speed_c0(1, params)
    f1 = params.A * c0**2 - params.Atilde
    f2 = 2.0 * params.A * c0**2 + params.Atilde
    if f1 * f2 < 0.0:
        raise WiltonExistenceError("sign stipulation violated: no ripple branch")
    if f1 == 0.0:
        raise WiltonExistenceError("amplitude ratio singular at A c0^2 = Atilde")
    c1 = sign * float(np.sqrt(f1 * f2)) / (2.0 * np.sqrt(2.0) * c0)
    t2 = sign * float(np.sqrt(f2 / (2.0 * f1)))
    return WiltonCoefficients(c0, c1, t2, sign)


def wilton_initial_guess(
    eps: float, coeffs: WiltonCoefficients, num_modes: int
) -> SpectralWaveState:
    """Two-mode ripple seed at expansion amplitude eps."""
    if num_modes < 2:
        raise ValueError("need at least two modes for a ripple seed")
    a = np.zeros(num_modes)
    b = np.zeros(num_modes)
    a[0] = -2.0 * eps
    a[1] = -2.0 * eps * coeffs.t2
    b[0] = 4.0 * eps * coeffs.c0
    b[1] = 4.0 * eps * coeffs.c0 * coeffs.t2
    return SpectralWaveState(a, b, coeffs.c0 + eps * coeffs.c1)


def stokes_initial_guess(
    k: int,
    eps: float,
    params: PhysicalParams,
    num_modes: int,
    branch: int = +1,
) -> SpectralWaveState:
    """Single-mode seed along the kernel direction of mode k.

    Scaled so the linearized curve has total displacement about eps; the
    coefficient ratio matches the kernel eigenvector, so the residual of the
    seed is quadratically small in eps.
    """
    if num_modes < k:
        raise ValueError(f"need at least {k} modes for a mode-{k} seed")
    speeds = linear.c_pm(k, params)
    if speeds is None:
        raise NoTravelingWaveError(f"no linear wave at mode {k}")
    c = speeds[0] if branch >= 0 else speeds[1]
    sigma0 = params.M / TWO_PI
    a = np.zeros(num_modes)
    b = np.zeros(num_modes)
    a[k - 1] = -k * eps / (2.0 * sigma0)
    b[k - 1] = -a[k - 1] * c * params.M / np.pi
    return SpectralWaveState(a, b, c)


def higher_resonance_guess(
    n: int,
    eps: float,
    params: PhysicalParams,
    num_modes: int,
    ratio: float = 1.0,
) -> SpectralWaveState:
    """First-order seed for an (1, n) resonance with n > 2.

    No second-order coefficients are available there; the partner-mode
    amplitude ratio defaults to 1 and the speed to c0.
    """
    if n < 2:
        raise ValueError("resonant partner must satisfy n >= 2")
    if num_modes < n:
        raise ValueError(f"need at least {n} modes")
    c0 = linear_speed_c0(1, params)
    a = np.zeros(num_modes)
    b = np.zeros(num_modes)
    a[0] = -2.0 * eps
    a[n - 1] = -2.0 * eps * ratio
    b[0] = 4.0 * eps * c0
    b[n - 1] = 4.0 * eps * c0 * ratio
    return SpectralWaveState(a, b, c0)


def guess_displacement(state: SpectralWaveState, params: PhysicalParams) -> float:
    """Displacement of the seed's reconstructed curve (used to start branches)."""
    grid = GridSpec.for_modes(state.K)
    theta, _ = synthesize(state, grid, params.gamma_bar)
    return curve_mod.displacement(curve_mod.renormalized_curve(theta, params.M))
