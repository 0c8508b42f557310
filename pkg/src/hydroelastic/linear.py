"""Flat-state linear theory: dispersion, kernel classification, transversality.

Everything here is closed-form in the wavenumber k.  The per-mode symbol of
the linearized operator is a 2x2 block acting on (theta_hat, gamma_hat); its
nontrivial eigenvalue lambda_k vanishes exactly at the two linear wave speeds
c_±(k), and a two-dimensional kernel appears when a second integer mode l
shares a speed with k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpeedError,
    NoTravelingWaveError,
    PreconditionError,
)
from .model import PhysicalParams

PI = np.pi


def lambda_k(k: int, c: float, params: PhysicalParams) -> float:
    """Nontrivial symbol eigenvalue at wavenumber k >= 1 and speed c."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    S, A, t1, gb, M = params.S, params.A, params.tau1, params.gamma_bar, params.M
    t2 = M**2 * t1 / (4 * PI**2)
    t3 = (-(c**2) * M**3 + 2 * A * c * gb * M**2 * PI - gb**2 * M * PI**2) / (4 * PI**3 * S)
    t4 = A * M**4 / (8 * PI**4 * S)
    return 1.0 + t2 / k**2 + t3 / k**3 + t4 / k**4


def r_poly(k: int, params: PhysicalParams) -> float:
    """Radicand polynomial R(k); traveling waves at k require R >= 0."""
    S, A, t1, gb, M = params.S, params.A, params.tau1, params.gamma_bar, params.M
    return (
        A * M**4
        + 2 * (A**2 - 1) * gb**2 * M * PI**3 * k
        + 2 * M**2 * PI**2 * S * t1 * k**2
        + 8 * PI**4 * S * k**4
    )


def c_pm(k: int, params: PhysicalParams) -> tuple[float, float] | None:
    """Linear wave speeds (c_plus, c_minus) at wavenumber k, or None if R < 0."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    rv = r_poly(k, params)
    if rv < 0.0:
        return None
    drift = params.A * params.gamma_bar * PI / params.M
    spread = np.sqrt(rv / (2 * k * params.M**3 * PI))
    return (drift + spread, drift - spread)


def p_poly(l: int, k: int, params: PhysicalParams) -> float:
    """Resonance polynomial; p(l, k) = 0 when modes k and l share a speed."""
    S, A, t1, M = params.S, params.A, params.tau1, params.M
    return -A * M**4 + 2 * k * l * PI**2 * S * (4 * (k**2 + k * l + l**2) * PI**2 + M**2 * t1)


def resonant_s(n: int, A: float, tau: float) -> float:
    """Bending modulus making mode n resonate with mode 1: S = 2A/(n(n^2+n+1+tau))."""
    if n < 2:
        raise ValueError("n must be an integer >= 2")
    if not A > 0.0:
        raise ValueError("A must be positive for a resonant modulus")
    return 2.0 * A / (n * (n**2 + n + 1 + tau))


def _p_scale(l: float, k: int, params: PhysicalParams) -> float:
    S, A, t1, M = params.S, params.A, params.tau1, params.M
    ll = max(1.0, abs(l))
    return abs(A) * M**4 + 2 * k * ll * PI**2 * S * (
        4 * (k**2 + k * ll + ll**2) * PI**2 + M**2 * t1
    )


def resonance_partner_root(k: int, params: PhysicalParams) -> float:
    """The single real root l of the cubic p(., k)."""
    S, t1, M = params.S, params.tau1, params.M
    c3 = 8 * k * S * PI**4
    c2 = 8 * k**2 * S * PI**4
    c1 = 2 * k * S * PI**2 * (4 * k**2 * PI**2 + M**2 * t1)
    c0 = -params.A * M**4
    roots = np.roots([c3, c2, c1, c0])
    real = [r for r in roots if abs(r.imag) <= 1e-8 * max(1.0, abs(r))]
    if len(real) != 1:
        # fall back to the most-real root; the cubic has exactly one real root
        real = sorted(roots, key=lambda r: abs(r.imag))[:1]
    return float(real[0].real)


@dataclass(frozen=True)
class ModeAnalysis:
    """Classification of one wavenumber's kernel contribution."""

    k: int
    lam: float  # lambda_k evaluated at c_plus; ~0 by construction
    c_plus: float
    c_minus: float
    r_value: float
    kernel_dim: int  # 1, or 2 at an exact integer resonance
    partner: int | None


def kernel_classify(
    k: int, params: PhysicalParams, integer_tol: float = 1e-8
) -> ModeAnalysis:
    """Decide whether mode k resonates with another integer mode.

    kernel_dim is 2 exactly when the real root l of p(., k) rounds to a
    positive integer different from k and the rounded value satisfies
    p(l, k) = 0 to within 1e-9 of the polynomial's term scale.
    """
    speeds = c_pm(k, params)
    if speeds is None:
        raise NoTravelingWaveError(f"R({k}) < 0: no linear wave at this mode")
    root = resonance_partner_root(k, params)
    near = int(round(root))
    kernel_dim, partner = 1, None
    if (
        abs(root - near) <= integer_tol
        and near >= 1
        and near != k
        and abs(p_poly(near, k, params)) <= 1e-9 * _p_scale(near, k, params)
    ):
        kernel_dim, partner = 2, near
    lam = lambda_k(k, speeds[0], params)
    return ModeAnalysis(k, lam, speeds[0], speeds[1], r_poly(k, params), kernel_dim, partner)


def linearization_symbol(k: int, c: float, params: PhysicalParams) -> np.ndarray:
    """2x2 Fourier symbol of the flat-state linearization at signed mode k != 0."""
    if k == 0:
        raise ValueError("symbol defined for nonzero modes only")
    S, A, t1, gb, M = params.S, params.A, params.tau1, params.gamma_bar, params.M
    ak, sk = abs(k), np.sign(k)
    l11 = (
        1.0
        - (gb * M / (4 * PI * S)) * (gb - c * A * M / PI) / ak**3
        + (A * M**4 / (8 * PI**4 * S)) / k**4
        + (t1 * M**2 / (4 * PI**2)) / k**2
    )
    l12 = 1j * (M**2 / (4 * PI**2 * S)) * (PI * A * gb / M - c) / k**3
    l21 = (
        1j * (c * gb * M**2 / (4 * PI**2 * S)) * (gb - c * A * M / PI) / k**3
        - 1j * (c * A * M**5 / (8 * PI**5 * S)) * sk / k**4
        - 1j * (c * t1 * M**3 / (4 * PI**3)) * sk / k**2
    )
    l22 = 1.0 + (c * M**2 / (4 * PI**2 * S)) * (A * gb - c * M / PI) / ak**3
    return np.array([[l11, l12], [l21, l22]])


def _symbol_dc(k: int, c: float, params: PhysicalParams) -> np.ndarray:
    """Entrywise derivative of the symbol with respect to the speed c."""
    S, A, t1, gb, M = params.S, params.A, params.tau1, params.gamma_bar, params.M
    ak, sk = abs(k), np.sign(k)
    d11 = (A * gb * M**2 / (4 * PI**2 * S)) / ak**3
    d12 = -1j * (M**2 / (4 * PI**2 * S)) / k**3
    d21 = (
        1j * (gb * M**2 / (4 * PI**2 * S)) * (gb - 2 * c * A * M / PI) / k**3
        - 1j * (A * M**5 / (8 * PI**5 * S)) * sk / k**4
        - 1j * (t1 * M**3 / (4 * PI**3)) * sk / k**2
    )
    d22 = (M**2 / (4 * PI**2 * S)) * (A * gb - 2 * c * M / PI) / ak**3
    return np.array([[d11, d12], [d21, d22]])


def _symbol_dtau(k: int, c: float, params: PhysicalParams) -> np.ndarray:
    """Entrywise derivative of the symbol with respect to tau1."""
    M = params.M
    sk = np.sign(k)
    d11 = (M**2 / (4 * PI**2)) / k**2
    d21 = -1j * (c * M**3 / (4 * PI**3)) * sk / k**2
    return np.array([[d11, 0.0], [d21, 0.0]])


def _real_block(sym: np.ndarray) -> np.ndarray:
    """Convert a per-mode complex symbol to its action on (sin, cos) pairs.

    For x = p sin(j a) + q cos(j a) fields the symbol acts as the real matrix
    [[L11, i L12], [-i L21, L22]].
    """
    return np.array(
        [
            [sym[0, 0].real, (1j * sym[0, 1]).real],
            [(-1j * sym[1, 0]).real, sym[1, 1].real],
        ]
    )


def kernel_mode_direction(k: int, c: float, params: PhysicalParams) -> np.ndarray:
    """Complex (theta_hat, gamma_hat) direction annihilated when lambda_k = 0.

    Corresponds to the real pair theta = -(pi/(c M)) sin(k alpha),
    gamma = cos(k alpha).
    """
    if c == 0.0:
        raise DegenerateSpeedError("kernel direction undefined at c = 0")
    return np.array([1j * PI / (c * params.M), 1.0])


def adjoint_eigenfunction_scale(
    j: int, c: float, params: PhysicalParams
) -> tuple[float, float]:
    """Coefficients (n_j, d) of the adjoint null function at mode j.

    The adjoint direction is (a_j sin(j alpha), d cos(j alpha)) with
    a_j = -n_j / (2 pi^2 j).
    """
    S, A, t1, gb, M = params.S, params.A, params.tau1, params.gamma_bar, params.M
    n_val = A * M**3 + (2 * A * c * gb * M * PI**2 - 2 * gb**2 * PI**3) * j + 2 * M * PI**2 * S * t1 * j**2
    d = -c * M + A * gb * PI
    return n_val, d


def transversality_determinant(
    k: int, l: int, params: PhysicalParams, branch: int = +1
) -> float:
    """Determinant of the projected two-parameter crossing system at (k, l).

    Built numerically from the (c, tau1) derivatives of the per-mode symbol
    blocks projected on the adjoint null directions.  A nonzero value means
    the double crossing unfolds transversally.  The sign is empirical and
    flips between the two speed branches.
    """
    scale = _p_scale(l, k, params)
    if abs(p_poly(l, k, params)) > 1e-6 * scale:
        raise PreconditionError("modes k and l do not share a speed here")
    speeds = c_pm(k, params)
    if speeds is None or r_poly(k, params) <= 0.0:
        raise NoTravelingWaveError(f"R({k}) <= 0: crossing does not exist")
    c = speeds[0] if branch >= 0 else speeds[1]
    if c == 0.0:
        raise DegenerateSpeedError("transversality undefined at zero speed")

    rows = []
    for j in (k, l):
        v = np.array([-PI / (c * params.M), 1.0])
        n_val, d = adjoint_eigenfunction_scale(j, c, params)
        phi = np.array([-n_val / (2 * PI**2 * j), d])
        wc = _real_block(_symbol_dc(j, c, params)) @ v
        wt = _real_block(_symbol_dtau(j, c, params)) @ v
        denom = float(phi @ phi)
        rows.append((float(wc @ phi) / denom, float(wt @ phi) / denom))
    return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
