"""Interface reconstruction from the tangent angle, with geometric diagnostics.

The renormalized parametrization fixes the arc metric to the constant
sigma = M / (2 pi mean(cos theta)), so the curve is recovered from theta
alone up to vertical translation:

    z(alpha) = (M / (2 pi cos_bar)) * (int_0^alpha e^{i theta} - i alpha sin_bar)

The mean part of e^{i theta} integrates to a linear drift; the fluctuating
part gets the spectral antiderivative.  One horizontal period of the curve
spans exactly M.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import spectral
from .errors import DegenerateCurveError
from .model import TWO_PI


@dataclass(frozen=True)
class CurveSampling:
    """Curve nodes and metric data produced by ``renormalized_curve``."""

    alpha: np.ndarray
    z: np.ndarray  # complex nodes x + i y
    z_alpha: np.ndarray  # complex tangent dz/dalpha
    sigma: float
    cos_bar: float
    sin_bar: float
    M: float

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def z_re(self) -> np.ndarray:
        return self.z.real

    @property
    def z_im(self) -> np.ndarray:
        return self.z.imag


def renormalized_curve(
    theta: np.ndarray, M: float, cos_bar_floor: float = 1e-6
) -> CurveSampling:
    """Rebuild one period of the interface from tangent-angle samples."""
    theta = np.asarray(theta, dtype=float)
    n = len(theta)
    if n % 2:
        raise ValueError("grid length must be even")
    alpha = -np.pi + (TWO_PI / n) * np.arange(n)

    unit = np.exp(1j * theta)
    cos_bar = float(unit.real.mean())
    sin_bar = float(unit.imag.mean())
    if abs(cos_bar) <= cos_bar_floor:
        raise DegenerateCurveError(f"mean(cos theta)={cos_bar:.3e} below floor")

    sigma = M / (TWO_PI * cos_bar)
    fluct = unit - (cos_bar + 1j * sin_bar)
    anti = spectral.antiderivative(fluct)
    # int_0^alpha e^{i theta} = (cos_bar + i sin_bar) alpha + anti(alpha) - anti(0);
    # alpha = 0 is the node n//2.  The i alpha sin_bar subtraction cancels the
    # imaginary drift, leaving a real drift of M per period.
    z = (M / TWO_PI) * alpha + sigma * (anti - anti[n // 2])
    z_alpha = sigma * (unit - 1j * sin_bar)
    return CurveSampling(alpha, z, z_alpha, sigma, cos_bar, sin_bar, float(M))


def displacement(curve: CurveSampling) -> float:
    """Total vertical extent max(y) - min(y) over the sampled period."""
    y = curve.z_im
    return float(y.max() - y.min())


def self_intersects(
    curve: CurveSampling, tol: float = 1e-3, min_arc_nodes: int = 3
) -> tuple[bool, float]:
    """Check all node pairs for near-contact, including adjacent periods.

    Pairs closer than ``min_arc_nodes`` grid steps along the curve are
    skipped, so the test measures genuine approach of distinct arcs.  Returns
    (intersecting, minimum pair distance).
    """
    z = curve.z
    n = len(z)
    idx = np.arange(n)
    sep = np.abs(idx[:, None] - idx[None, :])
    sep = np.minimum(sep, n - sep)

    dz = z[:, None] - z[None, :]
    dist = np.abs(dz)
    for shift in (-curve.M, curve.M):  # same arcs in the neighboring periods
        dist = np.minimum(dist, np.abs(dz + shift))
    dist[sep < min_arc_nodes] = np.inf

    dmin = float(dist.min())
    return dmin <= tol, dmin
