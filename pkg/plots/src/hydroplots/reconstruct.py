"""Interface-profile reconstruction from stored Fourier coefficients.

Rebuilds the curve exactly as the solver's file contract defines it: the
tangent angle is the sine series of the stored ``a`` coefficients, the unit
tangent is integrated spectrally, the mean tangent is removed so one
parameter period spans one horizontal wavelength M, and the node at
parameter zero is placed on the line y = 0.  Independent code on purpose:
agreement with solver-emitted curve samples is checked by a fixture test.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def parameter_grid(n: int) -> np.ndarray:
    return -np.pi + (TWO_PI / n) * np.arange(n)


def tangent_angle(a: np.ndarray, alpha: np.ndarray) -> np.ndarray:
    """Sine synthesis of the stored odd coefficients."""
    if len(a) == 0:
        return np.zeros_like(alpha)
    k = np.arange(1, len(a) + 1)
    return np.asarray(a, dtype=float) @ np.sin(np.outer(k, alpha))


def _periodic_antiderivative(values: np.ndarray) -> np.ndarray:
    """Spectral antiderivative of a zero-mean periodic sample vector.

    The mean bin has no periodic antiderivative and the sawtooth (Nyquist)
    bin has an ambiguous phase, so both are dropped, matching the solver's
    convention for the emitted curves.
    """
    n = len(values)
    spec = np.fft.fft(values)
    wavenum = np.fft.fftfreq(n, d=1.0 / n)
    keep = np.ones(n, dtype=bool)
    keep[0] = False
    if n % 2 == 0:
        keep[n // 2] = False
    out = np.zeros_like(spec, dtype=complex)
    out[keep] = spec[keep] / (1j * wavenum[keep])
    return np.fft.ifft(out)


def curve_from_coefficients(
    a: np.ndarray, wavelength: float, n: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample one period of the interface; returns (alpha, x, y)."""
    if n % 2 or n < 4:
        raise ValueError("need an even sample count >= 4")
    if 2 * len(a) + 2 > n:
        raise ValueError(f"{len(a)} modes need more than {n} samples")
    alpha = parameter_grid(n)
    tang = np.exp(1j * tangent_angle(np.asarray(a, dtype=float), alpha))
    mean = tang.mean()
    sigma = wavelength / (TWO_PI * mean.real)
    anti = _periodic_antiderivative(tang - mean)
    z = (wavelength / TWO_PI) * alpha + sigma * (anti - anti[n // 2])
    return alpha, z.real, z.imag


def linearized_span(a: np.ndarray, n: int = 2048) -> float:
    """Vertical extent of the small-angle profile for tangent coefficients a.

    For small angles the height is the antiderivative of the angle itself,
    so mode k contributes -(a_k / k) cos(k alpha); this is the per-unit
    scale that converts a displacement into the asymptotic small parameter.
    """
    a = np.asarray(a, dtype=float)
    alpha = parameter_grid(n)
    k = np.arange(1, len(a) + 1)
    y = -(a / k) @ np.cos(np.outer(k, alpha))
    return float(y.max() - y.min())
