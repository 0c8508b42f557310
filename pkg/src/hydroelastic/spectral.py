"""Fourier-side primitives on the uniform periodic grid over [-pi, pi).

All operators act on samples taken at alpha_j = -pi + j * (2*pi/n) and are
diagonal in Fourier space.  The Nyquist mode is dropped by every symbol
operator: its sign is ambiguous on a real grid and odd symbols cannot treat
it consistently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError


def signed_modes(n: int) -> np.ndarray:
    """Signed integer wavenumbers in numpy fft ordering."""
    return np.rint(np.fft.fftfreq(n) * n).astype(int)


@dataclass(frozen=True)
class SpectrumView:
    """True Fourier coefficients nu_hat(k) of samples on the shifted grid.

    ``coeffs[i]`` holds nu_hat(modes[i]) with modes in fft ordering, so that
    nu(alpha) = sum_k nu_hat(k) exp(i k alpha).  For real input the view
    satisfies nu_hat(-k) == conj(nu_hat(k)).
    """

    coeffs: np.ndarray

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def modes(self) -> np.ndarray:
        return signed_modes(self.n)

    def __getitem__(self, k: int) -> complex:
        if abs(k) > self.n // 2:
            raise IndexError(f"mode {k} outside resolved band of n={self.n}")
        return complex(self.coeffs[k % self.n])


def spectrum(values: np.ndarray) -> SpectrumView:
    """Transform grid samples to true Fourier coefficients.

    The (-1)^k factor undoes the phase introduced by starting the grid at
    alpha = -pi instead of 0.
    """
    v = np.asarray(values)
    n = v.shape[0]
    coeffs = np.fft.fft(v) / n
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return SpectrumView(coeffs * signs)


def apply_symbol(values: np.ndarray, symbol) -> np.ndarray:
    """Apply a Fourier multiplier; ``symbol`` maps signed modes to factors.

    Real input gives real output.  Complex input is treated componentwise,
    which for linear symbols equals acting on real and imaginary parts
    separately.  The mean is split off before the transform so that constant
    input maps to exactly symbol(0) times the constant; differentiation-type
    symbols then kill constants at the bit level instead of leaving FFT
    roundoff behind.
    """
    v = np.asarray(values)
    n = v.shape[0]
    k = signed_modes(n)
    sym = np.asarray(symbol(k))
    mean = v.mean()
    f = np.fft.fft(v - mean)
    f = f * sym
    f[0] = 0.0
    if n % 2 == 0:
        f[n // 2] = 0.0
    out = np.fft.ifft(f) + sym[0] * mean
    return out if np.iscomplexobj(v) else out.real


def hilbert(values: np.ndarray) -> np.ndarray:
    """Periodic Hilbert transform, symbol -i*sgn(k); kills the mean."""
    return apply_symbol(values, lambda k: -1j * np.sign(k))


def derivative(values: np.ndarray, order: int = 1) -> np.ndarray:
    """Spectral derivative of the given order, symbol (i k)^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return apply_symbol(values, lambda k: (1j * k) ** order)


def inverse_derivative4(values: np.ndarray) -> np.ndarray:
    """Smoothing inverse of the fourth derivative: k^-4, zero at k = 0."""

    def sym(k):
        kk = np.where(k == 0, 1, k).astype(float)
        return np.where(k == 0, 0.0, kk**-4)

    return apply_symbol(values, sym)


def project(values: np.ndarray) -> np.ndarray:
    """Remove the grid mean."""
    v = np.asarray(values)
    return v - v.mean()


def antiderivative(values: np.ndarray) -> np.ndarray:
    """Mean-zero periodic antiderivative, symbol 1/(i k).

    Only defined for mean-zero input; a nonzero mean has no periodic
    antiderivative.
    """
    v = np.asarray(values)
    m = abs(complex(v.mean()))
    scale = max(1.0, float(np.max(np.abs(v))) if v.size else 1.0)
    if m > 1e-12 * scale:
        raise PreconditionError(f"antiderivative needs mean-zero input, |mean|={m:.3e}")

    def sym(k):
        kk = np.where(k == 0, 1, k)
        return np.where(k == 0, 0.0, 1.0 / (1j * kk))

    return apply_symbol(v, sym)


def sine_coefficients(values: np.ndarray, kmax: int) -> np.ndarray:
    """Coefficients of sin(k alpha), k = 1..kmax."""
    sv = spectrum(values)
    return -2.0 * sv.coeffs[1 : kmax + 1].imag


def cosine_coefficients(values: np.ndarray, kmax: int) -> np.ndarray:
    """Coefficients of cos(k alpha), k = 1..kmax."""
    sv = spectrum(values)
    return 2.0 * sv.coeffs[1 : kmax + 1].real
