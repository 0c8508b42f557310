"""Problem constants, the spectral unknown vector, and the collocation grid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import spectral
from .errors import ResolutionError, SymmetryError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class PhysicalParams:
    """Fluid and sheet constants defining one problem instance.

    Attributes
    ----------
    S : bending modulus, > 0.
    A : Atwood number, in [-1, 1].
    Atilde : mass ratio of the elastic sheet, >= 0.
    tau1 : surface tension parameter, > 0.
    gamma_bar : prescribed mean sheet strength.
    M : horizontal period, > 0.
    """

    S: float
    A: float = 1.0
    Atilde: float = 0.0
    tau1: float = 2.0
    gamma_bar: float = 0.0
    M: float = TWO_PI

    def __post_init__(self) -> None:
        if not self.S > 0.0:
            raise ValueError("S must be positive")
        if not -1.0 <= self.A <= 1.0:
            raise ValueError("A must lie in [-1, 1]")
        if not self.Atilde >= 0.0:
            raise ValueError("Atilde must be nonnegative")
        if not self.tau1 > 0.0:
            raise ValueError("tau1 must be positive")
        if not self.M > 0.0:
            raise ValueError("M must be positive")


@dataclass(frozen=True)
class GridSpec:
    """Equispaced nodes alpha_j = -pi + j * dalpha, j = 0..n-1, n even."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 4 or self.n % 2:
            raise ValueError("n must be even and >= 4")

    @classmethod
    def for_modes(cls, num_modes: int) -> GridSpec:
        # 4K+4 nodes keep cubic products of K-mode data alias-free
        return cls(4 * num_modes + 4)

    @property
    def dalpha(self) -> float:
        return TWO_PI / self.n

    @property
    def alpha(self) -> np.ndarray:
        return -np.pi + self.dalpha * np.arange(self.n)

    @property
    def max_modes(self) -> int:
        return self.n // 2 - 1


@dataclass(frozen=True)
class SpectralWaveState:
    """Truncated wave description: theta = sum a_k sin(k alpha),
    gamma = gamma_bar + sum b_k cos(k alpha), plus the speed c.

    The mean of gamma lives in PhysicalParams, not here.
    """

    a: np.ndarray
    b: np.ndarray
    c: float

    def __post_init__(self) -> None:
        a = np.array(self.a, dtype=float)
        b = np.array(self.b, dtype=float)
        if a.ndim != 1 or b.ndim != 1 or len(a) != len(b):
            raise ValueError("a and b must be 1-d arrays of equal length")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", float(self.c))

    @property
    def K(self) -> int:
        return len(self.a)

    @classmethod
    def flat(cls, num_modes: int, c: float = 0.0) -> SpectralWaveState:
        return cls(np.zeros(num_modes), np.zeros(num_modes), c)

    def pack(self) -> np.ndarray:
        """Flatten to the solver vector [a_1..a_K, b_1..b_K, c]."""
        return np.concatenate([self.a, self.b, [self.c]])

    @classmethod
    def unpack(cls, x: np.ndarray) -> SpectralWaveState:
        if len(x) % 2 == 0:
            raise ValueError("solver vector must have odd length 2K+1")
        num = (len(x) - 1) // 2
        return cls(x[:num], x[num : 2 * num], float(x[-1]))


def synthesize(
    state: SpectralWaveState, grid: GridSpec, gamma_bar: float = 0.0
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate (theta, gamma) on the grid from truncated coefficients."""
    num = state.K
    if grid.n < 2 * num + 2:
        raise ResolutionError(f"grid n={grid.n} cannot hold {num} modes")
    k = np.arange(1, num + 1)
    ka = np.outer(k, grid.alpha)
    theta = state.a @ np.sin(ka)
    gamma = gamma_bar + state.b @ np.cos(ka)
    return theta, gamma


def analyze(
    theta: np.ndarray,
    gamma: np.ndarray,
    num_modes: int,
    tol: float = 1e-8,
) -> tuple[np.ndarray, np.ndarray, float]:
    """Recover (a, b, gamma_bar) from grid samples, discarding modes above K.

    Raises SymmetryError if theta is not odd or gamma not even about
    alpha = 0 (relative tolerance ``tol``).
    """
    theta = np.asarray(theta, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    n = len(theta)
    if len(gamma) != n:
        raise ValueError("theta and gamma must share a grid")
    if n % 2:
        raise ValueError("grid length must be even")
    if num_modes > n // 2 - 1:
        raise ResolutionError(f"cannot extract {num_modes} modes from n={n}")

    refl = (-np.arange(n)) % n  # index of the node at -alpha_j
    odd_defect = np.max(np.abs(theta + theta[refl]))
    even_defect = np.max(np.abs(gamma - gamma[refl]))
    theta_scale = max(1.0, float(np.max(np.abs(theta))))
    gamma_scale = max(1.0, float(np.max(np.abs(gamma))))
    if odd_defect > tol * theta_scale:
        raise SymmetryError(f"theta parity defect {odd_defect:.3e}")
    if even_defect > tol * gamma_scale:
        raise SymmetryError(f"gamma parity defect {even_defect:.3e}")

    a = spectral.sine_coefficients(theta, num_modes)
    b = spectral.cosine_coefficients(gamma, num_modes)
    gamma_bar = float(gamma.mean())
    return a, b, gamma_bar
