"""Small-amplitude speed asymptotes for resonant branch overlays.

Replicates the closed-form leading-order quantities from the physical
parameters embedded in a branch file, so overlay lines never depend on the
solver package being importable.  Valid for the symmetric setup the branch
files use (zero mean sheet strength, wavelength 2 pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .formats import Branch, FormatError
from .reconstruct import linearized_span


@dataclass(frozen=True)
class Asymptote:
    c0: float
    c1: float
    ratio2: float  # second-mode amplitude per unit first-mode amplitude
    span: float  # displacement of the leading profile per unit small parameter

    def speed_at(self, h: np.ndarray) -> np.ndarray:
        """Predicted speed as a function of crest-to-trough displacement."""
        return self.c0 + self.c1 * np.asarray(h) / self.span


def _params(branch: Branch) -> tuple[float, float, float, float]:
    gamma_bar = branch.param("params.gamma_bar")
    mval = branch.param("params.M")
    if abs(gamma_bar) > 0 or abs(mval - 2.0 * math.pi) > 1e-12:
        raise FormatError(
            f"{branch.path}: asymptote overlay needs gamma_bar=0 and M=2*pi"
        )
    return (
        branch.param("params.S"),
        branch.param("params.A"),
        branch.param("params.Atilde"),
        branch.param("params.tau1"),
    )


def resonant_asymptote(branch: Branch, sign: int) -> Asymptote:
    """First-order speed slope of the two-mode resonant branch family."""
    bend, atwood, mass, tension = _params(branch)
    c0sq = 0.5 * bend * (1.0 + tension) + atwood
    if c0sq <= 0:
        raise FormatError(f"{branch.path}: no linear wave speed for these parameters")
    c0 = math.sqrt(c0sq)
    f1 = atwood * c0sq - mass
    f2 = 2.0 * atwood * c0sq + mass
    if f1 <= 0 or f2 <= 0:
        raise FormatError(
            f"{branch.path}: sheet mass outside the resonant existence window"
        )
    c1 = sign * math.sqrt(f1 * f2) / (2.0 * math.sqrt(2.0) * c0)
    ratio2 = sign * math.sqrt(f2 / (2.0 * f1))
    # leading tangent-angle profile per unit small parameter: modes (1, 2)
    span = linearized_span(np.array([-2.0, -2.0 * ratio2]))
    return Asymptote(c0=c0, c1=c1, ratio2=ratio2, span=span)


def branch_sign(branch: Branch) -> int:
    """Infer which sign family a stored branch belongs to.

    The resonant seeds keep the second-mode coefficient sign-locked to the
    family, so the last stored point decides; single-mode or flat data
    defaults to the plus family.
    """
    for point in reversed(branch.points):
        if len(point.a) >= 2 and abs(point.a[1]) > 1e-12:
            return -1 if point.a[1] > 0 else +1
    return +1
