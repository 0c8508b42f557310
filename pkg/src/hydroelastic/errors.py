"""Exception types shared across the package."""


class WaveError(Exception):
    """Base class for solver-domain failures."""


class PreconditionError(WaveError):
    """An operation was called outside its stated domain of validity."""


class ResolutionError(WaveError):
    """Grid too coarse for the requested mode content."""


class SymmetryError(WaveError):
    """Grid data violates the assumed odd/even parity."""


class DegenerateCurveError(WaveError):
    """mean(cos theta) too close to zero to reconstruct a curve."""


class SingularCurveError(WaveError):
    """Coincident interface nodes make the sheet kernel singular."""


class BlowupError(WaveError):
    """A residual or iterate stopped being finite."""


class StagnationError(WaveError):
    """Quasi-Newton iteration degenerated (zero step or singular update)."""


class NoTravelingWaveError(WaveError):
    """Linear theory admits no traveling wave at these parameters."""


class DegenerateSpeedError(WaveError):
    """Eigenvector formulas are undefined at zero wave speed."""


class WiltonExistenceError(WaveError):
    """The second-order resonant expansion does not exist at these parameters."""
