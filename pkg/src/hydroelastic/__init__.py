"""Periodic interfacial hydroelastic traveling waves.

Spectral discretization of a two-fluid interface carrying a massive elastic
sheet, with quasi-Newton solves, amplitude continuation, and linear mode
classification (including two-dimensional resonant kernels).
"""

from .birkhoff_rott import (
    BirkhoffRottResult,
    evaluate_w_star,
    normal_component,
    periodic_cot,
    tangent_component,
)
from .broyden import SolveReport, broyden_solve, finite_difference_jacobian
from .continuation import (
    TERMINATIONS,
    BranchPoint,
    BranchRecord,
    ContinuationPolicy,
    SolverOptions,
    SurfaceRecord,
    build_surface,
    continue_branch,
)
from .curve import CurveSampling, displacement, renormalized_curve, self_intersects
from .errors import (
    BlowupError,
    DegenerateCurveError,
    DegenerateSpeedError,
    NoTravelingWaveError,
    PreconditionError,
    ResolutionError,
    SingularCurveError,
    StagnationError,
    SymmetryError,
    WaveError,
    WiltonExistenceError,
)
from .linear import (
    ModeAnalysis,
    adjoint_eigenfunction_scale,
    c_pm,
    kernel_classify,
    kernel_mode_direction,
    lambda_k,
    linearization_symbol,
    p_poly,
    r_poly,
    resonance_partner_root,
    resonant_s,
    transversality_determinant,
)
from .model import (
    GridSpec,
    PhysicalParams,
    SpectralWaveState,
    analyze,
    synthesize,
)
from .residual import (
    AmplitudeConstraint,
    ResidualVector,
    compute_omega_tilde,
    compute_xi,
    grid_equations,
    parity_leakage,
    residual_function,
    traveling_wave_residual,
)
from .wilton import (
    WiltonCoefficients,
    guess_displacement,
    higher_resonance_guess,
    linear_speed_c0,
    stokes_initial_guess,
    wilton_coefficients,
    wilton_initial_guess,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
