"""Quasi-Newton solver behavior: convergence, safeguards, reports."""
from __future__ import annotations

import numpy as np
import pytest

from hydroelastic.broyden import broyden_solve, finite_difference_jacobian
from hydroelastic.model import GridSpec, PhysicalParams
from hydroelastic.residual import AmplitudeConstraint, residual_function
from hydroelastic.wilton import wilton_coefficients, wilton_initial_guess
from hydroelastic.errors import BlowupError, StagnationError


def affine(x):
    amat = np.array([[2.0, 1.0], [1.0, 3.0]])
    return amat @ x - np.array([3.0, 5.0])


def circle_line(x):
    return np.array([x[0] ** 2 + x[1] ** 2 - 1.0, x[0] - x[1]])


def test_affine_system_converges_immediately():
    rep = broyden_solve(affine, np.array([10.0, -4.0]))
    assert rep.converged
    assert rep.iterations <= 2
    assert np.max(np.abs(affine(rep.x))) <= 1e-8


def test_supplied_jacobian_single_step():
    rep = broyden_solve(affine, np.array([0.0, 0.0]), jacobian=np.array([[2.0, 1.0], [1.0, 3.0]]))
    assert rep.converged and rep.iterations == 1


def test_circle_line_intersection():
    rep = broyden_solve(circle_line, np.array([1.0, 0.0]), tol=1e-12)
    assert rep.converged
    root = np.sqrt(2.0) / 2.0
    assert np.max(np.abs(rep.x - [root, root])) < 1e-10


def test_initial_guess_not_mutated():
    x0 = np.array([1.0, 0.0])
    keep = x0.copy()
    broyden_solve(circle_line, x0)
    assert np.array_equal(x0, keep)


def test_already_converged_returns_zero_iterations():
    rep = broyden_solve(affine, np.array([4.0 / 5.0, 7.0 / 5.0]), tol=1e-10)
    assert rep.converged and rep.iterations == 0


def test_iteration_cap_reports_instead_of_raising():
    rep = broyden_solve(lambda x: np.array([x[0] ** 3 - 2.0]), np.array([8.0]), max_iter=3)
    assert not rep.converged
    assert rep.iterations == 3
    assert rep.residual_norm > 1e-8
    assert np.all(np.isfinite(rep.x))


def test_nonfinite_residual_raises():
    with pytest.raises(BlowupError):
        broyden_solve(lambda x: np.array([np.nan]), np.array([1.0]))


def test_constant_residual_raises_stagnation():
    with pytest.raises(StagnationError):
        broyden_solve(lambda x: np.array([1.0]), np.array([0.0]))


@pytest.mark.parametrize("backtracking", [True, False])
def test_bad_initial_jacobian_recovers(backtracking):
    # a 100x-too-small Jacobian guess forces a huge first step; with
    # backtracking it is halved until the residual growth is acceptable, and
    # either way the rank-one update repairs the slope
    rep = broyden_solve(
        lambda x: x.copy(),
        np.array([1.0]),
        jacobian=np.array([[0.01]]),
        backtracking=backtracking,
    )
    assert rep.converged
    assert abs(rep.x[0]) <= 1e-8


def test_finite_difference_jacobian_accuracy():
    def fn(x):
        return np.array([x[0] ** 2 + np.sin(x[1]), x[0] * x[1]])

    x = np.array([0.7, 0.3])
    analytic = np.array([[2 * x[0], np.cos(x[1])], [x[1], x[0]]])
    jac = finite_difference_jacobian(fn, x)
    assert np.max(np.abs(jac - analytic)) < 1e-5


def test_ripple_seed_solve():
    params = PhysicalParams(S=1 / 9, A=1.0, Atilde=0.2, tau1=2.0)
    guess = wilton_initial_guess(0.01, wilton_coefficients(params, +1), 15)
    con = AmplitudeConstraint.fourier_mode("a", 1, float(guess.a[0]))
    fn = residual_function(params, con, GridSpec.for_modes(15))
    rep = broyden_solve(fn, guess.pack())
    assert rep.converged
    assert rep.iterations <= 60
    assert rep.residual_norm <= 1e-8
