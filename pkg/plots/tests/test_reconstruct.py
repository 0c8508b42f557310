"""Profile reconstruction, including the solver cross-contract fixture."""

import json
import os

import numpy as np
import pytest

from hydroplots.reconstruct import (
    curve_from_coefficients,
    linearized_span,
    parameter_grid,
    tangent_angle,
)


def test_profile_matches_solver_curve_fixture(fixtures):
    """Independent reconstruction agrees with solver-emitted curve samples."""
    with open(os.path.join(fixtures, "curve_check.json")) as fh:
        ref = json.load(fh)
    wavelength = float(ref["config"]["params.M"])
    _, x, y = curve_from_coefficients(np.array(ref["a"]), wavelength, ref["n"])
    err_x = np.max(np.abs(x - np.array(ref["z_re"])))
    err_y = np.max(np.abs(y - np.array(ref["z_im"])))
    print(f"\n  curve cross-contract: x err {err_x:.3e}, y err {err_y:.3e} (<= 1e-8)")
    assert err_x <= 1e-8
    assert err_y <= 1e-8


def test_flat_coefficients_give_horizontal_line():
    wavelength = 2.0 * np.pi
    alpha, x, y = curve_from_coefficients(np.zeros(0), wavelength, 64)
    assert np.array_equal(y, np.zeros(64))
    assert np.array_equal(x, (wavelength / (2.0 * np.pi)) * alpha)


def test_wavelength_stretches_horizontally():
    a = np.array([0.1, 0.05])
    _, x1, y1 = curve_from_coefficients(a, 2.0 * np.pi, 128)
    _, x2, y2 = curve_from_coefficients(a, 4.0 * np.pi, 128)
    assert x2[-1] - x2[0] == pytest.approx(2.0 * (x1[-1] - x1[0]), rel=1e-12)
    # vertical scale follows the arc metric, so it also doubles
    assert np.max(y2) == pytest.approx(2.0 * np.max(y1), rel=1e-10)


def test_tangent_angle_synthesis():
    alpha = parameter_grid(32)
    a = np.array([0.3, 0.0, -0.2])
    direct = 0.3 * np.sin(alpha) - 0.2 * np.sin(3 * alpha)
    assert np.max(np.abs(tangent_angle(a, alpha) - direct)) < 1e-15


def test_sample_count_validation():
    with pytest.raises(ValueError, match="even"):
        curve_from_coefficients(np.array([0.1]), 2.0 * np.pi, 33)
    with pytest.raises(ValueError, match="modes"):
        curve_from_coefficients(np.ones(16), 2.0 * np.pi, 16)


def test_parameter_grid_convention():
    alpha = parameter_grid(16)
    assert alpha[0] == -np.pi
    assert alpha[8] == 0.0
    assert np.allclose(np.diff(alpha), 2.0 * np.pi / 16)


def test_linearized_span_values():
    # single mode: height cos(alpha) scaled by a_1, extent twice the amplitude
    assert linearized_span(np.array([-2.0])) == pytest.approx(4.0, abs=1e-12)
    # linear in the coefficients
    a = np.array([-2.0, -1.3])
    assert linearized_span(3.0 * a) == pytest.approx(3.0 * linearized_span(a), rel=1e-12)
