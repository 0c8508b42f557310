"""Flat-state linear theory: dispersion, resonances, kernels, transversality."""
from __future__ import annotations

import numpy as np
import pytest

from hydroelastic.linear import (
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
from hydroelastic.linear import _real_block, _p_scale
from hydroelastic.model import PhysicalParams
from hydroelastic.errors import (
    DegenerateSpeedError,
    NoTravelingWaveError,
    PreconditionError,
)

from oracles import bisect_root, quadratic_roots_of, random_wave_params

P9 = PhysicalParams(S=1 / 9, A=1.0, Atilde=0.2, tau1=2.0)
P63 = PhysicalParams(S=1 / 63, A=1.0, Atilde=0.1, tau1=2.0)


def test_lambda_vanishes_at_linear_speeds():
    for k in range(1, 21):
        cp, cm = c_pm(k, P9)
        assert abs(lambda_k(k, cp, P9)) < 1e-12
        assert abs(lambda_k(k, cm, P9)) < 1e-12


def test_lambda_positive_at_rest_and_tends_to_one():
    for k in range(1, 11):
        assert lambda_k(k, 0.0, P9) > 0.0
    assert abs(lambda_k(10**6, 1.0, P9) - 1.0) < 1e-11
    sym = linearization_symbol(10**6, 1.0, P9)
    assert np.max(np.abs(sym - np.eye(2))) < 1e-10


def test_speeds_against_generic_root_finding():
    rng = np.random.default_rng(31)
    for _ in range(10):
        p = random_wave_params(rng, kmax=3)
        k = int(rng.integers(1, 4))
        roots = quadratic_roots_of(lambda c: lambda_k(k, c, p))
        cp, cm = c_pm(k, p)
        scale = max(1.0, abs(cp), abs(cm))
        assert np.max(np.abs(roots - np.sort([cp, cm]))) < 1e-10 * scale


def test_speed_drift_and_spread():
    p = PhysicalParams(S=0.5, A=0.6, tau1=1.5, gamma_bar=0.8, M=5.0)
    for k in (1, 2, 5):
        cp, cm = c_pm(k, p)
        assert abs(0.5 * (cp + cm) - p.A * p.gamma_bar * np.pi / p.M) < 1e-13
        spread = np.sqrt(r_poly(k, p) / (2 * k * p.M**3 * np.pi))
        assert abs((cp - cm) - 2 * spread) < 1e-12


def test_strong_mean_strength_kills_the_wave():
    p = PhysicalParams(S=resonant_s(2, 0.5, 2.0), A=0.5, tau1=2.0, gamma_bar=50.0)
    assert r_poly(1, p) < 0.0
    assert c_pm(1, p) is None
    with pytest.raises(NoTravelingWaveError):
        kernel_classify(1, p)


def test_resonant_modulus_values_and_guards():
    assert resonant_s(2, 1.0, 2.0) == 1 / 9
    assert resonant_s(3, 1.0, 2.0) == 2 / (3 * 15)
    with pytest.raises(ValueError):
        resonant_s(1, 1.0, 2.0)
    with pytest.raises(ValueError):
        resonant_s(2, -1.0, 2.0)


@pytest.mark.parametrize("n", range(2, 11))
def test_resonant_modulus_zeroes_the_resonance_polynomial(n):
    p = PhysicalParams(S=resonant_s(n, 1.0, 2.0), A=1.0, tau1=2.0)
    assert abs(p_poly(n, 1, p)) <= 1e-12 * _p_scale(n, 1, p)


def test_resonance_polynomial_known_zeros_and_symmetry():
    assert abs(p_poly(2, 1, P9)) <= 1e-12 * _p_scale(2, 1, P9)
    assert abs(p_poly(3, 2, P63)) <= 1e-12 * _p_scale(3, 2, P63)
    assert p_poly(3, 1, P9) == p_poly(1, 3, P9)
    # the sheet-mass ratio plays no role in the flat-state resonance condition
    p_a = PhysicalParams(S=1 / 9, A=1.0, Atilde=0.0, tau1=2.0)
    p_b = PhysicalParams(S=1 / 9, A=1.0, Atilde=0.9, tau1=2.0)
    assert p_poly(2, 1, p_a) == p_poly(2, 1, p_b)


def test_known_radicand_and_speed():
    assert abs(r_poly(1, P9) - 56 * np.pi**4 / 3) < 1e-9
    cp, _ = c_pm(1, P9)
    assert abs(cp**2 - 7 / 6) < 1e-13


def test_partner_root_closed_cases_and_bisection():
    assert abs(resonance_partner_root(1, P9) - 2.0) < 1e-10
    assert abs(resonance_partner_root(2, P63) - 3.0) < 1e-10
    p = PhysicalParams(S=0.07, A=0.9, tau1=1.2, M=4.0)
    root = resonance_partner_root(1, p)
    ref = bisect_root(lambda ll: p_poly(ll, 1, p), 1e-6, 50.0)
    assert abs(root - ref) < 1e-8


def test_kernel_classification():
    m1 = kernel_classify(1, P9)
    assert (m1.kernel_dim, m1.partner) == (2, 2)
    m2 = kernel_classify(2, P9)
    assert (m2.kernel_dim, m2.partner) == (2, 1)
    m3 = kernel_classify(2, P63)
    assert (m3.kernel_dim, m3.partner) == (2, 3)
    m4 = kernel_classify(1, PhysicalParams(S=0.1, A=1.0, tau1=2.0))
    assert (m4.kernel_dim, m4.partner) == (1, None)
    assert abs(m1.lam) < 1e-12


def test_symbol_eigenvalue_is_lambda():
    rng = np.random.default_rng(41)
    for _ in range(10):
        p = random_wave_params(rng, kmax=3)
        k = int(rng.integers(1, 4))
        c = rng.uniform(-2.0, 2.0)
        eigs = np.linalg.eigvals(linearization_symbol(k, c, p))
        lam = lambda_k(k, c, p)
        assert np.min(np.abs(eigs - lam)) < 1e-10 * max(1.0, abs(lam))


def test_symbol_annihilates_kernel_direction_at_linear_speeds():
    rng = np.random.default_rng(43)
    for _ in range(10):
        p = random_wave_params(rng, kmax=3)
        k = int(rng.integers(1, 4))
        for c in c_pm(k, p):
            if c == 0.0:
                continue
            v = kernel_mode_direction(k, c, p)
            out = linearization_symbol(k, c, p) @ v
            assert np.max(np.abs(out)) < 1e-10


def test_symbol_and_direction_guards():
    with pytest.raises(ValueError):
        linearization_symbol(0, 1.0, P9)
    with pytest.raises(ValueError):
        lambda_k(0, 1.0, P9)
    with pytest.raises(DegenerateSpeedError):
        kernel_mode_direction(1, 0.0, P9)


def test_adjoint_scale_closed_form_without_mean_strength():
    cp, _ = c_pm(1, P9)
    n_val, d = adjoint_eigenfunction_scale(1, cp, P9)
    S, A, t1, M = P9.S, P9.A, P9.tau1, P9.M
    assert abs(n_val - (A * M**3 + 2 * M * np.pi**2 * S * t1)) < 1e-10
    assert abs(d - (-2 * np.pi * cp)) < 1e-13
    assert abs(d**2 - r_poly(1, P9) / (2 * 1 * M * np.pi)) < 1e-10


def test_adjoint_is_left_null_vector():
    rng = np.random.default_rng(47)
    for _ in range(10):
        p = random_wave_params(rng, kmax=3)
        k = int(rng.integers(1, 4))
        c = c_pm(k, p)[0]
        if abs(c) < 1e-6:
            continue
        n_val, d = adjoint_eigenfunction_scale(k, c, p)
        phi = np.array([-n_val / (2 * np.pi**2 * k), d])
        block = _real_block(linearization_symbol(k, c, p))
        resid = phi @ block
        assert np.max(np.abs(resid)) < 1e-9 * max(1.0, np.max(np.abs(phi)))


def test_transversality_frozen_values():
    d_plus = transversality_determinant(1, 2, P9, branch=+1)
    d_minus = transversality_determinant(1, 2, P9, branch=-1)
    assert abs(d_plus - (-1.312041225900303e-4)) < 1e-9 * abs(d_plus)
    assert abs(d_plus + d_minus) < 1e-15
    d63 = transversality_determinant(2, 3, P63, branch=+1)
    assert abs(d63 - (-2.5676724437816904e-4)) < 1e-9 * abs(d63)


def test_transversality_preconditions():
    off = PhysicalParams(S=0.1, A=1.0, tau1=2.0)
    with pytest.raises(PreconditionError):
        transversality_determinant(1, 2, off)
    with pytest.raises(PreconditionError):
        transversality_determinant(1, 1, off)
    # k = l = 1 is a genuine double root at S = 0.4: identical projection rows
    p_dbl = PhysicalParams(S=0.4, A=1.0, tau1=2.0)
    assert transversality_determinant(1, 1, p_dbl) == 0.0
    p_nowave = PhysicalParams(S=resonant_s(2, 0.5, 2.0), A=0.5, tau1=2.0, gamma_bar=50.0)
    with pytest.raises(NoTravelingWaveError):
        transversality_determinant(2, 1, p_nowave)
