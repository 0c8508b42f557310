"""State container, grid, and synthesize/analyze round trips."""
from __future__ import annotations

import numpy as np
import pytest

from hydroelastic.model import GridSpec, PhysicalParams, SpectralWaveState, analyze, synthesize
from hydroelastic.errors import ResolutionError, SymmetryError


def test_params_defaults_and_validation():
    p = PhysicalParams(S=1 / 9)
    assert p.A == 1.0 and p.Atilde == 0.0 and p.tau1 == 2.0
    assert p.gamma_bar == 0.0 and p.M == 2 * np.pi
    with pytest.raises(ValueError):
        PhysicalParams(S=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(S=1.0, A=1.5)
    with pytest.raises(ValueError):
        PhysicalParams(S=1.0, Atilde=-0.1)
    with pytest.raises(ValueError):
        PhysicalParams(S=1.0, tau1=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(S=1.0, M=-2.0)


def test_grid_spec():
    g = GridSpec.for_modes(15)
    assert g.n == 64
    assert g.max_modes == 31
    assert g.dalpha == 2 * np.pi / 64
    assert g.alpha[0] == -np.pi
    assert abs(g.alpha[-1] - (np.pi - g.dalpha)) < 1e-15
    with pytest.raises(ValueError):
        GridSpec(7)
    with pytest.raises(ValueError):
        GridSpec(2)


def test_state_container():
    st = SpectralWaveState(a=[0.1, 0.2], b=[0.3, 0.4], c=1.5)
    assert st.K == 2
    x = st.pack()
    assert np.array_equal(x, [0.1, 0.2, 0.3, 0.4, 1.5])
    back = SpectralWaveState.unpack(x)
    assert np.array_equal(back.a, st.a) and np.array_equal(back.b, st.b)
    assert back.c == 1.5
    with pytest.raises(ValueError):
        SpectralWaveState.unpack(np.zeros(4))
    with pytest.raises(ValueError):
        SpectralWaveState(a=[0.1], b=[0.2, 0.3], c=0.0)
    with pytest.raises(ValueError):
        st.a[0] = 9.0  # coefficient arrays are frozen
    flat = SpectralWaveState.flat(3, c=0.7)
    assert flat.K == 3 and flat.c == 0.7 and np.all(flat.a == 0.0)


def test_synthesize_single_mode():
    st = SpectralWaveState(a=[0.5], b=[0.2], c=0.0)
    grid = GridSpec(8)
    theta, gamma = synthesize(st, grid, gamma_bar=0.3)
    assert np.max(np.abs(theta - 0.5 * np.sin(grid.alpha))) < 1e-14
    assert np.max(np.abs(gamma - (0.3 + 0.2 * np.cos(grid.alpha)))) < 1e-14


def test_synthesize_direct_sum_oracle():
    st = SpectralWaveState(a=[0.4, -0.1], b=[0.25, 0.6], c=0.0)
    grid = GridSpec(16)
    theta, gamma = synthesize(st, grid, gamma_bar=-0.5)
    th_ref = np.zeros(grid.n)
    ga_ref = np.full(grid.n, -0.5)
    for j, al in enumerate(grid.alpha):
        for k in (1, 2):
            th_ref[j] += st.a[k - 1] * np.sin(k * al)
            ga_ref[j] += st.b[k - 1] * np.cos(k * al)
    assert np.max(np.abs(theta - th_ref)) < 1e-14
    assert np.max(np.abs(gamma - ga_ref)) < 1e-14


def test_synthesize_resolution_guard():
    st = SpectralWaveState.flat(10)
    with pytest.raises(ResolutionError):
        synthesize(st, GridSpec(20))


def test_analyze_roundtrip():
    rng = np.random.default_rng(21)
    st = SpectralWaveState(a=rng.standard_normal(8) * 0.1, b=rng.standard_normal(8) * 0.1, c=0.0)
    grid = GridSpec(64)
    theta, gamma = synthesize(st, grid, gamma_bar=0.9)
    a, b, gbar = analyze(theta, gamma, 8)
    assert np.max(np.abs(a - st.a)) < 1e-12
    assert np.max(np.abs(b - st.b)) < 1e-12
    assert abs(gbar - 0.9) < 1e-12


def test_analyze_mean_split():
    grid = GridSpec(32)
    gamma = 1.0 + np.cos(grid.alpha)
    a, b, gbar = analyze(np.zeros(grid.n), gamma, 2)
    assert abs(gbar - 1.0) < 1e-13
    assert np.max(np.abs(b - [1.0, 0.0])) < 1e-13


def test_analyze_truncates_high_modes():
    grid = GridSpec(32)
    theta = np.sin(3 * grid.alpha)
    a, b, _ = analyze(theta, np.zeros(grid.n), 2)
    assert np.max(np.abs(a)) < 1e-13
    assert np.max(np.abs(b)) < 1e-13


def test_analyze_parity_guards():
    grid = GridSpec(32)
    with pytest.raises(SymmetryError):
        analyze(np.cos(grid.alpha), np.zeros(grid.n), 2)  # theta must be odd
    with pytest.raises(SymmetryError):
        analyze(np.zeros(grid.n), np.sin(grid.alpha), 2)  # gamma must be even
    with pytest.raises(ValueError):
        analyze(np.zeros(10), np.zeros(12), 2)
    with pytest.raises(ResolutionError):
        analyze(np.zeros(8), np.zeros(8), 5)
