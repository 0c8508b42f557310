"""Renderers produce figures from the committed fixtures; asymptote math."""

import json
import math
import os

import numpy as np
import pytest

from hydroplots import asymptote, figures
from hydroplots.formats import FormatError, load_branch


def rendered(path: str) -> bool:
    return os.path.exists(path) and os.path.getsize(path) > 5000


def test_render_branches_with_overlay(fixtures, tmp_path):
    out = str(tmp_path / "branches.png")
    result = figures.render_branches(
        [
            os.path.join(fixtures, "branch_plus.json"),
            os.path.join(fixtures, "branch_minus.json"),
        ],
        out,
    )
    assert result == out and rendered(out)


def test_render_branches_from_csv(fixtures, tmp_path):
    out = str(tmp_path / "csv.png")
    figures.render_branches(
        [os.path.join(fixtures, "branch_plus.csv")], out, overlay=False
    )
    assert rendered(out)


def test_render_single_point_branch(fixtures, tmp_path):
    src = json.load(open(os.path.join(fixtures, "branch_plus.json")))
    src["points"] = src["points"][:1]
    path = tmp_path / "one.json"
    path.write_text(json.dumps(src))
    out = str(tmp_path / "one.png")
    figures.render_branches([str(path)], out, overlay=False)
    assert rendered(out)


def test_render_branches_error_paths(fixtures, tmp_path):
    with pytest.raises(figures.PlotError, match="no branch files"):
        figures.render_branches([], str(tmp_path / "x.png"))
    src = json.load(open(os.path.join(fixtures, "branch_plus.json")))
    src["points"] = []
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps(src))
    with pytest.raises(figures.PlotError, match="no points"):
        figures.render_branches([str(empty)], str(tmp_path / "x.png"))


def test_render_profiles_from_branch_and_state(fixtures, tmp_path):
    out = str(tmp_path / "profiles.png")
    figures.render_profiles(
        [
            os.path.join(fixtures, "branch_plus.json"),
            os.path.join(fixtures, "flat_state.json"),
        ],
        out,
    )
    assert rendered(out)


def test_render_surface_with_termination_markers(fixtures, tmp_path):
    out = str(tmp_path / "surface.png")
    figures.render_surface(os.path.join(fixtures, "surface_demo", "surface.json"), out)
    assert rendered(out)


def test_render_surface_all_empty(fixtures, tmp_path):
    index = {
        "config": {},
        "atilde": [5.0],
        "branches": ["b.json"],
        "terminations": ["solverFailure"],
    }
    (tmp_path / "b.json").write_text(
        json.dumps({"config": {}, "points": [], "termination": "solverFailure"})
    )
    path = tmp_path / "surface.json"
    path.write_text(json.dumps(index))
    with pytest.raises(figures.PlotError, match="empty"):
        figures.render_surface(str(path), str(tmp_path / "x.png"))


def test_render_convergence(fixtures, tmp_path):
    out = str(tmp_path / "conv.png")
    figures.render_convergence(os.path.join(fixtures, "convergence.json"), out)
    assert rendered(out)


def test_asymptote_coefficients(fixtures):
    branch = load_branch(os.path.join(fixtures, "branch_plus.json"))
    assert asymptote.branch_sign(branch) == +1
    asym = asymptote.resonant_asymptote(branch, +1)
    # S = 1/9, A = 1, tau1 = 2: speed^2 = S(1 + tau1)/2 + A = 7/6
    assert asym.c0 == pytest.approx(math.sqrt(7.0 / 6.0), abs=1e-12)
    assert asym.c1 > 0
    assert asym.speed_at(np.array([0.0]))[0] == pytest.approx(asym.c0)

    minus = load_branch(os.path.join(fixtures, "branch_minus.json"))
    assert asymptote.branch_sign(minus) == -1
    asym_minus = asymptote.resonant_asymptote(minus, -1)
    assert asym_minus.c1 == pytest.approx(-asym.c1, rel=1e-12)


def test_asymptote_tracks_stored_branches(fixtures):
    for name, sign in (("branch_plus.json", +1), ("branch_minus.json", -1)):
        branch = load_branch(os.path.join(fixtures, name))
        asym = asymptote.resonant_asymptote(branch, sign)
        err = np.max(np.abs(asym.speed_at(branch.h) - branch.c))
        # first-order prediction: residual is second order in the amplitude
        assert err < 2e-4


def test_asymptote_parameter_guards(fixtures, tmp_path):
    src = json.load(open(os.path.join(fixtures, "branch_plus.json")))
    src["config"]["params.Atilde"] = "5.0"
    heavy = tmp_path / "heavy.json"
    heavy.write_text(json.dumps(src))
    with pytest.raises(FormatError, match="existence window"):
        asymptote.resonant_asymptote(load_branch(str(heavy)), +1)

    src["config"]["params.Atilde"] = "0.2"
    src["config"]["params.gamma_bar"] = "0.5"
    swirl = tmp_path / "swirl.json"
    swirl.write_text(json.dumps(src))
    with pytest.raises(FormatError, match="gamma_bar"):
        asymptote.resonant_asymptote(load_branch(str(swirl)), +1)
