import json
import math

import numpy as np
import pytest

from mulgeo.curve import IntrinsicCurve, TransformedCurve, log_grid, natural_frame
from mulgeo.errors import ClassificationError, PreconditionError
from mulgeo.helix import (
    REPARAM_TOL,
    classify,
    gamma_clad,
    psi_gclad,
    ratio_f,
    sigma_from_f,
    sigma_n3,
    sigma_slant,
)
from mulgeo.indicatrix import indicatrix_curvatures_closed, indicatrix_direct
from mulgeo.mularith import MulScalar
from mulgeo.presets import get_preset, load_curve

E = MulScalar
HELIX = load_curve("helix35")
GRID = log_grid(E(0.0), E(2 * math.pi), 25)


def preset_grid(c, n=25, margin=0.0):
    lo, hi = c.u_domain
    return log_grid(E(lo + margin), E(hi - margin), n)


def base_grid(c, n=25):
    """Grid uniform in the base parameter, mapped to the curve's own parameter."""
    lo, hi = c.base.u_domain
    return [E(c.arc_of_base(lo + (hi - lo) * k / (n - 1))) for k in range(n)]


def test_ratio_f_examples():
    assert ratio_f(HELIX, E(0.7)).logval == pytest.approx(4 / 3, abs=1e-14)
    circle = load_curve("fig1-circle")
    assert ratio_f(circle, E(1.0)).logval == pytest.approx(0.0, abs=1e-14)
    ex = load_curve("example411-corrected")
    assert ratio_f(ex, base_grid(ex, 5)[2]).logval == pytest.approx(1.0, abs=1e-9)


def test_general_helix_chain_degenerates():
    for s in GRID[::4]:
        assert sigma_slant(HELIX, s).logval == pytest.approx(0.0, abs=1e-14)
        assert gamma_clad(HELIX, s).logval == pytest.approx(0.0, abs=1e-14)
        assert psi_gclad(HELIX, s).logval == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("name", ["example411-corrected", "intrinsic-slant", "intrinsic-clad", "helix-perturbed"])
def test_sigma_forms_agree(name):
    c = load_curve(name)
    grid = base_grid(c, 9) if hasattr(c, "arc_of_base") else preset_grid(c, 9)
    for s in grid:
        u = c.base_of_arc(s.logval) if hasattr(c, "base_of_arc") else s.logval
        fr = natural_frame(c, u, 5, with_h=False)[1]
        f = fr.tau / fr.kappa
        assert abs(sigma_from_f(fr.kappa, f).value - sigma_n3(fr.kappa, fr.tau).value) <= 1e-10


@pytest.mark.parametrize("name", ["intrinsic-clad", "helix-perturbed"])
def test_gamma_is_normal_indicatrix_ratio(name):
    c = load_curve(name)
    grid = preset_grid(c, 5, margin=0.05)
    direct = indicatrix_direct(c, "normal", grid)
    for s, d in zip(grid, direct):
        g = gamma_clad(c, s).logval
        k, t = indicatrix_curvatures_closed(c, "normal", s)
        assert g == pytest.approx(t.logval / k.logval, abs=1e-12)
        assert g == pytest.approx(d.tau_ind.logval / d.kappa_ind.logval, abs=1e-6)


def test_unknown_gamma_form():
    with pytest.raises(PreconditionError):
        gamma_clad(HELIX, E(0.2), form="other")


def test_classify_helix():
    rep = classify(HELIX, GRID)
    assert rep.verdict == "general"
    assert rep.max_dev["f"] <= 1e-9
    assert rep.mean("f") == pytest.approx(4 / 3, abs=1e-12)
    for q in ("sigma", "gamma", "psi"):
        assert max(abs(v) for v in getattr(rep, q)) <= 1e-8
    assert all(rep.memberships.values())
    assert rep.summary().startswith("verdict=general max_dev=")
    assert rep.summary().endswith(" n=25")


def test_classify_slant_corrected():
    c = load_curve("slant-corrected")
    rep = classify(c, base_grid(c), REPARAM_TOL)
    assert rep.verdict == "slant-not-general"
    assert rep.max_dev["sigma"] <= 1e-4
    assert abs(rep.mean("sigma")) == pytest.approx(8 / 15, abs=1e-6)


def test_classify_constructed_clad():
    c = load_curve("intrinsic-clad")
    rep = classify(c, preset_grid(c))
    assert rep.verdict == "clad-not-slant"
    assert rep.mean("gamma") == pytest.approx(0.5, abs=1e-8)
    assert rep.max_dev["sigma"] > 1e-2


def test_classify_perturbed_helix_is_not_slant():
    c = load_curve("helix-perturbed")
    rep = classify(c, preset_grid(c))
    assert rep.verdict == "none"
    assert rep.max_dev["sigma"] >= 10 * REPARAM_TOL


def test_clad_readings_are_mirror_images():
    reps = {}
    for name in ("clad-literal", "clad-corrected"):
        c = load_curve(name)
        reps[name] = classify(c, base_grid(c, 13), REPARAM_TOL)
    a, b = reps["clad-literal"], reps["clad-corrected"]
    assert a.verdict == b.verdict == "none"
    # a reflection flips the sign of tau, hence of every quantity in the chain
    for q in ("f", "sigma", "gamma", "psi"):
        assert np.allclose(getattr(a, q), [-x for x in getattr(b, q)], atol=1e-6)
        assert a.max_dev[q] == pytest.approx(b.max_dev[q], rel=1e-6)


def test_classify_example411_readings():
    ex = load_curve("example411-corrected")
    assert classify(ex, base_grid(ex), REPARAM_TOL).verdict == "general"
    lit = load_curve("example411-literal")
    with pytest.raises(ClassificationError):
        classify(lit, preset_grid(lit))


@pytest.mark.parametrize(
    "name", ["helix35", "intrinsic-slant", "intrinsic-clad", "helix-perturbed", "example411-corrected"]
)
def test_chain_monotone(name):
    c = load_curve(name)
    grid = base_grid(c, 13) if hasattr(c, "arc_of_base") else preset_grid(c, 13)
    m = classify(c, grid, REPARAM_TOL).memberships
    chain = [m["general"], m["slant"], m["clad"], m["gclad"]]
    for inner, outer in zip(chain, chain[1:]):
        assert not inner or outer


@pytest.mark.parametrize("name", ["helix35", "intrinsic-slant", "intrinsic-clad"])
def test_verdict_invariant_under_rigid_motion(name):
    c = load_curve(name)
    th = 0.9
    rot = np.array([[1, 0, 0], [0, math.cos(th), -math.sin(th)], [0, math.sin(th), math.cos(th)]])
    moved = TransformedCurve(c, rot, (0.3, -1.0, 2.0))
    grid = preset_grid(c, 13)
    a, b = classify(c, grid), classify(moved, grid)
    assert a.verdict == b.verdict
    for q in ("f", "sigma", "gamma", "psi"):
        assert np.allclose(getattr(a, q), getattr(b, q), atol=1e-8)


def test_exclusion_budget():
    # kappa = sin^2 u vanishes at u = 0 and u = pi
    c = IntrinsicCurve("msin(s) ^* 2", "e^0.5", 1.0, math.exp(2 * math.pi))
    rep = classify(c, log_grid(E(0.0), E(math.pi), 25))  # 2 of 25 excluded
    assert [x["s"] for x in rep.excluded] == pytest.approx([0.0, math.pi])
    assert "UndefinedFrameError" in rep.excluded[0]["error"]
    assert len(rep.grid) == 23
    with pytest.raises(ClassificationError):
        classify(c, log_grid(E(0.0), E(2 * math.pi), 25))  # 3 of 25


def test_report_json_schema():
    rep = classify(HELIX, GRID[:5])
    data = json.loads(rep.to_json())
    assert set(data) == {"curve", "grid", "profiles", "max_dev", "verdict", "memberships", "tol", "gamma_form", "excluded"}
    assert set(data["profiles"]) == {"f", "sigma", "gamma", "psi"}
    assert len(data["profiles"]["f"]) == 5


def test_preset_metadata():
    p = get_preset("slant-corrected")
    assert p.reading == "corrected"
    assert "8" in p.note
