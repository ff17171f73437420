"""The ten acceptance criteria, each at its stated tolerance.

Every test reports one PASS/FAIL line; pytest prints them together in an
"acceptance criteria" section at the end of the run.
"""

import math
import random
import subprocess
import sys

import pytest

from exprgen import PARAM, bounded_expr, random_expr, random_template
from mulgeo.curve import MulCurve, frenet, frenet_residuals, log_grid, reparam_natural
from mulgeo.helix import REPARAM_TOL, classify
from mulgeo.indicatrix import adjudicate, arc_param, indicatrix_direct, indicatrix_frame_closed
from mulgeo.mularith import ONE, ZERO, MulScalar
from mulgeo.mulcalc import evaluate, mderiv, mderiv_numeric, mintegral, parse
from mulgeo.mulvec import MulVec3, mcross, minner, vneg
from mulgeo.oracle import compare
from mulgeo.presets import is_reparametrized, load_curve

E = MulScalar
HELIX = load_curve("helix35")
HELIX_GRID = log_grid(E(0.0), E(2 * math.pi), 25)


def grid_of(c, n=25):
    """Uniform in the base parameter for reparametrized curves, else in log s."""
    if is_reparametrized(c):
        lo, hi = c.base.u_domain
        return [E(c.arc_of_base(lo + (hi - lo) * k / (n - 1))) for k in range(n)]
    lo, hi = c.u_domain
    return log_grid(E(lo), E(hi), n)


def random_smooth_curve():
    return reparam_natural(
        MulCurve.from_strings(
            "e^0.7 .* mcos(s) +* e^0.3 .* s",
            "e^0.9 .* msin(s) +* e^0.2 .* s ^* 2",
            "e^0.5 .* s +* e^0.1 .* msin(e^2 .* s)",
            math.exp(0.1),
            math.exp(1.0),
            name="random-smooth",
        )
    )


TEST_CURVES = [
    "helix35",
    "example411-corrected",
    "slant-corrected",
    "clad-corrected",
    "intrinsic-slant",
    "intrinsic-clad",
    "helix-perturbed",
]


@pytest.mark.criterion(1, "arithmetic laws, 10,000 randomized checks <= 1e-12")
def test_criterion_1_arithmetic_laws(acceptance):
    rng = random.Random(1)
    worst = 0.0
    checks = 0

    def check(a, b):
        nonlocal worst, checks
        worst = max(worst, abs(a.logval - b.logval))
        checks += 1

    while checks < 10_000:
        a, b, c = (E(rng.uniform(-4.0, 4.0)) for _ in range(3))
        check((a + b) + c, a + (b + c))
        check((a * b) * c, a * (b * c))
        check(a * (b + c), a * b + a * c)
        check(a + ZERO, a)
        check(a * ONE, a)
        check(a - a, ZERO)
        check(a / a, ONE)
        check(a + b, b + a)
        check(a * b, b * a)
        # raw definitions on positive reals; the divisor stays off 0* since
        # log(e^b) carries ~1e-16 absolute error that a/b amplifies by 1/b^2
        x, y = a.to_positive_real(), b.to_positive_real()
        check(a + b, E(math.log(x * y)))
        check(a * b, E(math.log(x) * math.log(y)))
        if abs(b.logval) >= 0.25:
            check(a / b, E(math.log(x) / math.log(y)))
    acceptance(worst <= 1e-12, f"{checks} checks, max logval error {worst:.2e}")


@pytest.mark.criterion(2, "figure vectors: orthogonality <= 1e-15, cross product <= 1e-12")
def test_criterion_2_figure_vectors(acceptance):
    u = MulVec3.from_logs((0.5, -0.75, 1.5))
    v = MulVec3.from_logs((0.75, 1.0, 0.25))
    inner = abs(minner(u, v).logval)
    cross = math.dist(mcross(u, v).logvec, (-27 / 16, 1.0, 17 / 16))
    acceptance(inner <= 1e-15 and cross <= 1e-12, f"|<u,v>*| {inner:.2e}, cross distance {cross:.2e}")


@pytest.mark.criterion(3, "helix frame at 25 points <= 1e-9, kappa and tau <= 1e-9")
def test_criterion_3_helix_frame(acceptance):
    frame_err = curv_err = 0.0
    for s in HELIX_GRID:
        u = s.logval
        printed = (
            (-0.6 * math.sin(u), 0.6 * math.cos(u), 0.8),
            (-math.cos(u), -math.sin(u), 0.0),
            (0.8 * math.sin(u), -0.8 * math.cos(u), 0.6),
        )
        fs = frenet(HELIX, s)
        for got, want in zip((fs.t, fs.n, fs.b), printed):
            frame_err = max(frame_err, math.dist(got.logvec, want))
        curv_err = max(curv_err, abs(fs.kappa.logval - 0.6), abs(fs.tau.logval - 0.8))
    ok = frame_err <= 1e-9 and curv_err <= 1e-9
    acceptance(ok, f"frame {frame_err:.2e}, curvatures {curv_err:.2e}")


@pytest.mark.criterion(4, "general helix: f = e^{4/3} dev <= 1e-9, verdict general, sigma/Gamma/psi <= 1e-8")
def test_criterion_4_general_helix(acceptance):
    rep = classify(HELIX, HELIX_GRID)
    f_dev = max(abs(v - 4 / 3) for v in rep.f)
    chain = max(abs(v) for q in ("sigma", "gamma", "psi") for v in getattr(rep, q))
    ok = f_dev <= 1e-9 and rep.max_dev["f"] <= 1e-9 and rep.verdict == "general" and chain <= 1e-8
    acceptance(ok, f"verdict {rep.verdict}, f dev {f_dev:.2e}, chain {chain:.2e}")


@pytest.mark.criterion(5, "Frenet residuals <= 1e-7 on all test curves")
def test_criterion_5_residuals(acceptance):
    worst = 0.0
    curves = [load_curve(n) for n in TEST_CURVES] + [random_smooth_curve()]
    for c in curves:
        for s in grid_of(c):
            worst = max(worst, *(r.logval for r in frenet_residuals(c, s)))
    acceptance(worst <= 1e-7, f"{len(curves)} curves x 25 points, max residual {worst:.2e}")


@pytest.mark.criterion(6, "oracle equivalence on 5 curves, 1e-7 (1e-4 reparametrized)")
def test_criterion_6_oracle(acceptance):
    parts = []
    ok = True
    curves = [load_curve(n) for n in TEST_CURVES[:4]] + [random_smooth_curve()]
    for c in curves:
        table = compare(c, grid_of(c))
        tol = 1e-4 if is_reparametrized(c) else 1e-7
        ok &= not table.failures and table.max_absdiff <= tol
        parts.append(f"{c.name} {table.max_absdiff:.1e}")
    acceptance(ok, ", ".join(parts))


@pytest.mark.criterion(7, "indicatrix closed forms and amended normal-indicatrix forms")
def test_criterion_7_indicatrices(acceptance):
    grid = HELIX_GRID[2:-2:4]
    direct = indicatrix_direct(HELIX, "tangent", grid)
    kt = max(abs(d.kappa_ind.logval - 5 / 3) for d in direct)
    tt = max(abs(d.tau_ind.logval) for d in direct)
    tb = 0.0
    for s in HELIX_GRID:
        T_b = indicatrix_frame_closed(HELIX, "binormal", s)[0]
        tb = max(tb, math.dist(T_b.logvec, vneg(frenet(HELIX, s).n).logvec))
    st = max(abs(arc_param(HELIX, "tangent", E(0.0), s).logval - 0.6 * s.logval) for s in HELIX_GRID)
    amended = 0.0
    printed = {}
    for name in ("helix35", "intrinsic-slant", "intrinsic-clad"):
        c = load_curve(name)
        lo, hi = c.u_domain
        rep = adjudicate(c, log_grid(E(lo + 0.05), E(hi - 0.05), 5), kinds=("normal",))
        amended = max(amended, *(rep["normal"]["amended"][q] for q in ("T", "N", "B", "kappa", "tau")))
        printed[name] = max(rep["normal"]["printed"][q] for q in ("B", "kappa", "tau"))
    documented = printed["intrinsic-slant"] > 1e-2 and printed["intrinsic-clad"] > 1e-2
    ok = kt <= 1e-6 and tt <= 1e-6 and tb <= 1e-8 and st <= 1e-9 and amended <= 1e-6 and documented
    acceptance(
        ok,
        f"kappa_t {kt:.1e}, tau_t {tt:.1e}, T_b {tb:.1e}, s_t {st:.1e}, amended {amended:.1e}, "
        f"printed dev slant {printed['intrinsic-slant']:.2f} clad {printed['intrinsic-clad']:.2f}",
    )


@pytest.mark.criterion(8, "slant helix: sigma dev <= 1e-4, perturbed control >= 10x")
def test_criterion_8_slant(acceptance):
    c = load_curve("slant-corrected")
    rep = classify(c, grid_of(c), REPARAM_TOL)
    ctrl = load_curve("helix-perturbed")
    neg = classify(ctrl, grid_of(ctrl), REPARAM_TOL)
    ok = rep.max_dev["sigma"] <= REPARAM_TOL and neg.max_dev["sigma"] >= 10 * REPARAM_TOL
    acceptance(
        ok,
        f"sigma dev {rep.max_dev['sigma']:.1e} (verdict {rep.verdict}), control {neg.max_dev['sigma']:.1e}",
    )


@pytest.mark.criterion(9, "derivative rules (1)-(6) and FTC, 1,000 checks each")
def test_criterion_9_calculus_laws(acceptance):
    rng = random.Random(9)
    worst = dict.fromkeys(("r1", "r2", "r3", "r4", "r5", "r6", "ftc1", "ftc2"), 0.0)

    def d(text, u, k=1):
        return mderiv(text, E(u), k)

    def val(text, u):
        return evaluate(parse(text), E(u))

    def rec(key, a, b):
        worst[key] = max(worst[key], abs(a.logval - b.logval))

    for _ in range(1000):
        f, g = random_expr(rng), random_expr(rng)
        F, G = f.text, g.text
        u = rng.uniform(-1.0, 1.0)
        c = rng.uniform(-2.0, 2.0)
        rec("r1", d(f"e^{c!r} .* ({F})", u), E(c) * d(F, u))
        rec("r2", d(f"({F}) +* ({G})", u), d(F, u) + d(G, u))
        rec("r2", d(f"({F}) -* ({G})", u), d(F, u) - d(G, u))
        rec("r3", d(f"({F}) .* ({G})", u), d(F, u) * val(G, u) + d(G, u) * val(F, u))
        den = f"(e^2 +* msin({G}))"
        dv = val(den, u)
        rec("r4", d(f"({F}) /* {den}", u), (d(F, u) * dv - d(den, u) * val(F, u)) / dv**2)
        outer, inner = random_template(rng), bounded_expr(rng)
        rec("r5", d(outer.sub(inner).text, u), mderiv(outer.sub(PARAM).text, val(inner.text, u)) * d(inner.text, u))
        k = rng.randint(2, 4)
        rec("r6", d(F, u, k), d(f.d, u, k - 1))  # f.d: symbolic derivative expression
        h = bounded_expr(rng)
        a = rng.uniform(-1.0, 0.0)
        b = a + rng.uniform(0.05, 1.0)
        total = mintegral(lambda s, t=h.text: mderiv(t, s), E(a), E(b))
        worst["ftc1"] = max(worst["ftc1"], abs(total.logval - (h.g(b) - h.g(a))))
        slope = mderiv_numeric(lambda s, t=h.text, a=a: mintegral(t, E(a), s), E(b))
        worst["ftc2"] = max(worst["ftc2"], abs(slope.logval - h.g(b)))
    ok = all(worst[k] <= 1e-10 for k in ("r1", "r2", "r3", "r4", "r5", "r6"))
    ok &= worst["ftc1"] <= 1e-8 and worst["ftc2"] <= 1e-8
    acceptance(ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))


def _cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "mulgeo", *args], capture_output=True, cwd=cwd)


@pytest.mark.criterion(10, "deterministic CLI output and exit codes 2/3/4")
def test_criterion_10_cli(acceptance, tmp_path):
    runs = [
        ("eval", "e^3 /* e^5 .* mcos(s)", "--s", "2"),
        ("curvatures", "--preset", "slant-corrected", "--grid", "1.05:1.4:7"),
        ("classify", "--preset", "helix35", "--format", "json"),
        ("oracle", "--preset", "example411-corrected", "--grid", "1.2:7:5"),
        ("indicatrix", "--preset", "helix35", "--kind", "normal", "--both", "--grid", "1.5:6:5"),
    ]
    identical = 0
    for argv in runs:
        a, b = _cli(*argv), _cli(*argv)
        identical += a.returncode == 0 and a.stdout == b.stdout and bool(a.stdout)
    figs = []
    for k in range(2):
        out = tmp_path / f"run{k}"
        _cli("figure", "fig7", "--out-dir", str(out), "--samples", "40")
        figs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    identical += figs[0] == figs[1] and len(figs[0]) > 0
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    codes = (
        _cli("eval", "mcos(s").returncode,
        _cli("eval", "e^1 /* e^0").returncode,
        _cli("curvatures", "--preset", "helix35", "--out", str(blocker / "x.csv")).returncode,
    )
    ok = identical == len(runs) + 1 and codes == (2, 3, 4)
    acceptance(ok, f"{identical}/{len(runs) + 1} commands byte-identical, failure exit codes {codes}")
