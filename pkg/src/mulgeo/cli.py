"""Command-line interface.

Usage:
    mulgeo eval "e^2 .* e^3"                       # prints e^6
    mulgeo frame --preset helix35 --grid 1:7.389:50
    mulgeo curvatures --preset helix35 --format json --out k.json
    mulgeo indicatrix --preset helix35 --kind normal --both
    mulgeo classify --preset slant-corrected
    mulgeo oracle --preset clad-corrected --out diff.csv
    mulgeo figure fig6 --out-dir figs

Numbers in records are log-images (logval) unless a figure is written without
``--log-chart``.  Exit codes: 0 success, 2 parse or usage error, 3 domain or
numeric failure (including any failed sample), 4 I/O error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import click

from .curve import (
    LogChartCurve,
    MulCurve,
    NaturalCurve,
    frenet,
    log_grid,
    natural_frame,
    reparam_natural,
)
from .errors import MulGeoError, ParseError
from .helix import DEFAULT_TOL, GAMMA_FORMS, REPARAM_TOL, classify
from .indicatrix import VARIANTS, IndicatrixKind, indicatrix_closed, indicatrix_direct, indicatrix_points
from .mulcalc import evaluate, parse
from .mularith import MulScalar, format_logval
from .mulvec import MulVec3, mcross, minner
from .oracle import compare
from .presets import PRESETS, get_preset

__all__ = ["main", "cli", "RunConfig"]

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

DEFAULT_COUNT = 25


class CliFailure(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    curve: LogChartCurve
    grid: list[MulScalar]  # in the parameter of `curve`
    labels: list[float]  # log of the user-facing parameter, one per grid point
    fmt: str
    out: Path | None
    tol: float | None = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _threads() -> int:
    raw = os.environ.get("MULGEO_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliFailure(f"MULGEO_THREADS must be an integer, got {raw!r}", EXIT_PARSE) from None


def _fan_out(fn: Callable, items: Sequence) -> list:
    """Apply ``fn`` to every item; results stay in input order."""
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _safe(fn: Callable) -> Callable:
    def wrapped(x):
        try:
            return fn(x), None
        except MulGeoError as exc:
            return None, f"{type(exc).__name__}: {exc}"

    return wrapped


def _parse_grid(spec: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise click.BadParameter("expected LO:HI:N", param_hint="--grid")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.BadParameter(f"cannot read {spec!r} as LO:HI:N", param_hint="--grid") from None
    if not (0.0 < lo < hi) or n < 2:
        raise click.BadParameter("need 0 < LO < HI and N >= 2", param_hint="--grid")
    return lo, hi, n


def _parse_domain(spec: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in spec.split(":"))
    except ValueError:
        raise click.BadParameter("expected LO:HI", param_hint="--domain") from None
    if not 0.0 < lo < hi:
        raise click.BadParameter("need 0 < LO < HI", param_hint="--domain")
    return lo, hi


def _naturalize(c: LogChartCurve) -> LogChartCurve:
    lo, hi = c.u_domain
    probes = [lo + (hi - lo) * k / 16 for k in range(17)]
    if all(abs(c.speed_at(u) - 1.0) <= 1e-9 for u in probes):
        return c
    return reparam_natural(c)


def _load_curve(preset: str | None, curve_file: str | None, exprs: Sequence[str], domain: str | None) -> LogChartCurve:
    sources = sum(bool(x) for x in (preset, curve_file, exprs))
    if sources != 1:
        raise click.UsageError("give exactly one of --preset, --curve-file or three --x expressions")
    if preset:
        if preset not in PRESETS:
            raise click.BadParameter(f"unknown preset {preset!r}; known: {', '.join(PRESETS)}", param_hint="--preset")
        return get_preset(preset).curve()
    if curve_file:
        try:
            data = json.loads(Path(curve_file).read_text())
        except OSError as exc:
            raise CliFailure(f"cannot read {curve_file}: {exc}", EXIT_IO) from exc
        except json.JSONDecodeError as exc:
            raise CliFailure(f"{curve_file} is not valid JSON: {exc}", EXIT_PARSE) from exc
        return _naturalize(MulCurve.from_dict(data))
    if len(exprs) != 3:
        raise click.UsageError("--x must be given exactly three times")
    if domain is None:
        raise click.UsageError("--domain LO:HI is required with --x")
    lo, hi = _parse_domain(domain)
    return _naturalize(MulCurve.from_strings(*exprs, lo, hi, name="inline"))


def _make_grid(c: LogChartCurve, grid: str | None) -> tuple[list[MulScalar], list[float]]:
    """Grid in the parameter of ``c`` and the user-facing labels (log s)."""
    base_lo, base_hi = c.base.u_domain if isinstance(c, NaturalCurve) else c.u_domain
    if grid is None:
        us = [float(x.logval) for x in log_grid(MulScalar(base_lo), MulScalar(base_hi), DEFAULT_COUNT)]
    else:
        lo, hi, n = _parse_grid(grid)
        us = [x.logval for x in log_grid(MulScalar.from_positive_real(lo), MulScalar.from_positive_real(hi), n)]
        slack = 1e-9 * max(1.0, abs(base_lo), abs(base_hi))
        if us[0] < base_lo - slack or us[-1] > base_hi + slack:
            raise CliFailure(
                f"grid [{lo}, {hi}] leaves the curve domain [{math.exp(base_lo)!r}, {math.exp(base_hi)!r}]",
                EXIT_DOMAIN,
            )
        us = [min(max(u, base_lo), base_hi) for u in us]
    if isinstance(c, NaturalCurve):
        return [MulScalar(c.arc_of_base(u)) for u in us], us
    return [MulScalar(u) for u in us], us


def _write(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    except OSError as exc:
        raise CliFailure(f"cannot write {out}: {exc}", EXIT_IO) from exc


def _fmt_num(x) -> str:
    return repr(float(x))


def _records_text(records: list[dict], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return json.dumps({**meta, "records": records}, indent=2, sort_keys=True) + "\n"
    if not records:
        return ""
    cols: list[str] = []
    flat_rows = []
    for rec in records:
        flat = {}
        for k, v in rec.items():
            if isinstance(v, (list, tuple)):
                for i, x in enumerate(v):
                    flat[f"{k}{i + 1}"] = x
            else:
                flat[k] = v
        flat_rows.append(flat)
        for k in flat:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for flat in flat_rows:
        w.writerow([_fmt_num(flat[k]) if isinstance(flat.get(k), float) else flat.get(k, "") for k in cols])
    return buf.getvalue()


def _finish(records: list[dict], failures: list[dict], cfg: RunConfig, meta: dict, summary: str) -> None:
    meta = {**meta, "failures": failures}
    _write(_records_text(records, cfg.fmt, meta), cfg.out)
    click.echo(summary)
    if failures:
        for f in failures:
            click.echo(f"failed sample s={f['s']!r}: {f['error']}", err=True)
        raise CliFailure(f"{len(failures)} sample(s) failed", EXIT_DOMAIN)


def _per_sample(cfg: RunConfig, fn: Callable[[MulScalar], dict]) -> tuple[list[dict], list[dict]]:
    results = _fan_out(_safe(fn), cfg.grid)
    records, failures = [], []
    for label, (rec, err) in zip(cfg.labels, results):
        if err is None:
            records.append({"s": label, **rec})
        else:
            failures.append({"s": label, "error": err})
    return records, failures


# ---------------------------------------------------------------------------
# click plumbing
# ---------------------------------------------------------------------------


def curve_options(fn):
    opts = [
        click.option("--preset", help="Named example curve (see `mulgeo presets`)."),
        click.option("--curve-file", type=click.Path(), help="JSON file with keys x1, x2, x3, domain, name."),
        click.option("--x", "exprs", multiple=True, help="Component expression; give three times."),
        click.option("--domain", help="LO:HI parameter range for --x curves (positive reals)."),
        click.option("--grid", help="LO:HI:N sample points, uniform in log s."),
        click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _config(preset, curve_file, exprs, domain, grid, fmt, out, default_fmt="csv", tol=None, **extra) -> RunConfig:
    c = _load_curve(preset, curve_file, exprs, domain)
    g, labels = _make_grid(c, grid)
    return RunConfig(c, g, labels, fmt or default_fmt, out, tol, extra)


def _meta(cfg: RunConfig, command: str) -> dict:
    return {"command": command, "curve": cfg.curve.name, "reparametrized": isinstance(cfg.curve, NaturalCurve)}


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Multiplicative differential geometry of space curves."""


@cli.command("eval")
@click.argument("expression")
@click.option("--s", "s_value", type=float, default=1.0, show_default=True, help="Parameter value (positive real).")
@click.option("--raw", is_flag=True, help="Print the positive real instead of e^logval.")
def cmd_eval(expression: str, s_value: float, raw: bool) -> None:
    """Evaluate a multiplicative expression, e.g. "e^2 .* e^3"."""
    if s_value <= 0.0:
        raise click.BadParameter("s must be positive", param_hint="--s")
    expr = parse(expression)
    value = evaluate(expr.ast, MulScalar.from_positive_real(s_value))
    click.echo(format_logval(value.logval, raw=raw))


@cli.command("presets")
def cmd_presets() -> None:
    """List the named example curves."""
    for p in PRESETS.values():
        click.echo(f"{p.name}\t{p.reading}\t{p.note}")


@cli.command("frame")
@curve_options
def cmd_frame(**kw) -> None:
    """Frenet trihedron t, n, b at every grid point."""
    cfg = _config(**kw)

    def one(s: MulScalar) -> dict:
        rec = frenet(cfg.curve, s).as_record()
        return {k: rec[k] for k in ("t", "n", "b")}

    records, failures = _per_sample(cfg, one)
    _finish(records, failures, cfg, _meta(cfg, "frame"), f"frame n={len(records)} failed={len(failures)}")


@cli.command("curvatures")
@curve_options
def cmd_curvatures(**kw) -> None:
    """Curvature and torsion (logvals) at every grid point."""
    cfg = _config(**kw)

    def one(s: MulScalar) -> dict:
        fs = frenet(cfg.curve, s)
        return {"kappa": fs.kappa.logval, "tau": fs.tau.logval}

    records, failures = _per_sample(cfg, one)
    k = [r["kappa"] for r in records]
    t = [r["tau"] for r in records]
    summary = f"curvatures n={len(records)} failed={len(failures)}"
    if records:
        summary += (
            f" kappa=[{min(k):.12g},{max(k):.12g}] tau=[{min(t):.12g},{max(t):.12g}]"
        )
    _finish(records, failures, cfg, _meta(cfg, "curvatures"), summary)


@cli.command("indicatrix")
@curve_options
@click.option("--kind", type=click.Choice([k.value for k in IndicatrixKind]), default="tangent", show_default=True)
@click.option("--closed-form", "route", flag_value="closed", default=True, help="Closed-form frame and curvatures.")
@click.option("--direct", "route", flag_value="direct", help="Reparametrize the indicatrix and compute directly.")
@click.option("--both", "route", flag_value="both", help="Both routes plus their deviation.")
@click.option("--variant", type=click.Choice(VARIANTS), default="amended", show_default=True)
def cmd_indicatrix(kind: str, route: str, variant: str, **kw) -> None:
    """Spherical indicatrix: frame, curvatures and arc parameter."""
    cfg = _config(**kw)
    records: list[dict] = []
    routes = ["closed", "direct"] if route == "both" else [route]
    results = {}
    for r in routes:
        try:
            if r == "closed":
                app = indicatrix_closed(cfg.curve, kind, cfg.grid, variant)
            else:
                app = indicatrix_direct(cfg.curve, kind, cfg.grid)
        except MulGeoError as exc:
            raise CliFailure(f"{r} route failed: {type(exc).__name__}: {exc}", EXIT_DOMAIN) from exc
        results[r] = app
        for label, a in zip(cfg.labels, app):
            rec = a.as_record()
            rec.pop("f", None)
            rec.pop("sigma", None)
            records.append({"route": r, **rec, "s": label})
    summary = f"indicatrix kind={kind} route={route} n={len(cfg.grid)}"
    meta = {**_meta(cfg, "indicatrix"), "kind": kind, "variant": variant}
    if route == "both":
        dev = 0.0
        for a, d in zip(results["closed"], results["direct"]):
            for q in ("T", "N", "B"):
                dev = max(dev, math.dist(getattr(a, q).logvec, getattr(d, q).logvec))
            dev = max(dev, abs(a.kappa_ind.logval - d.kappa_ind.logval), abs(a.tau_ind.logval - d.tau_ind.logval))
        meta["max_dev"] = dev
        summary += f" max_dev={dev:.3e}"
    _finish(records, [], cfg, meta, summary)


@cli.command("classify")
@curve_options
@click.option("--tol", type=float, default=None, help="Constancy tolerance (default 1e-6, 1e-4 if reparametrized).")
@click.option("--gamma-form", type=click.Choice(GAMMA_FORMS), default="amended", show_default=True)
def cmd_classify(tol: float | None, gamma_form: str, **kw) -> None:
    """Helix classification: general, slant, clad, g-clad."""
    cfg = _config(default_fmt="json", **kw)
    if tol is None:
        tol = REPARAM_TOL if isinstance(cfg.curve, NaturalCurve) else DEFAULT_TOL
    report = classify(cfg.curve, cfg.grid, tol, gamma_form)
    label_of = {s.logval: lab for s, lab in zip(cfg.grid, cfg.labels)}
    report.grid = [label_of[g] for g in report.grid]
    for ex in report.excluded:
        ex["s"] = label_of[ex["s"]]
    q = report.deciding
    summary = f"{report.summary()} {q}={format_logval(report.mean(q))}"
    if cfg.fmt == "json":
        _write(report.to_json() + "\n", cfg.out)
    else:
        rows = [
            {"s": g, "f": f, "sigma": s, "gamma": gm, "psi": p}
            for g, f, s, gm, p in zip(report.grid, report.f, report.sigma, report.gamma, report.psi)
        ]
        _write(_records_text(rows, "csv", {}), cfg.out)
    click.echo(summary)
    if report.excluded:
        raise CliFailure(f"{len(report.excluded)} sample(s) excluded", EXIT_DOMAIN)


@cli.command("oracle")
@curve_options
@click.option("--tol", type=float, default=None, help="Fail (exit 3) if any discrepancy exceeds this.")
def cmd_oracle(tol: float | None, **kw) -> None:
    """Compare every quantity with the classical log-chart computation."""
    cfg = _config(**kw)
    table = compare(cfg.curve, cfg.grid)
    label_of = {s.logval: lab for s, lab in zip(cfg.grid, cfg.labels)}
    table.rows = [type(r)(label_of[r.s], r.quantity, r.mult_logval, r.classical) for r in table.rows]
    if cfg.fmt == "json":
        body = {
            "curve": table.curve,
            "rows": [
                {"s": r.s, "quantity": r.quantity, "mult_logval": r.mult_logval, "classical": r.classical, "absdiff": r.absdiff}
                for r in table.rows
            ],
            "max_by_quantity": table.max_by_quantity(),
            "failures": table.failures,
        }
        _write(json.dumps(body, indent=2, sort_keys=True) + "\n", cfg.out)
    else:
        _write(table.to_csv(), cfg.out)
    click.echo(table.summary())
    if table.failures:
        raise CliFailure(f"{len(table.failures)} sample(s) failed", EXIT_DOMAIN)
    if tol is not None and table.max_absdiff > tol:
        raise CliFailure(f"max discrepancy {table.max_absdiff:.3e} exceeds {tol:g}", EXIT_DOMAIN)


# ---------------------------------------------------------------------------
# figures
# ---------------------------------------------------------------------------

FIG_U = MulVec3.from_logs((0.5, -0.75, 1.5))
FIG_V = MulVec3.from_logs((0.75, 1.0, 0.25))

FIGURE_ALIASES = {
    "fig1": "fig1",
    "circle": "fig1",
    "fig4": "fig4",
    "orthogonal-system": "fig4",
    "fig5": "fig5",
    "orthogonal-vectors": "fig5",
    "fig6": "fig6",
    "general-helix": "fig6",
    "fig-general-helix": "fig6",
    "fig7": "fig7",
    "slant-helix": "fig7",
    "fig8": "fig8",
    "clad-helix": "fig8",
    "sphere": "sphere",
    "frame": "frame",
    "indicatrices": "indicatrices",
}


class _Figure:
    """Collects CSV point sets and a gnuplot script for one figure."""

    def __init__(self, name: str, title: str, log_chart: bool):
        self.name = name
        self.title = title
        self.log_chart = log_chart
        self.files: dict[str, str] = {}
        self.plots: list[str] = []
        self.notes: list[str] = []

    def _coord(self, logval: float) -> str:
        return _fmt_num(logval if self.log_chart else math.exp(logval))

    def points(self, label: str, pts: Iterable[tuple[float, MulVec3]], style: str = "lines") -> None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "x", "y", "z"])
        for s, p in pts:
            w.writerow([_fmt_num(s)] + [self._coord(v) for v in p.logvec])
        fname = f"{self.name}_{label}.csv"
        self.files[fname] = buf.getvalue()
        self.plots.append(f"'{fname}' using 2:3:4 with {style} title '{label}'")

    def vectors(self, label: str, vecs: Sequence[tuple[str, MulVec3, MulVec3]]) -> None:
        """Arrows from a base point; columns are base point then tip."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "x0", "y0", "z0", "x", "y", "z"])
        for name, base, tip in vecs:
            w.writerow([name] + [self._coord(v) for v in base.logvec] + [self._coord(v) for v in tip.logvec])
        fname = f"{self.name}_{label}.csv"
        self.files[fname] = buf.getvalue()
        self.plots.append(f"'{fname}' using 2:3:4:($5-$2):($6-$3):($7-$4) with vectors title '{label}'")

    def script(self) -> str:
        axis = "log-chart coordinates" if self.log_chart else "multiplicative coordinates (raw positive reals)"
        lines = [
            f"# {self.title}",
            f"# axes: {axis}",
            *[f"# {n}" for n in self.notes],
            "set datafile separator ','",
            "set key autotitle columnhead",
            "set view equal xyz",
            "set xlabel 'x'",
            "set ylabel 'y'",
            "set zlabel 'z'",
            f"set title '{self.title}'",
        ]
        if not self.log_chart:
            lines.append("set logscale xyz")
        lines.append("splot " + ", \\\n      ".join(self.plots))
        return "\n".join(lines) + "\n"

    def write(self, out_dir: Path) -> list[Path]:
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            written = []
            for fname, text in sorted(self.files.items()):
                (out_dir / fname).write_text(text)
                written.append(out_dir / fname)
            gp = out_dir / f"{self.name}.gp"
            gp.write_text(self.script())
            written.append(gp)
        except OSError as exc:
            raise CliFailure(f"cannot write figure files to {out_dir}: {exc}", EXIT_IO) from exc
        return written


def _curve_cloud(c: LogChartCurve, n: int) -> list[tuple[float, MulVec3]]:
    lo, hi = c.base.u_domain if isinstance(c, NaturalCurve) else c.u_domain
    pts = []
    for k in range(n):
        u = lo + (hi - lo) * k / (n - 1)
        base = c.base if isinstance(c, NaturalCurve) else c
        y = base.log_jets(u, 0)
        pts.append((u, MulVec3.from_logs(tuple(x.value for x in y))))
    return pts


def _indicatrix_clouds(fig: _Figure, c: LogChartCurve, n: int) -> None:
    lo, hi = c.u_domain
    grid = log_grid(MulScalar(lo), MulScalar(hi), n)
    for kind in IndicatrixKind:
        pts = indicatrix_points(c, kind, grid)
        fig.points(f"{kind.value}_indicatrix", [(s.logval, p) for s, p in zip(grid, pts)], "points pt 7 ps 0.3")


def _build_figure(key: str, log_chart: bool, samples: int) -> _Figure:
    origin = MulVec3.from_logs((0.0, 0.0, 0.0))
    if key == "fig1":
        p = get_preset("fig1-circle")
        c = p.curve()
        fig = _Figure("fig1", "Multiplicative circle", log_chart)
        pts = _curve_cloud(c, samples)
        fig.points("circle", pts)
        logs = [q.logvec for _, q in pts[:-1]]  # last point closes the loop
        cx = [math.fsum(v[i] for v in logs) / len(logs) for i in range(3)]
        radius = math.fsum(math.dist(v, cx) for v in logs) / len(logs)
        fig.notes.append(f"computed radius {format_logval(radius)} (log-image radius {radius!r})")
        fig.notes.append(f"computed plane z = {format_logval(cx[2])}")
        fig.notes.append("caption states radius 1/e^2 and plane z = e^{sqrt(3)/2}")
        return fig
    if key == "fig5":
        fig = _Figure("fig5", "Multiplicative orthogonal vectors", log_chart)
        fig.vectors("vectors", [("u", origin, FIG_U), ("v", origin, FIG_V)])
        fig.notes.append(f"<u, v>* = {format_logval(minner(FIG_U, FIG_V).logval)}")
        return fig
    if key == "fig4":
        fig = _Figure("fig4", "Multiplicative orthogonal system", log_chart)
        w = mcross(FIG_U, FIG_V)
        fig.vectors("vectors", [("u", origin, FIG_U), ("v", origin, FIG_V), ("u x* v", origin, w)])
        fig.notes.append("u x* v = (" + ", ".join(format_logval(x) for x in w.logvec) + ")")
        return fig
    if key == "sphere":
        fig = _Figure("sphere", "Unit multiplicative sphere", log_chart)
        m = max(4, int(math.sqrt(samples)))
        pts = []
        for i in range(m + 1):
            th = math.pi * i / m
            for j in range(2 * m):
                ph = math.pi * j / m
                pts.append((float(i * 2 * m + j), MulVec3.from_logs((math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)))))
        fig.points("sphere", pts, "points pt 7 ps 0.3")
        return fig
    if key == "frame":
        c = get_preset("helix35").curve()
        fig = _Figure("frame", "Multiplicative curve and its Frenet frame", log_chart)
        fig.points("curve", _curve_cloud(c, samples))
        arrows = []
        lo, hi = c.u_domain
        for s in log_grid(MulScalar(lo), MulScalar(hi), 6):
            fs = frenet(c, s)
            p = MulVec3.from_logs(tuple(x.value for x in c.log_jets(s.logval, 0)))
            for name, v in (("t", fs.t), ("n", fs.n), ("b", fs.b)):
                arrows.append((f"{name}({s.logval:.4f})", p, p + v))
        fig.vectors("frame", arrows)
        return fig
    name, preset, title = {
        "fig6": ("fig6", "helix35", "Multiplicative general helix"),
        "fig7": ("fig7", "slant-corrected", "Multiplicative slant helix"),
        "fig8": ("fig8", "clad-corrected", "Multiplicative clad helix"),
        "indicatrices": ("indicatrices", "example411-corrected", "Multiplicative spherical indicatrices"),
    }[key]
    c = get_preset(preset).curve()
    fig = _Figure(name, title, log_chart)
    fig.notes.append(f"curve preset {preset}")
    if key != "indicatrices":
        fig.points("curve", _curve_cloud(c, samples))
    if key in ("fig6", "indicatrices"):
        _indicatrix_clouds(fig, c, samples)
    return fig


@cli.command("figure")
@click.argument("name")
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), default=Path("figures"), show_default=True)
@click.option("--log-chart", is_flag=True, help="Write log-images instead of raw positive reals.")
@click.option("--samples", type=click.IntRange(min=2), default=200, show_default=True)
def cmd_figure(name: str, out_dir: Path, log_chart: bool, samples: int) -> None:
    """Write the data and a gnuplot script for a figure (fig1, fig4 to fig8, sphere, frame, indicatrices)."""
    key = FIGURE_ALIASES.get(name)
    if key is None:
        raise CliFailure(f"unknown figure {name!r}; known: {', '.join(sorted(FIGURE_ALIASES))}", EXIT_PARSE)
    fig = _build_figure(key, log_chart, samples)
    written = fig.write(out_dir)
    for note in fig.notes:
        click.echo(note)
    click.echo(f"figure={fig.name} files={len(written)} dir={out_dir}")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit code instead of raising SystemExit."""
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="mulgeo", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_PARSE
    except click.exceptions.Abort:
        return 1
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        click.echo(exc.caret(), err=True)
        return EXIT_PARSE
    except CliFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.code
    except MulGeoError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_DOMAIN
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        return EXIT_IO
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
