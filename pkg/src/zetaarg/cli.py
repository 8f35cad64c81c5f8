"""
Command-line interface for zetaarg.

Usage:
    zetaarg bound --t0 1e10 --mode convexity --eta 0.351
    zetaarg bound --t0 1e10 --mode rosser
    zetaarg optimize --t0 1e10 --mode cheng-graham
    zetaarg table --format csv --out table.csv
    zetaarg crossover --lo 1e20 --hi 1e32
    zetaarg verify s --t-max 1000 --samples 2000
    zetaarg verify lemmas --samples 500 --seed 42

Exit codes: 0 ok, 2 bad flags, 3 domain error, 4 no sign change in a
crossover bracket, 5 empirical violations found.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys

import click

from . import __version__
from . import reference as ref
from .critline import CertificateKind, certificate_for
from .exceptions import DomainError, NoSignChangeError
from .optimize import build_table, crossover_height, minimize_bound
from .sbounds import BoundParams, rosser_bound, theorem_b_bound
from .verify import check_bounds_empirically, check_lemmas, scan_zeros

__all__ = ["main", "envelope", "render"]

EXIT_DOMAIN = 3
EXIT_NO_SIGN_CHANGE = 4
EXIT_VIOLATIONS = 5

FORMATS = click.Choice(["json", "csv", "text"])
TABLE_FIELDS = (
    ["t0"]
    + list(ref.TABLE_COLUMNS)
    + [f"{c}_paper" for c in ref.TABLE_COLUMNS]
    + [f"{c}_delta" for c in ref.TABLE_COLUMNS]
)


def envelope(command: str, inputs: dict, results, references: list[str]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "paper_refs": list(references),
        "tool_version": __version__,
    }


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return "" if value is None else str(value)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _render_csv(env: dict) -> str:
    buf = io.StringIO()
    results = env["results"]
    if env["command"] == "table":
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in results["rows"]:
            writer.writerow({k: "" if row[k] is None else repr(row[k]) for k in TABLE_FIELDS})
    else:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in _flatten(results):
            writer.writerow([key, repr(value) if isinstance(value, float) else _fmt(value)])
    return buf.getvalue()


def _render_text(env: dict) -> str:
    lines = [f"{env['command']} (zetaarg {env['tool_version']})"]
    results = env["results"]
    if env["command"] == "table":
        cols = ["t0"] + list(ref.TABLE_COLUMNS)
        lines.append("  ".join(f"{c:>13}" for c in cols))
        for row in results["rows"]:
            lines.append("  ".join(f"{_fmt(row[c]):>13}" for c in cols))
            if row["rosser_b_paper"] is not None:
                lines.append(
                    "  ".join([f"{'published':>13}"] + [f"{_fmt(row[c + '_paper']):>13}" for c in cols[1:]])
                )
                lines.append(
                    "  ".join([f"{'delta':>13}"] + [f"{_fmt(row[c + '_delta']):>13}" for c in cols[1:]])
                )
        results = {k: v for k, v in results.items() if k != "rows"}
    for key, value in _flatten(results):
        lines.append(f"{key}: {_fmt(value)}")
    for cite in env["paper_refs"]:
        lines.append(f"ref: {cite}")
    return "\n".join(lines) + "\n"


def render(env: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(env)
    return _render_text(env)


def _emit(env: dict, fmt: str, out: str | None) -> None:
    click.echo(render(env, fmt), nl=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(render(env, "json"))


def _fail(exc: Exception, code: int):
    click.echo(f"error: {exc}", err=True)
    sys.exit(code)


def _common(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Also write the JSON envelope to this file.")(fn)
    fn = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)(fn)
    return fn


@click.group()
@click.version_option(__version__, prog_name="zetaarg")
def main():
    """Explicit bounds |S(T)| <= a + b log T and their empirical checks."""


@main.command()
@click.option("--t0", type=float, required=True, help="Height T0 above which the bound holds.")
@click.option("--mode", type=click.Choice(["convexity", "cheng-graham", "custom", "rosser"]),
              required=True)
@click.option("--eta", type=float, default=None)
@click.option("--delta", type=float, default=None)
@click.option("--theta", type=float, default=None)
@click.option("--B", "B", type=float, default=None)
@_common
def bound(t0, mode, eta, delta, theta, B, fmt, out):
    """Print a, b and a + b log t0 for fixed parameters."""
    inputs = {"t0": t0, "mode": mode, "eta": eta, "delta": delta, "theta": theta, "B": B}
    try:
        if mode == "rosser":
            result = rosser_bound(t0)
            cites = [ref.ROSSER_CITATION]
        else:
            if eta is None:
                raise click.UsageError("--eta is required unless --mode rosser")
            cert = certificate_for(mode, delta=delta, theta=theta, B=B)
            result = theorem_b_bound(BoundParams(eta, t0, cert))
            cites = [ref.THEOREM_B_CITATION]
    except DomainError as exc:
        _fail(exc, EXIT_DOMAIN)
    results = {
        "method": result.method.value,
        "a": result.a,
        "b": result.b,
        "t0": result.t0,
        "total_at_t0": result.a + result.b * math.log(result.t0),
    }
    _emit(envelope("bound", inputs, results, cites), fmt, out)


@main.command()
@click.option("--t0", type=float, required=True)
@click.option("--mode", type=click.Choice(["convexity", "cheng-graham"]), required=True)
@_common
def optimize(t0, mode, fmt, out):
    """Minimise a + b log t0 over the free parameters."""
    try:
        res = minimize_bound(t0, mode)
    except DomainError as exc:
        _fail(exc, EXIT_DOMAIN)
    results = res.as_dict()
    row = ref.reference_row(t0)
    if row is not None:
        prefix = "conv" if mode == "convexity" else "subconv"
        results["b_paper"] = row[f"{prefix}_b"]
        results["total_paper"] = row[f"{prefix}_total"]
        results["b_delta"] = res.bound.b - row[f"{prefix}_b"]
        results["total_delta"] = res.total_at_t0 - row[f"{prefix}_total"]
    _emit(envelope("optimize", {"t0": t0, "mode": mode}, results, [ref.TABLE_CITATION]), fmt, out)


def _parse_heights(text: str | None):
    if text is None:
        return list(ref.TABLE_HEIGHTS)
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--t0-list") from exc


@main.command()
@click.option("--t0-list", "t0_list", default=None,
              help="Comma-separated heights (default: the eight published heights).")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@_common
def table(t0_list, jobs, fmt, out):
    """Reproduce the comparison table with published values and deltas."""
    heights = _parse_heights(t0_list)
    try:
        rows = build_table(heights, n_jobs=jobs)
    except DomainError as exc:
        _fail(exc, EXIT_DOMAIN)
    results = {"rows": [r.as_dict() for r in rows]}
    cites = [ref.TABLE_CITATION, ref.ROSSER_CITATION, ref.THEOREM_B_CITATION]
    _emit(envelope("table", {"t0_list": heights}, results, cites), fmt, out)


@main.command()
@click.option("--lo", type=float, default=1e20, show_default=True)
@click.option("--hi", type=float, default=1e32, show_default=True)
@_common
def crossover(lo, hi, fmt, out):
    """Height where the optimised Cheng-Graham b overtakes the convexity b."""
    try:
        t_star = crossover_height(lo, hi)
    except NoSignChangeError as exc:
        _fail(exc, EXIT_NO_SIGN_CHANGE)
    except DomainError as exc:
        _fail(exc, EXIT_DOMAIN)
    results = {
        "t_star": t_star,
        "log10_t_star": math.log10(t_star),
        "t_star_paper": ref.CROSSOVER_T0,
        "log10_delta": math.log10(t_star) - math.log10(ref.CROSSOVER_T0),
    }
    _emit(envelope("crossover", {"lo": lo, "hi": hi}, results, [ref.CROSSOVER_CITATION]), fmt, out)


@main.group()
def verify():
    """Empirical checks against directly computed zeta values."""


@verify.command("s")
@click.option("--t-max", "t_max", type=click.FloatRange(4.0, 5000.0), default=1000.0,
              show_default=True)
@click.option("--t-lo", "t_lo", type=click.FloatRange(3.001, 5000.0), default=4.0,
              show_default=True)
@click.option("--samples", type=click.IntRange(min=2), default=2000, show_default=True)
@click.option("--eta", type=float, default=0.351, show_default=True,
              help="eta for the convexity-certificate bound with t0 = 3.001.")
@_common
def verify_s(t_max, t_lo, samples, eta, fmt, out):
    """Check Rosser's bound and a convexity bound against computed S(t)."""
    try:
        if t_lo >= t_max:
            raise DomainError(f"--t-lo {t_lo} must be below --t-max {t_max}")
        bounds = [
            rosser_bound(3.0),
            theorem_b_bound(BoundParams(eta, 3.001, certificate_for("convexity"))),
        ]
        scan = scan_zeros(t_max)
        report = check_bounds_empirically(t_lo, t_max, bounds, samples, scan=scan)
    except DomainError as exc:
        _fail(exc, EXIT_DOMAIN)
    results = report.as_dict()
    results["zero_count"] = scan.zero_count
    results["suspicious_gaps"] = [list(g) for g in scan.suspicious_gaps]
    inputs = {"t_max": t_max, "t_lo": t_lo, "samples": samples, "eta": eta}
    cites = [ref.ROSSER_VALIDITY_CITATION, ref.THEOREM_B_CITATION]
    _emit(envelope("verify s", inputs, results, cites), fmt, out)
    sys.exit(0 if report.passed else EXIT_VIOLATIONS)


@verify.command("lemmas")
@click.option("--samples", type=click.IntRange(min=1), default=500, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@_common
def verify_lemmas(samples, seed, fmt, out):
    """Random domination checks of the strip, Gamma-ratio and Euler-product bounds."""
    families = check_lemmas(samples, seed)
    results = {
        "families": [f.as_dict() for f in families],
        "passed": all(f.passed for f in families),
    }
    cites = ["Gamma-ratio bound on -1/2 <= sigma <= 1/2", "Strip bounds either side of sigma = 1/2",
             "Euler-product lower bound |zeta(s)| >= zeta(2 sigma)/zeta(sigma)",
             "Cheng-Graham: |zeta(1/2+it)| <= 3 t^(1/6) log t, t > e"]
    _emit(envelope("verify lemmas", {"samples": samples, "seed": seed}, results, cites), fmt, out)
    sys.exit(0 if results["passed"] else EXIT_VIOLATIONS)


if __name__ == "__main__":
    main()
