"""
gue-expand command-line application

1/n^2 expansions of GUE linear statistics, Cauchy transforms and trace
covariances, with acceptance suites and Monte Carlo cross-checks.
Run as `python -m src.main <command> ...`.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
import numpy as np
from click.core import ParameterSource
from dotenv import dotenv_values

from config.settings import get_settings, reset_settings

from .covariance import cov_estimate, cov_trace, g2_expansion
from .errors import CapabilityError, DomainError, InputError, NumericError
from .expansion import SmoothInput, expand_expectation
from .hermite import density_arrays, rho_limit, rho_n_grid, whole_line_integral
from .montecarlo import GueSampler, empirical_statistics
from .reporting import parse_complex, render
from .symbolic import cjr_table, eta, exact_expression
from .validation import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_VALIDATION_FAILED = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_NUMERIC_FAILURE = 3

ENV_PREFIX = "GUE_EXPAND_"


# =============================================================================
# Parameter types
# =============================================================================


def parse_g_spec(text: str) -> SmoothInput:
    """
    Build a test function from the catalog

    poly:c0,c1,... (increasing powers), gauss, cos, resolvent:<lambda>,
    resolvent-re:<lambda>, resolvent-im:<lambda>

    Raises:
        InputError: If the g-spec is not in the catalog
        DomainError: If a resolvent parameter lies on [-2, 2]
    """
    kind, _, arg = text.strip().partition(":")
    if kind == "gauss" and not arg:
        return SmoothInput.gaussian()
    if kind == "cos" and not arg:
        return SmoothInput.cosine()
    if kind == "poly" and arg:
        try:
            coeffs = [float(c) for c in arg.split(",")]
        except ValueError:
            raise InputError(f"Bad polynomial coefficients in g-spec {text!r}")
        return SmoothInput.polynomial(coeffs)
    if kind in ("resolvent", "resolvent-re", "resolvent-im") and arg:
        g = SmoothInput.resolvent(parse_complex(arg))
        if kind == "resolvent-re":
            return g.real_part()
        if kind == "resolvent-im":
            return g.imag_part()
        return g
    raise InputError(f"Unknown g-spec {text!r}")


class GSpecType(click.ParamType):
    name = "g-spec"

    def convert(self, value, param, ctx):
        if isinstance(value, SmoothInput):
            return value
        try:
            return parse_g_spec(value)
        except (InputError, DomainError) as e:
            self.fail(str(e), param, ctx)


class ComplexType(click.ParamType):
    name = "a+bi"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return parse_complex(value)
        except InputError as e:
            self.fail(str(e), param, ctx)


class LadderType(click.ParamType):
    name = "ladder"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            ladder = [int(v) for v in str(value).split(",") if v.strip()]
        except ValueError:
            self.fail(f"Ladder must be comma-separated integers, got {value!r}", param, ctx)
        if len(ladder) < 2 or min(ladder) < 1:
            self.fail(f"Ladder needs at least two positive sizes, got {value!r}", param, ctx)
        return ladder


G_SPEC = GSpecType()
COMPLEX = ComplexType()
LADDER = LadderType()


# =============================================================================
# Application plumbing
# =============================================================================


class _ClickEchoHandler(logging.Handler):
    """Logging handler writing to the current stderr through click"""

    def emit(self, record):
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(level: str) -> None:
    root = logging.getLogger()
    if not any(isinstance(h, _ClickEchoHandler) for h in root.handlers):
        handler = _ClickEchoHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.INFO))


def _load_config_file(ctx: click.Context, path: str) -> Dict[str, str]:
    """
    Merge a key=value file under the command-line flags

    GUE_EXPAND_* keys override the environment; any other key fills the
    option of the same name (dashes or underscores) of the invoked command.
    """
    values = {k: v for k, v in dotenv_values(path).items() if v is not None}
    env = {k: v for k, v in values.items() if k.startswith(ENV_PREFIX)}
    if env:
        os.environ.update(env)
        reset_settings()

    options = {k.replace("-", "_"): v for k, v in values.items() if not k.startswith(ENV_PREFIX)}
    group = ctx.command
    default_map = {}
    for name, cmd in getattr(group, "commands", {}).items():
        names = {p.name for p in cmd.params}
        default_map[name] = {k: v for k, v in options.items() if k in names}
    ctx.default_map = default_map
    logger.debug(f"Loaded {len(values)} keys from {path}")
    return options


def _effective_config(params: Dict[str, Any]) -> Dict[str, Any]:
    config = {k: v for k, v in params.items()}
    for key, value in get_settings().as_dict().items():
        config[f"settings.{key}"] = value
    return config


def _emit(
    ctx: click.Context,
    command: str,
    params: Dict[str, Any],
    result: Any,
    columns: Optional[Sequence[str]] = None,
    rows: Optional[List[Sequence[Any]]] = None,
) -> None:
    opts = ctx.find_root().obj
    text = render(opts["format"], command, _effective_config(params), result, columns=columns, rows=rows)
    if opts["out"]:
        Path(opts["out"]).write_text(text, encoding="utf-8")
        logger.info(f"{command} output written to {opts['out']}")
    else:
        click.echo(text, nl=False)


class ExpandGroup(click.Group):
    """Maps package errors to exit codes"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (DomainError, InputError, CapabilityError) as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_BAD_ARGUMENTS)
        except NumericError as e:
            logger.error(f"Numeric failure: {e} {e.diagnostics}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_NUMERIC_FAILURE)


@click.group(cls=ExpandGroup)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key=value file merged under the command-line flags")
@click.option("--log-level", default=None, help="Overrides GUE_EXPAND_LOG_LEVEL")
@click.pass_context
def cli(ctx, fmt, out, config_file, log_level):
    """1/n^2 expansions for GUE linear eigenvalue statistics"""
    options = _load_config_file(ctx, config_file) if config_file else {}
    if ctx.get_parameter_source("fmt") == ParameterSource.DEFAULT and "format" in options:
        fmt = options["format"]
        if fmt not in ("json", "csv"):
            raise click.BadParameter(f"format must be json or csv, got {fmt!r}", ctx=ctx)
    if ctx.get_parameter_source("out") == ParameterSource.DEFAULT and "out" in options:
        out = options["out"]

    configure_logging(log_level or get_settings().log_level)
    ctx.obj = {"format": fmt, "out": out, "config_file": config_file}


# =============================================================================
# Commands
# =============================================================================


@cli.command()
@click.option("--n", type=click.IntRange(min=1), required=True, help="Matrix size")
@click.option("--xmin", type=float, default=-4.0, show_default=True)
@click.option("--xmax", type=float, default=4.0, show_default=True)
@click.option("--points", type=click.IntRange(min=1), default=201, show_default=True)
@click.pass_context
def density(ctx, n, xmin, xmax, points):
    """Spectral density h_n, its derivatives and the ODE residual on a grid"""
    if not xmin <= xmax:
        raise DomainError(f"Need xmin <= xmax, got [{xmin}, {xmax}]")
    dens = density_arrays(n, np.linspace(xmin, xmax, points))
    columns = ["x", "h", "h1", "h2", "h3", "ode_residual"]
    rows = np.column_stack([dens.x, dens.h, dens.h1, dens.h2, dens.h3_direct, dens.ode_residual]).tolist()
    result = {
        "n": n,
        "max_ode_residual": float(np.max(dens.ode_residual)),
        "columns": columns,
        "rows": rows,
    }
    _emit(ctx, "density", {"n": n, "xmin": xmin, "xmax": xmax, "points": points}, result, columns, rows)


@cli.command()
@click.option("--g", "g", type=G_SPEC, required=True, help="Test function from the catalog")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--k", type=click.IntRange(min=0), default=2, show_default=True, help="Truncation order")
@click.option("--ladder", type=LADDER, default=None, help="Sizes for the rate fit, e.g. 8,16,32,64")
@click.pass_context
def expand(ctx, g, n, k, ladder):
    """Expansion of E{tr_n g(X_n)} with remainder diagnostics"""
    ladder = ladder or get_settings().default_ladder
    report = expand_expectation(g, n, k, ladder=ladder)
    result = report.model_dump()
    result["slope"] = report.slope
    rows = [[j, a, s] for j, (a, s) in enumerate(zip(report.alphas, report.partial_sums))]
    params = {"g": g.name, "n": n, "k": k, "ladder": ",".join(map(str, ladder))}
    _emit(ctx, "expand", params, result, ["j", "alpha", "partial_sum"], rows)


@cli.command(name="eta")
@click.option("--j", type=click.IntRange(min=0), required=True)
@click.option("--exact", is_flag=True, help="Exact rational coefficients")
@click.option("--lambda", "lam", type=COMPLEX, default=None, help="Evaluate at this point")
@click.pass_context
def eta_command(ctx, j, exact, lam):
    """Coefficient eta_j of the 1/n^2 expansion of the Cauchy transform"""
    expr = eta(j)
    result: Dict[str, Any] = {"j": j, "text": expr.to_text()}
    if j >= 1:
        row = cjr_table(j).row(j)
        result["coefficients"] = {str(r): (str(c) if exact else float(c)) for r, c in row.items()}
    if exact:
        result["expression"] = exact_expression(expr)
    if lam is not None:
        result["lambda"] = lam
        result["value"] = expr.evaluate(lam)
    _emit(ctx, "eta", {"j": j, "exact": exact, "lambda": lam}, result)


@cli.command()
@click.option("--f", "f", type=G_SPEC, required=True)
@click.option("--g", "g", type=G_SPEC, default=None, help="Defaults to f")
@click.option("--n", type=click.IntRange(min=1), default=None, help="Omit for the n -> infinity limit")
@click.pass_context
def cov(ctx, f, g, n):
    """Cov{Tr f(X_n), Tr g(X_n)} by kernel quadrature"""
    g = g or f
    estimate = cov_estimate(f, g, n)
    _emit(ctx, "cov", {"f": f.name, "g": g.name, "n": n}, estimate)


@cli.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--lambda", "lam", type=COMPLEX, required=True)
@click.option("--mu", type=COMPLEX, required=True)
@click.option("--k", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--ladder", type=LADDER, default=None)
@click.pass_context
def g2(ctx, n, lam, mu, k, ladder):
    """Two-point resolvent covariance and its 1/n^2 expansion"""
    ladder = ladder or get_settings().default_ladder
    report = g2_expansion(n, lam, mu, k, ladder=ladder)
    result = report.model_dump()
    result["slope"] = report.slope_diagnostic
    rows = [[m, s] for m, s in enumerate(report.expansion_partials)]
    params = {"n": n, "lambda": lam, "mu": mu, "k": k, "ladder": ",".join(map(str, ladder))}
    _emit(ctx, "g2", params, result, ["order", "partial_sum"], rows)


@cli.command()
@click.option("--suite", type=click.Choice(list(SUITES) + ["all"]), default="golden", show_default=True)
@click.pass_context
def validate(ctx, suite):
    """Run acceptance suites; exits 1 if any check fails"""
    reports = run_suite(suite)
    passed = all(r.passed for r in reports)
    result = {
        "passed": passed,
        "suites": [dict(r.model_dump(), passed=r.passed) for r in reports],
    }
    rows = [
        [r.suite, c.name, c.passed, c.value, c.tolerance, c.detail]
        for r in reports
        for c in r.checks
    ]
    _emit(ctx, "validate", {"suite": suite}, result,
          ["suite", "check", "passed", "value", "tolerance", "detail"], rows)
    if not passed:
        failed = [c.name for r in reports for c in r.failures]
        logger.error(f"Validation failed: {failed}")
        ctx.exit(EXIT_VALIDATION_FAILED)


@cli.command()
@click.option("--n", type=click.IntRange(min=1, max=2000), required=True)
@click.option("--f", "f", type=G_SPEC, required=True)
@click.option("--g", "g", type=G_SPEC, default=None, help="Defaults to f")
@click.option("--draws", type=click.IntRange(min=100), default=10_000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--sigma2", type=float, default=None, help="Entry variance (defaults to 1/n)")
@click.option("--threads", type=click.IntRange(min=1), default=None)
@click.option("--reference/--no-reference", default=True, help="Add quadrature values for comparison")
@click.option("--progress", is_flag=True)
@click.pass_context
def mc(ctx, n, f, g, draws, seed, sigma2, threads, reference, progress):
    """Monte Carlo estimates of E{tr_n f} and Cov{Tr f, Tr g}"""
    g = g or f
    stats = empirical_statistics(GueSampler(n, sigma2=sigma2, seed=seed), f, g, draws=draws,
                                 threads=threads, progress=progress)
    result = stats.model_dump()
    if reference and sigma2 is None:
        result["reference_mean_f"] = whole_line_integral(f.value, n)
        result["reference_cov_fg"] = cov_trace(f, g, n)
    params = {"n": n, "f": f.name, "g": g.name, "draws": draws, "seed": seed, "sigma2": sigma2}
    _emit(ctx, "mc", params, result)


@cli.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--xmin", type=float, default=-3.0, show_default=True)
@click.option("--xmax", type=float, default=3.0, show_default=True)
@click.option("--points", type=click.IntRange(min=1), default=61, show_default=True)
@click.pass_context
def kernel(ctx, n, xmin, xmax, points):
    """Covariance kernel rho_n and its limit rho on a square grid"""
    if not xmin <= xmax:
        raise DomainError(f"Need xmin <= xmax, got [{xmin}, {xmax}]")
    grid = np.linspace(xmin, xmax, points)
    finite = rho_n_grid(n, grid, grid)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    limit = rho_limit(X, Y)
    columns = ["x", "y", "rho_n", "rho"]
    rows = np.column_stack([X.ravel(), Y.ravel(), finite.ravel(), np.ravel(limit)]).tolist()
    result = {"n": n, "columns": columns, "rows": rows}
    _emit(ctx, "kernel", {"n": n, "xmin": xmin, "xmax": xmax, "points": points}, result, columns, rows)


def main():
    cli(prog_name="gue-expand")


if __name__ == "__main__":
    main()
