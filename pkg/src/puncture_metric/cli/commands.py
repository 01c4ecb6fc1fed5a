import logging

from pathlib import Path

import click

from .entities import CliConfig, CommandOutput, OutputFormat, Subcommand
from .output import render, to_json, write_output
from .. import __version__
from ..config import MetricConfig
from ..covering import (
    BUILTIN_EXAMPLES,
    GAMMA3_ETA_QUOTIENT,
    LAMBDA_ETA_QUOTIENT,
    CoveringData,
    builtin_covering,
    eta_quotient_expansion,
    solve_covering_coefficients,
)
from ..initialize import initialize
from ..metric import (
    ComplexPoint,
    Precision,
    metric_direct_eval,
    metric_expansion_eval,
    metric_grid,
)
from ..picard import picard_radius_bound
from ..utils import (
    InconsistentCoveringData,
    InvalidEvaluationPoint,
    format_rational,
    is_error_response,
    wrap_command_with_error_handling,
)
from ..verification import VerificationRunner

initialize()

logger = logging.getLogger(__name__)

EXAMPLE_ETA_QUOTIENTS = {"lambda": LAMBDA_ETA_QUOTIENT, "gamma3": GAMMA3_ETA_QUOTIENT}


def _covering_rows(cov: CoveringData) -> tuple[list[str], list[list[str]]]:
    rows = []
    for m in range(1, cov.order + 1):
        l_value = format_rational(cov.l[m - 1]) if m <= len(cov.l) else ""
        rows.append([str(m), format_rational(cov.c[m - 1]), format_rational(cov.b[m - 1]), l_value])
    return ["m", "c", "b", "l"], rows


def covering_output(cov: CoveringData, title: str) -> CommandOutput:
    columns, rows = _covering_rows(cov)
    payload = cov.model_dump(mode="json", exclude={"max_truncation"})
    return CommandOutput(title=title, payload=payload, columns=columns, rows=rows)


def resolve_covering(
    example: str | None,
    coeffs_file: str | None,
    level_n: int | None,
    c1: str | None,
    c2: str | None,
    order: int,
) -> CoveringData:
    """Exactly one of: a built-in example, a JSON file written by ``coeffs``, or ``N, c1, c2``."""
    sources = [example is not None, coeffs_file is not None, level_n is not None]
    if sum(sources) != 1:
        raise InconsistentCoveringData(
            "choose exactly one covering source: --example, --coeffs-file or --N/--c1/--c2"
        )
    if example is not None:
        return builtin_covering(example, order)
    if coeffs_file is not None:
        return CoveringData.from_json(Path(coeffs_file).read_text(encoding="utf-8"))
    if c1 is None or c2 is None:
        raise InconsistentCoveringData("--N needs both --c1 and --c2")
    return solve_covering_coefficients(level_n, c1, c2, order)


def resolve_point(
    p: str | None, re_part: str | None, im_part: str | None, precision: Precision, dps: int
) -> ComplexPoint:
    if p is not None:
        return ComplexPoint.from_string(p, precision, dps)
    if re_part is None and im_part is None:
        raise InvalidEvaluationPoint("give the point as --p or --re/--im")
    return ComplexPoint(re=re_part or "0", im=im_part or "0", precision=precision, dps=dps)


@wrap_command_with_error_handling(Subcommand.COEFFS.value)
def cmd_coeffs(level_n: int, c1: str, c2: str, order: int) -> CommandOutput:
    cov = solve_covering_coefficients(level_n, c1, c2, order)
    return covering_output(cov, f"Covering coefficients, N={level_n}")


@wrap_command_with_error_handling(Subcommand.EXAMPLE.value)
def cmd_example(name: str, order: int) -> CommandOutput:
    cov = builtin_covering(name, order)
    eta = eta_quotient_expansion(EXAMPLE_ETA_QUOTIENTS[name], order + 1, scale_k=cov.scale_k)
    output = covering_output(cov, f"Built-in covering {name}")
    payload = {
        "covering": output.payload,
        "eta_expansion": [format_rational(v) for v in eta.dense()],
    }
    return output.model_copy(update={"payload": payload})


@wrap_command_with_error_handling(Subcommand.METRIC.value)
def cmd_metric(
    cov_source: dict,
    point: dict,
    v_norm: str,
    M: int,
    direct: bool = False,
    grid: dict | None = None,
) -> CommandOutput:
    config = MetricConfig.get_or_create_instance()
    cov = resolve_covering(**cov_source)
    columns = ["re", "im", "chi", "order"]
    if grid is not None:
        samples = metric_grid(cov, M=M, v_norm=v_norm, validity_radius=config.validity_radius, **grid)
        rows = [
            [s.metric.p.re, s.metric.p.im, s.metric.model_dump(mode="json")["value"], str(M)]
            for s in samples
        ]
        payload = [s.model_dump(mode="json") for s in samples]
        return CommandOutput(title="Metric grid", payload=payload, columns=columns, rows=rows)

    p = resolve_point(**point)
    if direct:
        value = metric_direct_eval(p, v_norm, cov, config.divergenceRatio)
    else:
        value = metric_expansion_eval(p, v_norm, cov, M, config.validity_radius)
    payload = value.model_dump(mode="json")
    rows = [[p.re, p.im, payload["value"], str(value.truncation_order)]]
    return CommandOutput(title="Metric", payload=payload, columns=columns, rows=rows)


@wrap_command_with_error_handling(Subcommand.RADIUS.value)
def cmd_radius(cov_source: dict, point: dict, M: int) -> CommandOutput:
    config = MetricConfig.get_or_create_instance()
    cov = resolve_covering(**cov_source)
    p = resolve_point(**point)
    bound = picard_radius_bound(
        p, cov, M, validity_radius=config.validity_radius, divergence_ratio=config.divergenceRatio
    )
    payload = bound.model_dump(mode="json")
    columns = ["re", "im", "bound", "direct_reciprocal", "relative_gap", "order"]
    rows = [
        [
            p.re,
            p.im,
            payload["bound"],
            payload["direct_reciprocal"] or "",
            payload["relative_gap"] or "",
            str(M),
        ]
    ]
    return CommandOutput(title="Picard radius bound", payload=payload, columns=columns, rows=rows)


@wrap_command_with_error_handling(Subcommand.VERIFY.value)
def cmd_verify(order: int | None, trials: int | None, seed: int | None) -> CommandOutput:
    report = VerificationRunner(order=order, random_trials=trials, seed=seed).run()
    rows = [
        [check.name, "PASS" if check.passed else "FAIL", check.residual, check.detail]
        for check in report.checks
    ]
    return CommandOutput(
        title=f"Verification at order {report.order}",
        payload=report.model_dump(mode="json"),
        columns=["check", "status", "residual", "detail"],
        rows=rows,
        ok=report.passed,
    )


def emit(result: CommandOutput | dict, settings: CliConfig, output_path: str | None) -> None:
    """Print or write the command result; errors and failed reports exit with status 1."""
    ctx = click.get_current_context()
    if is_error_response(result):
        click.echo(to_json(result))
        ctx.exit(1)
    text = render(result, settings.output_format)
    if not write_output(text, output_path):
        click.echo(text, nl=False)
    if not result.ok:
        ctx.exit(1)


def _settings(
    subcommand: Subcommand, order: int, output_format: str, precision: str | None = None
) -> CliConfig:
    config = MetricConfig.get_or_create_instance()
    settings = CliConfig(
        subcommand=subcommand,
        order=order,
        precision=precision or config.precision,
        output_format=output_format,
    )
    logger.info(f"Running {settings.subcommand.value} with {settings.model_dump()}")
    return settings


def precision_option(func):
    return click.option(
        "--precision",
        type=click.Choice([p.value for p in Precision]),
        default=None,
        help="Overrides PUNCTURE_METRIC_PRECISION and the config file.",
    )(func)


def output_options(func):
    func = click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None)(func)
    return click.option(
        "--format",
        "output_format",
        type=click.Choice([f.value for f in OutputFormat]),
        default=OutputFormat.JSON.value,
        show_default=True,
    )(func)


def covering_options(func):
    func = click.option("--order", type=click.IntRange(min=2), default=12, show_default=True)(func)
    func = click.option("--c2", default=None)(func)
    func = click.option("--c1", default=None)(func)
    func = click.option("--N", "level_n", type=int, default=None)(func)
    func = click.option("--coeffs-file", type=click.Path(exists=True, dir_okay=False), default=None)(func)
    return click.option("--example", type=click.Choice(BUILTIN_EXAMPLES), default=None)(func)


def point_options(func):
    func = click.option("--M", "truncation", type=click.IntRange(min=0), default=2, show_default=True)(func)
    func = click.option("--im", "im_part", default=None)(func)
    func = click.option("--re", "re_part", default=None)(func)
    return click.option("--p", "p_literal", default=None, help="Complex point such as \"1e-3+2e-4j\".")(func)


@click.group()
@click.version_option(version=__version__)
def cli():
    """Kobayashi-Royden metric asymptotics and Picard radius bounds on punctured spheres."""


@cli.command("coeffs")
@click.option("--N", "level_n", type=int, required=True)
@click.option("--c1", required=True)
@click.option("--c2", required=True)
@click.option("--order", type=click.IntRange(min=2), required=True)
@output_options
def coeffs_command(level_n, c1, c2, order, output_format, output_path):
    """Solve c_3 .. c_order and derive b and l."""
    settings = _settings(Subcommand.COEFFS, order, output_format)
    emit(cmd_coeffs(level_n, c1, c2, order), settings, output_path)


@cli.command("example")
@click.argument("name", type=click.Choice(BUILTIN_EXAMPLES))
@click.option("--order", type=click.IntRange(min=2), default=10, show_default=True)
@output_options
def example_command(name, order, output_format, output_path):
    """Built-in covering data together with its eta quotient expansion."""
    settings = _settings(Subcommand.EXAMPLE, order, output_format)
    emit(cmd_example(name, order), settings, output_path)


@cli.command("metric")
@covering_options
@point_options
@click.option("--v-norm", default="1", show_default=True)
@click.option("--direct", is_flag=True, help="Evaluate the direct series instead of the expansion.")
@click.option("--grid", is_flag=True, help="Evaluate on a log-spaced annulus lattice.")
@click.option("--r-min", type=float, default=None)
@click.option("--r-max", type=float, default=None)
@click.option("--radial", type=click.IntRange(min=1), default=None)
@click.option("--angular", type=click.IntRange(min=1), default=None)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@precision_option
@output_options
def metric_command(
    example, coeffs_file, level_n, c1, c2, order,
    p_literal, re_part, im_part, truncation,
    v_norm, direct, grid, r_min, r_max, radial, angular, workers,
    output_format, output_path, precision,
):
    """chi_M(p; v) near the puncture at 0."""
    settings = _settings(Subcommand.METRIC, order, output_format, precision)
    config = MetricConfig.get_or_create_instance()
    dps = config.extendedDps
    cov_source = dict(
        example=example, coeffs_file=coeffs_file, level_n=level_n, c1=c1, c2=c2, order=order
    )
    point = dict(p=p_literal, re_part=re_part, im_part=im_part, precision=settings.precision, dps=dps)
    grid_settings = None
    if grid:
        grid_settings = dict(
            r_min=r_min if r_min is not None else config.grid["rMin"],
            r_max=r_max if r_max is not None else config.grid["rMax"],
            radial=radial or config.grid["radial"],
            angular=angular or config.grid["angular"],
            precision=settings.precision,
            dps=dps,
            workers=workers or config.workers,
        )
    emit(cmd_metric(cov_source, point, v_norm, truncation, direct, grid_settings), settings, output_path)


@cli.command("radius")
@covering_options
@point_options
@precision_option
@output_options
def radius_command(
    example, coeffs_file, level_n, c1, c2, order,
    p_literal, re_part, im_part, truncation,
    output_format, output_path, precision,
):
    """Upper bound on the radius of a disc mapping into the punctured sphere."""
    settings = _settings(Subcommand.RADIUS, order, output_format, precision)
    dps = MetricConfig.get_or_create_instance().extendedDps
    cov_source = dict(
        example=example, coeffs_file=coeffs_file, level_n=level_n, c1=c1, c2=c2, order=order
    )
    point = dict(p=p_literal, re_part=re_part, im_part=im_part, precision=settings.precision, dps=dps)
    emit(cmd_radius(cov_source, point, truncation), settings, output_path)


@cli.command("verify")
@click.option("--order", type=click.IntRange(min=8), default=None)
@click.option("--trials", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=None)
@output_options
def verify_command(order, trials, seed, output_format, output_path):
    """Run the invariant suite; exits 1 naming any failed check."""
    config = MetricConfig.get_or_create_instance()
    settings = _settings(Subcommand.VERIFY, order or config.verify["order"], output_format)
    emit(cmd_verify(order, trials, seed), settings, output_path)


def main():
    cli()
