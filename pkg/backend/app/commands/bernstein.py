"""bernstein, theorem and counterexample"""
import logging
from typing import Optional, Tuple

import click

from ..exceptions import EXIT_CONCLUSION_VIOLATED, EXIT_NUMERICAL_FAILURE, EXIT_OK, InvalidUnitImaginary
from ..models.quaternion import UnitImaginary
from ..services.bernstein import check_inequality, check_theorem, counterexample_report, exit_code_for, inequality_sweep
from ..services.codecs import (
    check_report_csv,
    check_report_text,
    counterexample_text,
    parse_polynomial,
    parse_quaternion,
    sweep_text,
)
from .common import (
    at_option,
    default_threads,
    emit,
    format_option,
    out_option,
    poly_option,
    seed_option,
    settings_of,
    threads_option,
)

logger = logging.getLogger(__name__)


@click.command(name="bernstein")
@poly_option(required=False, help="Polynomial to check; without it a seeded sweep runs")
@click.option("--samples", type=click.IntRange(min=1), default=1000, show_default=True, help="Sweep size")
@click.option("--max-degree", type=click.IntRange(min=1), default=8, show_default=True, help="Sweep degree bound")
@click.option("--grid", type=click.IntRange(min=3), default=None, help="Alpha grid of the sup-norm engine")
@seed_option()
@threads_option()
@format_option()
@out_option()
@click.pass_context
def bernstein_command(
    ctx: click.Context,
    poly_text: Optional[str],
    samples: int,
    max_degree: int,
    grid: Optional[int],
    seed: Optional[int],
    threads: Optional[int],
    fmt: str,
    out: str,
) -> int:
    """Bernstein inequality ||P'|| <= d ||P|| for one polynomial or a random sweep."""
    settings = settings_of(ctx, norm={"grid": grid}, sampling={"seed": seed})
    digits = settings.output.text_digits
    if poly_text is not None:
        report = check_inequality(parse_polynomial(poly_text), settings)
        emit(fmt, report, out, text=lambda: check_report_text(report, digits), csv=lambda: check_report_csv(report))
        return exit_code_for(report)

    summary = inequality_sweep(
        samples,
        settings.sampling.seed,
        max_degree=max_degree,
        threads=threads or default_threads(),
        settings=settings,
    )
    emit(fmt, summary, out, text=lambda: sweep_text(summary, digits))
    return EXIT_OK if summary.failures == 0 else EXIT_CONCLUSION_VIOLATED


@click.command(name="theorem")
@poly_option(help="P")
@poly_option("--poly2", help="Q")
@at_option(required=False, multiple=True, help="Probe point 'w,x,y,z' (repeatable)")
@click.option("--axis", "axis_text", metavar="QUATERNION", default=None, help="Imaginary unit I of the slice to test")
@click.option("--off-slice", is_flag=True, help="Also sample the conclusion off the slice (diagnostic)")
@click.option("--grid", type=click.IntRange(min=2), default=None, help="Alpha grid of the |P| <= |Q| check")
@click.option("--samples", type=click.IntRange(min=0), default=None, help="Global sample points of S^3")
@seed_option()
@format_option()
@out_option()
@click.pass_context
def theorem_command(
    ctx: click.Context,
    poly_text: str,
    poly2_text: str,
    at_text: Tuple[str, ...],
    axis_text: Optional[str],
    off_slice: bool,
    grid: Optional[int],
    samples: Optional[int],
    seed: Optional[int],
    fmt: str,
    out: str,
) -> int:
    """Hypotheses and conclusion of the Bernstein theorem for the pair (P, Q)."""
    settings = settings_of(ctx, sampling={"alpha_grid": grid, "global_samples": samples, "seed": seed})
    P = parse_polynomial(poly_text)
    Q = parse_polynomial(poly2_text)
    probes = [parse_quaternion(t) for t in at_text]
    axis = None
    if axis_text is not None:
        try:
            axis = UnitImaginary.of(parse_quaternion(axis_text))
        except InvalidUnitImaginary as e:
            raise click.BadParameter(str(e), param_hint="--axis") from e

    report = check_theorem(P, Q, probes=probes, settings=settings, axis=axis, probe_off_slice=off_slice)
    digits = settings.output.text_digits
    emit(fmt, report, out, text=lambda: check_report_text(report, digits), csv=lambda: check_report_csv(report))
    return exit_code_for(report)


@click.command(name="counterexample")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Sample points of S^3")
@seed_option()
@format_option()
@out_option()
@click.pass_context
def counterexample_command(ctx: click.Context, samples: Optional[int], seed: Optional[int], fmt: str, out: str) -> int:
    """Rebuild the pair with Q outside every slice where |P'| > |Q'| somewhere on S^3."""
    settings = settings_of(ctx, sampling={"global_samples": samples, "seed": seed})
    report = counterexample_report(settings)
    emit(fmt, report, out, text=lambda: counterexample_text(report, settings.output.text_digits))
    if not report.passed:
        logger.error("Counterexample values were not reproduced")
        return EXIT_NUMERICAL_FAILURE
    return EXIT_OK
