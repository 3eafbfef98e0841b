"""almansi and zonal-table"""
from typing import Optional

import click
import numpy as np

from ..models.quaternion import Quaternion
from ..models.reports import AlmansiReport, ZonalRow, ZonalTable
from ..services.codecs import format_number, format_quaternion, parse_polynomial, parse_quaternion, zonal_csv
from ..services.harmonics import almansi, zonal_eval, zonal_grid_rows
from ..services.qpolynomial import evaluate
from ..services.quaternion_core import ball_array
from .common import at_option, emit, format_option, out_option, poly_option, seed_option, settings_of


def _almansi_text(report: AlmansiReport, digits: int) -> str:
    lines = [f"P = A(x) - conj(x) B(x), degree {report.degree}"]
    lines += [f"  A: Z_{k} [{format_quaternion(c, digits)}]" for k, c in enumerate(report.A)]
    lines += [f"  B: Z_{k} [{format_quaternion(c, digits)}]" for k, c in enumerate(report.B)]
    if report.point is not None:
        lines.append(f"  at [{format_quaternion(report.point, digits)}]:")
        lines.append(f"    A = [{format_quaternion(report.a_value, digits)}]")
        lines.append(f"    B = [{format_quaternion(report.b_value, digits)}]")
        lines.append(f"    P = [{format_quaternion(report.p_value, digits)}]")
    return "\n".join(lines)


@click.command(name="almansi")
@poly_option()
@at_option(required=False, help="Also evaluate A, B and P at this point")
@format_option()
@out_option()
@click.pass_context
def almansi_command(ctx: click.Context, poly_text: str, at_text: Optional[str], fmt: str, out: str) -> int:
    """Zonal decomposition P(x) = A(x) - conj(x) B(x)."""
    settings = settings_of(ctx)
    P = parse_polynomial(poly_text)
    pair = almansi(P)
    report = AlmansiReport(degree=P.degree(), A=list(pair.A.coeffs), B=list(pair.B.coeffs))
    if at_text is not None:
        x = parse_quaternion(at_text)
        report = report.model_copy(
            update={
                "point": x,
                "a_value": zonal_eval(pair.A, x),
                "b_value": zonal_eval(pair.B, x),
                "p_value": evaluate(P, x),
            }
        )
    emit(fmt, report, out, text=lambda: _almansi_text(report, settings.output.text_digits))
    return 0


@click.command(name="zonal-table")
@click.option("--k-max", type=click.IntRange(min=0), default=6, show_default=True, help="Highest degree")
@click.option("--grid", type=click.IntRange(min=1), default=10, show_default=True, help="Number of seeded points")
@click.option("--radius", type=click.FloatRange(min=0.0, min_open=True), default=2.0, show_default=True)
@seed_option()
@format_option(default="csv")
@out_option()
@click.pass_context
def zonal_table_command(
    ctx: click.Context, k_max: int, grid: int, radius: float, seed: Optional[int], fmt: str, out: str
) -> int:
    """Z_0..Z_k at seeded points of the ball of the given radius."""
    settings = settings_of(ctx, sampling={"seed": seed})
    rng = np.random.default_rng(settings.sampling.seed)
    points = ball_array(rng, grid, radius)
    rows = list(zonal_grid_rows(k_max, points))
    table = ZonalTable(
        k_max=k_max,
        rows=[ZonalRow(k=k, point=Quaternion(x0, x1, x2, x3), value=v) for k, x0, x1, x2, x3, v in rows],
    )
    digits = settings.output.text_digits
    emit(
        fmt,
        table,
        out,
        text=lambda: "\n".join(
            f"Z_{r.k}([{format_quaternion(r.point, digits)}]) = {format_number(r.value, digits)}" for r in table.rows
        ),
        csv=lambda: zonal_csv(rows),
    )
    return 0
