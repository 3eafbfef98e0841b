"""norm and profile"""
from typing import Optional

import click

from ..models.reports import NormReport, ProfileRow, ProfileTable
from ..services.codecs import format_number, norm_csv, norm_text, parse_polynomial, profile_csv, slice_extrema_text
from ..services.extremal import modulus_profile, slice_extrema, sphere_minimum, sup_norm
from .common import emit, format_option, out_option, poly_option, settings_of


@click.command(name="norm")
@poly_option()
@click.option("--grid", type=click.IntRange(min=3), default=None, help="Alpha grid size (default from settings)")
@click.option("--minimum", is_flag=True, help="Also report min |P| on S^3")
@format_option()
@out_option()
@click.pass_context
def norm_command(ctx: click.Context, poly_text: str, grid: Optional[int], minimum: bool, fmt: str, out: str) -> int:
    """Sup-norm of P on the unit sphere S^3."""
    settings = settings_of(ctx, norm={"grid": grid})
    P = parse_polynomial(poly_text)
    report = NormReport(
        maximum=sup_norm(P, settings),
        minimum=sphere_minimum(P, settings) if minimum else None,
    )
    emit(
        fmt,
        report,
        out,
        text=lambda: norm_text(report, settings.output.text_digits),
        csv=lambda: norm_csv(report),
    )
    return 0


@click.command(name="profile")
@poly_option()
@click.option("--samples", type=click.IntRange(min=2), default=201, show_default=True, help="Number of alphas")
@click.option("--alpha", type=click.FloatRange(-1.0, 1.0), default=None, help="Only the slice with this real part")
@format_option(default="csv")
@out_option()
@click.pass_context
def profile_command(
    ctx: click.Context, poly_text: str, samples: int, alpha: Optional[float], fmt: str, out: str
) -> int:
    """Slice maximum and minimum of |P| as functions of alpha = re(x)."""
    settings = settings_of(ctx)
    P = parse_polynomial(poly_text)
    digits = settings.output.text_digits
    if alpha is not None:
        ext = slice_extrema(P, alpha, settings)
        row = ProfileRow(alpha=ext.alpha, slice_max=ext.max, slice_min=ext.min)
        emit(fmt, ext, out, text=lambda: slice_extrema_text(ext, digits), csv=lambda: profile_csv([row]))
        return 0

    rows = modulus_profile(P, samples, settings)
    emit(
        fmt,
        ProfileTable(rows=rows),
        out,
        text=lambda: "\n".join(
            f"{format_number(r.alpha, digits)}\t{format_number(r.slice_max, digits)}\t{format_number(r.slice_min, digits)}"
            for r in rows
        ),
        csv=lambda: profile_csv(rows),
    )
    return 0
