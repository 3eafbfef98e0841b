"""eval, mul and derive"""
import logging

import click

from ..models.reports import EvaluationResult
from ..services.codecs import (
    format_quaternion,
    parse_polynomial,
    parse_quaternion,
    polynomial_csv,
    polynomial_document,
    polynomial_text,
    quaternion_csv,
)
from ..services.qpolynomial import derivative, evaluate, star_mul
from .common import at_option, emit, format_option, out_option, poly_option, settings_of

logger = logging.getLogger(__name__)


@click.command(name="eval")
@poly_option()
@at_option()
@format_option()
@out_option()
@click.pass_context
def eval_command(ctx: click.Context, poly_text: str, at_text: str, fmt: str, out: str) -> int:
    """Evaluate P(x) = sum_k x^k a_k."""
    settings = settings_of(ctx)
    P = parse_polynomial(poly_text)
    x = parse_quaternion(at_text)
    value = evaluate(P, x)
    digits = settings.output.text_digits
    emit(
        fmt,
        EvaluationResult(point=x, value=value),
        out,
        text=lambda: f"P(x) = [{format_quaternion(value, digits)}]",
        csv=lambda: quaternion_csv(value),
    )
    return 0


@click.command(name="mul")
@poly_option()
@poly_option("--poly2", help="Right factor")
@format_option()
@out_option()
@click.pass_context
def mul_command(ctx: click.Context, poly_text: str, poly2_text: str, fmt: str, out: str) -> int:
    """Star product P * Q (coefficient convolution)."""
    settings = settings_of(ctx)
    product = star_mul(parse_polynomial(poly_text), parse_polynomial(poly2_text))
    emit(
        fmt,
        polynomial_document(product),
        out,
        text=lambda: polynomial_text(product, settings.output.text_digits),
        csv=lambda: polynomial_csv(product),
    )
    return 0


@click.command(name="derive")
@poly_option()
@format_option()
@out_option()
@click.pass_context
def derive_command(ctx: click.Context, poly_text: str, fmt: str, out: str) -> int:
    """Formal derivative P'."""
    settings = settings_of(ctx)
    dP = derivative(parse_polynomial(poly_text))
    emit(
        fmt,
        polynomial_document(dP),
        out,
        text=lambda: polynomial_text(dP, settings.output.text_digits),
        csv=lambda: polynomial_csv(dP),
    )
    return 0
