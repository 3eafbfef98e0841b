"""Options and output plumbing shared by every verb"""
import os
from typing import Any, Callable, Dict, Optional

import click
from pydantic import BaseModel

from ..config import Settings, get_settings
from ..services.codecs import OUTPUT_FORMATS, to_json, write_output


# polynomials and points stay plain strings here; parsing them in the command
# keeps malformed input a parse error (65) rather than a usage error (64)
def poly_option(name: str = "--poly", required: bool = True, help: str = "Polynomial: 'w,x,y,z;...' or JSON file"):
    return click.option(name, "poly_text" if name == "--poly" else "poly2_text", metavar="POLY", required=required, help=help)


def at_option(required: bool = True, multiple: bool = False, help: str = "Point 'w,x,y,z'"):
    return click.option("--at", "at_text", metavar="QUATERNION", required=required, multiple=multiple, help=help)


def format_option(default: str = "text"):
    return click.option(
        "--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default=default, show_default=True, help="Output format"
    )


def out_option():
    return click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to PATH instead of stdout")


def seed_option():
    return click.option("--seed", type=int, default=None, help="Random seed (default from settings)")


def threads_option():
    return click.option(
        "--threads", type=click.IntRange(min=1), default=None, help="Worker threads (default: number of cores)"
    )


def default_threads() -> int:
    return os.cpu_count() or 1


def settings_of(ctx: click.Context, **groups: Dict[str, Any]) -> Settings:
    """Settings of the root context with per-command overrides; None values are dropped"""
    obj = ctx.find_root().obj or {}
    base: Settings = obj.get("settings") or get_settings()
    cleaned = {g: {k: v for k, v in values.items() if v is not None} for g, values in groups.items()}
    return base.with_overrides(**cleaned)


def emit(
    fmt: str,
    model: BaseModel,
    out: Optional[str],
    text: Callable[[], str],
    csv: Optional[Callable[[], str]] = None,
) -> None:
    """Render ``model`` as JSON, CSV or text"""
    if fmt == "csv":
        if csv is None:
            raise click.UsageError("--format csv is not available for this command")
        write_output(csv(), out)
    elif fmt == "text":
        write_output(text(), out)
    else:
        write_output(to_json(model), out)
