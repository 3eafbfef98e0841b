import logging
import sys
from typing import Optional, Sequence

import click
import yaml
from pydantic import ValidationError

from .commands import ALL_COMMANDS
from .config import Settings, get_settings
from .exceptions import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, PolynomialParseError, QBernError

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(debug: bool) -> None:
    """Logs go to stderr so stdout stays machine readable"""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


@click.group(name="qbern", context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="YAML settings file")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool) -> None:
    """Quaternionic polynomials, sup-norms on S^3 and the Bernstein inequality."""
    try:
        settings = Settings.from_yaml(config_path) if config_path else get_settings()
    except (OSError, yaml.YAMLError, ValueError) as e:
        raise click.BadParameter(str(e), param_hint="--config") from e
    configure_logging(verbose or settings.app.debug)
    logger.debug(f"{settings.app.name} {settings.app.version} starting")
    ctx.obj = {"settings": settings}


for _command in ALL_COMMANDS:
    cli.add_command(_command)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code"""
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        rv = cli.main(args=args, prog_name="qbern", standalone_mode=False)
    except click.ClickException as e:
        # UsageError, BadParameter, NoSuchCommand, ...
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted", err=True)
        return EXIT_USAGE
    except PolynomialParseError as e:
        click.echo(f"Parse error: {e.message}", err=True)
        return e.exit_code
    except ValidationError as e:
        click.echo(f"Invalid settings: {e}", err=True)
        return EXIT_USAGE
    except QBernError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        click.echo(f"Error: {e.message}", err=True)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unhandled exception: {str(e)}", exc_info=True)
        click.echo(f"Internal error: {e}", err=True)
        return EXIT_INTERNAL
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
