import sys

import click

from signed_spectra import __version__
from signed_spectra.commands import bounds
from signed_spectra.commands import cheeger
from signed_spectra.commands import cluster
from signed_spectra.commands import frustration
from signed_spectra.commands import spectrum
from signed_spectra.commands import verify
from signed_spectra.core.config import settings
from signed_spectra.core.errors import EXIT_USAGE, SignedSpectraError
from signed_spectra.core.logging import configure_logging
from signed_spectra.schemas.errors import error_response


class SignedSpectraGroup(click.Group):
    """Maps failures onto the documented exit codes.

    Domain errors print an ErrorResponse JSON line on stderr; click usage
    errors keep their usual message but exit with 1.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else 0
        except click.ClickException as exc:
            exc.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except SignedSpectraError as exc:
            click.echo(error_response(exc).model_dump_json(), err=True)
            code = exc.exit_code
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=SignedSpectraGroup)
@click.version_option(__version__, prog_name="signed-spectra")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help=f"Logging level (default {settings.LOG_LEVEL}).",
)
def cli(log_level):
    """Spectral analysis of signed graphs."""
    configure_logging(log_level or settings.LOG_LEVEL)


cli.add_command(spectrum.command)
cli.add_command(cheeger.command)
cli.add_command(cluster.command)
cli.add_command(bounds.command)
cli.add_command(verify.command)
cli.add_command(frustration.command)


if __name__ == "__main__":
    cli(prog_name="signed-spectra")
