import click

from src.commands import build, checks, engines
from src.utils.config import CONFIG_FILE, load_settings
from src.utils.errors import CongruenceLabError
from src.utils.logger import set_level


class InputError(click.ClickException):
    exit_code = 2


class LabGroup(click.Group):
    """Library errors and bad parameters surface as exit code 2."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (CongruenceLabError, ValueError) as e:
            raise InputError(str(e)) from e


@click.group(cls=LabGroup)
@click.option("--config", "config_path", default=CONFIG_FILE, show_default=True, help="Settings file.")
@click.pass_context
def cli(ctx, config_path):
    """congruence-lab: exact det/per workbench for prime-indexed matrix congruences."""
    try:
        settings = load_settings(config_path)
    except CongruenceLabError as e:
        raise InputError(str(e)) from e
    set_level(settings.logging.level)
    ctx.obj = settings


# Gắn lệnh
cli.add_command(build.build)
cli.add_command(engines.det)
cli.add_command(engines.per)
cli.add_command(checks.check)
cli.add_command(checks.sweep_command)


def main():
    cli(prog_name="congruence-lab")


if __name__ == "__main__":
    main()
