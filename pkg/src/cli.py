"""CLI entry point. Routes all commands and maps failures to exit codes."""

import sys
from pathlib import Path

import click

from src.commands import EXIT_INPUT, EXIT_OK, EXIT_USAGE
from src.core.config_manager import load_config
from src.core.errors import ArnoldError


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


class ArnoldGroup(click.Group):
    """Custom group with clean exception handling and the exit-code contract."""

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except ArnoldError as e:
            raise InputError(str(e)) from e


@click.group(cls=ArnoldGroup)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON records instead of text.")
@click.option("--seed", type=int, default=None, help="Seed for synthesized and sampled words.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path),
              envvar="ARNOLD_COMPLEXITY_CONFIG", default=None, help="JSON config file.")
@click.option("--timing", is_flag=True, help="Include wall time (ns) in JSON records.")
@click.pass_context
def main(ctx, as_json, seed, config_path, timing):
    """Arnold complexity of length-2^n binary words."""
    ctx.ensure_object(dict)
    config = load_config(config_path)
    ctx.obj["config"] = config
    ctx.obj["json"] = as_json
    ctx.obj["seed"] = config.seed if seed is None else seed
    ctx.obj["timing"] = timing


# Register commands
from src.commands.complexity import complexity, scheme, parities, synth
from src.commands.plan import plan, shannon
from src.commands.verify import verify
from src.commands.bench import bench

main.add_command(complexity)
main.add_command(scheme)
main.add_command(parities)
main.add_command(synth)
main.add_command(plan)
main.add_command(shannon)
main.add_command(verify)
main.add_command(bench)
