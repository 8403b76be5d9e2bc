"""Run the property suites and print one status line per property."""

import time

import click

from src.commands import EXIT_VERIFY, json_option, make_record, resolve_seed, seed_option, wants_json
from src.core.verification import run_verification
from src.models.enums import CheckStatus, VerifyLevel
from src.presets import get_preset, get_preset_names
from src.utils.console import console, emit, error, show_property, success, warning


@click.command()
@click.option("--level", type=click.Choice(get_preset_names()),
              default=VerifyLevel.QUICK.value, show_default=True)
@seed_option
@json_option
@click.pass_context
def verify(ctx, level, seed, as_json):
    """Check the engines, the complexity laws and the planner against each other."""
    seed = resolve_seed(ctx, seed)
    settings = ctx.obj["config"].verify[VerifyLevel(level)]
    started = time.perf_counter_ns()

    console.print(f"\n[bold]verify {level}[/bold] [dim]{get_preset(level)['description']}, seed {seed}[/dim]\n")
    results = run_verification(settings, seed)
    for result in results:
        show_property(result)

    fails = sum(1 for r in results if r.status == CheckStatus.FAIL)
    warns = sum(1 for r in results if r.status == CheckStatus.WARN)
    console.print()
    if fails:
        error(f"{fails} issue(s), {warns} warning(s).")
        summary = f"{fails} of {len(results)} properties failed"
    else:
        if warns:
            warning(f"{warns} warning(s), no failures.")
        else:
            success("All properties hold.")
        summary = f"all {len(results)} properties hold"

    record = make_record(
        ctx, "verify", {"level": level, "seed": seed},
        [r.model_dump(mode="json") for r in results], started,
    )
    emit(record, [summary], wants_json(ctx, as_json))
    if fails:
        ctx.exit(EXIT_VERIFY)
