"""Options and record helpers shared by the commands."""

import time
from typing import Any

import click

from src.models.records import OutputRecord

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INPUT = 3


def json_option(fn):
    return click.option("--json", "as_json", is_flag=True, help="Emit a JSON record.")(fn)


def seed_option(fn):
    return click.option("--seed", type=int, default=None, help="Overrides the global seed.")(fn)


def wants_json(ctx: click.Context, as_json: bool) -> bool:
    return as_json or ctx.obj["json"]


def resolve_seed(ctx: click.Context, seed: int | None) -> int:
    return ctx.obj["seed"] if seed is None else seed


def make_record(
    ctx: click.Context,
    command: str,
    inputs: dict[str, Any],
    results: list[dict[str, Any]],
    started_ns: int,
    *,
    always_time: bool = False,
) -> OutputRecord:
    timing = time.perf_counter_ns() - started_ns if always_time or ctx.obj["timing"] else None
    return OutputRecord(command=command, inputs=inputs, results=results, timing_ns=timing)
