"""Timing harness: brute-force oracle against the fast engine."""

import time

import click

from src.commands import json_option, make_record, resolve_seed, seed_option, wants_json
from src.core.bench import run_bench
from src.utils.console import dim, emit


@click.command()
@click.option("--bits", "n", type=int, default=None, help="Word length is 2^bits (default from config).")
@click.option("--samples", type=int, default=None, help="Words per engine (default from config).")
@seed_option
@json_option
@click.pass_context
def bench(ctx, n, samples, seed, as_json):
    """Median wall time of both engines over seeded words."""
    config = ctx.obj["config"].bench
    n = config.bits if n is None else n
    samples = config.samples if samples is None else samples
    seed = resolve_seed(ctx, seed)
    started = time.perf_counter_ns()

    dim(f"timing {samples} word(s) of length 2^{n}...")
    report = run_bench(n, samples, seed)
    low, high = report.value_range
    lines = [
        f"bits: {report.bits}",
        f"samples: {report.samples}",
        f"A range: {low}..{high}",
        f"naive median: {report.naive_median_ns / 1e6:.3f} ms",
        f"fast median: {report.fast_median_ns / 1e6:.3f} ms",
        f"speedup: {report.ratio:.1f}x",
    ]

    row = report.model_dump(mode="json")
    row["ratio"] = report.ratio
    record = make_record(
        ctx, "bench", {"bits": n, "samples": samples, "seed": seed}, [row], started, always_time=True
    )
    emit(record, lines, wants_json(ctx, as_json))
