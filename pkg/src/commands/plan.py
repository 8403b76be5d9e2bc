"""Value-space commands: plan and shannon."""

import time

import click

from src.commands import EXIT_VERIFY, json_option, make_record, wants_json
from src.core.errors import DomainError
from src.core.planner import MAX_BFS_N, bfs_min_ops, complexity_value, plan_ranks, shannon_exhaustive
from src.models.enums import Subcase
from src.utils.console import emit, error

MAX_SHANNON_N = MAX_BFS_N

SUBCASE_LABELS = {
    Subcase.ALREADY_FINAL: "already-final",
    Subcase.ODD: "odd",
    Subcase.EVEN_CLEAR: "2.1",
    Subcase.EVEN_SHIFT: "2.2",
}


def _binary(value: int, n: int) -> str:
    return f"{value:0{n}b}"


@click.command()
@click.option("--value", type=int, required=True, help="Complexity A, 1 <= A <= 2^bits.")
@click.option("--bits", "n", type=int, required=True, help="Word length is 2^bits.")
@click.option("--bfs", is_flag=True, help="Append the breadth-first oracle count.")
@json_option
@click.pass_context
def plan(ctx, value, n, bfs, as_json):
    """Minimal rank sequence that takes A to a final value."""
    started = time.perf_counter_ns()
    if bfs and n > MAX_BFS_N:
        raise DomainError(f"--bfs needs bits <= {MAX_BFS_N}, got {n}")
    result = plan_ranks(value, n)
    view = complexity_value(value, n)
    width = len(view.digits)

    lines = [
        f"A={value} ({view.render()})",
        f"subcase: {SUBCASE_LABELS[result.subcase]}",
    ]
    lines += [
        f"rank {rank} -> {after} ({_binary(after, width)})"
        for rank, after in zip(result.ranks, result.trajectory)
    ]
    lines.append(f"final: {result.final_value} ({_binary(result.final_value, width)})")
    lines.append(f"count: {result.count}")

    row = result.model_dump(mode="json")
    row["count"] = result.count
    row["nu"] = view.nu
    row["runs"] = view.runs
    if bfs:
        row["bfs"] = bfs_min_ops(value, n)
        lines.append(f"bfs: {row['bfs']}")

    record = make_record(ctx, "plan", {"value": value, "bits": n}, [row], started)
    emit(record, lines, wants_json(ctx, as_json))


@click.command()
@click.option("--min-n", type=int, default=None, help="Smallest width (default from config).")
@click.option("--max-n", type=int, default=None, help="Largest width (default from config).")
@click.option("--validate", is_flag=True, help="Exit 2 on a bound violation or formula mismatch.")
@json_option
@click.pass_context
def shannon(ctx, min_n, max_n, validate, as_json):
    """Per-width maxima of the minimal transformation count against the bounds."""
    config = ctx.obj["config"].shannon
    min_n = config.min_n if min_n is None else min_n
    max_n = config.max_n if max_n is None else max_n
    if not 1 <= min_n <= max_n <= MAX_SHANNON_N:
        raise DomainError(f"need 1 <= min-n <= max-n <= {MAX_SHANNON_N}, got {min_n}..{max_n}")
    started = time.perf_counter_ns()

    reports = [shannon_exhaustive(n) for n in range(min_n, max_n + 1)]
    lines = ["n | max_odd | bound_odd | max_even | bound_even | formula"]
    violations = []
    for report in reports:
        status = "ok" if report.consistent else "MISMATCH"
        lines.append(
            f"{report.n} | {report.max_odd} | {report.bound_odd} | "
            f"{report.max_even} | {report.bound_even} | {status}"
        )
        if not report.consistent:
            violations.append(f"n={report.n}: formula differs from BFS at A={report.mismatches[:5]}")
        # Bounds are only claimed from n=5 on.
        if report.n >= 5 and not report.within_bounds:
            violations.append(
                f"n={report.n}: max_odd={report.max_odd} (A={report.witness_odd}), "
                f"max_even={report.max_even} (A={report.witness_even}) exceed the bounds"
            )

    results = []
    for report in reports:
        row = report.model_dump(mode="json")
        row["consistent"] = report.consistent
        row["within_bounds"] = report.within_bounds
        results.append(row)
    record = make_record(ctx, "shannon", {"min_n": min_n, "max_n": max_n}, results, started)
    emit(record, lines, wants_json(ctx, as_json))

    if validate and violations:
        for violation in violations:
            error(violation)
        ctx.exit(EXIT_VERIFY)
