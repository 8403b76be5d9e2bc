"""Word-level commands: complexity, scheme, parities, synth."""

import time
from pathlib import Path

import click

from src.commands import EXIT_VERIFY, json_option, make_record, resolve_seed, seed_option, wants_json
from src.core.engines import (
    complexity_fast,
    complexity_naive,
    complexity_naive_count,
    run_scheme,
    synthesize_word,
)
from src.core.thinning import detect_final, parity_tree
from src.core.words import parse_word, parse_words_file, render_word
from src.models.enums import Engine, Terminal
from src.utils.console import emit, error, info


def _ranks_text(ranks: list[int]) -> str:
    return ",".join(str(r) for r in ranks) or "-"


@click.command()
@click.option("--input", "inputs", multiple=True, help="Word as 0b... or 0x... (repeatable).")
@click.option("--file", "words_file", type=click.Path(dir_okay=False, path_type=Path),
              help="Words file: one token per line, # comments.")
@click.option("--engine", type=click.Choice([e.value for e in Engine]), default=Engine.FAST.value,
              show_default=True)
@click.option("--cert", is_flag=True, help="Show the certificate (fast) or the chain (naive).")
@click.option("--cross-check", is_flag=True, help="Run both engines; exit 2 if they disagree.")
@json_option
@click.pass_context
def complexity(ctx, inputs, words_file, engine, cert, cross_check, as_json):
    """Compute A(w) for one or more words."""
    if not inputs and words_file is None:
        raise click.UsageError("give --input WORD or --file PATH")
    started = time.perf_counter_ns()

    words = [parse_word(text) for text in inputs]
    if words_file is not None:
        words.extend(parse_words_file(words_file))

    results, lines, disagreements = [], [], []
    for word in words:
        row: dict = {"word": str(word), "n": word.n, "engine": engine}
        suffix = ""
        if engine == Engine.FAST:
            a, certificate = complexity_fast(word)
            row["complexity"] = a
            if cert:
                row["certificate"] = certificate.model_dump()
                suffix = f" ranks={_ranks_text(certificate.ranks)} final={certificate.final_complexity}"
        elif cert:
            a, trace = complexity_naive(word)
            row["complexity"] = a
            row["chain"] = [str(w) for w in trace.words]
            suffix = f" chain={','.join(row['chain'])}"
        else:
            a = complexity_naive_count(word)
            row["complexity"] = a

        if cross_check:
            other = complexity_naive_count(word) if engine == Engine.FAST else complexity_fast(word)[0]
            row["cross_check"] = other
            if other != a:
                disagreements.append(f"{word}: {engine}={a} other={other}")

        prefix = "" if len(words) == 1 else f"{word} "
        lines.append(f"{prefix}A={a}{suffix}")
        results.append(row)

    record = make_record(
        ctx, "complexity", {"words": [str(w) for w in words], "engine": engine}, results, started
    )
    emit(record, lines, wants_json(ctx, as_json))

    if disagreements:
        error(f"{len(disagreements)} engine disagreement(s):")
        for witness in disagreements:
            error(f"  {witness}")
        ctx.exit(EXIT_VERIFY)
    if cross_check:
        info(f"both engines agree on {len(words)} word(s)")


@click.command()
@click.option("--input", "text", required=True, help="Start word.")
@click.option("--rank", "ranks", type=int, multiple=True, help="Operator rank 2^k (repeatable, in order).")
@json_option
@click.pass_context
def scheme(ctx, text, ranks, as_json):
    """Replay operators of the given ranks and classify the last word."""
    started = time.perf_counter_ns()
    word = parse_word(text)
    trace = run_scheme(word, ranks)

    lines = [f"start: {word}"]
    lines += [f"rank {step.rank}: {step.result}" for step in trace.steps]
    terminal = f"terminal: {trace.terminal}"
    if trace.terminal == Terminal.FINAL:
        terminal += f" A={trace.detection.complexity} (level {trace.detection.level})"
    lines.append(terminal)

    result = {
        "start": str(word),
        "steps": [{"rank": step.rank.rank, "word": str(step.result)} for step in trace.steps],
        "terminal": trace.terminal.value,
        "final_complexity": trace.detection.complexity if trace.detection else None,
    }
    record = make_record(ctx, "scheme", {"word": str(word), "ranks": list(ranks)}, [result], started)
    emit(record, lines, wants_json(ctx, as_json))


@click.command()
@click.option("--input", "text", required=True, help="Word to inspect.")
@click.option("--reference", is_flag=True, help="Use the instrumented unpacked path.")
@json_option
@click.pass_context
def parities(ctx, text, reference, as_json):
    """Print the parity tree of a word, level 0 first, and its final-word detection."""
    started = time.perf_counter_ns()
    word = parse_word(text)
    tree = parity_tree(word, reference=reference)
    detection = detect_final(word)

    lines = tree.render_lines()
    lines.append(f"xor_count: {tree.xor_count}")
    lines.append(f"final: level {detection.level} A={detection.complexity}" if detection else "final: none")

    result = {
        "levels": [list(level) for level in tree.levels],
        "xor_count": tree.xor_count,
        "final_level": detection.level if detection else None,
        "final_complexity": detection.complexity if detection else None,
    }
    record = make_record(ctx, "parities", {"word": str(word), "reference": reference}, [result], started)
    emit(record, lines, wants_json(ctx, as_json))


@click.command()
@click.option("--bits", "n", type=int, required=True, help="Word length is 2^bits.")
@click.option("--value", type=int, required=True, help="Target complexity A.")
@click.option("--format", "fmt", type=click.Choice(["bin", "hex"]), default="bin", show_default=True)
@seed_option
@json_option
@click.pass_context
def synth(ctx, n, value, fmt, seed, as_json):
    """Synthesize a word with a given complexity."""
    started = time.perf_counter_ns()
    seed = resolve_seed(ctx, seed)
    word = synthesize_word(n, value, seed)
    a, _ = complexity_fast(word)
    text = render_word(word, fmt)

    record = make_record(
        ctx, "synth", {"bits": n, "value": value, "seed": seed, "format": fmt},
        [{"word": text, "complexity": a}], started,
    )
    emit(record, [text], wants_json(ctx, as_json))
