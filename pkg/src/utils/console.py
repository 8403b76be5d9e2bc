"""Rich console for status messages (stderr) and plain emission of results (stdout)."""

from collections.abc import Iterable

import click
from rich.console import Console
from rich.markup import escape

from src.models.enums import CheckStatus
from src.models.records import OutputRecord, PropertyResult

console = Console(stderr=True)

ICONS = {
    CheckStatus.OK: "[green]OK[/green]",
    CheckStatus.WARN: "[yellow]WARN[/yellow]",
    CheckStatus.FAIL: "[red]FAIL[/red]",
}


def success(msg: str) -> None:
    console.print(f"[green]{escape(msg)}[/green]")


def warning(msg: str) -> None:
    console.print(f"[yellow]{escape(msg)}[/yellow]")


def error(msg: str) -> None:
    console.print(f"[bold red]{escape(msg)}[/bold red]")


def info(msg: str) -> None:
    console.print(f"[cyan]{escape(msg)}[/cyan]")


def dim(msg: str) -> None:
    console.print(f"[dim]{escape(msg)}[/dim]")


def show_property(result: PropertyResult) -> None:
    console.print(f"  {ICONS[result.status]}  {escape(result.name)}: {escape(result.detail)}")
    for witness in result.witnesses:
        console.print(f"      [dim]witness[/dim] {escape(witness)}")


def emit(record: OutputRecord, lines: Iterable[str], as_json: bool) -> None:
    """Print the JSON record or the text lines; nothing else goes to stdout."""
    if as_json:
        click.echo(record.model_dump_json(indent=2))
        return
    for line in lines:
        click.echo(line)
