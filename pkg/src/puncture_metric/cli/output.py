import csv
import io
import json

from pathlib import Path

from rich.console import Console
from rich.table import Table

from .entities import CommandOutput, OutputFormat


def to_json(payload) -> str:
    return json.dumps(payload, indent=2)


def to_csv(columns: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def to_human(title: str, columns: list[str], rows: list[list[str]]) -> str:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*row)
    console = Console(file=io.StringIO(), width=140, color_system=None)
    console.print(table)
    return console.file.getvalue()


def render(output: CommandOutput, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.CSV:
        return to_csv(output.columns, output.rows)
    if output_format is OutputFormat.HUMAN:
        return to_human(output.title, output.columns, output.rows)
    return to_json(output.payload) + "\n"


def write_output(text: str, path: str | None) -> bool:
    """Write to ``path`` when given; returns False when the caller should print instead."""
    if path is None:
        return False
    Path(path).write_text(text, encoding="utf-8")
    return True
