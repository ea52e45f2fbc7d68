"""Output records and their text, CSV and JSON-lines renderings."""
import csv
from dataclasses import dataclass, field
from enum import auto
import io
import json
from typing import Any, TextIO, final

from strenum import LowercaseStrEnum


class OutputFormat(LowercaseStrEnum):
    """Rendering of command output."""

    TEXT = auto()
    """Human-readable line (canonical exact forms)."""

    CSV = auto()
    """One comma-separated row per record."""

    JSONL = auto()
    """One JSON object per line, with the same fields as the CSV row."""


@final
@dataclass(frozen=True)
class OutputRecord:
    """One line of command output.

    Example:
        >>> record = OutputRecord({"sequence": "A", "index": 2, "value": "7/720"}, "A 2 7/720")
        >>> record.render(OutputFormat.CSV)
        'A,2,7/720'
        >>> record.render(OutputFormat.JSONL)
        '{"sequence": "A", "index": 2, "value": "7/720"}'
    """

    fields: dict[str, Any]
    """Named values, in column order."""

    text: str | None = field(default=None)
    """Text rendering (defaults to the CSV row)."""

    row: list[str] | None = field(default=None)
    """CSV cells (defaults to the field values, in order)."""

    def render(self, output_format: OutputFormat) -> str:
        """Render the record as a single line.

        Args:
            output_format: Format to render in.

        Returns:
            The line, without a trailing newline.
        """
        match output_format:
            case OutputFormat.TEXT if self.text is not None:
                return self.text
            case OutputFormat.JSONL:
                return json.dumps(self.fields)
            case _ if self.row is not None:
                return csv_line(self.row)
            case _:
                return csv_line([str(value) for value in self.fields.values()])


def csv_line(values: list[str]) -> str:
    """Format values as one CSV row without a line terminator.

    Args:
        values: Cell values.

    Returns:
        The row.
    """
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="").writerow(values)
    return buffer.getvalue()


def write_records(
    records: list[OutputRecord], output_format: OutputFormat, stream: TextIO
) -> None:
    """Write records one per line.

    Args:
        records: Records to write.
        output_format: Format to render in.
        stream: Destination.
    """
    for record in records:
        stream.write(record.render(output_format) + "\n")
