"""Row-oriented run reports with lossless JSON/CSV/text emission.

A ReportDocument carries the fully resolved run configuration, the result
rows, and any advisory notes (boundary-ambiguous counts, inapplicable
bounds, ...).  Values are emitted with shortest round-trip float
formatting and exact 'p/q' strings for rationals, so the serialized rows
equal the library values bit-for-bit and are byte-stable across worker
counts.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA_VERSION = "1.0"


def encode_value(value):
    """JSON-safe encoding that keeps exactness (Fractions become 'p/q')."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 \
            else str(value.numerator)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float, str)):
        return value
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return str(value)


@dataclass
class ReportDocument:
    command: str
    config: dict
    rows: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def add_row(self, **fields) -> None:
        self.rows.append({k: encode_value(v) for k, v in fields.items()})

    def add_note(self, note: str) -> None:
        self.notes.append(note)

    def encoded(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "config": encode_value(self.config),
            "rows": self.rows,
            "notes": list(self.notes),
        }


def to_json(doc: ReportDocument) -> str:
    return json.dumps(doc.encoded(), sort_keys=True, indent=2) + "\n"


def rows_to_json(doc: ReportDocument) -> str:
    """Rows and notes only: the worker-count-independent part of a run."""
    return json.dumps({"rows": doc.rows, "notes": doc.notes}, sort_keys=True)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def to_csv(doc: ReportDocument) -> str:
    """CSV with one header row; columns are the union of row keys, sorted."""
    columns = sorted({key for row in doc.rows for key in row})
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in doc.rows:
        writer.writerow([_csv_cell(row.get(col)) for col in columns])
    return out.getvalue()


def to_text(doc: ReportDocument) -> str:
    lines = [f"# {doc.command} (schema {doc.schema_version})"]
    for key in sorted(doc.config):
        lines.append(f"# {key} = {_csv_cell(encode_value(doc.config[key]))}")
    for row in doc.rows:
        lines.append("")
        for key, value in row.items():
            lines.append(f"{key} = {_csv_cell(value)}")
    if doc.notes:
        lines.append("")
        for note in doc.notes:
            lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


FORMATTERS = {"json": to_json, "csv": to_csv, "text": to_text}
