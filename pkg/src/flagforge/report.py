"""Report envelopes and their md / csv / json renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass
class ReportEnvelope:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]]
    provenance: dict[str, Any]
    summary: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def as_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "summary": self.summary,
            "rows": self.rows,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ReportEnvelope:
        return cls(
            command=d["command"],
            parameters=d["parameters"],
            rows=d["rows"],
            provenance=d["provenance"],
            summary=d.get("summary", {}),
            schema_version=d["schema_version"],
        )


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


def to_json(env: ReportEnvelope) -> str:
    return json.dumps(env.as_dict(), indent=2) + "\n"


def from_json(text: str) -> ReportEnvelope:
    return ReportEnvelope.from_dict(json.loads(text))


def to_csv(env: ReportEnvelope) -> str:
    buf = io.StringIO()
    if env.rows:
        cols = list(env.rows[0])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in env.rows:
            w.writerow([_cell(row.get(c)) for c in cols])
    return buf.getvalue()


def to_markdown(env: ReportEnvelope, headers: dict[str, str] | None = None) -> str:
    """Pipe table over the row keys; ``headers`` renames columns for display."""
    lines = []
    for k, v in env.summary.items():
        lines.append(f"{k}: {_cell(v)}")
    if lines:
        lines.append("")
    if env.rows:
        cols = list(env.rows[0])
        names = [(headers or {}).get(c, c) for c in cols]
        lines.append("| " + " | ".join(names) + " |")
        lines.append("|" + "|".join("---" for _ in cols) + "|")
        for row in env.rows:
            lines.append("| " + " | ".join(_cell(row.get(c)) for c in cols) + " |")
    return "\n".join(lines) + "\n"


def render(env: ReportEnvelope, fmt: str, headers: dict[str, str] | None = None) -> str:
    if fmt == "json":
        return to_json(env)
    if fmt == "csv":
        return to_csv(env)
    return to_markdown(env, headers)


def to_json_lines(records: list[dict[str, Any]]) -> str:
    return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)
