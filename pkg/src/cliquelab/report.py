"""Refutation reports: one stable JSON document or a fixed-width text table."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Optional

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: str
    source: str
    n: int
    m: int
    seed: int
    oracle: Optional[dict] = None
    outcomes: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    search: Optional[dict] = None
    artifacts: dict = field(default_factory=dict)
    claim_reproduced: Optional[bool] = None
    timings: Optional[dict] = None

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "input": {"source": self.source, "n": self.n, "edges": self.m},
            "seed": self.seed,
            "oracle": self.oracle,
            "outcomes": self.outcomes,
            "rows": self.rows,
            "search": self.search,
            "artifacts": self.artifacts,
            "claim_reproduced": self.claim_reproduced,
        }
        if self.timings is not None:
            doc["timings"] = self.timings
        return doc


def load_schema() -> dict:
    return json.loads(resources.files("cliquelab").joinpath("report_schema.json").read_text())


def _cell(x: Any) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.4f}"
    if isinstance(x, (list, tuple)):
        return "{" + ",".join(map(str, x)) + "}"
    return str(x)


def _table(rows: list[dict], columns: list[str]) -> list[str]:
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    fmt = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return [fmt(columns), fmt(["-" * w for w in widths])] + [fmt(row) for row in cells]


OUTCOME_COLUMNS = ["algorithm", "k", "mode", "answer", "oracle", "agreement", "found"]


def emit_report(report: Report, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [
        f"{'command':<12}{report.command}",
        f"{'input':<12}{report.source}  n={report.n}  |E|={report.m}",
        f"{'seed':<12}{report.seed}",
    ]
    if report.oracle is not None:
        o = report.oracle
        lines.append(f"{'oracle':<12}size={o['size']}  witness={_cell(o['witness_labels'])}")
    if report.outcomes:
        lines.append("")
        lines += _table(report.outcomes, OUTCOME_COLUMNS)
        for o in report.outcomes:
            if o.get("trace_text"):
                lines.append("")
                lines += o["trace_text"].rstrip("\n").splitlines()
            for note in o.get("notes", []):
                lines.append(f"note: {note}")
    if report.rows:
        lines.append("")
        lines += _table(report.rows, list(report.rows[0]))
    if report.search is not None:
        s = report.search
        lines.append("")
        lines.append(f"{'search':<12}runs={s['runs']}  nodes={s['nodes']}  cap={s['cap']}")
    for name, path in sorted(report.artifacts.items()):
        lines.append(f"{name:<12}{_cell(path)}")
    if report.claim_reproduced is not None:
        lines.append(f"{'reproduced':<12}{_cell(report.claim_reproduced)}")
    if report.timings:
        for stage, secs in sorted(report.timings.items()):
            lines.append(f"{'time':<12}{stage}={secs:.4f}s")
    return "\n".join(lines) + "\n"
