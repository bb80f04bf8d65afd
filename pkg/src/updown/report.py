"""Records emitted by the CLI and their plain / json / csv renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

FORMATS = ("plain", "json", "csv")
ENGINES = ("closed", "sinform", "series", "newton", "dp", "brute")


@dataclass
class EngineReport:
    """Values of one (k, n, variant) computed by several engines."""

    k: int
    n: int
    variant: str
    engine_values: dict[str, int] = field(default_factory=dict)
    elapsed_micros: dict[str, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.engine_values.values())) <= 1

    @property
    def sort_key(self) -> tuple:
        return (self.k, self.n, self.variant)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "engines",
            "k": self.k,
            "n": self.n,
            "variant": self.variant,
            "engine_values": dict(self.engine_values),
            "elapsed_micros": dict(self.elapsed_micros),
            "agree": self.agree,
        }

    def plain(self) -> str:
        vals = " ".join(f"{e}={v}" for e, v in self.engine_values.items())
        return f"k={self.k} n={self.n} {self.variant} {vals} {'ok' if self.agree else 'MISMATCH'}"

    def csv_row(self) -> list:
        vals = ";".join(f"{e}={v}" for e, v in self.engine_values.items())
        return ["engines", self.k, self.n, self.variant, vals, str(self.agree).lower()]


@dataclass
class CheckReport:
    """Outcome of a structural check (bijection round trip, convolution identity)."""

    k: int
    n: int
    variant: str
    ok: bool
    detail: str = ""

    @property
    def agree(self) -> bool:
        return self.ok

    @property
    def sort_key(self) -> tuple:
        return (self.k, self.n, self.variant)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "check",
            "k": self.k,
            "n": self.n,
            "variant": self.variant,
            "detail": self.detail,
            "agree": self.ok,
        }

    def plain(self) -> str:
        return f"k={self.k} n={self.n} {self.variant} {self.detail} {'ok' if self.ok else 'MISMATCH'}"

    def csv_row(self) -> list:
        return ["check", self.k, self.n, self.variant, self.detail, str(self.ok).lower()]


REPORT_HEADER = ["kind", "k", "n", "variant", "values", "agree"]


def render_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_records(records: Sequence[dict[str, Any]], fmt: str, single: bool = False) -> str:
    """Render flat records; plain prints bare values when there is one field of interest."""
    if fmt == "json":
        return render_json(records[0] if single else list(records))
    if fmt == "csv":
        header = list(records[0]) if records else []
        return render_csv(header, ([r[h] for h in header] for r in records))
    raise ValueError(f"unsupported format {fmt!r}")


def render_reports(reports: Sequence, fmt: str) -> str:
    if fmt == "json":
        return render_json([r.to_dict() for r in reports])
    if fmt == "csv":
        return render_csv(REPORT_HEADER, (r.csv_row() for r in reports))
    return "".join(r.plain() + "\n" for r in reports)
