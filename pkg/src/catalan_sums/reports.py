"""Machine-readable run reports (JSON, CSV, text)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, NamedTuple

PASS = "pass"
FAIL = "fail"
TEXT_ERRATA_PER_ID = 3


class Record(NamedTuple):
    """One evaluated check.  ``informational`` records never affect the status."""

    id: str
    tuple: tuple
    lhs: str
    rhs: str
    ok: bool
    informational: bool = False


def record_from_check(result, informational: bool = False) -> Record:
    from .results import render

    return Record(
        result.identity,
        _plain(result.params),
        render(result.lhs),
        render(result.rhs),
        bool(result.equal),
        informational,
    )


def _plain(value):
    if isinstance(value, tuple):
        return tuple(_plain(v) for v in value)
    if isinstance(value, list):
        return [_plain(v) for v in value]
    return value


def _jsonable_tuple(t) -> list:
    return [_jsonable_tuple(x) if isinstance(x, (tuple, list)) else x for x in t]


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    checked: int
    failures: list[dict]
    status: str
    elapsed_ms: int = 0
    errata: list[dict] = field(default_factory=list)
    # command-specific top-level keys (scan reading, skipped count, ...)
    extra: dict[str, Any] = field(default_factory=dict)
    rows: list[Record] = field(default_factory=list, compare=False, repr=False)

    @classmethod
    def from_records(cls, command: str, params: dict, records: list[Record], elapsed_ms: int = 0) -> "Report":
        checks = [r for r in records if not r.informational]
        failures = [_failure(r) for r in checks if not r.ok]
        errata = [_failure(r) for r in records if r.informational and not r.ok]
        return cls(
            command=command,
            params=params,
            checked=len(checks),
            failures=failures,
            status=FAIL if failures else PASS,
            elapsed_ms=elapsed_ms,
            errata=errata,
            rows=list(records),
        )

    def to_dict(self) -> dict:
        return {
            **self.extra,
            "command": self.command,
            "params": self.params,
            "checked": self.checked,
            "failures": self.failures,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
            "errata": self.errata,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            command=data["command"],
            params=data["params"],
            checked=data["checked"],
            failures=data["failures"],
            status=data["status"],
            elapsed_ms=data.get("elapsed_ms", 0),
            errata=data.get("errata", []),
            extra={k: v for k, v in data.items() if k not in _CORE_KEYS},
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "tuple", "lhs", "rhs", "result"])
        for r in self.rows:
            result = PASS if r.ok else FAIL
            if r.informational:
                result = "erratum" if not r.ok else "info"
            writer.writerow([r.id, json.dumps(_jsonable_tuple(r.tuple)), r.lhs, r.rhs, result])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status} ({self.checked} checks, {self.elapsed_ms} ms)"]
        for key, value in self.params.items():
            lines.append(f"  {key} = {value}")
        for key, value in sorted(self.extra.items()):
            lines.append(f"  {key}: {value}")
        for f in self.failures:
            lines.append(f"  FAIL {f['id']} {f['tuple']}: {f['lhs']} != {f['rhs']}")
        shown: dict[str, int] = {}
        for f in self.errata:
            shown[f["id"]] = shown.get(f["id"], 0) + 1
            if shown[f["id"]] <= TEXT_ERRATA_PER_ID:
                lines.append(f"  erratum {f['id']} {f['tuple']}: {f['lhs']} != {f['rhs']}")
        for rid, count in shown.items():
            if count > TEXT_ERRATA_PER_ID:
                lines.append(f"  erratum {rid}: {count - TEXT_ERRATA_PER_ID} more (see json/csv)")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


_CORE_KEYS = frozenset(("command", "params", "checked", "failures", "status", "elapsed_ms", "errata"))


def _failure(r: Record) -> dict:
    return {"id": r.id, "tuple": _jsonable_tuple(r.tuple), "lhs": r.lhs, "rhs": r.rhs}
