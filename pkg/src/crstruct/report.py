"""Check records and their text / JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import metadata, resources

STATUSES = ("pass", "fail", "erratum")


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.1.0"


@dataclass
class Record:
    subject: str
    check: str
    status: str
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def to_dict(self) -> dict:
        return {"subject": self.subject, "check": self.check, "status": self.status, "details": self.details}


@dataclass
class Report:
    invocation: list[str]
    records: list[Record] = field(default_factory=list)
    version: str = field(default_factory=tool_version)

    def add(self, subject, check, status, **details):
        self.records.append(Record(subject, check, status, details))

    def failed(self, strict_errata=False) -> bool:
        bad = ("fail", "erratum") if strict_errata else ("fail",)
        return any(r.status in bad for r in self.records)

    def counts(self) -> dict:
        return {s: sum(r.status == s for r in self.records) for s in STATUSES}

    def to_dict(self) -> dict:
        return {
            "tool": "crstruct",
            "version": self.version,
            "invocation": list(self.invocation),
            "records": [r.to_dict() for r in self.records],
            "summary": self.counts(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"crstruct {self.version}: {' '.join(self.invocation)}"]
        for r in self.records:
            lines.append(f"[{r.status.upper()}] {r.subject} {r.check}")
            for key in sorted(r.details):
                lines.extend(_text_value(key, r.details[key]))
        c = self.counts()
        lines.append(f"{c['pass']} pass, {c['fail']} fail, {c['erratum']} erratum")
        return "\n".join(lines) + "\n"


def _text_value(key, value, indent="    "):
    if isinstance(value, list) and value and isinstance(value[0], list):
        out = [f"{indent}{key}:"]
        out += [f"{indent}  [{', '.join(map(str, row))}]" for row in value]
        return out
    if isinstance(value, list):
        return [f"{indent}{key}: {', '.join(map(str, value))}" if value else f"{indent}{key}: -"]
    if isinstance(value, dict):
        out = [f"{indent}{key}:"]
        for k in sorted(value):
            out.extend(_text_value(k, value[k], indent + "  "))
        return out
    if isinstance(value, bool):
        value = "yes" if value else "no"
    return [f"{indent}{key}: {value}"]


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
