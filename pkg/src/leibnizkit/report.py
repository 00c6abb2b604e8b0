"""Machine-readable verification reports with a stable JSON layout."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


@dataclass
class Check:
    name: str
    status: Status
    witness: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status.value, "witness": self.witness}


@dataclass
class Report:
    command: str
    algebra: str
    identity: Status | None = None
    checks: list[Check] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    timing: float = 0.0

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        if self.identity is Status.FAIL:
            return False
        return all(c.status is not Status.FAIL for c in self.checks)

    def status_of(self, name: str) -> Status:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "algebra": self.algebra,
            "identity": None if self.identity is None else self.identity.value,
            "checks": [c.to_json() for c in self.checks],
            "details": self.details,
            "timing": self.timing,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> Report:
        return cls(
            command=data["command"],
            algebra=data["algebra"],
            identity=None if data["identity"] is None else Status(data["identity"]),
            checks=[Check(c["name"], Status(c["status"]), c["witness"]) for c in data["checks"]],
            details=data["details"],
            timing=data["timing"],
        )

    @classmethod
    def loads(cls, text: str) -> Report:
        return cls.from_json(json.loads(text))

    def summary(self) -> str:
        lines = [f"{self.command}: {self.algebra}"]
        if self.identity is not None:
            lines.append(f"  left Leibniz identity: {self.identity.value}")
        for c in self.checks:
            lines.append(f"  [{c.status.value}] {c.name}")
        return "\n".join(lines)
