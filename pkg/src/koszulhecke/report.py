"""Verification reports with the JSON shape
``{item, checks: [{name, status, residual?}], convention}``."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail"
    residual: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.residual is not None:
            out["residual"] = self.residual
        return out


@dataclass
class Report:
    item: str
    checks: list[Check] = field(default_factory=list)
    convention: str = ""

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, residual: str | None = None) -> Check:
        c = Check(name, "pass" if ok else "fail", None if ok else residual)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.residual))

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {"item": self.item, "checks": [c.to_json() for c in self.checks], "convention": self.convention}

    def render(self) -> str:
        lines = [f"{self.item}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.residual is not None:
                line += f"  residual: {c.residual}"
            lines.append(line)
        return "\n".join(lines)
