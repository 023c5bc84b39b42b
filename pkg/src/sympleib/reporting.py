"""Named multi-check reports shared by the core and extension machinery."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        suffix = f"  ({self.detail})" if self.detail and not self.ok else ""
        return f"[{mark:>4}] {self.name}{suffix}"


@dataclass(frozen=True)
class SystemReport:
    title: str
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def lines(self) -> list[str]:
        return [self.title] + [c.line() for c in self.checks]

    def __str__(self) -> str:
        return "\n".join(self.lines())
