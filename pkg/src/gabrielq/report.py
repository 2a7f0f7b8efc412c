"""Structured text reports with stable, machine-parseable "key: value" lines.

Identical inputs and seed produce byte-identical reports; nothing in here
may depend on wall-clock time, hashing order, or process identity.
"""
from __future__ import annotations


class Report:
    def __init__(self, command: str, params: dict | None = None):
        self.command = command
        self.params = dict(params or {})
        self.checks: list[dict] = []
        self.notes: list[tuple[str, str]] = []
        self.passed = 0
        self.failed = 0

    def check(self, name: str, ok: bool, **fields) -> bool:
        record = {"name": name, "status": "pass" if ok else "FAIL"}
        record.update(fields)
        self.checks.append(record)
        if ok:
            self.passed += 1
        else:
            self.failed += 1
        return ok

    def note(self, key: str, value) -> None:
        self.notes.append((key, str(value)))

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def violations(self) -> list[dict]:
        return [c for c in self.checks if c["status"] == "FAIL"]

    def render(self) -> str:
        lines = [f"command: {self.command}"]
        for k, v in self.params.items():
            lines.append(f"{k}: {v}")
        for i, c in enumerate(self.checks, 1):
            for k, v in c.items():
                lines.append(f"check[{i}].{k}: {v}")
        for k, v in self.notes:
            lines.append(f"{k}: {v}")
        lines.append(f"summary.checks: {len(self.checks)}")
        lines.append(f"summary.passed: {self.passed}")
        lines.append(f"summary.failed: {self.failed}")
        lines.append(f"summary.verdict: {'pass' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"
