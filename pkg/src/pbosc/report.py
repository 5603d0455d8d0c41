"""Residual bookkeeping shared by the verifiers, and the report formats."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, is_dataclass

import numpy as np

SIG_DIGITS = 12


@dataclass
class Check:
    name: str
    residual: float | None
    passed: bool
    note: str = ""
    tol: float | None = None


@dataclass
class TableReport:
    """Named residual checks against one tolerance.

    ``metric`` selects how a matrix difference becomes a residual: the
    largest absolute entry (``"max"``) or the Frobenius norm (``"fro"``).
    Skipped checks carry ``residual=None`` and count as passing.
    """

    tol: float
    metric: str = "max"
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def skipped(self) -> list[str]:
        return [c.name for c in self.checks if c.residual is None]

    def residual_of(self, diff) -> float:
        d = np.asarray(diff)
        if self.metric == "fro":
            return float(np.linalg.norm(d))
        return float(np.max(np.abs(d), initial=0.0))

    def add(self, name: str, lhs, rhs, note: str = "") -> Check:
        return self.add_residual(name, self.residual_of(np.asarray(lhs) - np.asarray(rhs)), note)

    def add_residual(self, name: str, r: float, note: str = "", tol: float | None = None) -> Check:
        tol = self.tol if tol is None else tol
        c = Check(name, float(r), bool(r <= tol), note, tol)
        self.checks.append(c)
        return c

    def add_flag(self, name: str, ok: bool, note: str = "") -> Check:
        c = Check(name, 0.0 if ok else 1.0, bool(ok), note)
        self.checks.append(c)
        return c

    def skip(self, name: str, note: str) -> None:
        self.checks.append(Check(name, None, True, note))

    def extend(self, other: "TableReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.residual, c.passed, c.note, c.tol))


def _clean(x):
    """JSON-ready copy with floats fixed at SIG_DIGITS significant digits."""
    if is_dataclass(x) and not isinstance(x, type):
        return _clean(asdict(x))
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return float(f"{x:.{SIG_DIGITS}g}") if np.isfinite(x) else x
    if isinstance(x, (complex, np.complexfloating)):
        return [_clean(x.real), _clean(x.imag)]
    if isinstance(x, np.ndarray):
        return _clean(x.tolist())
    return x


@dataclass
class Report:
    """Outcome of one CLI command: echoed inputs, checks and payload data.

    ``rows`` holds the tabular payload written by the CSV format; without
    rows the CSV format lists the checks.
    """

    command: str
    inputs: dict
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, table: TableReport, prefix: str = "") -> None:
        for c in table.checks:
            self.checks.append(Check(prefix + c.name, c.residual, c.passed, c.note, c.tol))

    def check(self, name: str, residual: float, tol: float, note: str = "") -> Check:
        c = Check(name, float(residual), bool(residual <= tol), note, tol)
        self.checks.append(c)
        return c

    def flag(self, name: str, ok: bool, note: str = "") -> Check:
        c = Check(name, 0.0 if ok else 1.0, bool(ok), note)
        self.checks.append(c)
        return c

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_obj(self) -> dict:
        obj = {"command": self.command, "inputs": self.inputs}
        obj.update(self.data)
        obj["checks"] = [asdict(c) for c in self.checks]
        obj["passed"] = self.passed
        return _clean(obj)

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=1) + "\n"

    def to_csv(self) -> str:
        rows = [_clean(r) for r in self.rows] if self.rows else [_clean(c) for c in self.checks]
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {self.command}  " + " ".join(f"{k}={v}" for k, v in self.inputs.items())]
        for k, v in _clean(self.data).items():
            if isinstance(v, (list, dict)) and len(str(v)) > 200:
                continue
            lines.append(f"{k}: {v}")
        if self.rows:
            lines.append("")
            lines.append(self.to_csv().rstrip("\n").replace(",", "  "))
        if self.checks:
            lines.append("")
            width = max(len(c.name) for c in self.checks)
            for c in self.checks:
                status = "PASS" if c.passed else "FAIL"
                res = "skipped" if c.residual is None else f"{c.residual:.3e}"
                tol = "" if c.tol is None else f" (tol {c.tol:.0e})"
                note = f"  [{c.note}]" if c.note else ""
                lines.append(f"{status}  {c.name:<{width}}  {res}{tol}{note}")
        lines.append("")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unsupported format {fmt!r}")
