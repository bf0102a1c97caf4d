"""Verification records shared by all identity suites."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

EXACT_ZERO = "exact-zero"
WITHIN_TOL = "within-tol"
FAILED = "failed"


@dataclass
class CheckResult:
    identity_name: str
    status: str
    residual: Any
    tag: str = ""
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAILED

    def to_dict(self, timings: bool = False) -> dict:
        d = {"id": self.identity_name, "formula": self.tag,
             "status": self.status, "residual": self.residual}
        if self.details:
            d["details"] = self.details
        if timings:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


def exact_result(name: str, residual, tag: str = "", **details) -> CheckResult:
    """Record for an identity checked in an exact ring; ``residual`` is the
    difference of both sides (anything with ``len`` or a plain number)."""
    size = len(residual) if hasattr(residual, "__len__") else (0 if residual == 0 else 1)
    status = EXACT_ZERO if size == 0 else FAILED
    shown = 0 if size == 0 else str(residual)
    return CheckResult(name, status, shown, tag, details=details)


def numeric_result(name: str, residual: float, tol: float, tag: str = "", **details) -> CheckResult:
    status = WITHIN_TOL if residual <= tol else FAILED
    return CheckResult(name, status, float(f"{residual:.3e}"), tag, details=details)


@contextmanager
def timed(results: list):
    """Stamp ``elapsed_ms`` on every result appended inside the block."""
    start = time.perf_counter()
    n = len(results)
    yield
    ms = (time.perf_counter() - start) * 1000.0
    new = results[n:]
    for r in new:
        r.elapsed_ms = ms / max(len(new), 1)
