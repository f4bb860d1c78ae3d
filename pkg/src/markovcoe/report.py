"""Check records shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CertReport:
    name: str
    verdict: str
    identity: str = ""
    bound: Optional[Any] = None
    counterexample: Optional[Any] = None
    details: dict = field(default_factory=dict)
    runtime_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.verdict != FAIL

    def to_json(self, timings: bool = False) -> dict:
        out = {"name": self.name, "identity": self.identity, "verdict": self.verdict}
        if self.bound is not None:
            out["bound"] = jsonable(self.bound)
        if self.counterexample is not None:
            out["witness"] = jsonable(self.counterexample)
        if self.details:
            out["details"] = jsonable(self.details)
        if timings and self.runtime_ms is not None:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def jsonable(obj):
    """Convert library values into JSON-ready data; big ints and rationals become strings."""
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < 2**53 else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return str(obj)


def merge(name: str, reports, identity: str = "", bound=None) -> CertReport:
    """Combine sub-reports: fail if any failed, skipped only if all skipped."""
    reports = list(reports)
    failed = [r for r in reports if r.verdict == FAIL]
    if failed:
        return CertReport(name, FAIL, identity, bound, failed[0].counterexample,
                          {"failed": failed[0].name, "checked": len(reports)})
    if reports and all(r.verdict == SKIPPED for r in reports):
        return CertReport(name, SKIPPED, identity, bound, details={"checked": len(reports)})
    return CertReport(name, PASS, identity, bound, details={"checked": len(reports)})
