"""Identity cases and the reports they produce."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

EQUALITY = "equality"
CHAIN = "inequality-chain"
DOUBLE_SERIES = "double-series-closed-form"
KINDS = (EQUALITY, CHAIN, DOUBLE_SERIES)


@dataclass(frozen=True)
class Tolerance:
    abs: float
    rel: float

    def __post_init__(self):
        if not (self.abs > 0 and self.rel > 0):
            raise ValueError("tolerances must be positive")


@dataclass
class IdentityReport:
    """Outcome of one identity check at one parameter point.

    ``passed`` is ``None`` when the point was skipped (see ``skip_reason``).
    """

    id: str
    point: dict
    lhs: complex | float
    rhs: complex | float
    abs_err: float
    rel_err: float
    passed: bool | None
    kind: str = EQUALITY
    tolerance: Tolerance | None = None
    diagnostics: dict = field(default_factory=dict)
    skip_reason: str | None = None

    @property
    def status(self) -> str:
        if self.passed is None:
            return "skip"
        return "pass" if self.passed else "fail"


def errors(lhs, rhs) -> tuple[float, float]:
    """Absolute and relative discrepancy; complex values are compared componentwise."""
    lhs, rhs = complex(lhs), complex(rhs)
    d = max(abs(lhs.real - rhs.real), abs(lhs.imag - rhs.imag))
    scale = abs(rhs)
    rel = d / scale if scale > 0 else (0.0 if d == 0 else math.inf)
    if not math.isfinite(d):
        return math.inf, math.inf
    return d, rel


def verdict(kind: str, abs_err: float, rel_err: float, tol: Tolerance) -> bool:
    """Pass rule shared by the harness and by report consumers."""
    if abs_err is None or rel_err is None:
        return False
    if not (math.isfinite(abs_err) or math.isfinite(rel_err)):
        return False
    if kind == CHAIN:
        return abs_err <= tol.abs
    return abs_err <= tol.abs or rel_err <= tol.rel


def make_report(case_id: str, point: dict, lhs, rhs, tol: Tolerance, kind: str = EQUALITY, **diagnostics) -> IdentityReport:
    lhs = _plain(lhs)
    rhs = _plain(rhs)
    a, r = errors(lhs, rhs)
    return IdentityReport(case_id, dict(point), lhs, rhs, a, r, verdict(kind, a, r, tol), kind, tol, diagnostics)


def chain_report(case_id: str, point: dict, links: list[tuple[str, float, float]], central: float, tol: Tolerance, **diagnostics) -> IdentityReport:
    """Report for a chain of inequalities ``left <= right``; slack is ``right - left``."""
    slacks = [(name, right - left, left, right) for name, left, right in links]
    name, worst, left, right = min(slacks, key=lambda s: s[1])
    violation = max(0.0, -worst)
    if not math.isfinite(worst):
        violation = math.inf
    rel = violation / abs(central) if central else violation
    diagnostics = dict(diagnostics)
    diagnostics["links"] = {n: {"left": l, "right": r, "slack": s} for n, s, l, r in slacks}
    diagnostics["tightest_link"] = name
    return IdentityReport(
        case_id, dict(point), float(central), float(right if worst == worst else math.nan),
        violation, rel, verdict(CHAIN, violation, rel, tol), CHAIN, tol, diagnostics,
    )


def failed_report(case_id: str, point: dict, tol: Tolerance, kind: str, exc: BaseException) -> IdentityReport:
    return IdentityReport(case_id, dict(point), math.nan, math.nan, math.inf, math.inf, False, kind, tol,
                          {"error": f"{type(exc).__name__}: {exc}"})


def skipped_report(case_id: str, point: dict, tol: Tolerance, kind: str, reason: str) -> IdentityReport:
    return IdentityReport(case_id, dict(point), math.nan, math.nan, math.nan, math.nan, None, kind, tol, {}, reason)


def _plain(v):
    if isinstance(v, complex):
        return v if v.imag != 0 else v
    try:
        return float(v)
    except TypeError:
        return complex(v)


@dataclass(frozen=True)
class IdentityCase:
    """A registered identity with its grid and evaluator.

    ``hypotheses(point)`` returns ``None`` when the point is admissible and a
    reason string otherwise.  ``evaluate(point, ctx)`` returns the report.
    """

    id: str
    description: str
    anchors: tuple[str, ...]
    kind: str
    tolerance: Tolerance
    default_grid: tuple[dict, ...]
    hypotheses: Callable[[dict], str | None]
    evaluate: Callable[[dict, Any], IdentityReport]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if not self.anchors or not all(self.anchors):
            raise ValueError("case needs at least one anchor")
        for pt in self.default_grid:
            why = self.hypotheses(pt)
            if why is not None:
                raise ValueError(f"grid point {pt} of {self.id} violates hypotheses: {why}")
