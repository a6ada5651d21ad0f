"""Run registered identity cases over their grids."""
from __future__ import annotations

import fnmatch
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .checks import DEFAULT_CTX, EvalContext
from .registry import CASES
from .report import IdentityCase, IdentityReport, failed_report, skipped_report


@dataclass(frozen=True)
class Summary:
    passed: int
    failed: int
    skipped: int

    def line(self) -> str:
        return f"passed {self.passed} / failed {self.failed} / skipped {self.skipped}"


def select_cases(pattern: str | None = None, cases=CASES) -> list[IdentityCase]:
    """Cases whose id matches the glob ``pattern`` (all when ``None`` or empty)."""
    if not pattern:
        return list(cases)
    return [c for c in cases if fnmatch.fnmatchcase(c.id, pattern)]


def run_point(case: IdentityCase, point: dict, ctx: EvalContext = DEFAULT_CTX) -> IdentityReport:
    """Evaluate one grid point; errors become failed reports, never exceptions."""
    try:
        why = case.hypotheses(point)
        if why is not None:
            return skipped_report(case.id, point, case.tolerance, case.kind, why)
        return case.evaluate(point, ctx)
    except Exception as exc:  # noqa: BLE001 - a failing case must not abort the suite
        return failed_report(case.id, point, case.tolerance, case.kind, exc)


def run_suite(pattern: str | None = None, ctx: EvalContext = DEFAULT_CTX, *, threads: int = 1, cases=CASES) -> list[IdentityReport]:
    """Run every matching case over its default grid.

    Reports come back in registry order, then grid order, whatever the
    completion order of the workers.
    """
    jobs = [(c, p) for c in select_cases(pattern, cases) for p in c.default_grid]
    if threads <= 1 or len(jobs) < 2:
        return [run_point(c, p, ctx) for c, p in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: run_point(job[0], job[1], ctx), jobs))


def summarize(reports: list[IdentityReport]) -> Summary:
    statuses = [r.status for r in reports]
    return Summary(statuses.count("pass"), statuses.count("fail"), statuses.count("skip"))
