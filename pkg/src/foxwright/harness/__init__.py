"""Identity-verification harness: registry, evaluators and suite runner."""
from __future__ import annotations

from .checks import DEFAULT_CTX, EvalContext
from .registry import CASES, REQUIRED_ANCHORS, covered_anchors, get_case
from .report import CHAIN, DOUBLE_SERIES, EQUALITY, IdentityCase, IdentityReport, Tolerance
from .runner import Summary, run_point, run_suite, select_cases, summarize

__all__ = [
    "CASES", "CHAIN", "DEFAULT_CTX", "DOUBLE_SERIES", "EQUALITY", "EvalContext", "IdentityCase",
    "IdentityReport", "REQUIRED_ANCHORS", "Summary", "Tolerance", "covered_anchors", "get_case",
    "run_point", "run_suite", "select_cases", "summarize",
]
