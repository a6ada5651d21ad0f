from __future__ import annotations

import json
import math

import pytest

from foxwright.cli import dump_json, format_reports, report_record
from foxwright.harness import (
    CASES,
    CHAIN,
    REQUIRED_ANCHORS,
    EvalContext,
    covered_anchors,
    get_case,
    run_point,
    run_suite,
    select_cases,
    summarize,
)
from foxwright.harness import checks as C
from foxwright.harness.report import errors, verdict
from foxwright.harness.grids import MANIFEST_VERSION

# ----------------------------------------------------------------- registry


def test_every_required_anchor_is_covered():
    missing = set(REQUIRED_ANCHORS) - covered_anchors()
    assert not missing, f"anchors without a case: {sorted(missing)}"


def test_registry_structure():
    ids = [c.id for c in CASES]
    assert len(ids) == len(set(ids))
    for required in ("thm1-corollary-p1q1", "eq-2.38", "eq-3.5-m2", "thm-3.8-lerch-gf"):
        assert required in ids
    assert MANIFEST_VERSION


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.id)
def test_case_invariants(case):
    assert case.default_grid, "empty grid"
    assert case.tolerance.abs > 0 and case.tolerance.rel > 0
    assert case.description and all(isinstance(a, str) and a for a in case.anchors)
    for point in case.default_grid:
        assert case.hypotheses(point) is None


def test_get_case():
    assert get_case("eq-2.38").id == "eq-2.38"
    with pytest.raises(KeyError):
        get_case("no-such-case")


def test_hypothesis_violation_is_skipped():
    case = get_case("eq-3.9-lerch-gf")
    bad = dict(case.default_grid[0], t=0.5)
    rep = run_point(case, bad)
    assert rep.status == "skip" and rep.skip_reason


def test_evaluator_exception_becomes_failed_report():
    case = get_case("eq-2.38")
    bad = dict(case.default_grid[0], A="not-a-number")
    rep = run_point(case, bad)
    assert rep.status == "fail" and "TypeError" in rep.diagnostics["error"]


# ------------------------------------------------------------------- runner


def test_full_suite_every_case_reports(full_reports):
    seen = {r.id for r in full_reports}
    assert seen == {c.id for c in CASES}
    assert len(full_reports) == sum(len(c.default_grid) for c in CASES)


def test_full_suite_all_pass(full_reports):
    failed = [(r.id, r.point, r.rel_err, r.diagnostics.get("error")) for r in full_reports if r.status != "pass"]
    assert not failed


def test_order_is_registry_then_grid(full_reports):
    assert [r.id for r in full_reports] == [c.id for c in CASES for _ in c.default_grid]


def test_determinism_across_runs_and_threads(full_reports):
    again = run_suite(threads=4)
    a = dump_json([report_record(r) for r in full_reports])
    b = dump_json([report_record(r) for r in again])
    assert a == b


def test_tolerance_honesty(full_reports):
    for r in full_reports:
        if r.kind == CHAIN:
            links = r.diagnostics["links"]
            worst = min(v["slack"] for v in links.values())
            assert r.abs_err == max(0.0, -worst)
        else:
            a, rel = errors(r.lhs, r.rhs)
            assert a == r.abs_err and (rel == r.rel_err or (math.isnan(rel) and math.isnan(r.rel_err)))
        assert r.passed == verdict(r.kind, r.abs_err, r.rel_err, r.tolerance)


def test_json_round_trip_reproduces_verdicts(full_reports):
    recs = json.loads(format_reports(full_reports, "json"))
    assert len(recs) == len(full_reports)
    for rec in recs:
        assert set(rec) == {"id", "point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass"}
        case = get_case(rec["id"])
        assert verdict(case.kind, rec["abs_err"], rec["rel_err"], case.tolerance) == rec["pass"]


def test_filters():
    pi = run_suite("eq-3.5-*")
    assert len(pi) >= 3 and all(r.status == "pass" for r in pi)
    assert run_suite("none-matching") == []
    assert [c.id for c in select_cases("eq-3.5-m?")] == ["eq-3.5-m2", "eq-3.5-m3", "eq-3.5-m4"]
    assert len(select_cases(None)) == len(CASES)


def test_summary_line():
    reps = run_suite("eq-3.5-m2")
    assert summarize(reps).line() == "passed 1 / failed 0 / skipped 0"


def test_loose_context_still_reports():
    from foxwright import QuadratureSpec, TruncationPolicy

    ctx = EvalContext(TruncationPolicy(1e-6, 3, 500), QuadratureSpec(rel_tol=1e-6))
    reps = run_suite("eq-2.39", ctx)
    assert reps and all(r.status in ("pass", "fail") for r in reps)


# ------------------------------------------------------- t = 0 reductions

T0_CHECKS = {
    "thm1-corollary": lambda: C.check_thm1_corollary(1.0, 1.5, 4.0, 0.7, 0.3, 0.0),
    "thm1-inequalities": lambda: C.check_thm1_inequalities(1.0, 2.0, 3.0, 1.0, 0.5, 0.0),
    "thm2 (t -> 0+)": lambda: C.check_thm2_thm3_integral(0.5, 0.0, 0.05, 1.0, 1.0, 3.0),
    "thm3 (t -> 0+)": lambda: C.check_thm2_thm3_integral(0.4, 0.5, 0.05, 1.0, 1.2, 3.5, case_id="thm3-integral"),
    "thm4": lambda: C.check_thm4_gf(1.5, 1.0, [(0.7, 0.5)], [(2.0, 1.5)], 0.4, 0.0),
    "eq-2.38": lambda: C.check_eq238(1.0, 2.0, -0.5, 0.0),
    "eq-2.39": lambda: C.check_eq239(1.0, 0.5, 0.0),
    "eq-2.40": lambda: C.check_eq240([1.5, 2.0], [3.0], 0.3, 0.0),
    "eq-3.2": lambda: C.check_mathieu_gf(2.0, 1.0, 1.0, 0.0),
    "eq-3.4": lambda: C.check_mathieu_corollary(2.0, 1.0, 0.0),
    "eq-3.8": lambda: C.check_lerch_gf(1.0, 1.0, [(1.0, 1.0)], [], 2.0, 1.0, 0.4, 0.0),
    "eq-3.9": lambda: C.check_lerch_corollary(1.0, 1.0, 2.0, 0.8, 0.0, z=0.4),
    "eq-3.10": lambda: C.check_lerch_corollary(1.0, 1.0, 2.0, 0.8, 0.0, xi=0.25, r=0.8),
    "eq-3.11": lambda: C.check_lerch_double_series(2.0, 1.0, 0.0, z=0.5),
    "polylog-2log2": lambda: C.check_polylog_row("2log2", 0.0),
}


@pytest.mark.parametrize("name", list(T0_CHECKS))
def test_t0_reduction(name):
    rep = T0_CHECKS[name]()
    assert rep.status == "pass", (rep.lhs, rep.rhs, rep.rel_err)


def test_t0_single_function_values():
    import math as m

    from foxwright import FoxWrightParams, fox_wright, hurwitz_zeta, lerch_phi

    # eq-2.38 at t = 0 is the exponential itself
    assert C.check_eq238(1.0, 2.0, -0.5, 0.0).lhs == pytest.approx(m.exp(-0.5), rel=1e-15)
    # thm4 at t = 0: the leading pair cancels
    rep = C.check_thm4_gf(1.5, 1.0, [(0.7, 0.5)], [(2.0, 1.5)], 0.4, 0.0)
    assert rep.rhs == pytest.approx(fox_wright(FoxWrightParams([(0.7, 0.5)], [(2.0, 1.5)]), 0.4).value, rel=1e-15)
    # Mathieu generating function at t = 0: Gamma(mu) S_mu = 2 Gamma(mu) zeta(mu, 1 + r^2)
    assert C.check_mathieu_gf(2.0, 1.0, 1.0, 0.0).rhs == pytest.approx(2 * hurwitz_zeta(2.0, 2.0), rel=1e-15)
    assert C.check_lerch_double_series(2.0, 1.0, 0.0, z=0.5).rhs == pytest.approx(lerch_phi(0.5, 2.0, 1.0), rel=1e-15)


# ---------------------------------------------------------- named examples


def test_corollary_named_examples():
    assert C.check_thm1_corollary(1.0, 1.0, 3.0, 1.0, 0.0, 0.5).rel_err < 1e-8
    assert C.check_thm1_corollary(1.0, 1.5, 4.0, 0.7, 0.3, -0.4).rel_err < 1e-7


def test_inequality_named_example_and_luke_t0():
    rep = C.check_thm1_inequalities(1.0, 2.0, 3.0, 1.0, 0.5, 0.3)
    assert rep.status == "pass"
    assert all(v["slack"] >= -1e-10 for v in rep.diagnostics["links"].values())
    psi00, psi01 = C.luke_bounds(1.0, 2.0, 3.0)
    assert psi00 == pytest.approx(math.gamma(2) / math.gamma(3)) and psi01 == pytest.approx(math.gamma(3) / math.gamma(4))


def test_theorem2_3_named_examples():
    assert C.check_thm2_thm3_integral(0.5, 0.0, 0.2, 1.0, 1.0, 3.0).rel_err < 1e-6
    assert C.check_thm2_thm3_integral(0.4, 0.5, 0.3, 1.0, 1.2, 3.5).rel_err < 1e-6
    near_one = C.check_thm2_thm3_integral(0.5, 0.0, 1e-9, 1.0, 1.0, 3.0)
    assert near_one.diagnostics["inner_converged"] is False  # inner series at its boundary is flagged


def test_exponential_gf_named_example():
    rep = C.check_eq238(1.0, 1.0, 0.5, 0.5)
    assert rep.rhs == pytest.approx(2 * math.e, rel=1e-15) and rep.rel_err < 1e-9


def test_mathieu_corollary_named_example():
    rep = C.check_mathieu_corollary(2.0, 1.0, 0.5)
    assert rep.rhs == pytest.approx(8 * (math.pi**2 / 6 - 1), rel=1e-13) and rep.status == "pass"


def test_double_series_collapse_residual():
    rep = C.check_lerch_double_series(2.0, 0.7, -0.5, z=0.97, mode="collapsed")
    assert rep.diagnostics["collapse_max_abs_dev"] <= 1e-12 and rep.status == "pass"


def test_li3_typo_detection():
    rep = C.check_polylog_row("li3", -0.25)
    assert rep.status == "pass"
    assert rep.diagnostics["printed_rhs_abs_dev"] > 1e-3
    assert rep.diagnostics["closed_form_abs_dev"] < 1e-12


def test_text_and_csv_formats(full_reports):
    sub = full_reports[:5]
    text = format_reports(sub, "text")
    assert len(text.strip().splitlines()) == 5 and text.startswith("PASS")
    csv_text = format_reports(sub, "csv")
    assert csv_text.splitlines()[0] == "id,point,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass"
