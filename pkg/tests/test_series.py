from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fw_oracle
from foxwright import (
    DivergenceError,
    DomainError,
    FoxWrightParams,
    SeriesOverflowError,
    TruncationPolicy,
    binom_coeff_shifted,
    convergence_params,
    fox_wright,
    fox_wright_normalized,
    fox_wright_shifted,
    gen_binom,
    log_gamma,
    pfq,
    pochhammer,
)
from foxwright.series import fox_wright_term_ratio, fox_wright_terms, parse_pairs


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ------------------------------------------------------------- primitives


@pytest.mark.parametrize("x, expected", [(1.0, 0.0), (2.0, 0.0), (0.5, math.log(math.sqrt(math.pi)))])
def test_log_gamma_examples(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-15)


def test_log_gamma_accuracy_range():
    for x in np.geomspace(1e-3, 1e6, 60):
        ref = float(mpmath.loggamma(mpmath.mpf(x)))
        assert abs(log_gamma(x) - ref) <= 1e-13 * max(abs(ref), 1.0)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_log_gamma_poles(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@pytest.mark.parametrize("tau, k, expected", [(3.7, 0, 1.0), (2.0, 3, 24.0), (0.5, 4, 6.5625), (-2.0, 5, 0.0), (-2.0, 2, 2.0)])
def test_pochhammer_examples(tau, k, expected):
    assert pochhammer(tau, k) == pytest.approx(expected, rel=1e-15)


def test_pochhammer_large_k_matches_mpmath():
    for tau, k in [(0.3, 60), (2.5, 150), (-3.5, 40)]:
        assert rel(pochhammer(tau, k), float(mpmath.rf(tau, k))) < 1e-12


@pytest.mark.parametrize("lam, mu, expected", [(5, 2, 10.0), (3.3, 0, 1.0), (2.5, 2, 1.875), (-0.5, 3, -0.3125)])
def test_gen_binom_examples(lam, mu, expected):
    assert gen_binom(lam, mu) == pytest.approx(expected, rel=1e-14)


@given(st.floats(-5, 5), st.integers(0, 12))
def test_gen_binom_falling_factorial(lam, n):
    falling = math.prod(lam - i for i in range(n)) / math.factorial(n)
    assert gen_binom(lam, n) == pytest.approx(falling, rel=1e-11, abs=1e-11)


def test_gen_binom_pole_without_limit():
    with pytest.raises(DomainError):
        gen_binom(-1.0, 0.5)


@pytest.mark.parametrize("lam, k, expected", [(1.0, 7, 1.0), (2.0, 3, 4.0)])
def test_binom_coeff_shifted_examples(lam, k, expected):
    assert binom_coeff_shifted(lam, k) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("lam", [0.5, 1.0, 1.5, 2.5])
@pytest.mark.parametrize("t", [-0.5, -0.25, 0.25, 0.5, 0.9])
def test_binomial_expansion(lam, t):
    k = np.arange(2000)
    c = np.array([binom_coeff_shifted(lam, int(j)) for j in k])
    assert math.fsum(c * t**k) == pytest.approx((1 - t) ** -lam, rel=1e-12)


# ------------------------------------------------------------ convergence


def test_convergence_params_examples():
    info = convergence_params(FoxWrightParams([(0.7, 1)], [(2.1, 1)]))
    assert info.delta == 0 and info.rho == 1 and info.mu == pytest.approx(2.1 - 0.7)
    assert convergence_params(FoxWrightParams([(1, 2)], [])).delta == -2
    assert convergence_params(FoxWrightParams([(1, 2)], [(1, 3)])).rho == pytest.approx(6.75, rel=1e-15)


def test_convergence_zero_weight_convention():
    info = convergence_params(FoxWrightParams([(1.0, 0.0)], [(2.0, 1.0)]))
    assert info.rho == pytest.approx(1.0)


@given(
    st.lists(st.tuples(st.floats(0.1, 5), st.floats(0.1, 3)), min_size=1, max_size=3),
    st.lists(st.tuples(st.floats(0.1, 5), st.floats(0.1, 3)), min_size=1, max_size=3),
    st.integers(0, 6),
)
def test_shift_invariance_of_convergence_params(upper, lower, k):
    p = FoxWrightParams(upper, lower)
    s = p.shifted(k)
    a, b = convergence_params(p), convergence_params(s)
    assert b.delta == pytest.approx(a.delta, abs=1e-12)
    assert b.rho == pytest.approx(a.rho, rel=1e-12)
    assert b.mu == pytest.approx(a.mu + k * a.delta, abs=1e-9)
    if a.gamma_min is not None:
        assert all(a.gamma_min <= x / X + 1e-15 for x, X in upper)


def test_shifted_params_example():
    s = FoxWrightParams([(1, 2)], [(3, 2)]).shifted(2)
    assert s.upper == ((5.0, 2.0),) and s.lower == ((7.0, 2.0),)
    p = FoxWrightParams([(1, 2)], [(3, 2)])
    assert p.shifted(0) == p


def test_divergent_regimes_rejected():
    with pytest.raises(DivergenceError):
        fox_wright(FoxWrightParams([(1, 2)], []), 0.1)  # Delta = -2
    p = FoxWrightParams([(1, 1), (1, 1)], [(2, 1)])  # Delta = -1, rho = 1, mu = 1/2
    with pytest.raises(DivergenceError):
        fox_wright(p, 1.0)
    with pytest.raises(DivergenceError):
        fox_wright(p, 1.2)
    # mu > 1/2 on the boundary is accepted
    r = fox_wright(FoxWrightParams([(1, 1), (1, 1)], [(3, 1)]), 1.0, TruncationPolicy(1e-6, 3, 10_000))
    assert math.isfinite(r.value)


def test_lower_pole_rejected():
    with pytest.raises(DomainError):
        FoxWrightParams([(1, 1)], [(-3, 1)])
    with pytest.raises(DomainError):
        FoxWrightParams([(1, 1)], [(-2.5, 0.5)])


def test_parse_pairs():
    assert parse_pairs("1:2, 3.5:0.5") == [(1.0, 2.0), (3.5, 0.5)]
    assert parse_pairs("") == []
    with pytest.raises(ValueError):
        parse_pairs("1;2")


# -------------------------------------------------------------- fox_wright


def test_fox_wright_examples():
    assert fox_wright(FoxWrightParams(), 1.25).value == pytest.approx(math.exp(1.25), rel=1e-15)
    assert fox_wright(FoxWrightParams([(1, 1)], [(1, 1)]), 0.7).value == pytest.approx(math.exp(0.7), rel=1e-15)
    r = fox_wright(FoxWrightParams([(1, 1), (1, 1)], [(2, 1)]), 0.5)
    assert r.value == pytest.approx(2 * math.log(2), rel=1e-14)
    assert r.converged and r.tail_estimate <= 1e-14 * max(1, abs(r.value))


@pytest.mark.parametrize(
    "upper, lower, z",
    [
        ([(0.5, 0.5)], [(1.5, 1.5)], 2.0),
        ([(1.2, 2.0), (0.3, 0.7)], [(2.0, 1.5), (1.0, 2.0)], -3.0),
        ([(2.5, 1.0)], [(1.0, 0.25), (3.0, 1.25)], 4.0),
        ([(1.0, 0.3)], [(0.7, 1.9)], -10.0),
    ],
)
def test_fox_wright_matches_mpmath(upper, lower, z):
    assert rel(fox_wright(FoxWrightParams(upper, lower), z).value, fw_oracle(upper, lower, z)) < 1e-12


def test_fox_wright_normalized():
    p = FoxWrightParams([(1.3, 0.8)], [(2.2, 1.1)])
    direct = fox_wright(p.prepend(upper=(1.5, 1.0)), 0.6).value / math.gamma(1.5)
    assert rel(fox_wright_normalized(1.5, p, 0.6).value, direct) < 1e-14
    assert rel(fox_wright_normalized(1.0, p, 0.6).value, fox_wright(p.prepend(upper=(1.0, 1.0)), 0.6).value) < 1e-15
    assert fox_wright_normalized(2.0, FoxWrightParams(), 0.0).value == 1.0
    with pytest.raises(DomainError):
        fox_wright_normalized(0.0, p, 0.1)


def test_fox_wright_shifted_function():
    p = FoxWrightParams([(1.0, 2.0)], [(3.0, 2.0)])
    assert fox_wright_shifted(p, 2, 0.4).value == fox_wright(FoxWrightParams([(5, 2)], [(7, 2)]), 0.4).value


def test_term_ratio_consistency():
    p = FoxWrightParams([(0.7, 1.3), (2.0, 0.5)], [(1.1, 0.9), (3.0, 1.4)])
    z = -1.7
    terms = fox_wright_terms(p, z, 52)
    for k in range(51):
        assert rel(fox_wright_term_ratio(p, z, k), terms[k + 1] / terms[k]) < 1e-10


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.floats(0.1, 4), min_size=1, max_size=3),
    st.lists(st.floats(0.2, 4), min_size=1, max_size=2),
    st.floats(-0.8, 0.8),
)
def test_bridge_property(a, b, z):
    if len(a) > len(b) + 1:
        a = a[: len(b) + 1]
    fw = fox_wright(FoxWrightParams([(x, 1) for x in a], [(y, 1) for y in b]), z).value
    pre = math.prod(math.gamma(x) for x in a) / math.prod(math.gamma(y) for y in b)
    pf = pfq(a, b, z).value
    assert abs(fw - pre * pf) <= 1e-12 * max(abs(fw), 1e-300) + 1e-300


def test_precision_modes_agree_and_extended_rescues_cancellation():
    # inner series of a hard generating-function point: 1Psi1[(2+k... )] at z = -0.5 scaled
    p = FoxWrightParams([(60.5, 2.0)], [(0.5, 2.0)])
    z = -9.0
    ref = fw_oracle(p.upper, p.lower, z, n=600, dps=80)
    ext = fox_wright(p, z, precision="extended").value
    auto = fox_wright(p, z).value
    assert rel(ext, ref) < 1e-12
    assert rel(auto, ref) < 1e-12
    with pytest.raises(DomainError):
        fox_wright(p, z, precision="quad")


def test_rounding_estimate_reported():
    r = fox_wright(FoxWrightParams([(1, 1)], [(1, 1)]), -5.0, precision="double")
    assert r.rounding_estimate > 0 and r.abs_sum >= abs(r.value)


def test_overflow_reports_index():
    p = FoxWrightParams([(1.0, 3.0)], [(1.0, 1.0)])  # Delta = -2 but z = 0 not at issue; use huge log_scale
    with pytest.raises(SeriesOverflowError) as info:
        fox_wright(FoxWrightParams([(1, 1)], [(1, 1)]), 1.0, log_scale=800.0)
    assert info.value.k >= 0
    assert p.p == 1


def test_complex_z_rejected():
    with pytest.raises(DomainError):
        fox_wright(FoxWrightParams(), 1 + 1j)


# --------------------------------------------------------------------- pFq


def test_pfq_examples():
    assert pfq([], [], 1.0).value == pytest.approx(math.e, rel=1e-15)
    assert pfq([2.0], [], 0.25).value == pytest.approx(16 / 9, rel=1e-14)


@pytest.mark.parametrize(
    "a, b, z",
    [([0.5, 1.5], [2.5], 0.9), ([1.2], [3.4], -25.0), ([1.2], [3.4], 12.0), ([2.0, 3.0, 0.5], [1.5, 4.0], -0.95)],
)
def test_pfq_matches_mpmath(a, b, z):
    assert rel(pfq(a, b, z).value, float(mpmath.hyper(a, b, z))) < 1e-12


def test_pfq_complex_and_terminating():
    z = 0.3 + 0.4j
    assert abs(pfq([1.0, 2.0], [3.0], z).value - complex(mpmath.hyp2f1(1, 2, 3, z))) < 1e-13
    # terminating: 2F1(-3, 2; 1; 5) is a cubic polynomial
    assert pfq([-3.0, 2.0], [1.0], 5.0).value == pytest.approx(float(mpmath.hyp2f1(-3, 2, 1, 5)), rel=1e-14)


def test_pfq_errors():
    with pytest.raises(DomainError):
        pfq([1.0], [-2.0], 0.1)
    with pytest.raises(DivergenceError):
        pfq([1.0, 1.0], [2.0], 1.5)
    with pytest.raises(DivergenceError):
        pfq([1.0, 1.0, 1.0], [2.0], 0.1)
    with pytest.raises(DivergenceError):
        pfq([1.0, 1.0], [1.5], 1.0)  # sum(b) - sum(a) <= 0 on the unit circle


def test_policy_validation():
    with pytest.raises(ValueError):
        TruncationPolicy(rel_tol=0.0)
    with pytest.raises(ValueError):
        TruncationPolicy(consecutive_small=0)
    r = fox_wright(FoxWrightParams([(1, 1)], [(1, 1)]), 0.5, TruncationPolicy(1e-14, 3, 5))
    assert r.terms_used <= 5 and not r.converged
