from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxwright import AccuracyError, DomainError, MathieuSpec, TruncationPolicy, hurwitz_zeta, mathieu_integral_form, mathieu_series


def rel(a, b):
    return abs(a - b) / abs(b)


def oracle(mu, alpha, beta, r, nu=None):
    nu = 1 / alpha if nu is None else nu
    with mpmath.workdps(30):
        f = lambda k: 2 * mpmath.power(k, nu * beta) / (r**2 + mpmath.power(k, nu * alpha)) ** mu
        return float(mpmath.nsum(f, [1, mpmath.inf], method="euler-maclaurin"))


def test_examples():
    v = mathieu_series(MathieuSpec(2, 1, 0, 1)).value
    assert rel(v, 2 * (math.pi**2 / 6 - 1)) < 1e-13
    assert rel(mathieu_series(MathieuSpec(2, 2, 0, 1)).value, v) < 1e-13
    assert rel(mathieu_series(MathieuSpec(3, 1, 1, 2)).value, oracle(3, 1, 1, 2)) < 1e-12


@pytest.mark.parametrize(
    "mu, alpha, beta, r",
    [(1.5, 0.5, 0.0, 0.5), (2.0, 2.0, 1.0, 3.0), (3.0, 1.0, 1.5, 0.1), (2.5, 2.0, 1.0, 1.3), (1.6, 1.0, 0.0, 40.0)],
)
def test_series_vs_mpmath(mu, alpha, beta, r):
    res = mathieu_series(MathieuSpec(mu, alpha, beta, r))
    assert res.converged
    assert rel(res.value, oracle(mu, alpha, beta, r)) < 1e-12


@pytest.mark.parametrize(
    "mu, alpha, beta, r",
    [(2.0, 1.0, 0.0, 1.0), (2.5, 2.0, 1.0, 1.3), (3.0, 1.0, 1.0, 2.0), (1.8, 0.5, 0.2, 0.7)],
)
def test_series_vs_integral(mu, alpha, beta, r):
    s = mathieu_series(MathieuSpec(mu, alpha, beta, r)).value
    assert rel(mathieu_integral_form(MathieuSpec(mu, alpha, beta, r)), s) < 1e-8


def test_small_r_limit():
    mu = 2.5
    vals = [mathieu_integral_form(MathieuSpec(mu, 1.0, 0.0, r)) for r in (1e-3, 5e-4)]
    # S(r) = 2 zeta(mu) - 2 mu r^2 zeta(mu+1) + O(r^4): Richardson in r^2
    extrap = (4 * vals[1] - vals[0]) / 3
    assert rel(extrap, 2 * hurwitz_zeta(mu, 1.0)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([1.5, 2.0, 3.0]), st.sampled_from([0.5, 1.0, 2.0]), st.floats(0.05, 5), st.floats(0.01, 2))
def test_monotone_in_r(mu, alpha, r, dr):
    a = mathieu_series(MathieuSpec(mu, alpha, 0.0, r)).value
    b = mathieu_series(MathieuSpec(mu, alpha, 0.0, r + dr)).value
    assert a > b


@pytest.mark.parametrize("mu, r", [(2.0, 0.5), (3.0, 1.5)])
def test_mu_tail_bound(mu, r):
    # every term of S_{mu+1} is the S_mu term times (r^2+k)^-1 <= (r^2+1)^-1
    s1 = mathieu_series(MathieuSpec(mu + 1, 1.0, 0.0, r)).value
    s0 = mathieu_series(MathieuSpec(mu, 1.0, 0.0, r)).value
    assert s1 < s0 / (r**2 + 1)


@pytest.mark.parametrize("mu, alpha, k, r", [(2.0, 1.0, 1, 1.0), (1.5, 2.0, 2, 0.7), (3.0, 0.5, 3, 2.0)])
def test_reindex_identity(mu, alpha, k, r):
    spec = MathieuSpec(mu + k, alpha, k * alpha, r)
    n = np.arange(1, 200_001, dtype=float)
    head = math.fsum(2 * n**k / (r**2 + n) ** (mu + k))
    tail = mathieu_series(spec).value - head
    expect_tail = oracle(mu + k, alpha, k * alpha, r) - head
    assert abs(tail - expect_tail) <= 1e-12 * mathieu_series(spec).value


def test_custom_sequence_without_bound_is_not_certified():
    spec = MathieuSpec(2.0, 1.0, 0.0, 1.0, sequence=lambda k: k + 0.5)
    res = mathieu_series(spec, TruncationPolicy(1e-8, 3, 20_000))
    assert not res.converged
    assert res.value == pytest.approx(2 * hurwitz_zeta(2.0, 2.5), rel=1e-3)


def test_custom_sequence_with_tail_bound():
    # a_k = k^2 (alpha = 1, beta = 0, mu = 1): tail sum_{k>N} 2/(r^2+k^2) <= 2/N
    spec = MathieuSpec(1.0, 1.0, 0.0, 1.0, sequence=lambda k: k**2, tail_bound=lambda N: 2.0 / N)
    res = mathieu_series(spec, TruncationPolicy(1e-6, 3, 4_000_000))
    assert res.converged and res.tail_estimate <= 1e-6 * res.value
    exact = math.pi / math.tanh(math.pi) - 1  # sum_{k>=1} 2/(1+k^2)
    assert abs(res.value - exact) <= res.tail_estimate


def test_tail_bound_not_met_raises():
    spec = MathieuSpec(1.0, 1.0, 0.0, 1.0, sequence=lambda k: k**2, tail_bound=lambda N: 2.0 / N)
    with pytest.raises(AccuracyError) as info:
        mathieu_series(spec, TruncationPolicy(1e-12, 3, 1000))
    assert info.value.estimate is not None and info.value.error > 0


def test_domain():
    with pytest.raises(DomainError):
        MathieuSpec(1.0, 1.0, 0.0, 1.0)  # nu (mu alpha - beta) = 1: divergent
    with pytest.raises(DomainError):
        MathieuSpec(2.0, 1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        MathieuSpec(2.0, 1.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        MathieuSpec(2.0, 1.0, 0.0, 1.0, sequence=lambda k: -k)
    with pytest.raises(DomainError):
        mathieu_integral_form(MathieuSpec(2.0, 1.0, 0.0, 1.0, nu=2.0))
