from __future__ import annotations

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxwright import (
    DivergenceError,
    DomainError,
    LerchParams,
    extended_lerch_phi,
    hurwitz_zeta,
    lerch_convergence,
    lerch_phi,
    lerch_phi_result,
    lipschitz_lerch,
    polylog,
    riemann_zeta,
)

PI = math.pi


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ------------------------------------------------------------ Riemann/Hurwitz


def test_riemann_examples():
    assert rel(riemann_zeta(2), PI**2 / 6) < 1e-12
    assert rel(riemann_zeta(4), PI**4 / 90) < 1e-12
    assert abs(riemann_zeta(3) - 1 - 0.202056903) < 1e-9
    for s in (1.0, 0.5, -2.0):
        with pytest.raises(DomainError):
            riemann_zeta(s)


def test_hurwitz_examples():
    assert rel(hurwitz_zeta(2, 1), PI**2 / 6) < 1e-12
    assert rel(hurwitz_zeta(2, 2), PI**2 / 6 - 1) < 1e-12
    assert rel(hurwitz_zeta(4, 2), (PI**4 - 90) / 90) < 1e-12
    with pytest.raises(DomainError):
        hurwitz_zeta(1.0, 1.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 0.0)


@pytest.mark.parametrize("s", [1.01, 1.3, 2.0, 3.7, 8.0, 15.0, 20.0])
@pytest.mark.parametrize("a", [0.01, 0.3, 1.0, 2.5, 10.0])
def test_hurwitz_vs_mpmath(s, a):
    # mpmath at its default 15 digits is itself off by ~1e-10 for integer s and large a
    with mpmath.workdps(30):
        ref = float(mpmath.zeta(s, a))
    assert rel(hurwitz_zeta(s, a), ref) < 1e-12


def test_hurwitz_broadcasts():
    out = hurwitz_zeta(np.array([2.0, 3.0]), 1.0)
    assert out.shape == (2,)
    assert rel(out[1], float(mpmath.zeta(3))) < 1e-13


# -------------------------------------------------------------------- Lerch


def test_lerch_examples():
    assert lerch_phi(0.0, 2.5, 1.7) == pytest.approx(1.7**-2.5, rel=1e-15)
    assert 0.4 * lerch_phi(0.4, 2, 1) == pytest.approx(polylog(2, 0.4), rel=1e-14)
    z = cmath.exp(2j * PI * 0.3)
    direct = sum(z**n / (n + 0.7) ** 2 for n in range(400_000))
    assert abs(lerch_phi(z, 2, 0.7) - direct) < 1e-5  # direct sum truncation ~ 1/N
    assert abs(lerch_phi(z, 2, 0.7) - lipschitz_lerch(0.3, 0.7, 2)) < 1e-15


@pytest.mark.parametrize(
    "z, s, a",
    [
        (0.5, 2.0, 1.0), (-0.9, 1.5, 0.3), (0.99, 0.5, 2.0), (-0.999, 3.0, 1.0),
        (0.3 + 0.4j, 2.0, 0.5), (0.96j, -1.5, 1.2), (cmath.exp(0.7j), 1.5, 0.8), (-1.0, 0.5, 1.0),
        (1.0, 1.5, 0.25),
    ],
)
def test_lerch_vs_mpmath(z, s, a):
    ref = complex(mpmath.lerchphi(z, s, a))
    got = complex(lerch_phi(z, s, a))
    assert abs(got - ref) <= 1e-10 * abs(ref)


@pytest.mark.parametrize("s", [1.5, 2.0, 3.5])
@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_lerch_at_one_is_hurwitz(s, a):
    assert rel(lerch_phi(1.0, s, a), hurwitz_zeta(s, a)) < 1e-10
    if a == 1.0:
        assert rel(lerch_phi(1.0, s, 1.0), riemann_zeta(s)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.floats(0, 0.999), st.floats(-math.pi, math.pi), st.floats(0.2, 4), st.floats(0.1, 3))
def test_lerch_conjugate_symmetry(r, phase, s, a):
    z = r * cmath.exp(1j * phase)
    assert abs(lerch_phi(z.conjugate(), s, a) - complex(lerch_phi(z, s, a)).conjugate()) <= 1e-13 * (1 + abs(lerch_phi(z, s, a)))


def test_lerch_real_input_gives_real_output():
    assert isinstance(lerch_phi(0.3, 2.0, 1.0), float)
    assert isinstance(polylog(2.0, 0.3), float)


def test_lerch_partial_sums_monotone():
    r = lerch_phi_result(0.8, 1.5, 0.5)
    terms = 0.8 ** np.arange(r.terms_used) / (np.arange(r.terms_used) + 0.5) ** 1.5
    assert np.all(terms > 0) and np.all(np.diff(np.cumsum(terms)) > 0)


def test_lerch_domain():
    with pytest.raises(DomainError):
        lerch_phi(1.2, 2.0, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(-1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        lerch_phi(0.5, 2.0, 0.0)


# ----------------------------------------------------------------- polylog


def test_polylog_examples():
    assert polylog(2, 0) == 0.0
    assert polylog(1, 0.5) == pytest.approx(math.log(2), rel=1e-14)
    assert 2 * polylog(2, 0.5) == pytest.approx(PI**2 / 6 - math.log(2) ** 2, rel=1e-14)
    assert rel(polylog(2, 1.0), PI**2 / 6) < 1e-12
    with pytest.raises(DomainError):
        polylog(1.0, 1.0)


@pytest.mark.parametrize("s, z", [(3, 0.5), (2.5, -0.7), (1.5, 0.2 - 0.9j), (4, 1j), (0.5, -0.999)])
def test_polylog_vs_mpmath(s, z):
    assert abs(complex(polylog(s, z)) - complex(mpmath.polylog(s, z))) <= 1e-11 * abs(complex(mpmath.polylog(s, z)))


# ------------------------------------------------------------ extended Phi


def test_lerch_convergence_examples():
    assert lerch_convergence(LerchParams([(1.3, 1)], [(0.7, 1)], 2.0, 1.0))[:2] == (0.0, 1.0)
    assert lerch_convergence(LerchParams([], [], 2.0, 1.0))[2] == 2.0
    assert lerch_convergence(LerchParams([(1, 2)], [(1, 3)], 2.0, 1.0))[1] == pytest.approx(6.75, rel=1e-15)


def test_extended_reductions():
    base = lerch_phi(0.5, 2.0, 1.0)
    # with the k! convention, the classical function is the single upper pair (1, 1)
    assert rel(extended_lerch_phi(LerchParams([(1, 1)], [], 2.0, 1.0), 0.5).value, base) < 1e-14
    # matched pairs cancel termwise, with and without simplification
    p = LerchParams([(1, 1), (1.7, 0.6)], [(1.7, 0.6)], 2.0, 1.0)
    assert rel(extended_lerch_phi(p, 0.5).value, base) < 1e-14
    assert rel(extended_lerch_phi(p, 0.5, simplify=False).value, base) < 1e-13
    # empty arrays: the exponential-weighted series sum z^k/(k! (k+a)^s)
    e = extended_lerch_phi(LerchParams([], [], 2.0, 1.0), 0.5).value
    assert rel(e, sum(0.5**k / (math.factorial(k) * (k + 1) ** 2) for k in range(40))) < 1e-14


@pytest.mark.parametrize("z", [0.1, 0.3, 0.5, 0.7, 0.9])
@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_reduction_chain(z, s, a):
    p = LerchParams([(1, 1), (2.3, 1.4)], [(2.3, 1.4)], s, a)
    assert rel(extended_lerch_phi(p, z, simplify=False).value, lerch_phi(z, s, a)) < 1e-11


def test_extended_p2q1_vs_mpmath():
    lam, mu, s, a, z = [(0.7, 1.0), (1.2, 0.5)], [(2.0, 1.5)], 1.5, 0.6, -0.8
    with mpmath.workdps(30):
        pre = mpmath.gamma(2.0) / (mpmath.gamma(0.7) * mpmath.gamma(1.2))
        ref = pre * mpmath.nsum(
            lambda k: mpmath.gamma(0.7 + k) * mpmath.gamma(1.2 + 0.5 * k) / mpmath.gamma(2 + 1.5 * k)
            * mpmath.mpf(z) ** k / (mpmath.factorial(k) * (k + a) ** s),
            [0, mpmath.inf],
        )
    assert rel(extended_lerch_phi(LerchParams(lam, mu, s, a), z).value, float(ref)) < 1e-10


def test_extended_complex_argument():
    p = LerchParams([(1, 1), (0.5, 1)], [(1.5, 1)], 2.0, 1.0)
    z = 0.6j
    got = extended_lerch_phi(p, z).value
    # Gamma(0.5+k)/Gamma(1.5+k) * Gamma(1.5)/Gamma(0.5) = 0.5/(0.5+k)
    ref = sum(0.5 / (0.5 + k) * z**k / (k + 1) ** 2 for k in range(200))
    assert abs(got - ref) < 1e-14


def test_extended_domain():
    with pytest.raises(DomainError):
        LerchParams([(1, 3)], [(1, 1)], 2.0, 1.0)  # Delta_1 = -2
    with pytest.raises(DomainError):
        LerchParams([(1, 0)], [], 2.0, 1.0)
    with pytest.raises(DomainError):
        LerchParams([(1, 1)], [(-1, 1)], 2.0, 1.0)
    with pytest.raises(DivergenceError):
        extended_lerch_phi(LerchParams([(1, 1), (1, 1)], [(1, 1)], 2.0, 1.0, ), 1.5, simplify=False)
