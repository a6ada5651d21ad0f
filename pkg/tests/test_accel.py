from __future__ import annotations

import math

import numpy as np
import pytest

from foxwright import hurwitz_zeta
from foxwright.accel import algebraic_tail


@pytest.mark.parametrize("p", [1.5, 2.5, 4.0])
def test_tail_of_shifted_zeta(p):
    # T_k = (k + 0.5)^-p has an asymptotic expansion in powers of 1/k
    K = 200
    k = np.arange(K // 2, K + 1, dtype=float)
    tail, err = algebraic_tail((k + 0.5) ** -p, K, p)
    exact = hurwitz_zeta(p, K + 1.5)
    assert abs(tail - exact) <= 1e-9 * exact
    assert err < 1e-6 * exact


def test_complex_terms():
    K = 150
    k = np.arange(K // 2, K + 1, dtype=float)
    terms = (1 + 2j) * (k + 1.0) ** -2.0
    tail, _ = algebraic_tail(terms, K, 2.0)
    assert abs(tail - (1 + 2j) * hurwitz_zeta(2.0, K + 2.0)) < 1e-12


def test_argument_checks():
    with pytest.raises(ValueError):
        algebraic_tail(np.ones(20), 20, 1.0)
    with pytest.raises(ValueError):
        algebraic_tail(np.ones(5), 20, 2.0)
    assert math.isfinite(algebraic_tail(np.ones(12) * 1e-3, 20, 2.0, order=6)[0])
