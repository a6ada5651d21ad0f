"""Tail estimation for slowly (algebraically) convergent sums."""
from __future__ import annotations

import math

import numpy as np

from .zeta import hurwitz_zeta


def algebraic_tail(terms, k_last: int, exponent: float, order: int = 6) -> tuple[complex | float, float]:
    """Estimate ``sum_{k > k_last} T_k`` from the trailing terms of a sum.

    Assumes ``T_k ~ k**-p (c_0 + c_1/k + ...)`` with known ``p = exponent > 1``.
    The coefficients are fitted by least squares on ``terms`` (the values
    ``T_k`` for the final ``len(terms)`` indices ending at ``k_last``) and the
    tail is summed exactly with Hurwitz zeta values.

    Returns
    -------
    tail, error
        The estimate and the change when the fit order is lowered by one.
    """
    if not exponent > 1:
        raise ValueError("algebraic tail needs exponent > 1")
    terms = np.asarray(terms)
    n = terms.size
    if n < 2 * order:
        raise ValueError("not enough terms for the requested fit order")
    K = float(k_last)
    ks = np.arange(k_last - n + 1, k_last + 1, dtype=float)

    def fit(m):
        js = np.arange(m)
        basis = (ks[:, None] / K) ** (-(exponent + js[None, :]))
        coef, *_ = np.linalg.lstsq(basis, terms, rcond=None)
        # sum_{k>K} (k/K)^-(p+j) = K^(p+j) zeta(p+j, K+1)
        zt = np.array([math.exp((exponent + j) * math.log(K)) * hurwitz_zeta(exponent + j, K + 1) for j in js])
        return np.sum(coef * zt)

    hi = fit(order)
    lo = fit(order - 1)
    if np.iscomplexobj(terms):
        return complex(hi), float(abs(hi - lo))
    return float(np.real(hi)), float(abs(hi - lo))
