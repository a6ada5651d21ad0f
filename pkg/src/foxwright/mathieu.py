"""Generalized Mathieu-type series.

    S_mu^{(alpha, beta)}(r; a) = sum_{k>=1} 2 a_k**beta / (r**2 + a_k**alpha)**mu

For power sequences ``a_k = k**nu`` the tail beyond ``N`` is summed exactly
through the binomial expansion

    sum_{k>=N} 2 k**(nu beta) (r**2 + k**E)**-mu
        = 2 sum_j binom(-mu, j) r**(2j) zeta(E (mu + j) - nu beta, N),   E = nu alpha,

with ``N`` chosen so that ``mu r**2 / N**E <= 1/2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import gammaln

from .errors import AccuracyError, DomainError
from .quadrature import DEFAULT_QUAD, QuadratureSpec, integrate_semi_infinite
from .series import DEFAULT_POLICY, SeriesResult, TruncationPolicy, sum_series
from .zeta import hurwitz_zeta

_EXPANSION_TERMS = 80
_MAX_HEAD = 5_000_000


@dataclass(frozen=True)
class MathieuSpec:
    """Parameters of a Mathieu-type series.

    The sequence is ``a_k = k**nu`` (``nu`` defaults to ``1/alpha``) unless a
    vectorized callable ``sequence(k)`` is given.  For custom sequences an
    optional ``tail_bound(N)`` bounding ``sum_{k>N}`` of the terms lets the
    evaluation certify convergence.
    """

    mu: float
    alpha: float
    beta: float
    r: float
    nu: float | None = None
    sequence: Callable[[np.ndarray], np.ndarray] | None = None
    tail_bound: Callable[[int], float] | None = None

    def __post_init__(self):
        if not (self.mu > 0 and self.alpha > 0 and self.r > 0):
            raise DomainError("need mu, alpha, r > 0")
        if not self.beta >= 0:
            raise DomainError("need beta >= 0")
        if self.sequence is None:
            if self.nu is None:
                object.__setattr__(self, "nu", 1.0 / self.alpha)
            if not self.nu > 0:
                raise DomainError("need nu > 0")
            if not self.nu * (self.mu * self.alpha - self.beta) > 1:
                raise DomainError(
                    "series diverges: need nu (mu alpha - beta) > 1"
                    f" (got {self.nu * (self.mu * self.alpha - self.beta):.6g})"
                )
        else:
            probe = np.asarray(self.sequence(np.arange(1, 65, dtype=float)), dtype=float)
            if probe.shape != (64,) or np.any(~(probe > 0)):
                raise DomainError("sequence must be positive and vectorized")

    @property
    def is_power(self) -> bool:
        return self.sequence is None


def _power_terms(spec: MathieuSpec, k: np.ndarray) -> np.ndarray:
    lk = np.log(k)
    E = spec.nu * spec.alpha
    return 2.0 * np.exp(spec.nu * spec.beta * lk - spec.mu * np.log(spec.r**2 + np.exp(E * lk)))


def mathieu_series(spec: MathieuSpec, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Evaluate the Mathieu-type series.

    For power sequences the result is the direct head plus the exactly
    expanded tail; ``tail_estimate`` bounds the error of that expansion.
    Custom sequences are summed directly and report ``converged=False``
    unless ``spec.tail_bound`` certifies the truncation.

    Raises
    ------
    AccuracyError
        If a supplied ``tail_bound`` is not met within ``policy.max_terms``.
    """
    if spec.is_power:
        return _power_series(spec, policy)
    f = spec.sequence
    mu, al, be, r2 = spec.mu, spec.alpha, spec.beta, spec.r**2

    def terms(ks):
        a = np.asarray(f(ks.astype(float) + 1.0), dtype=float)
        return 2.0 * np.exp(be * np.log(a) - mu * np.log(r2 + a**al))

    if spec.tail_bound is None:
        res = sum_series(terms, TruncationPolicy(policy.rel_tol, policy.consecutive_small, policy.max_terms))
        return SeriesResult(res.value, res.terms_used, math.inf, False)
    total = []
    n0, block = 0, 256
    while n0 < policy.max_terms:
        n = min(block, policy.max_terms - n0)
        total.append(terms(np.arange(n0, n0 + n)))
        n0 += n
        value = math.fsum(np.concatenate(total))
        bound = float(spec.tail_bound(n0))
        if bound <= policy.rel_tol * max(1.0, abs(value)):
            return SeriesResult(value, n0, bound, True)
        block = min(2 * block, 65536)
    raise AccuracyError("Mathieu series tail bound not met at max_terms", value, bound)


def _power_series(spec: MathieuSpec, policy: TruncationPolicy) -> SeriesResult:
    mu, nu, r2 = spec.mu, spec.nu, spec.r**2
    E = nu * spec.alpha
    N = max(32, math.ceil((2.0 * mu * r2 + 1.0) ** (1.0 / E)) + 1)
    if N > _MAX_HEAD:
        raise AccuracyError("Mathieu tail expansion would need too many direct terms", None)
    head = math.fsum(_power_terms(spec, np.arange(1, N, dtype=float)))
    j = np.arange(_EXPANSION_TERMS, dtype=float)
    # binom(-mu, j) r^(2j), computed in log space with its sign (-1)^j
    logc = gammaln(mu + j) - gammaln(mu) - gammaln(j + 1) + j * math.log(r2)
    expo = E * (mu + j) - nu * spec.beta
    with np.errstate(under="ignore"):
        z = hurwitz_zeta(expo, float(N))
        parts = np.where(j % 2 == 1, -1.0, 1.0) * np.exp(logc) * z
    tail = 2.0 * math.fsum(parts)
    err = 2.0 * abs(parts[-1]) + 2.0 * np.finfo(float).eps * math.fsum(np.abs(parts))
    value = head + tail
    return SeriesResult(value, N - 1 + _EXPANSION_TERMS, float(err), bool(err <= policy.rel_tol * max(1.0, abs(value))))


# -------------------------------------------------------- integral form

_X_MAX = 80.0


def _kummer_scaled(c: float, b: float, y: np.ndarray) -> np.ndarray:
    """``exp(-y) 1F1(-c; b; y)`` for ``y >= 0`` (vectorized).

    Equals ``Gamma(b)/Gamma(b+c) * 1Psi1[(b+c, 1); (b, 1) | -y]`` by Kummer's
    transformation; past the first ``ceil(c)`` terms the series has constant
    sign, so the direct sum is free of cancellation.
    """
    y = np.asarray(y, dtype=float)
    ymax = float(np.max(y)) if y.size else 0.0
    M = int(ymax + 12.0 * math.sqrt(ymax) + 60)
    if c == round(c) and c >= 0:
        M = min(M, int(c) + 1)
    m = np.arange(M, dtype=float)
    fac = -c + m[:-1]
    with np.errstate(divide="ignore"):
        la = np.concatenate(([0.0], np.cumsum(np.log(np.abs(fac)))))
    sa = np.concatenate(([1.0], np.cumprod(np.sign(fac))))
    lb = np.concatenate(([0.0], np.cumsum(np.log(b + m[:-1]))))
    base = la - lb - gammaln(m + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        ly = np.log(y)[:, None]
        lt = base[None, :] + np.where(m[None, :] == 0, 0.0, m[None, :] * ly) - y[:, None]
    vals = sa[None, :] * np.exp(lt)
    return np.sum(np.where(np.isnan(vals), 0.0, vals), axis=1)


def mathieu_integral_form(spec: MathieuSpec, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Mathieu series from its Laplace-type integral representation.

    With ``a_k = k**nu`` and ``nu alpha = 1``,

        S = 2/Gamma(mu) int_0^inf x**(b-1)/(e**x - 1)
              * 1Psi1[(mu, 1); (b, 1) | -r**2 x] dx,   b = mu - beta/alpha,

    evaluated by exp-sinh quadrature.  The Fox-Wright factor is computed
    through Kummer's transformation to avoid cancellation.
    """
    if not spec.is_power or abs(spec.nu * spec.alpha - 1.0) > 1e-12:
        raise DomainError("integral form needs the sequence k**(1/alpha)")
    c = spec.nu * spec.beta
    b = spec.mu - c
    r2 = spec.r**2
    lg_b = math.lgamma(b)

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        ok = x <= _X_MAX
        xs = x[ok]
        if xs.size:
            # x^(b-1)/(e^x - 1) = x^(b-2) * (x / expm1(x))
            w = np.exp((b - 2) * np.log(xs) - lg_b + np.log(xs / np.expm1(xs)))
            out[ok] = 2.0 * w * _kummer_scaled(c, b, r2 * xs)
        return out

    return float(integrate_semi_infinite(f, quad.with_exponents(b - 2.0)))
