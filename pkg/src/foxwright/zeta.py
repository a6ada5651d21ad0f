"""Riemann, Hurwitz and Hurwitz-Lerch zeta functions and the polylogarithm.

Only real ``s`` and real positive ``a`` are supported.  The extended
Hurwitz-Lerch function carries Fox-Wright-type parameter arrays:

    Phi(z, s, a) = P * sum_k prod Gamma(l_j + k r_j) / prod Gamma(m_j + k s_j)
                       * z**k / (k! (k + a)**s),
    P = prod Gamma(m_j) / prod Gamma(l_j),

so the classical ``Phi(z, s, a) = sum z**k / (k + a)**s`` is the case of a
single upper pair ``(1, 1)`` and no lower pairs.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammasgn

from .errors import DomainError
from .quadrature import QuadratureSpec, integrate_semi_infinite
from .series import (
    DEFAULT_POLICY,
    ConvergenceInfo,
    SeriesResult,
    TruncationPolicy,
    _as_pairs,
    _is_nonpos_int,
    _log_terms,
    check_convergence,
    sum_series,
)

# B_2, B_4, ..., B_12
_BERNOULLI = np.array([1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730])
_EM_HEAD = 20


def hurwitz_zeta(s, a):
    """Hurwitz zeta ``sum_{n>=0} (n + a)**-s`` for ``s > 1``, ``a > 0``.

    Twenty direct terms followed by an Euler-Maclaurin tail through the
    ``B_12`` term.  Accepts numpy arrays (broadcast together).
    """
    s_arr = np.asarray(s, dtype=float)
    a_arr = np.asarray(a, dtype=float)
    if np.any(~(s_arr > 1)):
        raise DomainError("hurwitz_zeta needs s > 1")
    if np.any(~(a_arr > 0)):
        raise DomainError("hurwitz_zeta needs a > 0")
    s_b, a_b = np.broadcast_arrays(s_arr, a_arr)
    n = np.arange(_EM_HEAD, dtype=float).reshape((-1,) + (1,) * s_b.ndim)
    head = np.sum((n + a_b) ** (-s_b), axis=0)
    x = a_b + _EM_HEAD
    tail = x ** (1 - s_b) / (s_b - 1) + 0.5 * x ** (-s_b)
    # B_2j/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
    coef = s_b * x ** (-s_b - 1)
    fact = 2.0
    for j, b2j in enumerate(_BERNOULLI, start=1):
        tail = tail + b2j / fact * coef
        coef = coef * (s_b + 2 * j - 1) * (s_b + 2 * j) / (x * x)
        fact *= (2 * j + 1) * (2 * j + 2)
    out = head + tail
    return float(out) if out.ndim == 0 else out


def riemann_zeta(s: float) -> float:
    """Riemann zeta ``zeta(s)`` for real ``s > 1``."""
    if not s > 1:
        raise DomainError("riemann_zeta needs s > 1")
    return hurwitz_zeta(float(s), 1.0)


# --------------------------------------------------------------- Lerch Phi

_DIRECT_RADIUS = 0.95
_HEAD = 16


def _direct_terms(z, s: float, a: float):
    if isinstance(z, complex):
        lz = cmath.log(z) if z != 0 else None

        def terms(ks):
            kk = ks.astype(float)
            mag = -s * np.log(kk + a)
            if lz is None:
                return np.where(ks == 0, np.exp(mag), 0.0).astype(complex)
            return np.exp(kk * lz + mag)

        return terms
    az = abs(z)
    lz = math.log(az) if az > 0 else -math.inf
    sz = -1.0 if z < 0 else 1.0

    def terms(ks):
        kk = ks.astype(float)
        with np.errstate(invalid="ignore"):
            lg = np.where(ks == 0, 0.0, kk * lz) - s * np.log(kk + a)
        sign = np.where(ks % 2 == 1, sz, 1.0)
        return sign * np.exp(lg)

    return terms


def _lerch_result(z, s: float, a: float, policy: TruncationPolicy) -> SeriesResult:
    az = abs(z)
    if az <= _DIRECT_RADIUS or s <= 0:
        return sum_series(_direct_terms(z, s, a), policy)
    if z == 1:
        return SeriesResult(hurwitz_zeta(s, a), 0, 0.0, True)
    # head + integral tail  z^N / Gamma(s) int x^(s-1) e^{-(a+N)x} / (1 - z e^{-x}) dx
    n = np.arange(_HEAD)
    head = _direct_terms(z, s, a)(n)
    b = a + _HEAD
    lg_s = math.lgamma(s)

    def f(x):
        return np.exp((s - 1) * np.log(x) - b * x - lg_s) / (1 - z * np.exp(-x))

    hsum = complex(math.fsum(head.real), math.fsum(np.imag(head)))
    spec = QuadratureSpec(abs_tol=1e-17 * max(abs(hsum), 1e-300), rel_tol=policy.rel_tol, max_levels=12, left_exponent=s - 1)
    tail_int, err = integrate_semi_infinite(f, spec, scale=1.0 / b, return_error=True)
    val = hsum + z**_HEAD * tail_int
    if not isinstance(z, complex):
        val = val.real
    return SeriesResult(val, _HEAD, float(err), True)


def _check_lerch_args(z, s: float, a: float):
    if not (isinstance(s, (int, float)) and math.isfinite(s)):
        raise DomainError("s must be a finite real number")
    if not a > 0:
        raise DomainError("a must be positive")
    az = abs(z)
    if az > 1 + 1e-15:
        raise DomainError(f"|z| = {az:.6g} > 1 lies outside the region of convergence")
    if az >= 1 - 1e-15:
        if z == 1 and not s > 1:
            raise DomainError("Phi(1, s, a) needs s > 1")
        if not s > 0:
            raise DomainError("on |z| = 1 the series needs s > 0")


def lerch_phi(z, s: float, a: float, policy: TruncationPolicy = DEFAULT_POLICY):
    """Hurwitz-Lerch zeta ``Phi(z, s, a) = sum_{n>=0} z**n / (n + a)**s``.

    Valid for ``|z| < 1``, or ``|z| = 1`` with ``s > 1`` (``s > 0`` suffices
    when ``z != 1``).  Real ``z`` gives a float, complex ``z`` a complex.

    Points with ``|z|`` close to one are evaluated as a short direct head
    plus the Laplace-type integral of the remaining tail, so that the unit
    circle (Lipschitz-Lerch values) is handled without slow summation.
    """
    return lerch_phi_result(z, s, a, policy).value


def lerch_phi_result(z, s: float, a: float, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """:func:`lerch_phi` with its truncation metadata."""
    if isinstance(z, (complex, np.complexfloating)):
        z = complex(z)
    else:
        z = float(z)
    s, a = float(s), float(a)
    _check_lerch_args(z, s, a)
    return _lerch_result(z, s, a, policy)


def lipschitz_lerch(xi: float, a: float, s: float, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Lipschitz-Lerch zeta ``L(xi, a, s) = Phi(exp(2 i pi xi), s, a)``.

    The Lerch zeta ``l_s(xi)`` is ``lipschitz_lerch(xi, 1, s)``.
    """
    xi = float(xi)
    frac = xi - math.floor(xi)
    if frac == 0.0:
        return complex(lerch_phi(1.0, s, a, policy))
    z = cmath.exp(2j * math.pi * frac)
    z = z / abs(z)
    return complex(lerch_phi(z, s, a, policy))


def polylog(s: float, z, policy: TruncationPolicy = DEFAULT_POLICY):
    """Polylogarithm ``Li_s(z) = sum_{n>=1} z**n / n**s`` for ``|z| <= 1``.

    Real input gives real output.  ``Li_s(z) = z Phi(z, s, 1)``.
    """
    cplx = isinstance(z, (complex, np.complexfloating))
    if z == 0:
        return 0j if cplx else 0.0
    zz = complex(z) if cplx else float(z)
    return zz * lerch_phi(zz, s, 1.0, policy)


# ------------------------------------------------------------ extended Phi


@dataclass(frozen=True)
class LerchParams:
    """Parameters of the extended Hurwitz-Lerch zeta function.

    ``lambdas`` are the upper pairs ``(lambda_j, rho_j)``, ``mus`` the lower
    pairs ``(mu_j, sigma_j)``; all weights must be positive.
    """

    lambdas: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    mus: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    s: float = 1.0
    a: float = 1.0

    def __post_init__(self):
        lam = _as_pairs(self.lambdas)
        mu = _as_pairs(self.mus)
        object.__setattr__(self, "lambdas", lam)
        object.__setattr__(self, "mus", mu)
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "a", float(self.a))
        if any(r <= 0 for _, r in lam) or any(sg <= 0 for _, sg in mu):
            raise DomainError("weights rho_j, sigma_j must be positive")
        if not self.a > 0:
            raise DomainError("a must be positive")
        if any(_is_nonpos_int(m) for m, _ in mu) or any(_is_nonpos_int(l) for l, _ in lam):
            raise DomainError("Gamma prefactor has a pole")
        d1, _, _ = lerch_convergence(self)
        if d1 < -1 - 1e-12:
            raise DomainError(f"Delta_1 = {d1:.6g} < -1: series diverges for z != 0")

    def simplified(self) -> "LerchParams":
        """Cancel upper/lower pairs that coincide exactly."""
        lam = list(self.lambdas)
        mu = list(self.mus)
        for pair in list(lam):
            if pair in mu:
                lam.remove(pair)
                mu.remove(pair)
        return LerchParams(lam, mu, self.s, self.a)


def lerch_convergence(params: LerchParams) -> tuple[float, float, float]:
    """Return ``(Delta_1, nabla_star, Xi)`` for the extended function."""
    d1 = sum(sg for _, sg in params.mus) - sum(r for _, r in params.lambdas)
    nabla = 1.0
    for _, r in params.lambdas:
        nabla *= r ** (-r)
    for _, sg in params.mus:
        nabla *= sg**sg
    p, q = len(params.lambdas), len(params.mus)
    xi = params.s + sum(m for m, _ in params.mus) - sum(l for l, _ in params.lambdas) + (p - q) / 2
    return d1, nabla, xi


def extended_lerch_phi(
    params: LerchParams,
    z,
    policy: TruncationPolicy = DEFAULT_POLICY,
    *,
    simplify: bool = True,
) -> SeriesResult:
    """Extended Hurwitz-Lerch zeta function at ``z``.

    With ``simplify`` (default) coinciding upper/lower pairs are cancelled
    first; if what remains is the classical function it is evaluated by
    :func:`lerch_phi`, which also covers the unit circle.
    """
    if simplify:
        red = params.simplified()
        if red.lambdas == ((1.0, 1.0),) and not red.mus:
            zz = complex(z) if isinstance(z, (complex, np.complexfloating)) else float(z)
            _check_lerch_args(zz, red.s, red.a)
            return _lerch_result(zz, red.s, red.a, policy)
        params = red
    d1, nabla, xi = lerch_convergence(params)
    check_convergence(ConvergenceInfo(d1, nabla, xi, None), z)
    s, a = params.s, params.a
    pre = sum(math.lgamma(m) for m, _ in params.mus) - sum(math.lgamma(l) for l, _ in params.lambdas)
    pre_sign = float(np.prod([gammasgn(m) for m, _ in params.mus]) * np.prod([gammasgn(l) for l, _ in params.lambdas]))
    cplx = isinstance(z, (complex, np.complexfloating))
    if cplx:
        z = complex(z)
        lz = cmath.log(z) if z != 0 else None
    else:
        z = float(z)
        lz = math.log(abs(z)) if z != 0 else None

    def terms(ks):
        kk = ks.astype(float)
        logabs, sign = _log_terms(params.lambdas, params.mus, kk)
        logabs = logabs - s * np.log(kk + a) + pre
        sign = sign * pre_sign
        if lz is None:
            vals = np.where(ks == 0, sign * np.exp(logabs), 0.0)
            return vals.astype(complex) if cplx else vals
        if cplx:
            return sign * np.exp(logabs + kk * lz)
        if z < 0:
            sign = sign * np.where(ks % 2 == 1, -1.0, 1.0)
        return sign * np.exp(logabs + kk * lz)

    return sum_series(terms, policy)
