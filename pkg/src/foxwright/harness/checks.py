"""Left- and right-hand-side evaluators for the identity catalogue.

Every ``check_*`` function evaluates both sides of one identity at one
parameter point through independent code paths and returns an
:class:`IdentityReport`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammainc, gammaln

from ..accel import algebraic_tail
from ..errors import DomainError
from ..mathieu import MathieuSpec, mathieu_integral_form, mathieu_series
from ..quadrature import DEFAULT_QUAD, KernelPQ11, QuadratureSpec, finite_laplace, h_kernel_pq11, integrate_finite, integrate_semi_infinite, theorem2_integral_rhs
from ..series import (
    DEFAULT_POLICY,
    FoxWrightParams,
    SeriesResult,
    TruncationPolicy,
    binom_coeff_shifted,
    convergence_params,
    fox_wright,
    fox_wright_normalized,
    fox_wright_term_ratio,
    gen_binom,
    pfq,
    sum_series,
)
from ..zeta import LerchParams, extended_lerch_phi, hurwitz_zeta, lerch_phi, lipschitz_lerch, polylog, riemann_zeta
from .report import CHAIN, DOUBLE_SERIES, EQUALITY, IdentityReport, Tolerance, chain_report, make_report

OUTER_CAP = 2000

TOL_SERIES = Tolerance(abs=1e-15, rel=1e-9)
TOL_QUAD = Tolerance(abs=1e-15, rel=1e-7)
TOL_TIGHT = Tolerance(abs=1e-15, rel=1e-12)
TOL_CHAIN = Tolerance(abs=1e-10, rel=1e-10)


@dataclass(frozen=True)
class EvalContext:
    """Numerical settings shared by all evaluators of a run."""

    policy: TruncationPolicy = DEFAULT_POLICY
    quad: QuadratureSpec = DEFAULT_QUAD


DEFAULT_CTX = EvalContext()


def outer_sum(term, ctx: EvalContext) -> SeriesResult:
    """Sum an expensive sequence ``term(k)`` with the run's truncation policy."""
    pol = TruncationPolicy(ctx.policy.rel_tol, ctx.policy.consecutive_small, min(ctx.policy.max_terms, OUTER_CAP))

    def terms(ks):
        return np.array([term(int(k)) for k in ks])

    return sum_series(terms, pol, first_block=8, max_block=32)


def _sum_diag(res: SeriesResult, prefix: str = "lhs") -> dict:
    return {f"{prefix}_terms": res.terms_used, f"{prefix}_tail": res.tail_estimate, f"{prefix}_converged": res.converged}


def _log_abs_pow(t: float, k: int) -> tuple[float, float]:
    """``log|t|**k`` and the sign of ``t**k`` (with ``0**0 = 1``)."""
    if k == 0:
        return 0.0, 1.0
    if t == 0:
        return -math.inf, 0.0
    return k * math.log(abs(t)), (-1.0 if (t < 0 and k % 2) else 1.0)


def _scaled_fw(params: FoxWrightParams, z: float, log_scale: float, sign: float, ctx: EvalContext) -> float:
    if sign == 0 or log_scale == -math.inf:
        return 0.0
    return sign * fox_wright(params, z, ctx.policy, log_scale=log_scale).value


# ------------------------------------------------------------ Fox-Wright basics


def check_definition(upper, lower, z, ctx=DEFAULT_CTX, *, case_id="eq-1.1-definition", tol=TOL_TIGHT):
    """Block-vectorized log-gamma summation vs a scalar loop over Gamma ratios."""
    P = FoxWrightParams(upper, lower)
    res = fox_wright(P, z, ctx.policy)
    # scalar recurrence: term_{k+1} = term_k * ratio(k)
    t = math.exp(sum(math.lgamma(a) for a, _ in P.upper) - sum(math.lgamma(b) for b, _ in P.lower))
    acc = [t]
    for k in range(ctx.policy.max_terms):
        t *= fox_wright_term_ratio(P, z, k)
        acc.append(t)
        if abs(t) <= 1e-18 * abs(math.fsum(acc)) and k > 5:
            break
    return make_report(case_id, {"upper": upper, "lower": lower, "z": z}, res.value, math.fsum(acc), tol, **_sum_diag(res))


def check_ratio_asymptotics(upper, lower, z, ctx=DEFAULT_CTX, *, case_id="eq-1.2-1.3-convergence", tol=Tolerance(1e-15, 1e-6)):
    """``|T_{k+1}/T_k| k**(1+Delta) -> |z|/rho`` (Richardson-extrapolated)."""
    P = FoxWrightParams(upper, lower)
    info = convergence_params(P)
    est = []
    for k in (4000, 8000):
        est.append(abs(fox_wright_term_ratio(P, z, k)) * k ** (1 + info.delta))
    lhs = 2 * est[1] - est[0]
    rhs = abs(z) / info.rho
    return make_report(case_id, {"upper": upper, "lower": lower, "z": z}, lhs, rhs, tol,
                       delta=info.delta, rho=info.rho, mu=info.mu, gamma_min=info.gamma_min, raw=est)


def check_normalized(sigma, upper, lower, z, ctx=DEFAULT_CTX, *, case_id="eq-1.4-normalized", tol=TOL_TIGHT):
    """Normalized form vs ``sum (sigma)_k prod Gamma(a+kA)/prod Gamma(b+kB) z^k/k!`` with explicit Pochhammer."""
    P = FoxWrightParams(upper, lower)
    res = fox_wright_normalized(sigma, P, z, ctx.policy)
    acc, poch = [], 1.0
    for k in range(ctx.policy.max_terms):
        g = sum(math.lgamma(a + k * A) for a, A in P.upper) - sum(math.lgamma(b + k * B) for b, B in P.lower) - math.lgamma(k + 1)
        term = poch * math.exp(g) * z**k
        acc.append(term)
        poch *= sigma + k
        if k > 5 and abs(term) <= 1e-18 * abs(math.fsum(acc)):
            break
    return make_report(case_id, {"sigma": sigma, "upper": upper, "lower": lower, "z": z}, res.value, math.fsum(acc), tol, **_sum_diag(res))


def check_bridge(a, b, z, ctx=DEFAULT_CTX, *, case_id="eq-1.5-1.6-bridge", tol=TOL_TIGHT):
    """Unit-weight Fox-Wright equals ``prod Gamma(a)/prod Gamma(b) * pFq``."""
    P = FoxWrightParams([(x, 1.0) for x in a], [(x, 1.0) for x in b])
    lhs = fox_wright(P, z, ctx.policy)
    pre = math.exp(sum(math.lgamma(x) for x in a) - sum(math.lgamma(x) for x in b))
    rhs = pre * pfq(a, b, z, ctx.policy).value
    return make_report(case_id, {"a": list(a), "b": list(b), "z": z}, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_representing_measure(A, alpha, beta, z, ctx=DEFAULT_CTX, *, case_id="eq-1.7-representing-measure", tol=TOL_QUAD):
    """``1Psi1[(alpha,A);(beta,A)|z] = int_0^1 exp(z x) H(x) dx / x``."""
    K = KernelPQ11(A, alpha, beta)
    lhs = fox_wright(FoxWrightParams([(alpha, A)], [(beta, A)]), z, ctx.policy)
    spec = ctx.quad.with_exponents(alpha / A - 1, beta - alpha - 1)
    rhs = integrate_finite(lambda x, dl, dh: np.exp(z * dl) * h_kernel_pq11(K, dl, dh) / dl, 0.0, 1.0, spec, distances=True)
    return make_report(case_id, {"A": A, "alpha": alpha, "beta": beta, "z": z}, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_binomial(lam, t, ctx=DEFAULT_CTX, *, case_id="eq-2.8-binomial", tol=TOL_TIGHT):
    """``sum_k binom(lam+k-1, k) t^k = (1-t)^-lam``, coefficients via the generalized binomial."""
    def term(k):
        c = gen_binom(lam + k - 1, k) if k < 150 else binom_coeff_shifted(lam, k)
        return c * t**k

    res = outer_sum(term, ctx)
    dev = max(abs(gen_binom(lam + k - 1, k) / binom_coeff_shifted(lam, k) - 1) for k in range(0, 60))
    return make_report(case_id, {"lambda": lam, "t": t}, res.value, (1 - t) ** (-lam), tol,
                       coefficient_max_rel_dev=dev, **_sum_diag(res))


def check_finite_laplace(c, s, T, ctx=DEFAULT_CTX, *, case_id="eq-2.1-finite-laplace", tol=TOL_QUAD):
    """``int_0^T exp(-s x) x^(c-1) dx = s^-c Gamma(c) P(c, sT)`` for ``s > 0``."""
    spec = ctx.quad.with_exponents(c - 1, 0.0)
    lhs = finite_laplace(lambda x, dl, dh: dl ** (c - 1), T, s, spec, distances=True)
    rhs = s ** (-c) * math.gamma(c) * gammainc(c, s * T)
    return make_report(case_id, {"c": c, "s": s, "T": T}, lhs, rhs, tol)


# ------------------------------------------- binomial-weighted generating function


def _kernel_laplace(K: KernelPQ11, lam, t, z, ctx, printed=False):
    """``int_0^1 exp(z x) x^-1 (1 - t x)^-lam H(x) dx``."""
    spec = ctx.quad.with_exponents(K.alpha / K.A - 1, K.beta - K.alpha - 1)
    if printed:
        # the (1 - x) form of the kernel factor instead of (1 - x^(1/A))
        c = 1.0 / (K.A * math.gamma(K.beta - K.alpha))

        def g(x, dl, dh):
            return c * dl ** (K.alpha / K.A - 1) * dh ** (K.beta - K.alpha - 1) * (1 - t * dl) ** (-lam)
    else:
        def g(x, dl, dh):
            return h_kernel_pq11(K, dl, dh) / dl * (1 - t * dl) ** (-lam)
    return finite_laplace(g, 1.0, -z, spec, distances=True)


def check_thm1_corollary(A, alpha, beta, lam, z, t, ctx=DEFAULT_CTX, *, case_id="thm1-corollary-p1q1", tol=TOL_QUAD) -> IdentityReport:
    """Double series ``sum_k sum_n Gamma(lam+k) Gamma(alpha+(k+n)A)/Gamma(beta+(k+n)A) z^n t^k/(n! k!)``
    against ``Gamma(lam) int_0^1 exp(z x) x^-1 (1 - t x)^-lam H(x) dx``.

    The inner n-sum is the Fox-Wright function with shifted parameters.
    """
    point = {"A": A, "alpha": alpha, "beta": beta, "lambda": lam, "z": z, "t": t}
    K = KernelPQ11(A, alpha, beta)

    def term(k):
        lt, st = _log_abs_pow(t, k)
        P = FoxWrightParams([(alpha + k * A, A)], [(beta + k * A, A)])
        return _scaled_fw(P, z, math.lgamma(lam + k) - math.lgamma(k + 1) + lt, st, ctx)

    lhs = outer_sum(term, ctx)
    rhs = math.gamma(lam) * _kernel_laplace(K, lam, t, z, ctx)
    diag = _sum_diag(lhs)
    if A != 1:
        printed = math.gamma(lam) * _kernel_laplace(K, lam, t, z, ctx, printed=True)
        diag.update(printed_rhs=printed, printed_rhs_rel_dev=abs(printed - rhs) / abs(rhs))
    return make_report(case_id, point, lhs.value, rhs, tol, **diag)


def luke_bounds(A, alpha, beta) -> tuple[float, float]:
    """``(psi_00, psi_01)`` for ``1Psi1[(alpha, A); (beta, A)]``."""
    psi00 = math.exp(math.lgamma(alpha) - math.lgamma(beta))
    psi01 = math.exp(math.lgamma(alpha + A) - math.lgamma(beta + A))
    return psi00, psi01


def check_thm1_inequalities(A, alpha, beta, lam, z, t, ctx=DEFAULT_CTX, *, sigma=None, case_id="thm1-inequalities-p1q1", tol=TOL_CHAIN) -> IdentityReport:
    """Bounds on ``G = sum_k binom(lam+k-1,k) 1Psi1[(alpha+kA,A);(beta+kA,A)|z] t^k``.

    Chain checked (``rho = 1`` for equal weights, ``N(t)`` the normalized
    ``2Psi1[(lam,1),(alpha,A);(beta,A)|t] / Gamma(lam)``):

        luke_lower(t) <= N(t) <= G <= exp(rho z) N(t) <= exp(rho z) luke_upper(t)
    """
    point = {"A": A, "alpha": alpha, "beta": beta, "lambda": lam, "z": z, "t": t}
    sigma = lam if sigma is None else sigma
    rho = convergence_params(FoxWrightParams([(alpha, A)], [(beta, A)])).rho
    N = fox_wright_normalized(sigma, FoxWrightParams([(alpha, A)], [(beta, A)]), t, ctx.policy).value

    def term(k):
        lt, st = _log_abs_pow(t, k)
        P = FoxWrightParams([(alpha + k * A, A)], [(beta + k * A, A)])
        return _scaled_fw(P, z, math.log(binom_coeff_shifted(lam, k)) + lt, st, ctx)

    G = outer_sum(term, ctx)
    psi00, psi01 = luke_bounds(A, alpha, beta)
    lower = psi00 / (1 - psi01 / psi00 * t) ** lam
    upper = psi00 - psi01 / rho * (1 - (1 - rho * t) ** (-lam))
    e = math.exp(rho * z)
    links = [
        ("luke_lower<=normalized", lower, N),
        ("normalized<=generating", N, G.value),
        ("generating<=exp*normalized", G.value, e * N),
        ("exp*normalized<=exp*luke_upper", e * N, e * upper),
    ]
    diag = _sum_diag(G)
    diag.update(psi00=psi00, psi01=psi01, rho=rho, sigma=sigma,
                unnormalized_middle=math.gamma(lam) * N,
                unnormalized_middle_within_luke=bool(lower <= math.gamma(lam) * N <= upper))
    return chain_report(case_id, point, links, G.value, tol, **diag)


# ------------------------------------------------------------ proof-integral forms

THM2_TERMS = 240


def check_thm2_thm3_integral(lam, tau, t, A, alpha, beta, ctx=DEFAULT_CTX, *, case_id="thm2-integral", tol=Tolerance(1e-15, 1e-6)) -> IdentityReport:
    """``sum_k binom(lam+k-1,k) N_k(1-t) t^k`` vs ``(1-t)^-lam int_0^1 x^(tau-1) (1-x)^-lam H(x) dx``.

    ``N_k`` is the normalized ``2Psi1[(lam+k,1),(alpha+tau A,A);(beta+tau A,A)]``.
    The terms decay like ``k**-(1+beta-alpha-lam)``, so the sum is taken to
    a fixed depth and the remainder is fitted by an algebraic tail.
    """
    point = {"A": A, "alpha": alpha, "beta": beta, "lambda": lam, "tau": tau, "t": t}
    K = KernelPQ11(A, alpha, beta)
    P = FoxWrightParams([(alpha + tau * A, A)], [(beta + tau * A, A)])
    x = 1.0 - t
    terms = []
    inner_ok = True
    for k in range(THM2_TERMS + 1):
        lt, st = _log_abs_pow(t, k)
        if st == 0:
            terms.append(0.0)
            continue
        r = fox_wright_normalized(lam + k, P, x, ctx.policy, log_scale=math.log(binom_coeff_shifted(lam, k)) + lt)
        inner_ok = inner_ok and r.converged
        terms.append(st * r.value)
    terms = np.array(terms)
    head = math.fsum(terms)
    p = 1 + beta - alpha - lam
    if t == 0:
        tail, tail_err = 0.0, 0.0
    else:
        tail, tail_err = algebraic_tail(terms[THM2_TERMS // 2:], THM2_TERMS, p)
    lhs = head + tail
    rhs = theorem2_integral_rhs(K, lam, tau, t, ctx.quad)
    return make_report(case_id, point, lhs, rhs, tol, lhs_terms=THM2_TERMS + 1, lhs_head=head,
                       lhs_tail=tail, lhs_tail_error=tail_err, decay_exponent=p, inner_converged=inner_ok)


# --------------------------------------- exponential generating function (upper shift)


def check_thm4_gf(lam, A, upper, lower, z, t, ctx=DEFAULT_CTX, *, case_id="thm4-gf", tol=TOL_SERIES) -> IdentityReport:
    """``sum_k pPsi_q[(lam+k,A),upper;(lam,A),lower|z] t^k/k! = (1-t)^-lam p-1Psi_q-1[upper;lower|z/(1-t)^A]``."""
    point = {"lambda": lam, "A": A, "upper": upper, "lower": lower, "z": z, "t": t}
    R = FoxWrightParams(upper, lower)

    def term(k):
        lt, st = _log_abs_pow(t, k)
        P = R.prepend(upper=(lam + k, A), lower=(lam, A))
        return _scaled_fw(P, z, lt - math.lgamma(k + 1), st, ctx)

    lhs = outer_sum(term, ctx)
    rhs = (1 - t) ** (-lam) * fox_wright(R, z / (1 - t) ** A, ctx.policy).value
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_eq238(lam, A, z, t, ctx=DEFAULT_CTX, *, case_id="eq-2.38", tol=TOL_SERIES) -> IdentityReport:
    """``sum_k 1Psi1[(lam+k,A);(lam,A)|z] t^k/k! = (1-t)^-lam exp(z/(1-t)^A)``."""
    point = {"lambda": lam, "A": A, "z": z, "t": t}

    def term(k):
        lt, st = _log_abs_pow(t, k)
        P = FoxWrightParams([(lam + k, A)], [(lam, A)])
        return _scaled_fw(P, z, lt - math.lgamma(k + 1), st, ctx)

    lhs = outer_sum(term, ctx)
    rhs = (1 - t) ** (-lam) * math.exp(z / (1 - t) ** A)
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_eq239(lam, z, t, ctx=DEFAULT_CTX, *, case_id="eq-2.39", tol=TOL_SERIES) -> IdentityReport:
    """``sum_k 1F1(lam+k; lam; z) Gamma(lam+k) t^k/k! = Gamma(lam) (1-t)^-lam exp(z/(1-t))``."""
    point = {"lambda": lam, "z": z, "t": t}

    def term(k):
        lt, st = _log_abs_pow(t, k)
        if st == 0:
            return 0.0
        return st * math.exp(math.lgamma(lam + k) - math.lgamma(k + 1) + lt) * pfq([lam + k], [lam], z, ctx.policy).value

    lhs = outer_sum(term, ctx)
    rhs = math.gamma(lam) * (1 - t) ** (-lam) * math.exp(z / (1 - t))
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_eq240(a, b, z, t, ctx=DEFAULT_CTX, *, case_id="eq-2.40", tol=TOL_SERIES) -> IdentityReport:
    """``sum_k pFq(a1+k, a2..; a1, b2..; z) Gamma(a1+k) t^k/k! = Gamma(a1)(1-t)^-a1 p-1Fq-1(a2..; b2..; z/(1-t))``.

    ``a = (a1, a2, ...)`` and ``b = (b2, ...)``; ``a1`` is the lower parameter
    paired with the shifted ``a1 + k``.
    """
    point = {"a": list(a), "b": list(b), "z": z, "t": t}
    a1, rest = a[0], list(a[1:])

    def term(k):
        lt, st = _log_abs_pow(t, k)
        if st == 0:
            return 0.0
        return st * math.exp(math.lgamma(a1 + k) - math.lgamma(k + 1) + lt) * pfq([a1 + k] + rest, [a1] + list(b), z, ctx.policy).value

    lhs = outer_sum(term, ctx)
    rhs = math.gamma(a1) * (1 - t) ** (-a1) * pfq(rest, list(b), z / (1 - t), ctx.policy).value
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


# ------------------------------------------------------------------- Mathieu


def check_mathieu_definition(mu, alpha, r, ctx=DEFAULT_CTX, *, case_id="eq-3.1-mathieu-definition", tol=Tolerance(1e-15, 1e-10)):
    """``S_mu^(alpha,0)(r; k^(1/alpha)) = 2 zeta(mu, 1 + r^2)``."""
    res = mathieu_series(MathieuSpec(mu, alpha, 0.0, r), ctx.policy)
    rhs = 2 * hurwitz_zeta(mu, 1 + r * r)
    return make_report(case_id, {"mu": mu, "alpha": alpha, "r": r}, res.value, rhs, tol, **_sum_diag(res))


def check_mathieu_integral(mu, alpha, beta, r, ctx=DEFAULT_CTX, *, case_id="mathieu-integral-representation", tol=TOL_QUAD):
    """Series evaluation vs the Laplace-type integral with the 1Psi1 kernel."""
    spec = MathieuSpec(mu, alpha, beta, r)
    res = mathieu_series(spec, ctx.policy)
    rhs = mathieu_integral_form(spec, ctx.quad)
    return make_report(case_id, {"mu": mu, "alpha": alpha, "beta": beta, "r": r}, res.value, rhs, tol, **_sum_diag(res))


def check_mathieu_gf(mu, alpha, r, t, ctx=DEFAULT_CTX, *, case_id="eq-3.2-mathieu-gf", tol=Tolerance(1e-15, 1e-8)) -> IdentityReport:
    """``sum_k Gamma(mu+k) S_{mu+k}^{(alpha,k alpha)}(r) t^k/k! = 2 Gamma(mu) (1-t)^-mu zeta(mu, 1 + r^2/(1-t))``."""
    point = {"mu": mu, "alpha": alpha, "r": r, "t": t}

    def term(k):
        lt, st = _log_abs_pow(t, k)
        if st == 0:
            return 0.0
        S = mathieu_series(MathieuSpec(mu + k, alpha, k * alpha, r), ctx.policy).value
        return st * math.exp(math.lgamma(mu + k) - math.lgamma(k + 1) + lt) * S

    lhs = outer_sum(term, ctx)
    rhs = 2 * math.gamma(mu) * (1 - t) ** (-mu) * hurwitz_zeta(mu, 1 + r * r / (1 - t))
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_mathieu_corollary(mu, alpha, t, ctx=DEFAULT_CTX, *, case_id="eq-3.4-mathieu-corollary", tol=Tolerance(1e-15, 1e-8)) -> IdentityReport:
    """The generating function at ``r = sqrt(1-t)``: RHS ``2 Gamma(mu) (1-t)^-mu zeta(mu, 2)``."""
    rep = check_mathieu_gf(mu, alpha, math.sqrt(1 - t), t, ctx, case_id=case_id, tol=tol)
    rhs = 2 * math.gamma(mu) * (1 - t) ** (-mu) * (riemann_zeta(mu) - 1)
    rep2 = make_report(case_id, {"mu": mu, "alpha": alpha, "t": t}, rep.lhs, rhs, tol, **rep.diagnostics)
    return rep2


_PI_CONSTANTS = {
    2: ((math.pi**2 - 6) / 6, "(pi^2 - 6)/6"),
    3: (None, "zeta(3) - 1"),
    4: ((math.pi**4 - 90) / 90, "(pi^4 - 90)/90"),
}
PRINTED_ZETA3_MINUS_1 = 0.202056903
PI_SERIES_TERMS = 2000


def check_double_series_pi(m, mu=2, ctx=DEFAULT_CTX, *, case_id=None, tol=Tolerance(1e-9, 1e-9)) -> IdentityReport:
    """``sum_n sum_k binom(mu+k-1, k) x_n^k / (1+mn)^mu = zeta(mu, 2)``, ``x_n = (m-1)n/(1+mn)``.

    For ``mu = 2`` the weights are ``k + 1``.  The inner k-sum is taken in
    closed form ``(1 - x_n)^-mu``; the outer n-sum is summed to a fixed depth
    with an algebraic tail.  Diagnostics compare a truncated inner sum with the
    closed form and evaluate the series with unnormalized weights
    ``(k+1)...(k+mu-1)``, which equals ``Gamma(mu) (zeta(mu) - 1)``.
    """
    case_id = case_id or (f"eq-3.5-m{m}" if mu == 2 else f"eq-3.5-mu{mu}")
    n = np.arange(1, PI_SERIES_TERMS + 1, dtype=float)
    x = (m - 1) * n / (1 + m * n)
    g = (1 + m * n) ** (-float(mu)) * (1 - x) ** (-float(mu))
    head = math.fsum(g)
    tail, tail_err = algebraic_tail(g[PI_SERIES_TERMS // 2:], PI_SERIES_TERMS, float(mu))
    lhs = head + tail
    const, label = _PI_CONSTANTS.get(mu, (None, f"zeta({mu}) - 1"))
    rhs = const if const is not None else riemann_zeta(mu) - 1
    # raw inner sums at sample n
    dev = 0.0
    for nn in (1, 10, 100, 1000):
        xn = (m - 1) * nn / (1 + m * nn)
        k = np.arange(0, 4000, dtype=float)
        w = np.exp(gammaln(mu + k) - gammaln(mu) - gammaln(k + 1) + k * math.log(xn))
        dev = max(dev, abs(math.fsum(w) * (1 - xn) ** mu - 1))
    diag = {"lhs_head": head, "lhs_tail": tail, "lhs_tail_error": tail_err, "outer_terms": PI_SERIES_TERMS,
            "inner_closed_form_rel_dev": dev, "rhs_label": label}
    if mu > 2:
        printed = math.gamma(mu) * lhs
        diag.update(unnormalized_weight_value=printed, unnormalized_over_rhs=printed / rhs)
    if mu == 3:
        diag.update(printed_constant=PRINTED_ZETA3_MINUS_1, printed_constant_abs_dev=abs(rhs - PRINTED_ZETA3_MINUS_1))
    return make_report(case_id, {"m": m, "mu": mu}, lhs, rhs, tol, kind=DOUBLE_SERIES, **diag)


def check_zeta_value(which, ctx=DEFAULT_CTX, *, case_id="zeta-remarks", tol=Tolerance(1e-15, 1e-12)) -> IdentityReport:
    """Closed-form zeta values used by the double-series identities."""
    if which == "zeta2":
        lhs, rhs = riemann_zeta(2), math.pi**2 / 6
    elif which == "zeta4":
        lhs, rhs = riemann_zeta(4), math.pi**4 / 90
    elif which == "zeta3-printed":
        lhs, rhs = riemann_zeta(3) - 1, PRINTED_ZETA3_MINUS_1
    elif which == "hurwitz22":
        lhs, rhs = hurwitz_zeta(2, 2), math.pi**2 / 6 - 1
    elif which == "hurwitz42":
        lhs, rhs = hurwitz_zeta(4, 2), (math.pi**4 - 90) / 90
    else:
        raise DomainError(f"unknown zeta value {which!r}")
    return make_report(case_id, {"value": which}, lhs, rhs, tol)


# --------------------------------------------------------------------- Lerch


def _unit(xi: float) -> complex:
    z = cmath.exp(2j * math.pi * xi)
    return z / abs(z)


def lerch_point_z(point: dict):
    """Argument ``z`` of a Lerch grid point: real ``z`` or ``r exp(2 i pi xi)``."""
    if "xi" in point:
        return point.get("r", 1.0) * _unit(point["xi"])
    return float(point["z"])


def lipschitz_rational(xi: float, a: float, s: float) -> complex:
    """``L(p/q, a, s) = q^-s sum_{r<q} exp(2 i pi r p/q) zeta(s, (a+r)/q)`` for rational ``xi``."""
    fr = Fraction(xi).limit_denominator(1000)
    if abs(float(fr) - xi) > 1e-14:
        raise DomainError("xi must be rational with a small denominator")
    p, q = fr.numerator, fr.denominator
    vals = [cmath.exp(2j * math.pi * r * p / q) * hurwitz_zeta(s, (a + r) / q) for r in range(q)]
    return q ** (-s) * complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))


def check_lerch_definition(lambdas, mus, s, a, z, ctx=DEFAULT_CTX, *, case_id="lerch-extended-definition", tol=Tolerance(1e-15, 1e-10)):
    """Extended function vs a scalar loop with explicit Gamma products."""
    P = LerchParams(lambdas, mus, s, a)
    res = extended_lerch_phi(P, z, ctx.policy, simplify=False)
    pre = sum(math.lgamma(m) for m, _ in P.mus) - sum(math.lgamma(l) for l, _ in P.lambdas)
    acc = []
    for k in range(2000):
        g = (sum(math.lgamma(l + k * r) for l, r in P.lambdas) - sum(math.lgamma(m + k * sg) for m, sg in P.mus)
             - math.lgamma(k + 1) - s * math.log(k + a) + pre)
        acc.append(math.exp(g) * z**k)
        if k > 5 and abs(acc[-1]) <= 1e-18 * abs(math.fsum(acc)):
            break
    return make_report(case_id, {"lambdas": lambdas, "mus": mus, "s": s, "a": a, "z": z}, res.value, math.fsum(acc), tol, **_sum_diag(res))


def check_lerch_integral(lambdas, mus, s, a, z, ctx=DEFAULT_CTX, *, case_id="lerch-extended-integral", tol=TOL_QUAD):
    """Series vs ``P/Gamma(s) int x^(s-1) exp(-a x) pPsi_q(z exp(-x)) dx``."""
    P = LerchParams(lambdas, mus, s, a)
    res = extended_lerch_phi(P, z, ctx.policy, simplify=False)
    fw = FoxWrightParams(P.lambdas, P.mus)
    # power-series coefficients of pPsi_q, reused at every node
    from ..series import fox_wright_terms
    coef = fox_wright_terms(fw, 1.0, 400)
    coef = coef[: max(8, int(np.max(np.nonzero(np.abs(coef) * abs(z) ** np.arange(coef.size) > 1e-300)[0])) + 1)]
    pre = sum(math.lgamma(m) for m, _ in P.mus) - sum(math.lgamma(l) for l, _ in P.lambdas) - math.lgamma(s)

    def f(x):
        w = z * np.exp(-x)
        psi = np.polynomial.polynomial.polyval(w, coef)
        return np.exp((s - 1) * np.log(x) - a * x + pre) * psi

    rhs = integrate_semi_infinite(f, ctx.quad.with_exponents(s - 1), scale=1.0 / a)
    return make_report(case_id, {"lambdas": lambdas, "mus": mus, "s": s, "a": a, "z": z}, res.value, rhs, tol, **_sum_diag(res))


def check_lerch_gf(lam1, rho1, lambdas, mus, s, a, z, t, ctx=DEFAULT_CTX, *, case_id="thm-3.8-lerch-gf", tol=Tolerance(1e-15, 1e-8)) -> IdentityReport:
    """``sum_k Phi[(lam1+k,rho1),lambdas; (lam1,rho1),mus](z,s,a) Gamma(lam1+k) t^k/k!
    = Gamma(lam1)(1-t)^-lam1 Phi[lambdas; mus](z (1-t)^-rho1, s, a)``.
    """
    point = {"lambda1": lam1, "rho1": rho1, "lambdas": lambdas, "mus": mus, "s": s, "a": a, "z": z, "t": t}
    lam_pairs = [tuple(p) for p in lambdas]
    mu_pairs = [tuple(p) for p in mus]

    def term(k):
        lt, st = _log_abs_pow(t, k)
        if st == 0:
            return 0.0
        P = LerchParams([(lam1 + k, rho1)] + lam_pairs, [(lam1, rho1)] + mu_pairs, s, a)
        v = extended_lerch_phi(P, z, ctx.policy).value
        return st * math.exp(math.lgamma(lam1 + k) - math.lgamma(k + 1) + lt) * v

    lhs = outer_sum(term, ctx)
    R = LerchParams(lam_pairs, mu_pairs, s, a)
    rhs = math.gamma(lam1) * (1 - t) ** (-lam1) * extended_lerch_phi(R, z * (1 - t) ** (-rho1), ctx.policy).value
    return make_report(case_id, point, lhs.value, rhs, tol, **_sum_diag(lhs))


def check_lerch_corollary(lam1, rho1, s, a, t, ctx=DEFAULT_CTX, *, z=None, xi=None, r=1.0, case_id="eq-3.9-lerch-gf", tol=Tolerance(1e-15, 1e-8)) -> IdentityReport:
    """Reduction with a single extra upper pair ``(1, 1)``: RHS is the classical ``Phi``.

    With ``xi`` given, ``z = r exp(2 i pi xi)``; the diagnostics then audit the
    unit-circle statement, whose right-hand side must be
    ``Phi(exp(2 i pi xi) (1-t)^-rho1, s, a)`` rather than ``L(xi, a, s)``.
    """
    if xi is not None:
        zz = r * _unit(xi)
    else:
        zz = float(z)
    rep = check_lerch_gf(lam1, rho1, [(1.0, 1.0)], [], s, a, zz, t, ctx, case_id=case_id, tol=tol)
    point = {"lambda1": lam1, "rho1": rho1, "s": s, "a": a, "t": t}
    point.update({"xi": xi, "r": r} if xi is not None else {"z": z})
    rep.point = point
    if xi is not None:
        pre = math.gamma(lam1) * (1 - t) ** (-lam1)
        printed = pre * lipschitz_lerch(xi, a, s, ctx.policy)
        corrected = pre * complex(lerch_phi(_unit(xi) * (1 - t) ** (-rho1), s, a, ctx.policy))
        rep.diagnostics.update(
            unit_circle_printed_rhs=[printed.real, printed.imag],
            unit_circle_corrected_rhs=[corrected.real, corrected.imag],
            unit_circle_printed_abs_dev=abs(printed - corrected),
            unit_circle_first_divergent_k=max(0, math.ceil(s - 1)),
        )
    return rep


def _inner_binomial(n: int, t: float) -> float:
    """Truncated ``sum_k binom(n+k, k) t^k`` (alternating for ``t < 0``)."""
    at = abs(t)
    if at == 0:
        return 1.0
    K = int((n + 1) * at / (1 - at) * 4 + 60 * (1 + math.sqrt(n)) + 40)
    k = np.arange(K, dtype=float)
    logc = gammaln(n + k + 1) - gammaln(n + 1) - gammaln(k + 1) + k * math.log(at)
    vals = np.exp(logc) * np.where((k % 2 == 1) & (t < 0), -1.0, 1.0)
    return math.fsum(vals)


def _inner_binomial_extended(n: int, t: float) -> float:
    """``(1-t)^(n+1) sum_k binom(n+k, k) t^k`` by direct summation in extended precision.

    The alternating sum has condition number ``((1+|t|)/(1-|t|))^(n+1)``, so
    the working precision grows with ``n``.
    """
    import mpmath as mp

    cond = (n + 1) * math.log10((1 + abs(t)) / (1 - abs(t)))
    with mp.workdps(25 + int(cond)):
        tt = mp.mpf(t)
        term, acc, k = mp.mpf(1), mp.mpf(0), 0
        eps = mp.mpf(10) ** (-mp.mp.dps)
        while True:
            acc += term
            term *= (n + k + 1) * tt / (k + 1)
            k += 1
            if k > n and abs(term) < eps * abs(acc):
                break
        return float(acc * (1 - tt) ** (n + 1))


def raw_lerch_double_series(z, s, a, t, max_n: int = 4000) -> tuple[complex, int]:
    """``sum_n [sum_k binom(n+k,k) t^k] (1-t)^(n+1) z^n / (n+a)^s`` with both sums truncated.

    Requires absolute convergence of the double series,
    ``|z| (1 + |t|) / (1 - |t|) < 1``.
    """
    if not (abs(t) < 1 and abs(z) * (1 + abs(t)) / (1 - abs(t)) < 1):
        raise DomainError("double series needs |z| (1+|t|)/(1-|t|) < 1")
    acc = []
    for n in range(max_n):
        inner = _inner_binomial(n, t)
        term = inner * (1 - t) ** (n + 1) * z**n / (n + a) ** s
        acc.append(complex(term))
        if n > 10 and abs(term) <= 1e-18 * abs(sum(acc)):
            break
    return complex(math.fsum(v.real for v in acc), math.fsum(v.imag for v in acc)), len(acc)


def check_lerch_double_series(s, a, t, ctx=DEFAULT_CTX, *, z=None, xi=None, mode="raw", case_id="eq-3.11-double-series", tol=Tolerance(1e-15, 1e-8)) -> IdentityReport:
    """``sum_k sum_n Gamma(n+k+1)/(n! k!) (1-t)^(n+1) z^n t^k/(n+a)^s = Phi(z, s, a)``.

    ``mode="raw"`` truncates both sums directly (needs
    ``|z|(1+|t|)/(1-|t|) < 1``).  ``mode="collapsed"`` sums the inner k-series
    by the binomial theorem, checks that collapse numerically for a range of n
    (``collapse_max_abs_dev``) and sums the remaining n-series directly; with
    ``xi`` given (``z = exp(2 i pi xi)``) that n-series is taken over residue
    classes of n modulo the denominator of ``xi``.
    """
    if xi is not None:
        mode = "collapsed"
    if mode == "raw":
        zz = complex(z) if isinstance(z, complex) else float(z)
        lhs, nterms = raw_lerch_double_series(zz, s, a, t)
        rhs = lerch_phi(zz, s, a, ctx.policy)
        if not isinstance(zz, complex):
            lhs = lhs.real
        return make_report(case_id, {"z": z, "s": s, "a": a, "t": t}, lhs, rhs, tol, mode="raw", outer_terms=nterms)
    if mode != "collapsed":
        raise DomainError(f"unknown mode {mode!r}")
    collapse = max(abs(_inner_binomial_extended(n, t) - 1) for n in (0, 1, 5, 20, 60))
    if xi is not None:
        lhs = lipschitz_rational(xi, a, s)
        rhs = complex(lerch_phi(_unit(xi), s, a, ctx.policy))
        point = {"xi": xi, "s": s, "a": a, "t": t}
        nterms = None
    else:
        z = float(z)
        pol = ctx.policy
        res = sum_series(lambda ks: np.exp(ks * math.log(abs(z)) - s * np.log(ks + a)) * np.where((ks % 2 == 1) & (z < 0), -1.0, 1.0),
                         TruncationPolicy(pol.rel_tol, pol.consecutive_small, max(pol.max_terms, 200000)), max_block=65536)
        lhs, nterms = res.value, res.terms_used
        rhs = lerch_phi(z, s, a, ctx.policy)
        point = {"z": z, "s": s, "a": a, "t": t}
    return make_report(case_id, point, lhs, rhs, tol, mode="collapsed", collapse_max_abs_dev=collapse, outer_terms=nterms)


def check_polylog_row(row, t, ctx=DEFAULT_CTX, *, z=0.5, case_id=None, tol=Tolerance(1e-9, 1e-9)) -> IdentityReport:
    """Double series with ``a = 1`` equals ``Li_s(z)/z``; closed forms at ``z = 1/2``.

    Rows: ``log`` (``-log(1-z)/z``), ``2log2``, ``pi2`` (``pi^2/6 - log^2 2``)
    and ``li3`` (checked against ``2 Li_3(1/2)``; the diagnostics carry the
    deviation of the printed closed form).
    """
    s = {"log": 1.0, "2log2": 1.0, "pi2": 2.0, "li3": 3.0}[row]
    case_id = case_id or f"polylog-{row}"
    if row != "log":
        z = 0.5
    lhs, nterms = raw_lerch_double_series(z, s, 1.0, t)
    lhs = lhs.real
    diag = {"outer_terms": nterms}
    L2 = math.log(2)
    if row == "log":
        rhs = -math.log1p(-z) / z
    elif row == "2log2":
        rhs = 2 * L2
    elif row == "pi2":
        rhs = math.pi**2 / 6 - L2**2
    else:
        rhs = 2 * polylog(3, 0.5, ctx.policy)
        printed = L2**3 / 3 - 2 * (math.pi**2 / 6) * L2 + 7 / 8 * riemann_zeta(3)
        closed = 7 / 4 * riemann_zeta(3) - math.pi**2 / 6 * L2 + L2**3 / 3
        diag.update(printed_rhs=printed, printed_rhs_abs_dev=abs(printed - rhs), closed_form=closed,
                    closed_form_abs_dev=abs(closed - rhs))
    return make_report(case_id, {"row": row, "z": z, "t": t}, lhs, rhs, tol, kind=DOUBLE_SERIES, **diag)


def check_lerch_specialization(which, s, a=1.0, z=None, xi=None, ctx=DEFAULT_CTX, *, case_id="lerch-specializations", tol=Tolerance(1e-15, 1e-10)):
    """Classical reductions of the Hurwitz-Lerch function."""
    point = {"which": which, "s": s, "a": a}
    if which == "riemann":
        lhs, rhs = lerch_phi(1.0, s, 1.0, ctx.policy), riemann_zeta(s)
    elif which == "hurwitz":
        lhs, rhs = lerch_phi(1.0, s, a, ctx.policy), hurwitz_zeta(s, a)
    elif which == "polylog":
        point["z"] = z
        lhs = z * lerch_phi(z, s, 1.0, ctx.policy)
        rhs = math.fsum(z**n / n**s for n in range(1, 4000))
    elif which == "lipschitz":
        point["xi"] = xi
        lhs, rhs = lipschitz_lerch(xi, a, s, ctx.policy), lipschitz_rational(xi, a, s)
    elif which == "lerch-zeta":
        point["xi"] = xi
        lhs, rhs = lipschitz_lerch(xi, 1.0, s, ctx.policy), lipschitz_rational(xi, 1.0, s)
    else:
        raise DomainError(f"unknown specialization {which!r}")
    return make_report(case_id, point, lhs, rhs, tol)
