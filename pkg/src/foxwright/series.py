"""Fox-Wright generalized hypergeometric series and its building blocks.

The Fox-Wright function is

    pPsi_q[(a_i, A_i); (b_j, B_j) | z]
        = sum_k prod Gamma(a_i + k A_i) / prod Gamma(b_j + k B_j) * z**k / k!

Terms are evaluated in log-gamma space with explicit sign tracking and summed
in numpy blocks; the final value is a compensated sum of the accepted terms.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import gammaln, gammasgn

from .errors import DivergenceError, DomainError, SeriesOverflowError

_LOG_MAX = 709.0  # exp() overflows just above this


@dataclass(frozen=True)
class TruncationPolicy:
    """When to stop summing a series.

    Summation stops once ``consecutive_small`` successive terms are each below
    ``rel_tol`` times the running partial sum *and* the geometric tail
    estimate is below ``rel_tol * max(1, |S|)``.
    """

    rel_tol: float = 1e-14
    consecutive_small: int = 3
    max_terms: int = 10_000

    def __post_init__(self):
        if not (self.rel_tol > 0):
            raise ValueError("rel_tol must be positive")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be >= 1")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a truncated summation."""

    value: float | complex
    terms_used: int
    tail_estimate: float
    converged: bool
    abs_sum: float = math.nan
    rounding_estimate: float = math.nan

    def __float__(self):
        return float(self.value)

    def __complex__(self):
        return complex(self.value)


@dataclass(frozen=True)
class ConvergenceInfo:
    """Convergence parameters of a Fox-Wright series.

    delta : sum(B) - sum(A)
    rho : prod A**-A * prod B**B  (with 0**0 = 1)
    mu : sum(b) - sum(a) + (p - q) / 2
    gamma_min : min a/A over the upper pairs, ``None`` unless all A > 0
    """

    delta: float
    rho: float
    mu: float
    gamma_min: float | None


_PAIR_RE = re.compile(r"^\s*([^:]+)\s*:\s*([^:]+)\s*$")


def _as_pairs(pairs) -> tuple[tuple[float, float], ...]:
    if isinstance(pairs, str):
        pairs = parse_pairs(pairs)
    out = []
    for item in pairs:
        a, A = item
        a, A = float(a), float(A)
        if not (math.isfinite(a) and math.isfinite(A)):
            raise DomainError(f"non-finite parameter pair ({a}, {A})")
        if A < 0:
            raise DomainError(f"weights must be non-negative, got {A}")
        out.append((a, A))
    return tuple(out)


def parse_pairs(text: str) -> list[tuple[float, float]]:
    """Parse ``"a1:A1,a2:A2"`` into a list of pairs; empty text gives ``[]``."""
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in text.split(","):
        m = _PAIR_RE.match(chunk)
        if m is None:
            raise ValueError(f"expected 'a:A', got {chunk!r}")
        out.append((float(m.group(1)), float(m.group(2))))
    return out


def _is_nonpos_int(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return (x <= 0) & (x == np.round(x))


@dataclass(frozen=True)
class FoxWrightParams:
    """Upper pairs ``(a_i, A_i)`` and lower pairs ``(b_j, B_j)``.

    Lower pairs that hit a pole of Gamma within the default term budget are
    rejected at construction time.
    """

    upper: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    lower: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "upper", _as_pairs(self.upper))
        object.__setattr__(self, "lower", _as_pairs(self.lower))
        ks = np.arange(DEFAULT_POLICY.max_terms, dtype=float)
        for b, B in self.lower:
            if np.any(_is_nonpos_int(b + ks * B)):
                raise DomainError(f"lower pair ({b}, {B}) meets a pole of Gamma")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def convergence(self) -> ConvergenceInfo:
        return convergence_params(self)

    @classmethod
    def parse(cls, upper: str, lower: str) -> "FoxWrightParams":
        return cls(parse_pairs(upper), parse_pairs(lower))

    def prepend(self, upper=None, lower=None) -> "FoxWrightParams":
        """Return a copy with extra leading pairs."""
        up = ((tuple(upper),) if upper is not None else ()) + self.upper
        lo = ((tuple(lower),) if lower is not None else ()) + self.lower
        return FoxWrightParams(up, lo)

    def shifted(self, tau: float) -> "FoxWrightParams":
        """Shift every ``a_i`` and ``b_j`` by ``tau`` times its weight."""
        return FoxWrightParams(
            [(a + tau * A, A) for a, A in self.upper],
            [(b + tau * B, B) for b, B in self.lower],
        )


# ---------------------------------------------------------------- primitives


def log_gamma(x: float) -> float:
    """``log|Gamma(x)|``; raises :class:`DomainError` at the poles."""
    x = float(x)
    if _is_nonpos_int(x):
        raise DomainError(f"Gamma has a pole at {x}")
    return math.lgamma(x)


def pochhammer(tau: float, k: int) -> float:
    """Rising factorial ``(tau)_k = Gamma(tau + k) / Gamma(tau)``.

    Iterated product for small ``k``, log-gamma ratio otherwise.
    """
    k = int(k)
    if k < 0:
        raise DomainError("k must be a non-negative integer")
    tau = float(tau)
    if k <= 32:
        return math.prod(tau + i for i in range(k)) if k else 1.0
    if _is_nonpos_int(tau):
        # product passes through zero
        return 0.0 if k > -tau else math.prod(tau + i for i in range(k))
    s = gammasgn(tau + k) * gammasgn(tau)
    lg = math.lgamma(tau + k) - math.lgamma(tau)
    if lg > _LOG_MAX:
        raise SeriesOverflowError(k, f"pochhammer({tau}, {k}) overflows")
    return float(s * math.exp(lg))


def gen_binom(lam: float, mu: float) -> float:
    """Generalized binomial ``Gamma(lam+1) / (Gamma(mu+1) Gamma(lam-mu+1))``.

    Vanishes when ``lam - mu`` is a negative integer, unless ``lam`` is a
    negative integer too (then the limit of the Gamma ratio is used).
    """
    lam, mu = float(lam), float(mu)
    if _is_nonpos_int(mu + 1):
        return 0.0
    if mu == round(mu) and 0 <= mu <= 64:
        # falling factorial; avoids lgamma cancellation near negative integers
        n = int(mu)
        return math.prod((lam - i) / (i + 1) for i in range(n))
    if _is_nonpos_int(lam + 1):
        if _is_nonpos_int(lam - mu + 1):
            # Gamma(lam+1)/Gamma(lam-mu+1) -> (-1)^mu Gamma(mu-lam)/Gamma(-lam)
            if mu != round(mu):
                raise DomainError("generalized binomial undefined for these arguments")
            return (-1.0) ** int(mu) * _gamma_ratio(mu - lam, -lam) / math.gamma(mu + 1)
        raise DomainError(f"Gamma(lam+1) has a pole at lam={lam}")
    if _is_nonpos_int(lam - mu + 1):
        return 0.0
    s = gammasgn(lam + 1) * gammasgn(mu + 1) * gammasgn(lam - mu + 1)
    return float(s * math.exp(math.lgamma(lam + 1) - math.lgamma(mu + 1) - math.lgamma(lam - mu + 1)))


def _gamma_ratio(x: float, y: float) -> float:
    return float(gammasgn(x) * gammasgn(y) * math.exp(math.lgamma(x) - math.lgamma(y)))


def binom_coeff_shifted(lam: float, k: int) -> float:
    """``binom(lam + k - 1, k) = (lam)_k / k!`` by forward recurrence."""
    k = int(k)
    if k < 0:
        raise DomainError("k must be a non-negative integer")
    c = 1.0
    for j in range(k):
        c *= (lam + j) / (j + 1)
    return c


def binom_shifted_coeffs(lam: float, n: int) -> np.ndarray:
    """Array of ``binom(lam + k - 1, k)`` for ``k = 0..n-1``."""
    j = np.arange(n - 1, dtype=float)
    return np.concatenate(([1.0], np.cumprod((lam + j) / (j + 1))))[:n]


# ------------------------------------------------------- convergence analysis


def convergence_params(params: FoxWrightParams) -> ConvergenceInfo:
    """Return ``Delta``, ``rho``, ``mu`` and ``min a/A`` for ``params``."""
    delta = sum(B for _, B in params.lower) - sum(A for _, A in params.upper)
    rho = 1.0
    for _, A in params.upper:
        rho *= A ** (-A) if A > 0 else 1.0
    for _, B in params.lower:
        rho *= B**B if B > 0 else 1.0
    mu = sum(b for b, _ in params.lower) - sum(a for a, _ in params.upper) + (params.p - params.q) / 2
    gmin = None
    if params.upper and all(A > 0 for _, A in params.upper):
        gmin = min(a / A for a, A in params.upper)
    return ConvergenceInfo(delta=delta, rho=rho, mu=mu, gamma_min=gmin)


_EDGE = 1e-12


def check_convergence(info: ConvergenceInfo, z: complex) -> None:
    """Raise :class:`DivergenceError` if the series diverges at ``z``."""
    az = abs(z)
    if az == 0 or info.delta > -1 + _EDGE:
        return
    if info.delta < -1 - _EDGE:
        raise DivergenceError(f"Delta = {info.delta:.6g} < -1: series diverges for z != 0")
    if az < info.rho * (1 - _EDGE):
        return
    if az <= info.rho * (1 + _EDGE):
        if info.mu > 0.5:
            return
        raise DivergenceError(f"|z| = rho = {info.rho:.6g} requires mu > 1/2, got mu = {info.mu:.6g}")
    raise DivergenceError(f"|z| = {az:.6g} exceeds the radius rho = {info.rho:.6g}")


# ---------------------------------------------------------------- summation


def sum_series(
    terms: Callable[[np.ndarray], np.ndarray],
    policy: TruncationPolicy = DEFAULT_POLICY,
    *,
    first_block: int = 32,
    max_block: int = 1024,
) -> SeriesResult:
    """Sum ``terms(k)`` for ``k = 0, 1, ...`` under ``policy``.

    ``terms`` receives contiguous, increasing blocks of indices and returns
    the corresponding real or complex term values.
    """
    chunks: list[np.ndarray] = []
    partial = 0.0
    k0 = 0
    block = first_block
    run = 0
    prev = None
    tail = math.inf
    while k0 < policy.max_terms:
        n = min(block, policy.max_terms - k0)
        t = np.asarray(terms(np.arange(k0, k0 + n)))
        if t.shape != (n,):
            raise ValueError("term function returned the wrong shape")
        if not np.all(np.isfinite(t)):
            bad = int(np.flatnonzero(~np.isfinite(t))[0])
            raise SeriesOverflowError(k0 + bad)
        sums = partial + np.cumsum(t)
        at = np.abs(t)
        small = at <= policy.rel_tol * np.abs(sums)
        for i in range(n):
            run = run + 1 if small[i] else 0
            cur = at[i]
            before = prev
            prev = cur
            if run < policy.consecutive_small:
                continue
            if cur == 0.0:
                tail = 0.0
            elif before is None or before == 0.0:
                continue
            else:
                r = cur / before
                tail = cur * r / (1.0 - r) if r < 1.0 else math.inf
            if tail <= policy.rel_tol * max(1.0, abs(sums[i])):
                chunks.append(t[: i + 1])
                return SeriesResult(_fsum(chunks), k0 + i + 1, float(tail), True, _abs_sum(chunks))
        chunks.append(t)
        partial = sums[-1]
        k0 += n
        block = min(2 * block, max_block)
    tail = math.inf
    allt = np.concatenate(chunks) if chunks else np.zeros(0)
    if allt.size >= 2:
        a, b = abs(allt[-2]), abs(allt[-1])
        r = b / a if a else (0.0 if b == 0 else math.inf)
        tail = b * r / (1 - r) if r < 1 else math.inf
    return SeriesResult(_fsum(chunks), k0, float(tail), False, _abs_sum(chunks))


def _abs_sum(chunks: Sequence[np.ndarray]) -> float:
    return math.fsum(np.abs(np.concatenate(chunks))) if chunks else 0.0


def _fsum(chunks: Sequence[np.ndarray]):
    if not chunks:
        return 0.0
    allt = np.concatenate(chunks)
    if np.iscomplexobj(allt):
        return complex(math.fsum(allt.real), math.fsum(allt.imag))
    return math.fsum(allt)


# -------------------------------------------------------------- Fox-Wright


def _log_terms(upper, lower, ks: np.ndarray):
    """Log-magnitude and sign of ``prod Gamma(a+kA) / prod Gamma(b+kB) / k!``."""
    ks = np.asarray(ks, dtype=float)
    logabs = -gammaln(ks + 1)
    sign = np.ones_like(ks)
    for a, A in upper:
        arg = a + ks * A
        if np.any(_is_nonpos_int(arg)):
            raise DomainError(f"upper pair ({a}, {A}) meets a pole of Gamma")
        logabs = logabs + gammaln(arg)
        sign = sign * gammasgn(arg)
    for b, B in lower:
        arg = b + ks * B
        if np.any(_is_nonpos_int(arg)):
            raise DomainError(f"lower pair ({b}, {B}) meets a pole of Gamma")
        logabs = logabs - gammaln(arg)
        sign = sign * gammasgn(arg)
    return logabs, sign


def fox_wright_terms(params: FoxWrightParams, z: float, n: int, *, log_scale: float = 0.0) -> np.ndarray:
    """First ``n`` terms of the Fox-Wright series at ``z``."""
    return _fw_block(params.upper, params.lower, float(z), log_scale)(np.arange(n))


def fox_wright_term_ratio(params: FoxWrightParams, z: float, k: int) -> float:
    """``term(k+1) / term(k)`` from per-parameter Gamma-ratio recurrences."""
    k = int(k)
    r = float(z) / (k + 1)
    for a, A in params.upper:
        r *= _gamma_ratio(a + (k + 1) * A, a + k * A)
    for b, B in params.lower:
        r /= _gamma_ratio(b + (k + 1) * B, b + k * B)
    return r


def _fw_block(upper, lower, z: float, log_scale: float):
    az = abs(z)
    lz = math.log(az) if az > 0 else -math.inf
    sz = -1.0 if z < 0 else 1.0

    def terms(ks):
        logabs, sign = _log_terms(upper, lower, ks)
        with np.errstate(invalid="ignore"):
            logabs = logabs + np.where(ks == 0, 0.0, ks * lz) + log_scale
        if np.any(logabs > _LOG_MAX):
            raise SeriesOverflowError(int(ks[np.argmax(logabs > _LOG_MAX)]))
        if sz < 0:
            sign = sign * np.where(ks % 2 == 1, -1.0, 1.0)
        return sign * np.exp(logabs)

    return terms


PRECISIONS = ("auto", "double", "extended")
_EPS = float(np.finfo(float).eps)


def _term_log_size(upper, lower, z: float, log_scale: float, k: int) -> float:
    """Sum of the magnitudes of the log-components of term ``k``; scales its rounding error."""
    s = math.lgamma(k + 1) + k * abs(math.log(abs(z))) if z != 0 else 0.0
    for a, A in upper:
        s += abs(float(gammaln(a + k * A)))
    for b, B in lower:
        s += abs(float(gammaln(b + k * B)))
    return s + abs(log_scale)


def _mp_rising(mp, x, A):
    """``Gamma(x + A) / Gamma(x)`` in working precision."""
    if A == 0:
        return mp.mpf(1)
    if float(A).is_integer() and 0 < A <= 16:
        r = mp.mpf(1)
        for j in range(int(A)):
            r *= x + j
        return r
    return mp.rf(x, A)


def _fw_extended(upper, lower, z: float, log_scale: float, n: int, digits: int, policy: TruncationPolicy):
    """Fox-Wright series summed in ``digits``-digit arithmetic.

    At least ``n`` terms are summed; summation then continues until the
    stopping rule of ``policy`` holds against the extended-precision partial
    sum (the double-precision sum it replaces may be dominated by rounding).

    Returns
    -------
    value, terms_used, tail_estimate, converged
    """
    import mpmath as mp

    with mp.workdps(digits):
        lt = mp.mpf(log_scale)
        sign = 1
        for a, A in upper:
            lt += mp.loggamma(mp.mpf(a)).real
            sign *= int(gammasgn(a))
        for b, B in lower:
            lt -= mp.loggamma(mp.mpf(b)).real
            sign *= int(gammasgn(b))
        term = sign * mp.exp(lt)
        zz = mp.mpf(z)
        acc = mp.mpf(0)
        run = 0
        prev = None
        k = 0
        while k < policy.max_terms:
            acc += term
            cur = abs(term)
            run = run + 1 if cur <= policy.rel_tol * abs(acc) else 0
            if k + 1 >= n and run >= policy.consecutive_small:
                if cur == 0:
                    return float(acc), k + 1, 0.0, True
                if prev:
                    r = cur / prev
                    tail = cur * r / (1 - r) if r < 1 else mp.inf
                    if tail <= policy.rel_tol * max(1, abs(acc)):
                        return float(acc), k + 1, float(tail), True
            prev = cur
            r = zz / (k + 1)
            for a, A in upper:
                r *= _mp_rising(mp, mp.mpf(a) + k * mp.mpf(A), A)
            for b, B in lower:
                r /= _mp_rising(mp, mp.mpf(b) + k * mp.mpf(B), B)
            term *= r
            k += 1
        return float(acc), k, float(abs(term)), False


def fox_wright(
    params: FoxWrightParams,
    z: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
    *,
    log_scale: float = 0.0,
    precision: str = "auto",
) -> SeriesResult:
    """Evaluate ``pPsi_q[params | z]`` for real ``z``.

    Parameters
    ----------
    params : FoxWrightParams
    z : float
    policy : TruncationPolicy
    log_scale : float, optional
        Every term is multiplied by ``exp(log_scale)``; used to evaluate
        scaled values whose unscaled terms would overflow.
    precision : {"auto", "double", "extended"}
        Terms are computed from log-Gamma values in double precision, which
        carries a relative error of order ``eps * |log term|`` per term.  On
        the negative axis the sum can cancel heavily and amplify that error;
        ``"auto"`` then re-sums the same truncated series in extended
        precision (mpmath) whenever the estimated rounding error exceeds
        ``policy.rel_tol * max(1, |value|)``.

    Returns
    -------
    SeriesResult
        ``rounding_estimate`` bounds the floating-point error of ``value``.

    Raises
    ------
    DivergenceError
        If ``z`` lies outside the region of convergence.
    SeriesOverflowError
        If a scaled term overflows.
    """
    if precision not in PRECISIONS:
        raise DomainError(f"precision must be one of {PRECISIONS}")
    if isinstance(z, complex):
        if z.imag != 0:
            raise DomainError("complex arguments are not supported")
        z = z.real
    z = float(z)
    check_convergence(convergence_params(params), z)
    res = sum_series(_fw_block(params.upper, params.lower, z, log_scale), policy)
    size = _term_log_size(params.upper, params.lower, z, log_scale, res.terms_used)
    delta = _EPS * (8.0 + size)
    value = res.value
    excess = max(res.abs_sum - abs(value), 0.0)
    rounding = delta * res.abs_sum
    if precision == "extended" or (precision == "auto" and delta * excess > policy.rel_tol * max(1.0, abs(value))):
        kappa = res.abs_sum / abs(value) if value != 0 else 1e30
        digits = 20 + math.ceil(math.log10(max(kappa, 1.0) * (8.0 + size)))
        value, used, tail, ok = _fw_extended(params.upper, params.lower, z, log_scale, res.terms_used, digits, policy)
        return SeriesResult(value, used, tail, ok, res.abs_sum, _EPS * abs(value))
    return SeriesResult(value, res.terms_used, res.tail_estimate, res.converged, res.abs_sum, rounding)


def fox_wright_shifted(
    params: FoxWrightParams,
    tau: float,
    z: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> SeriesResult:
    """Fox-Wright function with every ``a_i``, ``b_j`` shifted by ``tau`` times its weight."""
    return fox_wright(params.shifted(tau), z, policy)


def fox_wright_normalized(
    sigma: float,
    params: FoxWrightParams,
    z: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
    *,
    log_scale: float = 0.0,
    precision: str = "auto",
) -> SeriesResult:
    """``(1/Gamma(sigma)) * p+1Psi_q[(sigma, 1), params | z]`` for ``sigma > 0``.

    Equivalently ``sum_k (sigma)_k prod Gamma(a+kA)/prod Gamma(b+kB) z^k/k!``;
    the normalization is applied per term so large ``sigma`` does not overflow.
    """
    if not sigma > 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    return fox_wright(params.prepend(upper=(sigma, 1.0)), z, policy, log_scale=log_scale - math.lgamma(sigma), precision=precision)


# ------------------------------------------------------------------ pFq


def pfq(
    upper: Iterable[float],
    lower: Iterable[float],
    z: float | complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> SeriesResult:
    """Generalized hypergeometric ``pFq(upper; lower; z)``.

    Terminating series (an upper parameter that is a non-positive integer)
    are accepted for any ``z``.
    """
    a = np.asarray(list(upper), dtype=float)
    b = np.asarray(list(lower), dtype=float)
    if np.any(_is_nonpos_int(b)):
        raise DomainError("lower parameter is a non-positive integer")
    p, q = a.size, b.size
    terminating = bool(np.any(_is_nonpos_int(a)))
    az = abs(z)
    if not terminating and az > 0:
        if p == q + 1:
            if az > 1 + _EDGE or (az >= 1 - _EDGE and not (b.sum() - a.sum() > 0)):
                raise DivergenceError(f"pFq with p = q + 1 diverges at |z| = {az:.6g}")
        elif p > q + 1:
            raise DivergenceError("pFq with p > q + 1 diverges for z != 0")
    if p == 1 and q == 1 and not terminating and not isinstance(z, complex) and z < -1:
        # Kummer's transformation avoids cancellation on the negative axis
        r = pfq([b[0] - a[0]], [b[0]], -z, policy)
        return SeriesResult(math.exp(z) * r.value, r.terms_used, math.exp(z) * r.tail_estimate, r.converged)
    cplx = isinstance(z, complex)
    lz = np.log(complex(z)) if cplx else None
    state = {"log": 0.0, "sign": 1.0, "phase": 0.0}

    def terms(ks):
        # log|ratio(k)| with ratio(k) = term(k+1)/term(k), k = ks[0]-1 .. ks[-1]-1
        kk = ks.astype(float)
        prev = kk - 1
        with np.errstate(divide="ignore", invalid="ignore"):
            lr = np.log(np.abs(np.prod(a[:, None] + prev[None, :], axis=0))) if p else np.zeros_like(kk)
            lr = lr - (np.log(np.abs(np.prod(b[:, None] + prev[None, :], axis=0))) if q else 0.0)
            lr = lr - np.log(kk)
        sr = np.sign(np.prod(a[:, None] + prev[None, :], axis=0)) if p else np.ones_like(kk)
        if q:
            sr = sr * np.sign(np.prod(b[:, None] + prev[None, :], axis=0))
        if ks[0] == 0:
            lr[0] = 0.0
            sr[0] = 1.0
        if not cplx:
            zl = math.log(az) if az > 0 else -math.inf
            with np.errstate(invalid="ignore"):
                lr = lr + np.where(kk == 0, 0.0, zl)
            if z < 0:
                sr = sr * np.where(kk == 0, 1.0, -1.0)
        with np.errstate(invalid="ignore"):
            logs = state["log"] + np.cumsum(lr)
        signs = state["sign"] * np.cumprod(sr)
        state["log"] = logs[-1]
        state["sign"] = signs[-1]
        if np.any(logs > _LOG_MAX):
            raise SeriesOverflowError(int(ks[np.argmax(logs > _LOG_MAX)]))
        vals = signs * np.exp(logs)
        if cplx:
            vals = vals * np.exp(kk * lz) if az > 0 else np.where(kk == 0, vals, 0.0).astype(complex)
        return np.where(np.isnan(vals), 0.0, vals)

    return sum_series(terms, policy)
