"""Double-exponential quadrature and the p = q = 1 representing kernel.

Finite intervals use tanh-sinh, the half line uses exp-sinh.  Integrands are
called with numpy arrays.  On finite intervals they may optionally take the
exact distances to both endpoints, ``f(x, dlo, dhi)``, which keeps algebraic
endpoint singularities accurate when ``x`` rounds to an endpoint.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import expit

from .errors import AccuracyError, DomainError
from .series import FoxWrightParams

_TINY = 1e-290


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy request and endpoint behaviour for one integral.

    ``left_exponent`` / ``right_exponent`` declare the algebraic order ``e``
    of the integrand at each endpoint (``f ~ d**e``, ``e > -1``); they decide
    how far the double-exponential grid must reach into the endpoint.
    """

    abs_tol: float = 1e-15
    rel_tol: float = 1e-12
    max_levels: int = 10
    left_exponent: float = 0.0
    right_exponent: float = 0.0

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0 or (self.abs_tol == 0 and self.rel_tol == 0):
            raise ValueError("tolerances must be non-negative and not both zero")
        for e in (self.left_exponent, self.right_exponent):
            if not e > -1:
                raise DomainError(f"endpoint exponent {e} <= -1: integral diverges")

    def with_exponents(self, left: float, right: float = 0.0) -> "QuadratureSpec":
        return QuadratureSpec(self.abs_tol, self.rel_tol, self.max_levels, left, right)


DEFAULT_QUAD = QuadratureSpec()


def _target(spec: QuadratureSpec) -> float:
    return max(min(spec.abs_tol if spec.abs_tol > 0 else 1.0, spec.rel_tol if spec.rel_tol > 0 else 1.0) * 1e-3, 1e-300)


def _reach(e: float, spec: QuadratureSpec) -> float:
    """Relative endpoint distance below which the neglected mass is negligible."""
    return max(_target(spec) ** (1.0 / (e + 1.0)), _TINY)


def _levels(eval_sum: Callable[[float, bool], tuple[complex, float]], spec: QuadratureSpec, what: str):
    """Refine a trapezoidal sum until successive levels agree."""
    h = 0.5
    total, trunc = eval_sum(h, False)
    est = total * h
    prev = None
    for _ in range(spec.max_levels):
        h /= 2
        add, _ = eval_sum(h, True)
        total = total + add
        new = total * h
        err = abs(new - est)
        if prev is not None or err == 0:
            err_full = err + trunc
            if err_full <= max(spec.abs_tol, spec.rel_tol * abs(new)):
                return new, err_full
        prev, est = est, new
    raise AccuracyError(f"{what}: tolerance not met after {spec.max_levels} levels", est, err + trunc)


def _finish(value):
    value = complex(value)
    return value.real if value.imag == 0 else value


def integrate_finite(
    f: Callable,
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
    *,
    distances: bool = False,
    return_error: bool = False,
):
    """Integrate ``f`` over ``[lo, hi]`` by tanh-sinh quadrature.

    Parameters
    ----------
    f : callable
        ``f(x)``, or ``f(x, dlo, dhi)`` when ``distances`` is true, where
        ``dlo = x - lo`` and ``dhi = hi - x`` are computed without cancellation.
    lo, hi : float
        Finite bounds with ``lo < hi``.
    spec : QuadratureSpec
    return_error : bool
        Also return the error estimate.

    Raises
    ------
    AccuracyError
        If the tolerance is not reached within ``spec.max_levels`` refinements.
    """
    lo, hi = float(lo), float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError("need finite lo < hi")
    width = hi - lo
    half = width / 2
    t_lo = -math.asinh(math.log(1.0 / _reach(spec.left_exponent, spec)) / math.pi)
    t_hi = math.asinh(math.log(1.0 / _reach(spec.right_exponent, spec)) / math.pi)

    def call(t):
        u2 = math.pi * np.sinh(t)
        dlo = width * expit(u2)
        dhi = width * expit(-u2)
        x = np.where(t < 0, lo + dlo, hi - dhi)
        w = half * math.pi * np.cosh(t) * 2.0 * expit(u2) * expit(-u2)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            fx = f(x, dlo, dhi) if distances else f(x)
        return w, np.broadcast_to(fx, t.shape)

    def eval_sum(h, odd_only):
        j0 = math.floor(t_lo / h)
        j1 = math.ceil(t_hi / h)
        j = np.arange(j0, j1 + 1)
        if odd_only:
            j = j[j % 2 != 0]
        t = j * h
        w, fx = call(t)
        # nodes whose weight underflowed carry no mass (f may be inf there)
        with np.errstate(invalid="ignore", over="ignore"):
            g = np.where(w > 0, w * fx, 0.0)
        if not np.all(np.isfinite(g)):
            raise AccuracyError("integrand is not finite at a quadrature node", None)
        trunc = 0.0
        if not odd_only:
            # mass beyond the outermost nodes, f ~ C d^e  =>  int_0^d f ~ d f(d)/(e+1)
            tt = np.array([j0 * h, j1 * h])
            u2 = math.pi * np.sinh(tt)
            d = width * expit(np.array([u2[0], -u2[1]]))
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                _, fe = call(tt)
                ends = np.where(d > 0, np.abs(fe) * d, 0.0)
            trunc = float(ends[0] / (spec.left_exponent + 1) + ends[1] / (spec.right_exponent + 1))
        return np.sum(g), trunc

    value, err = _levels(eval_sum, spec, "integrate_finite")
    value = _finish(value)
    return (value, err) if return_error else value


def integrate_semi_infinite(
    f: Callable,
    spec: QuadratureSpec = DEFAULT_QUAD,
    *,
    scale: float = 1.0,
    return_error: bool = False,
):
    """Integrate ``f`` over ``(0, inf)`` by exp-sinh quadrature.

    ``f`` must decay at least exponentially.  ``scale`` is the length scale on
    which ``f`` varies (e.g. ``1/a`` for ``exp(-a x)``); ``spec.left_exponent``
    is the algebraic order of ``f`` at the origin.
    """
    if not scale > 0:
        raise DomainError("scale must be positive")
    # x = scale * exp(pi/2 sinh t)
    lx = math.log(1.0 / _reach(spec.left_exponent, spec))
    t_lo = -math.asinh(2 * lx / math.pi)

    def call(t):
        x = scale * np.exp(0.5 * math.pi * np.sinh(t))
        w = 0.5 * math.pi * np.cosh(t) * x
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            fx = np.broadcast_to(f(x), t.shape)
        return w, fx

    # right cut-off: walk out until the weighted integrand is negligible
    t_hi = 0.0
    peak = 0.0
    for t in np.arange(-2.0, 6.01, 0.125):
        w, fx = call(np.array([t]))
        g = abs(w[0] * fx[0])
        if not math.isfinite(g):
            break
        peak = max(peak, g)
        t_hi = t
        if t > 0 and g <= 1e-30 * peak:
            break

    def eval_sum(h, odd_only):
        j = np.arange(math.floor(t_lo / h), math.ceil(t_hi / h) + 1)
        if odd_only:
            j = j[j % 2 != 0]
        w, fx = call(j * h)
        with np.errstate(invalid="ignore", over="ignore"):
            g = np.where(w > 0, w * fx, 0.0)
        if not np.all(np.isfinite(g)):
            raise AccuracyError("integrand is not finite at a quadrature node", None)
        trunc = 0.0
        if not odd_only:
            t0 = math.floor(t_lo / h) * h
            w0, f0 = call(np.array([t0]))
            x0 = scale * math.exp(0.5 * math.pi * math.sinh(t0))
            trunc = float(abs(f0[0]) * x0 / (spec.left_exponent + 1))
        return np.sum(g), trunc

    value, err = _levels(eval_sum, spec, "integrate_semi_infinite")
    value = _finish(value)
    return (value, err) if return_error else value


def finite_laplace(
    f: Callable,
    T: float,
    s: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
    *,
    distances: bool = False,
):
    """Finite Laplace transform ``int_0^T exp(-s x) f(x) dx``."""
    if not T > 0:
        raise DomainError("T must be positive")
    if distances:
        return integrate_finite(lambda x, dl, dh: np.exp(-s * x) * f(x, dl, dh), 0.0, T, spec, distances=True)
    return integrate_finite(lambda x: np.exp(-s * x) * f(x), 0.0, T, spec)


# ------------------------------------------------------------ p = q = 1 kernel


@dataclass(frozen=True)
class KernelPQ11:
    """Representing kernel of ``1Psi1[(alpha, A); (beta, A) | z]``.

    ``H(x) = x**(alpha/A) (1 - x**(1/A))**(beta-alpha-1) / (A Gamma(beta-alpha))``
    on ``(0, 1)``, so that ``1Psi1 = int_0^1 exp(z x) H(x) dx / x``.
    """

    A: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError("A must be positive")
        if not self.beta > self.alpha:
            raise DomainError("kernel needs beta > alpha")
        if not self.alpha > 0:
            raise DomainError("kernel needs alpha > 0")

    @classmethod
    def from_params(cls, params: FoxWrightParams) -> "KernelPQ11":
        if params.p != 1 or params.q != 1:
            raise DomainError("kernel is defined for p = q = 1 only")
        (a, A), (b, B) = params.upper[0], params.lower[0]
        if A != B:
            raise DomainError("kernel needs equal weights A = B")
        return cls(A, a, b)

    @property
    def log_norm(self) -> float:
        return -math.log(self.A) - math.lgamma(self.beta - self.alpha)

    def __call__(self, x, dhi=None):
        return h_kernel_pq11(self, x, dhi)


def h_kernel_pq11(kernel: KernelPQ11, x, dhi=None):
    """Evaluate the kernel at ``x`` in ``(0, 1)``.

    ``dhi = 1 - x`` may be passed to keep accuracy near ``x = 1``.
    """
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)) and dhi is None:
        raise DomainError("kernel argument must lie in (0, 1)")
    if dhi is None:
        dhi = 1.0 - x
    dhi = np.asarray(dhi, dtype=float)
    if np.any(dhi <= 0) or np.any(x <= 0):
        raise DomainError("kernel argument must lie in (0, 1)")
    logx = np.where(dhi < 0.5, np.log1p(-np.minimum(dhi, 0.5)), np.log(x))
    one_minus = -np.expm1(logx / kernel.A)
    k = kernel
    out = np.exp((k.alpha / k.A) * logx + (k.beta - k.alpha - 1) * np.log(one_minus) + k.log_norm)
    return out if out.ndim else float(out)


def theorem2_integral_rhs(
    kernel: KernelPQ11 | FoxWrightParams,
    lam: float,
    tau: float,
    t: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """``(1 - t)**-lam * int_0^1 x**(tau-1) (1 - x)**-lam H(x) dx`` for ``0 < t < 1``.

    This is the closed form of
    ``sum_k binom(lam+k-1, k) 2Psi1-normalized[(lam+k,1),(alpha+tau A, A);(beta+tau A, A) | 1-t] t^k``.
    """
    if isinstance(kernel, FoxWrightParams):
        kernel = KernelPQ11.from_params(kernel)
    k = kernel
    if not 0 < t < 1:
        raise DomainError("need 0 < t < 1")
    if not lam > 0:
        raise DomainError("need lam > 0")
    left = tau - 1 + k.alpha / k.A
    right = k.beta - k.alpha - 1 - lam
    if not left > -1:
        raise DomainError("need tau + alpha/A > 0 for integrability at 0")
    if not right > -1:
        raise DomainError("need lam < beta - alpha for integrability at 1")

    def g(x, dlo, dhi):
        return dlo ** (tau - 1) * dhi ** (-lam) * h_kernel_pq11(k, dlo, dhi)

    val = integrate_finite(g, 0.0, 1.0, spec.with_exponents(left, right), distances=True)
    return float(val) * (1.0 - t) ** (-lam)
