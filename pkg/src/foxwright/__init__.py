"""Fox-Wright, Mathieu-type and Hurwitz-Lerch special functions.

The package evaluates Fox-Wright generalized hypergeometric series, related
Laplace-type integrals, the Hurwitz-Lerch zeta family and Mathieu-type series,
and numerically verifies a catalogue of generating-function identities that
connect them.
"""
from __future__ import annotations

from .errors import AccuracyError, DivergenceError, DomainError, SeriesOverflowError
from .series import (
    ConvergenceInfo,
    FoxWrightParams,
    SeriesResult,
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
from .quadrature import (
    KernelPQ11,
    QuadratureSpec,
    finite_laplace,
    h_kernel_pq11,
    integrate_finite,
    integrate_semi_infinite,
    theorem2_integral_rhs,
)
from .zeta import (
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
from .mathieu import MathieuSpec, mathieu_integral_form, mathieu_series

__version__ = "0.1.0"
