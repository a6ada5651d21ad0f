"""Registry of every catalogued identity, inequality chain and closed form."""
from __future__ import annotations

import math

from . import checks as C
from . import grids as G
from .report import CHAIN, DOUBLE_SERIES, EQUALITY, IdentityCase, Tolerance

# default tolerance classes
SERIES = Tolerance(abs=1e-15, rel=1e-9)
QUAD = Tolerance(abs=1e-15, rel=1e-7)
INEQ = Tolerance(abs=1e-10, rel=1e-10)
TIGHT = Tolerance(abs=1e-15, rel=1e-12)
THM23 = Tolerance(abs=1e-15, rel=1e-6)
MATHIEU = Tolerance(abs=1e-15, rel=1e-8)
LERCH = Tolerance(abs=1e-15, rel=1e-8)
CLOSED = Tolerance(abs=1e-9, rel=1e-15)

# anchor tags every in-scope statement must be covered by
REQUIRED_ANCHORS = (
    "eq-1.1", "eq-1.2", "eq-1.3", "eq-1.4", "eq-1.5", "eq-1.6", "eq-1.7",
    "generalized-binomial", "finite-laplace",
    "eq-2.2", "eq-2.3", "eq-2.8", "eq-2.9", "eq-2.10", "thm1-corollary",
    "eq-ii", "eq-iii", "eq-k!k", "eq-2.29", "eq-2.38", "eq-2.39", "eq-2.40",
    "mathieu-definition", "mathieu-integral", "eq-3.2", "eq-3.4",
    "eq-3.5", "eq-3.5-m2", "eq-3.5-m3", "eq-3.5-m4", "zeta3-remark", "zeta4-remark",
    "extended-lerch-definition", "extended-lerch-integral", "eq-3.8", "eq-3.9", "eq-3.10",
    "eq-3.11", "eq-3.12", "hurwitz-lerch", "lipschitz-lerch", "lerch-zeta", "polylog",
    "polylog-log", "polylog-2log2", "polylog-pi2", "polylog-li3",
)


def _ok(*conds):
    for cond, why in conds:
        if not cond:
            return why
    return None


def _pairs(p):
    return [tuple(x) for x in p]


# ------------------------------------------------------------------ hypotheses


def _h_fw(p):
    return _ok((all(A > 0 for _, A in p["upper"]) and all(B > 0 for _, B in p["lower"]), "weights must be positive"))


def _h_bridge(p):
    return _ok((all(b > 0 for b in p["b"]), "lower parameters must be positive"))


def _h_kernel(p):
    return _ok((p["A"] > 0, "A > 0"), (p["beta"] > p["alpha"] > 0, "beta > alpha > 0"))


def _h_finite_laplace(p):
    return _ok((p["c"] > 0 and p["s"] > 0 and p["T"] > 0, "c, s, T > 0"))


def _h_binomial(p):
    return _ok((p["lam"] > 0, "lambda > 0"), (abs(p["t"]) < 1, "|t| < 1"))


def _h_corollary(p):
    return _ok(
        (p["beta"] > p["alpha"] >= p["A"] > 0, "beta > alpha >= A > 0"),
        (abs(p["t"]) < 1, "|t| < 1"),
        (p["lam"] > 0, "lambda > 0"),
    )


def _h_inequalities(p):
    A, al, be, t = p["A"], p["alpha"], p["beta"], p["t"]
    psi00, psi01 = C.luke_bounds(A, al, be) if be > al > 0 and A > 0 else (1.0, math.inf)
    return _ok(
        (A > 0 and be > al > 0, "mu = beta - alpha > 0"),
        (al / A >= 1, "gamma = alpha / A >= 1"),
        (0 < t < 1, "0 < t < 1"),
        (p["z"] > 0, "z > 0"),
        (p["lam"] > 0, "lambda > 0"),
        (psi01 / psi00 * t < 1, "Luke lower bound needs psi01 t < psi00"),
    )


def _h_thm23(tau_positive):
    def h(p):
        A, al, be, lam, tau, t = p["A"], p["alpha"], p["beta"], p["lam"], p["tau"], p["t"]
        return _ok(
            (A > 0 and al / A >= 1, "gamma = alpha / A >= 1"),
            (be - al > 1, "mu = beta - alpha > 1"),
            (0 < lam < min(1.0, be - al), "0 < lambda < min(1, beta - alpha)"),
            ((tau > 0) if tau_positive else (tau == 0), "tau > 0" if tau_positive else "tau = 0"),
            (0 < t < 1, "1 - t < rho = 1"),
        )

    return h


def _h_thm4(p):
    return _ok((p["lam"] > 0, "lambda > 0"), (abs(p["t"]) < 1, "|t| < 1"), (p["A"] > 0, "A > 0"))


def _h_eq239(p):
    return _ok((p["lam"] > 0, "lambda > 0"), (abs(p["t"]) < 1, "|t| < 1"))


def _h_eq240(p):
    a, b, z, t = p["a"], p["b"], p["z"], p["t"]
    # p = len(a) upper and q = len(b) + 1 lower parameters
    conv = len(a) <= len(b) + 2 and (len(a) < len(b) + 2 or (abs(z / (1 - t)) < 1 and abs(z) < 1))
    return _ok(
        (all(x > 0 for x in list(a) + list(b)), "a_i, b_j > 0"),
        (abs(t) < 1, "|t| < 1"),
        (conv, "reduced series must converge at z/(1-t)"),
    )


def _h_mathieu(p):
    beta = p.get("beta", 0.0)
    return _ok(
        (p["mu"] > 1, "mu > 1"),
        (p["alpha"] > 0 and p["r"] > 0, "alpha, r > 0"),
        (p["mu"] - beta / p["alpha"] >= 1.25, "mu - beta/alpha >= 1.25"),
    )


def _h_mathieu_gf(p):
    return _ok((p["mu"] > 1, "mu > 1"), (p["alpha"] > 0 and p["r"] > 0, "alpha, r > 0"), (0 < p["t"] < 1, "0 < t < 1"))


def _h_mathieu_cor(p):
    return _ok((p["mu"] > 1, "mu > 1"), (p["alpha"] > 0, "alpha > 0"), (-1 < p["t"] < 1, "|t| < 1"))


def _h_any(p):
    return None


def _h_lerch_def(p):
    return _ok((p.get("a", 1.0) > 0, "a > 0"))


def _h_lerch_gf(p):
    t, rho1 = p["t"], p["rho1"]
    z = abs(C.lerch_point_z(p))
    return _ok(
        (-1 < t < 0, "-1 < t < 0"),
        (p["lam1"] > 0 and rho1 > 0, "lambda1, rho1 > 0"),
        (p["a"] > 0 and p["s"] > 0, "a, s > 0"),
        (z < (1 + t) ** rho1, "|z| < (1+t)^rho1 (absolute convergence of the double series)"),
    )


def _h_double(p):
    t = p["t"]
    if p.get("mode") == "raw":
        conv = abs(p["z"]) * (1 + abs(t)) / (1 - abs(t)) < 1
        why = "|z|(1+|t|)/(1-|t|) < 1"
    else:
        conv = abs(p.get("z", 1.0)) <= 1
        why = "|z| <= 1"
    return _ok((-1 < t < 0, "-1 < t < 0"), (p["a"] > 0, "a > 0"), (p["s"] > 1 or abs(p.get("z", 1.0)) < 1, "s > 1 on |z| = 1"), (conv, why))


def _h_lipschitz_double(p):
    return _ok((-1 < p["t"] < 0, "-1 < t < 0"), (0 < p["a"] <= 1, "0 < a <= 1"), (p["s"] > 1, "s > 1"))


def _h_polylog(p):
    z, t = p.get("z", 0.5), p["t"]
    return _ok((-1 < t < 0, "-1 < t < 0"), (0 < z < 1, "0 < z < 1"), (z * (1 + abs(t)) / (1 - abs(t)) < 1, "|z|(1+|t|)/(1-|t|) < 1"))


# ------------------------------------------------------------------ evaluators


def _e_definition(p, ctx, cid, tol):
    return C.check_definition(_pairs(p["upper"]), _pairs(p["lower"]), p["z"], ctx, case_id=cid, tol=tol)


def _e_ratio(p, ctx, cid, tol):
    return C.check_ratio_asymptotics(_pairs(p["upper"]), _pairs(p["lower"]), p["z"], ctx, case_id=cid, tol=tol)


def _e_normalized(p, ctx, cid, tol):
    return C.check_normalized(p["sigma"], _pairs(p["upper"]), _pairs(p["lower"]), p["z"], ctx, case_id=cid, tol=tol)


def _e_bridge(p, ctx, cid, tol):
    return C.check_bridge(p["a"], p["b"], p["z"], ctx, case_id=cid, tol=tol)


def _e_measure(p, ctx, cid, tol):
    return C.check_representing_measure(p["A"], p["alpha"], p["beta"], p["z"], ctx, case_id=cid, tol=tol)


def _e_finite_laplace(p, ctx, cid, tol):
    return C.check_finite_laplace(p["c"], p["s"], p["T"], ctx, case_id=cid, tol=tol)


def _e_binomial(p, ctx, cid, tol):
    return C.check_binomial(p["lam"], p["t"], ctx, case_id=cid, tol=tol)


def _e_corollary(p, ctx, cid, tol):
    return C.check_thm1_corollary(p["A"], p["alpha"], p["beta"], p["lam"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_inequalities(p, ctx, cid, tol):
    return C.check_thm1_inequalities(p["A"], p["alpha"], p["beta"], p["lam"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_thm23(p, ctx, cid, tol):
    return C.check_thm2_thm3_integral(p["lam"], p["tau"], p["t"], p["A"], p["alpha"], p["beta"], ctx, case_id=cid, tol=tol)


def _e_thm4(p, ctx, cid, tol):
    return C.check_thm4_gf(p["lam"], p["A"], _pairs(p["upper"]), _pairs(p["lower"]), p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_eq238(p, ctx, cid, tol):
    return C.check_eq238(p["lam"], p["A"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_eq239(p, ctx, cid, tol):
    return C.check_eq239(p["lam"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_eq240(p, ctx, cid, tol):
    return C.check_eq240(p["a"], p["b"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_mathieu_def(p, ctx, cid, tol):
    return C.check_mathieu_definition(p["mu"], p["alpha"], p["r"], ctx, case_id=cid, tol=tol)


def _e_mathieu_int(p, ctx, cid, tol):
    return C.check_mathieu_integral(p["mu"], p["alpha"], p["beta"], p["r"], ctx, case_id=cid, tol=tol)


def _e_mathieu_gf(p, ctx, cid, tol):
    return C.check_mathieu_gf(p["mu"], p["alpha"], p["r"], p["t"], ctx, case_id=cid, tol=tol)


def _e_mathieu_cor(p, ctx, cid, tol):
    return C.check_mathieu_corollary(p["mu"], p["alpha"], p["t"], ctx, case_id=cid, tol=tol)


def _e_pi(p, ctx, cid, tol):
    return C.check_double_series_pi(p["m"], p["mu"], ctx, case_id=cid, tol=tol)


def _e_zeta(p, ctx, cid, tol):
    return C.check_zeta_value(p["which"], ctx, case_id=cid, tol=tol)


def _e_lerch_def(p, ctx, cid, tol):
    return C.check_lerch_definition(_pairs(p["lambdas"]), _pairs(p["mus"]), p["s"], p["a"], p["z"], ctx, case_id=cid, tol=tol)


def _e_lerch_int(p, ctx, cid, tol):
    return C.check_lerch_integral(_pairs(p["lambdas"]), _pairs(p["mus"]), p["s"], p["a"], p["z"], ctx, case_id=cid, tol=tol)


def _e_lerch_spec(p, ctx, cid, tol):
    return C.check_lerch_specialization(p["which"], p["s"], p.get("a", 1.0), p.get("z"), p.get("xi"), ctx, case_id=cid, tol=tol)


def _e_lerch_gf(p, ctx, cid, tol):
    return C.check_lerch_gf(p["lam1"], p["rho1"], _pairs(p["lambdas"]), _pairs(p["mus"]), p["s"], p["a"], p["z"], p["t"], ctx, case_id=cid, tol=tol)


def _e_lerch_cor(p, ctx, cid, tol):
    kw = {"xi": p["xi"], "r": p["r"]} if "xi" in p else {"z": p["z"]}
    return C.check_lerch_corollary(p["lam1"], p["rho1"], p["s"], p["a"], p["t"], ctx, case_id=cid, tol=tol, **kw)


def _e_double(p, ctx, cid, tol):
    return C.check_lerch_double_series(p["s"], p["a"], p["t"], ctx, z=p["z"], mode=p["mode"], case_id=cid, tol=tol)


def _e_lipschitz_double(p, ctx, cid, tol):
    return C.check_lerch_double_series(p["s"], p["a"], p["t"], ctx, xi=p["xi"], case_id=cid, tol=tol)


def _e_polylog(row):
    def e(p, ctx, cid, tol):
        return C.check_polylog_row(row, p["t"], ctx, z=p.get("z", 0.5), case_id=cid, tol=tol)

    return e


# -------------------------------------------------------------------- registry


def _case(cid, description, anchors, kind, tol, grid, hyp, fn):
    return IdentityCase(
        id=cid,
        description=description,
        anchors=tuple(anchors),
        kind=kind,
        tolerance=tol,
        default_grid=tuple(grid),
        hypotheses=hyp,
        evaluate=lambda point, ctx, _fn=fn, _id=cid, _tol=tol: _fn(point, ctx, _id, _tol),
    )


def _build() -> tuple[IdentityCase, ...]:
    E, D = EQUALITY, DOUBLE_SERIES
    cases = [
        _case("eq-1.1-definition", "Fox-Wright series: vectorized log-Gamma summation vs scalar Gamma-ratio recurrence",
              ["eq-1.1"], E, TIGHT, G.DEFINITION, _h_fw, _e_definition),
        _case("eq-1.2-1.3-convergence", "term ratio |T_{k+1}/T_k| k^(1+Delta) tends to |z|/rho",
              ["eq-1.2", "eq-1.3"], E, Tolerance(1e-15, 1e-6), G.RATIO, _h_fw, _e_ratio),
        _case("eq-1.4-normalized", "normalized (sigma, 1) Fox-Wright function vs explicit Pochhammer series",
              ["eq-1.4"], E, TIGHT, G.NORMALIZED, _h_fw, _e_normalized),
        _case("eq-1.6-bridge", "unit-weight Fox-Wright equals Gamma prefactor times pFq",
              ["eq-1.5", "eq-1.6"], E, TIGHT, G.BRIDGE, _h_bridge, _e_bridge),
        _case("eq-1.7-representing-measure", "1Psi1 as the exponential transform of its beta-type kernel over (0, 1)",
              ["eq-1.7"], E, QUAD, G.REPRESENTING_MEASURE, _h_kernel, _e_measure),
        _case("finite-laplace", "finite Laplace transform of x^(c-1) vs s^-c Gamma(c) P(c, sT)",
              ["finite-laplace"], E, QUAD, G.FINITE_LAPLACE, _h_finite_laplace, _e_finite_laplace),
        _case("eq-2.8-binomial", "sum binom(lambda+k-1, k) t^k = (1-t)^-lambda",
              ["eq-2.8", "generalized-binomial"], E, SERIES, G.BINOMIAL, _h_binomial, _e_binomial),
        _case("thm1-corollary-p1q1",
              "generating function at p = q = 1: double sum over k, n (index k+n in the Gamma ratio) vs "
              "Gamma(lambda) times the finite Laplace transform of x^-1 (1-tx)^-lambda H(x); "
              "kernel factor (1 - x^(1/A)), printed (1 - x) form reported in diagnostics",
              ["eq-2.2", "thm1-corollary"], E, QUAD, G.THM1_COROLLARY, _h_corollary, _e_corollary),
        _case("thm1-inequalities-p1q1",
              "Luke lower bound <= normalized 2Psi1 (sigma = lambda) <= generating function <= exp(rho z) normalized "
              "<= exp(rho z) Luke upper bound",
              ["eq-2.3", "eq-2.9", "eq-2.10"], CHAIN, INEQ, G.THM1_INEQUALITIES, _h_inequalities, _e_inequalities),
        _case("thm2-integral",
              "sum binom(lambda+k-1, k) normalized 2Psi1[(lambda+k,1),(alpha,A);(beta,A)|1-t] t^k vs "
              "(1-t)^-lambda int_0^1 x^-1 (1-x)^-lambda H(x) dx",
              ["eq-ii", "eq-iii"], E, THM23, G.THM2, _h_thm23(False), _e_thm23),
        _case("thm3-integral",
              "shifted parameters (alpha + tau A, beta + tau A): series vs "
              "(1-t)^-lambda int_0^1 x^(tau-1) (1-x)^-lambda H(x) dx",
              ["eq-k!k"], E, THM23, G.THM3, _h_thm23(True), _e_thm23),
        _case("thm4-gf", "sum pPsi_q[(lambda+k,A),...;(lambda,A),...|z] t^k/k! = (1-t)^-lambda p-1Psi_q-1[...|z/(1-t)^A]",
              ["eq-2.29"], E, SERIES, G.THM4, _h_thm4, _e_thm4),
        _case("eq-2.38", "sum 1Psi1[(lambda+k,A);(lambda,A)|z] t^k/k! = (1-t)^-lambda exp(z/(1-t)^A)",
              ["eq-2.38"], E, SERIES, G.EQ238, _h_thm4, _e_eq238),
        _case("eq-2.39", "sum 1F1(lambda+k; lambda; z) Gamma(lambda+k) t^k/k! = Gamma(lambda)(1-t)^-lambda exp(z/(1-t))",
              ["eq-2.39"], E, SERIES, G.EQ239, _h_eq239, _e_eq239),
        _case("eq-2.40",
              "hypergeometric form: shifted pFq summed against Gamma(a1+k) t^k/k!; the lower list is (a1, b2, ...)",
              ["eq-2.40"], E, SERIES, G.EQ240, _h_eq240, _e_eq240),
        _case("eq-3.1-mathieu-definition", "Mathieu-type series with beta = 0 and a_k = k^(1/alpha) equals 2 zeta(mu, 1+r^2)",
              ["mathieu-definition"], E, Tolerance(1e-15, 1e-10), G.MATHIEU_DEFINITION, _h_mathieu, _e_mathieu_def),
        _case("mathieu-integral-representation", "Mathieu-type series vs its Laplace-type integral with a 1Psi1 kernel",
              ["mathieu-integral"], E, QUAD, G.MATHIEU_INTEGRAL, _h_mathieu, _e_mathieu_int),
        _case("eq-3.2-mathieu-gf",
              "sum Gamma(mu+k) S_{mu+k}^{(alpha, k alpha)}(r) t^k/k! = 2 Gamma(mu) (1-t)^-mu zeta(mu, 1 + r^2/(1-t))",
              ["eq-3.2"], E, MATHIEU, G.MATHIEU_GF, _h_mathieu_gf, _e_mathieu_gf),
        _case("eq-3.4-mathieu-corollary", "generating function at r = sqrt(1-t): RHS 2 Gamma(mu)(1-t)^-mu zeta(mu, 2)",
              ["eq-3.4"], E, MATHIEU, G.MATHIEU_COROLLARY, _h_mathieu_cor, _e_mathieu_cor),
    ]
    for m in (2, 3, 4):
        cases.append(_case(
            f"eq-3.5-m{m}", f"sum_n sum_k (k+1) x_n^k/(1+{m}n)^2, x_n = ({m}-1)n/(1+{m}n), equals (pi^2-6)/6",
            ["eq-3.5", f"eq-3.5-m{m}"], D, CLOSED, [{"m": m, "mu": 2}], _h_any, _e_pi))
    cases.append(_case(
        "eq-3.5-mu3", "mu = 3 variant at t = 1 - 1/3 with weights binom(k+2, k): equals zeta(3) - 1; "
        "unnormalized weights (k+1)(k+2) reported in diagnostics",
        ["eq-3.5", "zeta3-remark"], D, CLOSED, [{"m": 3, "mu": 3}], _h_any, _e_pi))
    cases.append(_case(
        "eq-3.5-mu4", "mu = 4 variant at t = 1 - 1/4 with weights binom(k+3, k): equals (pi^4 - 90)/90",
        ["eq-3.5", "zeta4-remark"], D, CLOSED, [{"m": 4, "mu": 4}], _h_any, _e_pi))
    cases += [
        _case("zeta-remarks", "zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(2,2) = zeta(2) - 1, zeta(4,2) = (pi^4 - 90)/90",
              ["zeta4-remark"], E, Tolerance(1e-15, 1e-12), G.ZETA_VALUES, _h_any, _e_zeta),
        _case("zeta3-printed", "zeta(3) - 1 against the nine-digit value 0.202056903",
              ["zeta3-remark"], E, Tolerance(1e-8, 1e-15), G.ZETA3_PRINTED, _h_any, _e_zeta),
        _case("lerch-extended-definition", "extended Hurwitz-Lerch series vs scalar Gamma-product loop",
              ["extended-lerch-definition"], E, Tolerance(1e-15, 1e-10), G.LERCH_DEFINITION, _h_lerch_def, _e_lerch_def),
        _case("lerch-extended-integral", "extended Hurwitz-Lerch function vs its Laplace-type integral over pPsi_q(z e^-x)",
              ["extended-lerch-integral"], E, QUAD, G.LERCH_INTEGRAL, _h_lerch_def, _e_lerch_int),
        _case("lerch-specializations", "Riemann, Hurwitz, polylogarithm, Lipschitz-Lerch and Lerch-zeta reductions of Phi",
              ["hurwitz-lerch", "lipschitz-lerch", "lerch-zeta", "polylog"], E, Tolerance(1e-15, 1e-10),
              G.LERCH_SPECIALIZATIONS, _h_lerch_def, _e_lerch_spec),
        _case("thm-3.8-lerch-gf",
              "sum Phi[(lambda1+k,rho1),...;(lambda1,rho1),...](z,s,a) Gamma(lambda1+k) t^k/k! = "
              "Gamma(lambda1)(1-t)^-lambda1 Phi[...](z (1-t)^-rho1, s, a)",
              ["eq-3.8"], E, LERCH, G.LERCH_GF, _h_lerch_gf, _e_lerch_gf),
        _case("eq-3.9-lerch-gf", "extra upper pair (1,1): RHS is Gamma(lambda1)(1-t)^-lambda1 Phi(z (1-t)^-rho1, s, a)",
              ["eq-3.9"], E, LERCH, G.LERCH_COROLLARY, _h_lerch_gf, _e_lerch_cor),
        _case("eq-3.10-lipschitz-gf",
              "complex z = r exp(2 i pi xi) inside the disc of absolute convergence; the unit-circle RHS "
              "Phi(exp(2 i pi xi)(1-t)^-rho1, s, a) is audited against L(xi, a, s) in diagnostics",
              ["eq-3.10"], E, LERCH, G.LIPSCHITZ_GF, _h_lerch_gf, _e_lerch_cor),
        _case("eq-3.11-double-series",
              "sum_k sum_n Gamma(n+k+1)/n! (1-t)^(n+1) z^n t^k/(k! (n+a)^s) = Phi(z, s, a); raw and collapsed",
              ["eq-3.11"], E, LERCH, G.DOUBLE_SERIES, _h_double, _e_double),
        _case("eq-3.12-lipschitz-double-series",
              "z = exp(2 i pi xi): collapsed double series vs L(xi, a, s) via residue classes of n",
              ["eq-3.12"], E, LERCH, G.LIPSCHITZ_DOUBLE_SERIES, _h_lipschitz_double, _e_lipschitz_double),
        _case("polylog-log", "double series with a = 1 equals -log(1-z)/z",
              ["polylog-log"], D, CLOSED, G.POLYLOG_LOG, _h_polylog, _e_polylog("log")),
        _case("polylog-2log2", "s = 1, z = 1/2: double series equals 2 log 2",
              ["polylog-2log2"], D, CLOSED, G.POLYLOG_ROW, _h_polylog, _e_polylog("2log2")),
        _case("polylog-pi2", "s = 2, z = 1/2: double series equals pi^2/6 - log^2 2",
              ["polylog-pi2"], D, CLOSED, G.POLYLOG_ROW, _h_polylog, _e_polylog("pi2")),
        _case("polylog-li3", "s = 3, z = 1/2: double series vs 2 Li_3(1/2); printed closed form deviation in diagnostics",
              ["polylog-li3"], D, CLOSED, G.POLYLOG_ROW, _h_polylog, _e_polylog("li3")),
    ]
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids)), "duplicate case ids"
    return tuple(cases)


CASES: tuple[IdentityCase, ...] = _build()


def get_case(case_id: str) -> IdentityCase:
    for c in CASES:
        if c.id == case_id:
            return c
    raise KeyError(case_id)


def covered_anchors() -> set[str]:
    return {a for c in CASES for a in c.anchors}
