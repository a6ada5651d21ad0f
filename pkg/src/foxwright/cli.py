"""Command-line front end: ``foxwright eval | verify | list``.

Exit codes: 0 success, 1 evaluation did not converge or an identity failed,
2 usage error, 3 domain error, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Any, Callable

from .errors import AccuracyError, DomainError, SeriesOverflowError
from .harness import CASES, EvalContext, run_suite, summarize
from .mathieu import MathieuSpec, mathieu_series
from .quadrature import DEFAULT_QUAD
from .series import DEFAULT_POLICY, FoxWrightParams, SeriesResult, TruncationPolicy, fox_wright, parse_pairs, pfq
from .zeta import LerchParams, extended_lerch_phi, hurwitz_zeta, lerch_phi_result, polylog, riemann_zeta

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4
FORMATS = ("json", "csv", "text")
REPORT_KEYS = ("id", "point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Resolved run settings; ``None`` tolerances mean the library defaults."""

    rel_tol: float | None = None
    abs_tol: float | None = None
    max_terms: int | None = None
    output_format: str | None = None
    suite_filter: str | None = None
    report_path: str | None = None
    threads: int = 1

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol"):
            v = getattr(self, name)
            if v is not None and not (isinstance(v, (int, float)) and v > 0 and math.isfinite(v)):
                raise UsageError(f"{name.replace('_', '-')} must be a positive number")
        if self.max_terms is not None and not (isinstance(self.max_terms, int) and self.max_terms >= 1):
            raise UsageError("max-terms must be a positive integer")
        if self.output_format is not None and self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")
        if not (isinstance(self.threads, int) and self.threads >= 1):
            raise UsageError("threads must be a positive integer")

    def policy(self) -> TruncationPolicy:
        p = DEFAULT_POLICY
        return TruncationPolicy(
            self.rel_tol if self.rel_tol is not None else p.rel_tol,
            p.consecutive_small,
            self.max_terms if self.max_terms is not None else p.max_terms,
        )

    def context(self) -> EvalContext:
        quad = DEFAULT_QUAD
        if self.rel_tol is not None:
            quad = replace(quad, rel_tol=self.rel_tol)
        if self.abs_tol is not None:
            quad = replace(quad, abs_tol=self.abs_tol)
        return EvalContext(self.policy(), quad)


# --------------------------------------------------------------- formatting


def _num(x, digits: int = 17) -> str:
    if x is None or not math.isfinite(x):
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), f".{digits}g")


def dump_json(obj, indent: int | None = None, _level: int = 0) -> str:
    """JSON text with floats at 17 significant digits and non-finite values as ``null``."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, float)):
        return _num(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [pad + json.dumps(str(k)) + ": " + dump_json(v, indent, _level + 1) for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dump_json(v, indent, _level + 1) for v in obj]
        return "[" + sep.join(items) + end + "]"
    if isinstance(obj, complex):
        return dump_json([obj.real, obj.imag], indent, _level)
    return json.dumps(str(obj))


def _parts(v) -> tuple[float | None, float | None]:
    if v is None:
        return None, None
    c = complex(v)
    return c.real, c.imag


def report_record(r) -> dict:
    lr, li = _parts(r.lhs)
    rr, ri = _parts(r.rhs)
    return {
        "id": r.id,
        "point": r.point,
        "lhs_re": lr,
        "lhs_im": li,
        "rhs_re": rr,
        "rhs_im": ri,
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "pass": r.passed,
    }


def _text_num(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".10g")


def format_reports(reports, fmt: str) -> str:
    recs = [report_record(r) for r in reports]
    if fmt == "json":
        return dump_json(recs, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_KEYS)
        for rec in recs:
            row = []
            for k in REPORT_KEYS:
                v = rec[k]
                if k == "point":
                    row.append(dump_json(v))
                elif k in ("id",):
                    row.append(v)
                elif v is None or (isinstance(v, float) and not math.isfinite(v)):
                    row.append("")
                else:
                    row.append(_num(v))
            w.writerow(row)
        return buf.getvalue()
    lines = []
    for r, rec in zip(reports, recs):
        status = r.status.upper()
        lhs = _text_num(rec["lhs_re"]) + ("" if not rec["lhs_im"] else f"{rec['lhs_im']:+.10g}j")
        rhs = _text_num(rec["rhs_re"]) + ("" if not rec["rhs_im"] else f"{rec['rhs_im']:+.10g}j")
        pt = ", ".join(f"{k}={v}" for k, v in r.point.items())
        lines.append(f"{status:4s} {r.id}  [{pt}]  lhs={lhs} rhs={rhs} abs_err={_text_num(rec['abs_err'])} rel_err={_text_num(rec['rel_err'])}")
        if r.status == "fail" and "error" in r.diagnostics:
            lines.append(f"     error: {r.diagnostics['error']}")
    return "\n".join(lines) + ("\n" if lines else "")


# ----------------------------------------------------------------- eval


def _real(params: dict, key: str, default: Any = ...) -> float:
    if key not in params:
        if default is ...:
            raise UsageError(f"missing parameter {key}")
        return default
    try:
        return float(params[key])
    except ValueError:
        raise UsageError(f"parameter {key} must be a real number, got {params[key]!r}") from None


def _scalar(params: dict, key: str):
    if key not in params:
        raise UsageError(f"missing parameter {key}")
    text = params[key].replace(" ", "")
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"parameter {key} must be a number, got {params[key]!r}") from None


def _pairs(params: dict, key: str):
    if key not in params:
        raise UsageError(f"missing parameter {key}")
    try:
        return parse_pairs(params[key])
    except ValueError as exc:
        raise UsageError(f"parameter {key}: {exc}") from None


def _list(params: dict, key: str) -> list[float]:
    if key not in params:
        raise UsageError(f"missing parameter {key}")
    text = params[key].strip()
    if not text:
        return []
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"parameter {key} must be a comma-separated list of numbers") from None


def _ev_fox_wright(p, pol):
    return fox_wright(FoxWrightParams(_pairs(p, "upper"), _pairs(p, "lower")), _real(p, "z"), pol)


def _ev_pfq(p, pol):
    return pfq(_list(p, "a"), _list(p, "b"), _scalar(p, "z"), pol)


def _ev_mathieu(p, pol):
    nu = _real(p, "nu", None)
    spec = MathieuSpec(_real(p, "mu"), _real(p, "alpha"), _real(p, "beta", 0.0), _real(p, "r"), nu=nu)
    return mathieu_series(spec, pol)


def _ev_hurwitz(p, pol):
    s, a = _real(p, "s"), _real(p, "a")
    if not (s > 1 and a > 0):
        raise DomainError("hurwitz-zeta needs s > 1 and a > 0")
    return hurwitz_zeta(s, a)


def _ev_riemann(p, pol):
    return riemann_zeta(_real(p, "s"))


def _ev_polylog(p, pol):
    s, z = _real(p, "s"), _scalar(p, "z")
    if z == 0:
        return SeriesResult(polylog(s, z, pol), 0, 0.0, True)
    r = lerch_phi_result(z, s, 1.0, pol)
    return SeriesResult(z * r.value, r.terms_used, abs(z) * r.tail_estimate, r.converged)


def _ev_lerch(p, pol):
    return lerch_phi_result(_scalar(p, "z"), _real(p, "s"), _real(p, "a"), pol)


def _ev_extended(p, pol):
    params = LerchParams(_pairs(p, "lambdas"), _pairs(p, "mus"), _real(p, "s"), _real(p, "a"))
    return extended_lerch_phi(params, _scalar(p, "z"), pol)


FUNCTIONS: dict[str, tuple[Callable, str]] = {
    "fox-wright": (_ev_fox_wright, "upper=a:A,... lower=b:B,... z=<real>"),
    "pfq": (_ev_pfq, "a=a1,a2,... b=b1,... z=<number>"),
    "mathieu": (_ev_mathieu, "mu= alpha= r= [beta=0] [nu=1/alpha]"),
    "hurwitz-zeta": (_ev_hurwitz, "s= a="),
    "riemann-zeta": (_ev_riemann, "s="),
    "polylog": (_ev_polylog, "s= z=<number>"),
    "lerch-phi": (_ev_lerch, "z=<number> s= a="),
    "extended-lerch": (_ev_extended, "lambdas=l:r,... mus=m:s,... s= a= z=<number>"),
}


def _parse_kv(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameters must look like key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v
    return out


def eval_function(name: str, params: dict, policy: TruncationPolicy) -> SeriesResult:
    """Evaluate a CLI function by name; closed-form evaluators report no term count."""
    if name not in FUNCTIONS:
        raise UsageError(f"unknown function {name!r}")
    out = FUNCTIONS[name][0](params, policy)
    if isinstance(out, SeriesResult):
        return out
    return SeriesResult(out, 0, 0.0, True)


def _eval_output(name, params, res: SeriesResult, fmt: str) -> str:
    re_, im_ = _parts(res.value)
    rec = {
        "function": name,
        "params": params,
        "value_re": re_,
        "value_im": im_,
        "terms_used": res.terms_used,
        "tail_estimate": res.tail_estimate,
        "converged": res.converged,
    }
    if fmt == "json":
        return dump_json(rec) + "\n"
    if fmt == "csv":
        keys = ["function", "value_re", "value_im", "terms_used", "tail_estimate", "converged"]
        vals = [name] + [_num(rec[k]) if rec[k] is not None else "" for k in keys[1:]]
        return ",".join(keys) + "\n" + ",".join(vals) + "\n"
    val = _text_num(re_) if not im_ else f"{re_:.10g}{im_:+.10g}j"
    return f"{val}\nterms_used {res.terms_used}\ntail_estimate {_text_num(res.tail_estimate)}\nconverged {str(res.converged).lower()}\n"


# -------------------------------------------------------------- parsing


def _common(suppress: bool) -> argparse.ArgumentParser:
    kw = {"default": argparse.SUPPRESS} if suppress else {"default": None}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--rel-tol", type=float, help="relative truncation / quadrature tolerance", **kw)
    p.add_argument("--abs-tol", type=float, help="absolute quadrature tolerance", **kw)
    p.add_argument("--max-terms", type=int, help="maximum number of series terms", **kw)
    p.add_argument("--format", choices=FORMATS, dest="output_format", help="output format", **kw)
    p.add_argument("--filter", dest="suite_filter", help="glob over identity ids (verify)", **kw)
    p.add_argument("--out", dest="report_path", help="write the output to this file", **kw)
    p.add_argument("--config", help="JSON config file; explicit flags win", **kw)
    p.add_argument("--threads", type=int, help="worker threads for verify", **kw)
    return p


def build_parser() -> argparse.ArgumentParser:
    names = ", ".join(FUNCTIONS)
    parser = argparse.ArgumentParser(
        prog="foxwright",
        description="Fox-Wright, Mathieu-type and Hurwitz-Lerch special functions with an identity-verification suite.",
        epilog=f"eval functions: {names}",
        parents=[_common(False)],
    )
    sub = parser.add_subparsers(dest="command", metavar="{eval,verify,list}")
    sub.required = True
    fn_help = "\n".join(f"  {k:15s} {v[1]}" for k, v in FUNCTIONS.items())
    ev = sub.add_parser(
        "eval",
        parents=[_common(True)],
        help=f"evaluate a function ({names})",
        description="Evaluate one function at key=value parameters.",
        epilog="functions:\n" + fn_help,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ev.add_argument("function", choices=list(FUNCTIONS), metavar="function", help=names)
    ev.add_argument("params", nargs="*", metavar="key=value")
    sub.add_parser("verify", parents=[_common(True)], help="run identity checks and write a report",
                   description="Run the registered identity cases over their grids.")
    sub.add_parser("list", parents=[_common(True)], help="list registered identity cases",
                   description="One line per identity case: id, anchors, grid size.")
    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    aliases = {"format": "output_format", "filter": "suite_filter", "out": "report_path", "rel-tol": "rel_tol",
               "abs-tol": "abs_tol", "max-terms": "max_terms"}
    out = {}
    fields = {"rel_tol", "abs_tol", "max_terms", "output_format", "suite_filter", "report_path", "threads"}
    for k, v in data.items():
        key = aliases.get(k, k)
        if key not in fields:
            raise UsageError(f"unknown config key {k!r}")
        out[key] = v
    return out


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    merged: dict = {}
    if getattr(ns, "config", None):
        merged.update(_load_config(ns.config))
    for key in ("rel_tol", "abs_tol", "max_terms", "output_format", "suite_filter", "report_path", "threads"):
        v = getattr(ns, key, None)
        if v is not None:
            merged[key] = v
    return RunConfig(**merged)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(ns, cfg: RunConfig) -> int:
    params = _parse_kv(ns.params)
    res = eval_function(ns.function, params, cfg.policy())
    _emit(_eval_output(ns.function, params, res, cfg.output_format or "text"), cfg.report_path)
    return EXIT_OK if res.converged else EXIT_FAIL


def cmd_verify(ns, cfg: RunConfig) -> int:
    reports = run_suite(cfg.suite_filter, cfg.context(), threads=cfg.threads)
    if not reports:
        print(f"warning: no identity case matches {cfg.suite_filter!r}", file=sys.stderr)
    fmt = cfg.output_format or "json"
    _emit(format_reports(reports, fmt), cfg.report_path)
    s = summarize(reports)
    print(s.line(), file=sys.stdout if (fmt == "text" or cfg.report_path) else sys.stderr)
    return EXIT_OK if s.failed == 0 else EXIT_FAIL


def cmd_list(ns, cfg: RunConfig) -> int:
    fmt = cfg.output_format or "text"
    rows = [{"id": c.id, "anchors": list(c.anchors), "grid_size": len(c.default_grid), "kind": c.kind} for c in CASES]
    if fmt == "json":
        text = dump_json(rows, indent=1) + "\n"
    elif fmt == "csv":
        text = "id,anchors,grid_size,kind\n" + "".join(f"{r['id']},{' '.join(r['anchors'])},{r['grid_size']},{r['kind']}\n" for r in rows)
    else:
        w = max(len(r["id"]) for r in rows)
        text = "".join(f"{r['id']:{w}s}  {','.join(r['anchors'])}  {r['grid_size']}\n" for r in rows)
    _emit(text, cfg.report_path)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "list": cmd_list}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = resolve_config(ns)
        return COMMANDS[ns.command](ns, cfg)
    except UsageError as exc:
        print(f"foxwright: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"foxwright: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (AccuracyError, SeriesOverflowError) as exc:
        print(f"foxwright: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"foxwright: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
