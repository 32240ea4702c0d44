"""
Command-line front end.

Exit codes: 0 success, 1 numerical failure (residual above threshold or
divergence), 2 usage error, 3 no solution in the trusted region.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import (ConfigurationError, DivergenceError, DomainError, InconsistencyError,
                     NoSolutionError, OutOfRegionError, RamanujanJetsError, UnsupportedError)
from .hyperseries import (F32, F54, F76, evaluate_components, max_residual, parse_family,
                          relation_residuals, relation_threshold)
from .numerics import format_real, make_context, to_fraction

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3


@dataclass
class RunConfig:
    command: str
    family: object
    bits: int
    order: int
    denominator_bound: int
    json: bool


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return to_fraction(text.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _fraction_list(text: str) -> list:
    return [_fraction(p) for p in text.split(",") if p.strip()]


def _sign(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise UsageError(f"u must be +1 or -1, got {text!r}") from exc
    if value not in (1, -1):
        raise UsageError(f"u must be +1 or -1, got {text!r}")
    return value


def _emit(cfg: RunConfig, payload: dict, lines: list) -> None:
    if cfg.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# -- subcommands -------------------------------------------------------------------

def cmd_relations(cfg: RunConfig, args) -> int:
    ctx = make_context(cfg.bits)
    family = cfg.family
    if family.kind == F76:
        raise UsageError("relations are defined for 3F2 and 5F4 families")
    if args.z is not None:
        points = [_fraction(args.z)]
    else:
        rng = random.Random(args.seed)
        points = [Fraction(rng.randint(-300, 300), 1000) or Fraction(1, 7) for _ in range(args.samples)]
    if any(abs(z) >= 1 for z in points):
        raise UsageError("|z| must be < 1")
    threshold = relation_threshold(ctx)
    records, ok, lines = [], True, []
    for z in points:
        cv = evaluate_components(family, z, None, ctx)
        res = relation_residuals(cv)
        failed = sorted(n for n, v in res.items() if v > threshold)
        ok = ok and not failed
        records.append({"z": str(z), "residuals": {n: mpmath.nstr(v, 5) for n, v in res.items()},
                        "max": mpmath.nstr(max_residual(res), 5), "failed": failed})
        lines.append(f"{family.label}  z={z}  max residual {mpmath.nstr(max_residual(res), 5)}"
                     + (f"  FAILED: {', '.join(failed)}" if failed else ""))
        for n, v in res.items():
            lines.append(f"  {n:<14} {mpmath.nstr(v, 5)}")
    _emit(cfg, {"family": family.label, "threshold": mpmath.nstr(threshold, 5), "points": records, "ok": ok},
          lines)
    return EXIT_OK if ok else EXIT_NUMERIC


def _series_strings(series) -> list:
    return [str(c) for c in series.coeffs]


def cmd_mirror(cfg: RunConfig, args) -> int:
    from .qexpansion import mirror_map, t_u_k_series

    if cfg.order < 2:
        raise UsageError("--order must be at least 2")
    family = cfg.family
    if family.kind == F76:
        raise UsageError("mirror maps are defined for 3F2 and 5F4 families")
    qe = t_u_k_series(family, cfg.order) if family.kind == F54 else mirror_map(family, cfg.order)
    payload = {"family": family.label, "order": cfg.order, "variable": qe.variable,
               "scale": str(qe.scale) if qe.scale is not None else None,
               "exp_H": _series_strings(qe.exp_h), "z_of_q": _series_strings(qe.z_of_q)}
    if qe.T is not None:
        payload.update(T=_series_strings(qe.T), U=_series_strings(qe.U), K=_series_strings(qe.K),
                       U_equals_q_dT_dq=qe.U == qe.U_from_T)
    lines = [f"{family.label}  order {cfg.order}  variable {qe.variable}  e^nu0 = {payload['scale']}"]
    for key in ("exp_H", "z_of_q", "T", "U", "K"):
        if key in payload:
            lines.append(f"{key}: " + ", ".join(payload[key]))
    _emit(cfg, payload, lines)
    if qe.T is not None and qe.U != qe.U_from_T:
        return EXIT_NUMERIC
    return EXIT_OK


def _solve_once(cfg, args, u):
    from .solver import solve_3f2, solve_5f4

    ctx = make_context(cfg.bits)
    family = cfg.family
    k = _fraction(args.k)
    if family.kind == F32:
        return solve_3f2(family.s, k, u, ctx, cfg.denominator_bound, args.method)
    return solve_5f4(family.s, family.t, k, u, ctx, cfg.denominator_bound, args.method)


def cmd_solve(cfg: RunConfig, args) -> int:
    family = cfg.family
    if family.kind == F76:
        raise UsageError("solve supports 3F2 and 5F4 families")
    if args.u is not None:
        order = [_sign(args.u)]
    else:
        order = [-1, 1] if family.kind == F54 else [1, -1]
    last = None
    for u in order:
        try:
            sol = _solve_once(cfg, args, u)
        except (NoSolutionError, OutOfRegionError) as exc:
            last = exc
            continue
        payload = sol.to_json()
        lines = [f"{family.label}  k={sol.k}  u={sol.u:+d}  q={format_real(sol.q, 30)}"]
        for name in ("tau2", "tau", "j", "z", "a", "b", "c"):
            rc = sol.recognized.get(name)
            if rc is not None:
                shown = str(rc) if rc.recognized else format_real(rc.approx, 40)
                lines.append(f"  {name:<5} = {shown}")
        lines.append(f"  max residual {mpmath.nstr(sol.max_residual(), 5)}; "
                     f"series check {mpmath.nstr(sol.series_check, 5)}")
        _emit(cfg, payload, lines)
        threshold = relation_threshold(make_context(cfg.bits))
        if sol.max_residual() > threshold or sol.series_check > threshold:
            return EXIT_NUMERIC
        return EXIT_OK
    _emit(cfg, {"family": family.label, "k": args.k, "error": "no-solution-in-region", "detail": str(last)},
          [f"no solution in region: {last}"])
    return EXIT_NO_SOLUTION


def cmd_signature(cfg: RunConfig, args) -> int:
    from .expansions import extract_signature

    ctx = make_context(cfg.bits)
    z = _fraction(args.z)
    if abs(z) >= 1:
        raise UsageError("|z| must be < 1")
    poly = _fraction_list(args.poly)
    if len(poly) != cfg.family.n_components:
        raise UsageError(f"{cfg.family.label} needs {cfg.family.n_components} coefficients in --poly")
    u = _sign(args.u) if args.u is not None else None
    sig = extract_signature(cfg.family, z, u, poly, ctx, cfg.denominator_bound)
    lines = [f"{cfg.family.label}  z={z}  scalar check {mpmath.nstr(sig.scalar_check, 5)}"]
    for name in ("k", "j", "l"):
        value = getattr(sig, name)
        if value is not None:
            rc = sig.recognized[name]
            lines.append(f"  {name} = {mpmath.nstr(value, 40)}" + (f"  (= {rc})" if rc.recognized else ""))
    for name, v in sig.odd.items():
        lines.append(f"  odd {name}: {mpmath.nstr(v, 5)}")
    _emit(cfg, sig.to_json(), lines)
    return EXIT_OK


def cmd_theta(cfg: RunConfig, args) -> int:
    from .modular import theta

    ctx = make_context(cfg.bits)
    q = _fraction(args.q)
    th = theta(q, ctx)
    with ctx.workprec():
        res = {"theta-quartic": abs(th.identity_residual())}
        d1, d2 = th.derivative_residuals()
        res["log-derivative-2"] = abs(d1)
        res["log-derivative-4"] = abs(d2)
    threshold = relation_threshold(ctx)
    ok = all(v <= threshold for v in res.values())
    payload = {"q": str(q), "terms": th.terms,
               "theta2": format_real(th.theta2, 40), "theta3": format_real(th.theta3, 40),
               "theta4": format_real(th.theta4, 40),
               "residuals": {n: mpmath.nstr(v, 5) for n, v in res.items()}, "ok": ok}
    lines = [f"q = {q}  ({th.terms} terms)"] + \
            [f"  theta{i} = {payload['theta' + str(i)]}" for i in (2, 3, 4)] + \
            [f"  {n}: {payload['residuals'][n]}" for n in res]
    _emit(cfg, payload, lines)
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_probe(cfg: RunConfig, args) -> int:
    from .solver import probe_conjectures

    if cfg.family.kind != F54:
        raise UsageError("probe supports 5F4 families")
    ks = _fraction_list(args.k)
    u = _sign(args.u) if args.u is not None else -1
    report = probe_conjectures(cfg.family, ks, make_context(cfg.bits), u, cfg.denominator_bound)
    lines = []
    for rec in report:
        if rec["status"] == "solved":
            lines.append(f"k={rec['k']}: " + ", ".join(f"{n}={v} [{rec['kinds'][n]}]"
                                                       for n, v in rec["values"].items()))
        else:
            lines.append(f"k={rec['k']}: {rec['status']}")
    _emit(cfg, {"family": cfg.family.label, "u": u, "report": report}, lines)
    return EXIT_OK


COMMANDS = {
    "relations": cmd_relations,
    "mirror": cmd_mirror,
    "solve": cmd_solve,
    "signature": cmd_signature,
    "theta": cmd_theta,
    "probe": cmd_probe,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", default="5F4:1/2,1/2",
                        help='e.g. "3F2:1/2", "5F4:1/2,1/3" or "7F6"')
    common.add_argument("--bits", type=int, default=256, help="working precision in bits")
    common.add_argument("--order", type=int, default=8, help="series truncation order")
    common.add_argument("--denominator-bound", type=int, default=10 ** 6)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="ramanujan-jets", description="Jet identities for Ramanujan-type 1/pi series.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("relations", parents=[common], help="component relation residuals")
    p.add_argument("--z", help="evaluation point; random points when omitted")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("mirror", parents=[common], help="mirror map and q-series")

    p = sub.add_parser("solve", parents=[common], help="solve for z, a, b (, c, j)")
    p.add_argument("--k", required=True)
    p.add_argument("--u", help="branch sign +1 or -1 (default: try both)")
    p.add_argument("--method", choices=("newton", "bisection"), default="newton")

    p = sub.add_parser("signature", parents=[common], help="read k, j, l from a series")
    p.add_argument("--z", required=True)
    p.add_argument("--poly", required=True, help="comma-separated polynomial coefficients a,b,...")
    p.add_argument("--u")

    p = sub.add_parser("theta", parents=[common], help="theta function identities at q")
    p.add_argument("--q", required=True)

    p = sub.add_parser("probe", parents=[common], help="recognition report over a k grid")
    p.add_argument("--k", required=True, help="comma-separated k values")
    p.add_argument("--u")
    return parser


_VALUE_OPTIONS = {"--z", "--k", "--u", "--q", "--poly"}


def _join_negative_values(argv):
    # argparse reads "-1/4" as an option; glue such values to their flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_negative_values(argv))
        try:
            family = parse_family(args.family)
        except (DomainError, ConfigurationError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        if args.bits < 64:
            raise UsageError("--bits must be at least 64")
        if args.denominator_bound < 1:
            raise UsageError("--denominator-bound must be positive")
        cfg = RunConfig(args.command, family, args.bits, args.order, args.denominator_bound, args.json)
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoSolutionError, OutOfRegionError) as exc:
        print(f"no solution in region: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (DomainError, UnsupportedError, ConfigurationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DivergenceError, InconsistencyError, RamanujanJetsError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
