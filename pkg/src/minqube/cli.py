"""
Command line front end.

    minqube rule <omega|g> --alpha A --gamma G --n N [--format json|csv] [--out PATH]
    minqube verify <omega|g> --alpha A --gamma G --n N [--max-degree D] [--tol T] [--strict-claim]
    minqube verify --rule FILE [--max-degree D] [--tol T] [--strict-claim]
    minqube moments <omega|g> --alpha A --gamma G --max-degree D [--oracle product|bruteforce]
    minqube basis <g|omega> --alpha A --gamma G --degree M --at X,Y
    minqube domain --umax U --samples K

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical failure.
The default verification tolerance can be overridden with ``MINQUBE_TOL``.
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys

from .cubature import CubatureRule2D, gauss_rule_omega, minimal_rule_g
from .domain_map import omega_boundary
from .errors import DomainError, IndexOutOfRange, InvalidParameter, NumericalFailure
from .opbasis2d import GBasis, OmegaBasis, eval_P, eval_Q
from .orthopoly1d import RecurrenceTable, WeightSpec1D
from .verify import (
    bruteforce_moments_g,
    oracle_moment_g,
    oracle_moment_omega,
    verify_rule,
)

SCHEMA = "minimal-cubature/1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return "%.17g" % x


# ---------------------------------------------------------------------------
# rule files


def rule_to_dict(rule: CubatureRule2D) -> dict:
    return {
        "schema": SCHEMA,
        "domain": rule.domain,
        "weight": rule.weight_spec.describe(),
        "gamma": rule.gamma,
        "n": rule.n,
        "claimed_degree": rule.claimed_degree,
        "verified_degree": rule.verified_degree,
        "nodes": [[float(x), float(y)] for x, y in rule.nodes],
        "weights": [float(w) for w in rule.weights],
    }


def weight_from_dict(d: dict) -> WeightSpec1D:
    family = d.get("family")
    if family == "shifted_laguerre":
        return WeightSpec1D.shifted_laguerre(float(d["alpha"]))
    if family == "custom":
        return WeightSpec1D.custom(RecurrenceTable(d["a"], d["b"]))
    raise InvalidParameter(f"unknown weight family {family!r}")


def rule_from_dict(d: dict) -> CubatureRule2D:
    if d.get("schema") != SCHEMA:
        raise InvalidParameter(f"rule file schema must be {SCHEMA!r}")
    if d["domain"] not in ("omega", "g"):
        raise InvalidParameter("domain must be 'omega' or 'g'")
    if len(d["nodes"]) != len(d["weights"]):
        raise InvalidParameter("nodes and weights differ in length")
    rule = CubatureRule2D(d["domain"], float(d["gamma"]), int(d["n"]), int(d["claimed_degree"]),
                          d["nodes"], d["weights"], weight_from_dict(d["weight"]))
    if d.get("verified_degree") is not None:
        rule = rule.with_verified_degree(d["verified_degree"])
    return rule


def rule_to_json(rule: CubatureRule2D) -> str:
    return json.dumps(rule_to_dict(rule), indent=2) + "\n"


def rule_to_csv(rule: CubatureRule2D) -> str:
    cols = "u,v,weight" if rule.domain == "omega" else "x,y,weight"
    lines = [cols]
    for (x, y), w in zip(rule.nodes, rule.weights):
        lines.append(f"{_fmt(x)},{_fmt(y)},{_fmt(w)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _default_tol() -> float:
    raw = os.environ.get("MINQUBE_TOL")
    if raw is None:
        return 1e-8
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"MINQUBE_TOL must be a decimal number, got {raw!r}") from None


def _build(domain: str, alpha: float, gamma: float, n: int) -> CubatureRule2D:
    weight = WeightSpec1D.shifted_laguerre(alpha)
    if domain == "omega":
        return gauss_rule_omega(weight, gamma, n)
    return minimal_rule_g(weight, gamma, n)


def _emit(text: str, out: str | None, stream) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stream.write(text)


def cmd_rule(args, stream) -> int:
    rule = _build(args.domain, args.alpha, args.gamma, args.n)
    text = rule_to_json(rule) if args.format == "json" else rule_to_csv(rule)
    _emit(text, args.out, stream)
    return EXIT_OK


def verdict(report: dict, strict_claim: bool = False) -> bool:
    """Pass/fail of a verification record.

    Rules must reach the degree the construction certifies; with
    ``strict_claim`` they must also reach the stated ``claimed_degree``.
    """
    ok = report["achieved_degree"] >= report["expected_degree"]
    if strict_claim:
        ok = ok and report["achieved_degree"] >= report["claimed_degree"]
    return ok


def cmd_verify(args, stream) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    if args.rule:
        if args.domain or args.alpha is not None or args.n is not None:
            raise UsageError("--rule cannot be combined with a domain, --alpha or --n")
        try:
            with open(args.rule, encoding="utf-8") as fh:
                rule = rule_from_dict(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read rule file: {exc}") from None
    else:
        if not args.domain or args.alpha is None or args.gamma is None or args.n is None:
            raise UsageError("verify needs a domain with --alpha, --gamma and --n, or --rule FILE")
        rule = _build(args.domain, args.alpha, args.gamma, args.n)
    report = verify_rule(rule, args.max_degree, tol)
    report["strict_claim"] = bool(args.strict_claim)
    report["passed"] = verdict(report, args.strict_claim)
    stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_moments(args, stream) -> int:
    weight = WeightSpec1D.shifted_laguerre(args.alpha)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    lines = ["i,j,value,oracle"]
    if args.domain == "g" and args.oracle == "bruteforce":
        values = bruteforce_moments_g(args.alpha, args.gamma, args.max_degree)
    else:
        if args.oracle == "bruteforce":
            raise UsageError("the brute-force oracle exists for domain g only")
        fn = oracle_moment_g if args.domain == "g" else oracle_moment_omega
        values = {(i, d - i): fn(weight, args.gamma, i, d - i)
                  for d in range(args.max_degree + 1) for i in range(d, -1, -1)}
    for d in range(args.max_degree + 1):
        for i in range(d, -1, -1):
            lines.append(f"{i},{d - i},{_fmt(values[(i, d - i)])},{args.oracle}")
    stream.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_basis(args, stream) -> int:
    try:
        px, py = (float(v) for v in args.at.split(","))
    except ValueError:
        raise UsageError("--at expects two comma separated numbers") from None
    weight = WeightSpec1D.shifted_laguerre(args.alpha)
    lines = ["family,k,value"]
    if args.domain == "g":
        basis = GBasis(weight, args.gamma, args.degree)
        for fam, k in basis.members(args.degree):
            lines.append(f"{fam},{k},{_fmt(eval_Q(basis, fam, k, args.degree, px, py))}")
    else:
        basis = OmegaBasis(weight, args.gamma, (0, 0), args.degree)
        for k in range(args.degree + 1):
            lines.append(f"1,{k},{_fmt(eval_P(basis, k, args.degree, px, py))}")
    stream.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_domain(args, stream) -> int:
    curves = omega_boundary(args.samples, args.umax)
    lines = ["curve,u,v"]
    for name in ("line", "parabola"):
        for u, v in curves[name]:
            lines.append(f"{name},{_fmt(u)},{_fmt(v)}")
    stream.write("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _gamma(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid gamma {text!r}") from None
    if value not in (-0.5, 0.5):
        raise argparse.ArgumentTypeError("gamma must be -0.5 or 0.5")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minqube", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rule", help="generate a cubature rule")
    p.add_argument("domain", choices=("omega", "g"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--gamma", type=_gamma, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rule)

    p = sub.add_parser("verify", help="verify a rule")
    p.add_argument("domain", nargs="?", choices=("omega", "g"))
    p.add_argument("--rule")
    p.add_argument("--alpha", type=float)
    p.add_argument("--gamma", type=_gamma)
    p.add_argument("--n", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--strict-claim", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("moments", help="oracle moments")
    p.add_argument("domain", choices=("omega", "g"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--gamma", type=_gamma, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--oracle", choices=("product", "bruteforce"), default="product")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("basis", help="evaluate an orthogonal basis at a point")
    p.add_argument("domain", choices=("g", "omega"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--gamma", type=_gamma, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--at", required=True, help="X,Y (use --at=-1,-2 for negative values)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("domain", help="boundary curves of Omega as CSV")
    p.add_argument("--umax", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.set_defaults(func=cmd_domain)
    return parser


def main(argv=None, stream=None) -> int:
    stream = stream if stream is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (UsageError, InvalidParameter, DomainError, IndexOutOfRange) as exc:
        print(f"minqube: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"minqube: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    stream.write(buf.getvalue())
    return code


def main_entry() -> None:
    sys.exit(main())
