"""Command-line front end.

Exit codes: 0 success, 1 mathematical negative (no splitting, failed
verification, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import codes, oracle
from .errors import (
    BadResidue,
    IsodualError,
    NoSplitting,
    NotInvariant,
    NotIsoSelfDual,
)
from .gf import field_of_order, parse_pin, root_of_unity
from .polyring import alternating, factor_xn1, format_poly
from .splitting import build_splitting, enumerate_splittings, exists_splitting
from .zn import cyclotomic_cosets, nu2, qperm_make

NEGATIVE = (NoSplitting, NotIsoSelfDual, NotInvariant, BadResidue)


class UsageError(Exception):
    pass


def _emit(obj, args) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, ensure_ascii=False))
    else:
        print(obj)


def _root(q: int, n: int, pin_expr: str | None):
    F = field_of_order(q)
    pin = parse_pin(pin_expr, F) if pin_expr else None
    return root_of_unity(F, n, pin)


def _need(args, *names):
    missing = [f"--{x.replace('_', '-')}" for x in names if getattr(args, x, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _nu_text(v) -> str:
    return "inf" if v == math.inf else str(v)


def _describe_text(d: dict, F) -> str:
    from .polyring import Polynomial

    lines = [f"code over GF({d['q']}) of length {d['n']}, dimension {d['dimension']}"]
    lines.append(f"  P = {{{', '.join(map(str, d['P']))}}}")
    if d.get("theta_pin"):
        lines.append(f"  theta pinned by {d['theta_pin']}")
    lines.append(f"  check poly     {format_poly(Polynomial(F, d['check_poly']))}")
    lines.append(f"  generator poly {format_poly(Polynomial(F, d['gen_poly']))}")
    if "certificate" in d:
        s, t = d["certificate"]["s"], d["certificate"]["t"]
        lines.append(f"  certificate    phi_{{-{s},{t}}}(C) = dual")
        lines.append(f"  dual check     {format_poly(Polynomial(F, d['dual_check_poly']))}")
    if "min_distance" in d:
        lines.append(f"  min distance   {d['min_distance']}")
    return "\n".join(lines)


def _with_distance(C, desc: dict, args) -> dict:
    if args.distance:
        dist = codes.weight_distribution(C, args.enum_bound, args.workers)
        desc["weight_distribution"] = dist
        desc["min_distance"] = next((i for i, a in enumerate(dist) if i and a), None)
    return desc


# -- commands -------------------------------------------------------------------

def cmd_exists(args) -> int:
    _need(args, "q", "n")
    ex = exists_splitting(args.q, args.n, args.u)
    if args.json:
        _emit(
            {
                "q": ex.q,
                "n": ex.n,
                "exists": ex.exists,
                "nu2_n": ex.nu2_n,
                "nu2_q_minus_1": ex.nu2_q1,
                "u": ex.u,
                "t": ex.t,
            },
            args,
        )
    else:
        print(f"nu2(n) = {_nu_text(ex.nu2_n)}, 2*nu2(q-1) = {2 * ex.nu2_q1}")
        print(f"yes, u={ex.u}, t={ex.t}" if ex.exists else f"no ({ex.reason})")
    return 0 if ex.exists else 1


def _construct_descriptor(q: int, n: int, args) -> tuple[dict, object]:
    root = _root(q, n, args.pin_theta)
    if args.mds:
        if n is not None and n != q + 1:
            raise UsageError(f"--mds needs n = q + 1 = {q + 1}")
        C, cert = codes.mds_construct(q, root)
    else:
        sp = build_splitting(q, n, u=args.u)
        C = codes.code_from_support(q, n, sp.P, root)
        cert = codes.certificate_for(C, sp.rho.s, sp.rho.t)
    return _with_distance(C, codes.code_descriptor(C, cert), args), root


def cmd_construct(args) -> int:
    _need(args, "q")
    n = args.n if args.n is not None else (args.q + 1 if args.mds else None)
    if n is None:
        raise UsageError("construct needs --n (or --mds)")
    desc, root = _construct_descriptor(args.q, n, args)
    if args.json:
        _emit(desc, args)
    else:
        print(_describe_text(desc, root.base))
    return 0


def cmd_mds(args) -> int:
    args.mds = True
    return cmd_construct(args)


def cmd_enumerate(args) -> int:
    _need(args, "q", "n")
    root = _root(args.q, args.n, args.pin_theta)
    rho = None
    if args.u is not None:
        rho = qperm_make(1, exists_splitting(args.q, args.n, args.u).t, args.n, args.q)
    count = 0
    for sp in enumerate_splittings(args.q, args.n, rho, cap=args.cap):
        C = codes.code_from_support(args.q, args.n, sp.P, root)
        desc = codes.code_descriptor(C, codes.certificate_for(C, sp.rho.s, sp.rho.t))
        if args.json:
            _emit(desc, args)
        else:
            print(_describe_text(desc, root.base))
        count += 1
    if not args.json:
        print(f"{count} splitting(s)")
    return 0 if count else 1


def cmd_factor(args) -> int:
    _need(args, "q", "n")
    root = _root(args.q, args.n, args.pin_theta)
    factors = factor_xn1(root)
    pairs = []
    if nu2(args.n) == 1:
        seen = set()
        for f in factors:
            if f.coeffs in seen:
                continue
            g = alternating(f)
            seen.update({f.coeffs, g.coeffs})
            pairs.append((f, g))
    if args.json:
        out = {"q": args.q, "n": args.n, "factors": [list(f.coeffs) for f in factors]}
        if pairs:
            out["alternating_pairs"] = [[list(f.coeffs), list(g.coeffs)] for f, g in pairs]
        _emit(out, args)
    else:
        print(f"X^{args.n} - 1 over GF({args.q}):")
        for f in factors:
            print(f"  {format_poly(f)}")
        if pairs:
            print("alternating pairs:")
            for f, g in pairs:
                print(f"  {{{format_poly(f)}, {format_poly(g)}}}")
    return 0


def cmd_cosets(args) -> int:
    _need(args, "q", "n")
    cp = cyclotomic_cosets(args.q, args.n)
    if args.json:
        _emit({"q": args.q, "n": args.n, "cosets": [list(c) for c in cp.cosets]}, args)
    else:
        for c in cp.cosets:
            print("{" + ", ".join(map(str, c)) + "}")
    return 0


def _load_descriptor(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        d = json.loads(text.strip().splitlines()[0] if text.strip() else "")
        q, n, P = int(d["q"]), int(d["n"]), [int(i) for i in d["P"]]
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"unparsable descriptor: {exc}") from None
    d["q"], d["n"], d["P"] = q, n, P
    return d


def verify_descriptor(d: dict, max_n: int, enum_bound: int) -> list[oracle.OracleReport]:
    """Rebuild the code a descriptor names and run every applicable oracle on it."""
    q, n = d["q"], d["n"]
    root = _root(q, n, d.get("theta_pin"))
    C = codes.code_from_support(q, n, d["P"], root)
    reports = []

    stored = oracle.OracleReport("descriptor_consistency", 1)
    for key, poly in (("check_poly", C.check_poly), ("gen_poly", C.gen_poly)):
        if key in d and list(d[key]) != list(poly.coeffs):
            stored.failures.append({"field": key, "stored": d[key], "recomputed": list(poly.coeffs)})
    cert = None
    if "certificate" in d:
        cert = codes.certificate_for(C, int(d["certificate"]["s"]), int(d["certificate"]["t"]))
        stored.failures.extend({"certificate": p} for p in cert.problems())
        if "dual_check_poly" in d and list(d["dual_check_poly"]) != list(cert.dual_check_poly.coeffs):
            stored.failures.append({"field": "dual_check_poly", "stored": d["dual_check_poly"]})
    reports.append(stored)

    reports.append(oracle.oracle_dual_basis(C))
    # the brute-force enumerator materialises every word, so keep it small
    bound = min(enum_bound, oracle.DEFAULT_ORACLE_ENUM_BOUND)
    if q ** max(C.dimension, n - C.dimension) <= bound:
        reports.append(oracle.oracle_weight_equality(C, bound))
    if cert is not None and not stored.failures:
        rho = qperm_make(cert.s, cert.t, n, q)
        reports.append(oracle.oracle_orbit_parity(q, n, rho))
    if n <= max_n:
        reports.append(oracle.oracle_splitting_search(q, n, max_n))
    return reports


def cmd_verify(args) -> int:
    if args.grid:
        reports = oracle.oracle_grid(max_n=args.max_n)
    else:
        if args.descriptor is not None:
            d = _load_descriptor(args.descriptor)
        else:
            _need(args, "q", "n")
            args.distance = False
            d, _ = _construct_descriptor(args.q, args.n, args)
        try:
            reports = verify_descriptor(d, args.max_n, args.enum_bound)
        except NotInvariant as exc:
            fail = oracle.OracleReport("descriptor_consistency", 1, [{"error": "NotInvariant", "message": str(exc)}])
            reports = [fail]
    for r in reports:
        if args.json:
            print(r.to_json())
        else:
            where = f" q={r.details['q']} n={r.details['n']}" if "q" in r.details else ""
            print(f"{'PASS' if r.passed else 'FAIL'} {r.claim}{where} ({r.instances_checked} checked)")
            for f in r.failures:
                print(f"  counterexample: {json.dumps(f, sort_keys=True)}")
    ok = all(r.passed for r in reports)
    if not args.json:
        print(f"{sum(r.passed for r in reports)}/{len(reports)} reports pass")
    return 0 if ok else 1


# -- argument parsing ---------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"{text} is not positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_positive, help="field size (odd prime power)")
    common.add_argument("--n", type=_positive, help="code length")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--pin-theta", metavar="EXPR", help='select theta, e.g. "theta^2=2"')
    common.add_argument("--u", type=int, help="exponent u of the translation 2^u n'")
    common.add_argument("--max-n", type=_positive, default=oracle.DEFAULT_MAX_N)
    common.add_argument("--enum-bound", type=_positive, default=codes.DEFAULT_ENUM_BOUND)
    common.add_argument("--workers", type=_positive, default=1, help="processes for weight enumeration")

    parser = argparse.ArgumentParser(prog="isodual", description="Iso-self-dual cyclic codes from duadic splittings.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("exists", parents=[common], help="decide existence of a splitting")
    p = sub.add_parser("construct", parents=[common], help="build a code and its certificate")
    p.add_argument("--mds", action="store_true", help="the MDS code of length q+1")
    p.add_argument("--distance", action="store_true", help="also enumerate the weight distribution")
    p = sub.add_parser("mds", parents=[common], help="the MDS code of length q+1")
    p.add_argument("--distance", action="store_true", help="also enumerate the weight distribution")
    p = sub.add_parser("enumerate", parents=[common], help="every splitting for one translation")
    p.add_argument("--cap", type=_positive, default=2**16)
    sub.add_parser("factor", parents=[common], help="factor X^n - 1 over GF(q)")
    sub.add_parser("cosets", parents=[common], help="q-cyclotomic cosets of Z_n")
    p = sub.add_parser("verify", parents=[common], help="run the brute-force oracles")
    p.add_argument("descriptor", nargs="?", help="descriptor JSON file, or - for stdin")
    p.add_argument("--grid", action="store_true", help="splitting search over q in {3..13}, n <= max-n")
    p.add_argument("--mds", action="store_true")
    return parser


COMMANDS = {
    "exists": cmd_exists,
    "construct": cmd_construct,
    "mds": cmd_mds,
    "enumerate": cmd_enumerate,
    "factor": cmd_factor,
    "cosets": cmd_cosets,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except NEGATIVE as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, IsodualError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
