"""Command-line surface: single-value queries, verification runs and table
generation, all with exact rational output.

Each invocation writes one line-delimited JSON object per result to stdout
(``--format text`` for humans, ``--format csv`` for the satake table).
Timing goes to stderr so that identical invocations produce byte-identical
stdout.  Exit codes: 0 pass/info, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import boundary, charclass, satake, tautring
from .rationals import bernoulli, boundary_constant, zeta_negative_odd

__all__ = ["main", "build_parser"]


def _envelope(command: str, status: str, payload: dict) -> dict:
    return {"command": command, "status": status, "payload": payload}


def _emit(envelopes: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for env in envelopes:
            out.write(json.dumps(env, ensure_ascii=False) + "\n")
        return
    if fmt == "text":
        for env in envelopes:
            out.write(f"command: {env['command']}\n")
            out.write(f"status: {env['status']}\n")
            for key, value in env["payload"].items():
                out.write(f"{key}: {_text_value(value)}\n")
        return
    raise ValueError(f"unknown format {fmt!r}")


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise ValueError(f"--{name} must be >= 1, got {value}")
    return value


# -- command handlers ----------------------------------------------------


def _cmd_bernoulli(args) -> list[dict]:
    if args.n < 0:
        raise ValueError(f"--n must be >= 0, got {args.n}")
    return [_envelope("bernoulli", "info", {"n": args.n, "value": str(bernoulli(args.n))})]


def _cmd_zeta(args) -> list[dict]:
    g = _positive("g", args.g)
    return [_envelope("zeta", "info", {"g": g, "value": str(zeta_negative_odd(g))})]


def _cmd_constant(args) -> list[dict]:
    g = _positive("g", args.g)
    return [_envelope("constant", "info", {"g": g, "value": str(boundary_constant(g))})]


def _cmd_ring(args) -> list[dict]:
    g = _positive("g", args.g)
    ring = tautring.build_ring(g)
    if args.show == "dims":
        payload = {"g": g, "socle_degree": ring.socle_degree, "dims": ring.dimension_profile()}
        return [_envelope("ring", "info", payload)]
    if args.show == "basis":
        if args.degree is not None:
            degrees = [args.degree]
        else:
            degrees = list(range(ring.socle_degree + 1))
        basis = {str(d): [str(m) for m in ring.basis_monomials(d)] for d in degrees}
        return [_envelope("ring", "info", {"g": g, "basis": basis})]
    if args.show == "pairing":
        if args.degree is None:
            raise ValueError("--degree is required with --show pairing")
        matrix = ring.pairing_matrix(args.degree)
        det = tautring.determinant(matrix)
        payload = {
            "g": g,
            "degree": args.degree,
            "matrix": [[str(x) for x in row] for row in matrix],
            "nonsingular": det != 0,
        }
        return [_envelope("ring", "info", payload)]
    raise ValueError(f"unknown --show value {args.show!r}")


def _cmd_reduce(args) -> list[dict]:
    g = _positive("g", args.g)
    ring = tautring.build_ring(g)
    poly = ring.ring.parse(args.monomial)
    nf = ring.normal_form(poly)
    payload = {"g": g, "input": args.monomial, "value": str(nf)}
    return [_envelope("reduce", "info", payload)]


def _verify_grr(g: int) -> dict:
    report = boundary.grr_report(g)
    status = "pass" if report.magnitude_ok else "fail"
    return _envelope("verify", status, {"check": "grr", **report.as_payload()})


def _verify_borel_serre(g: int) -> dict:
    report = charclass.borel_serre_check(g)
    status = "pass" if report.ok else "fail"
    return _envelope("verify", status, {"check": "borel-serre", **report.as_payload()})


def _verify_ring(g: int) -> dict:
    ring = tautring.build_ring(g)
    dims = ring.dimension_profile()
    lam_g_sq = ring.ring.monomial(tuple(0 if i < g - 1 else 2 for i in range(g)))
    relation = ring.ring.one
    for part in ring.relation_components.values():
        relation = relation + part
    one = ring.ring.one
    checks = {
        "total_dimension_2^g": sum(dims) == 2 ** g,
        "palindromic_profile": dims == dims[::-1],
        "one_dimensional_socle": dims[-1] == 1,
        "top_chern_squares_to_zero": not ring.normal_form(lam_g_sq),
        "relation_product_reduces_to_one": ring.normal_form(relation) == ring.normal_form(one),
        "pairing_nonsingular_all_degrees": all(
            tautring.determinant(ring.pairing_matrix(d)) != 0 for d in range(ring.socle_degree + 1)
        ),
    }
    status = "pass" if all(checks.values()) else "fail"
    return _envelope("verify", status, {"check": "ring", "g": g, "dims": dims, **checks})


def _verify_recursion(g: int) -> dict:
    report = satake.recursion_check(g)
    status = "pass" if report.ok else "fail"
    return _envelope("verify", status, {"check": "recursion", **report.as_payload()})


_CHECKS = {
    "grr": _verify_grr,
    "borel-serre": _verify_borel_serre,
    "ring": _verify_ring,
    "recursion": _verify_recursion,
}


def _cmd_verify(args) -> list[dict]:
    if args.gmax is None and args.g is None:
        raise ValueError("verify requires --g or --gmax")
    if args.gmax is not None:
        genera = list(range(1, _positive("gmax", args.gmax) + 1))
    else:
        genera = [_positive("g", args.g)]
    names = list(_CHECKS) if args.check == "all" else [args.check]
    if "ring" in names:
        cap = tautring.max_genus_cap()
        for g in genera:
            if g > cap:
                raise ValueError(
                    f"ring construction is capped at genus {cap} (set {tautring.MAX_GENUS_ENV} to raise it), got {g}"
                )
    envelopes = []
    for g in genera:
        for name in names:
            envelopes.append(_CHECKS[name](g))
    return envelopes


def _cmd_satake(args) -> list[dict]:
    g = _positive("g", args.g)
    rows = satake.stratum_table(g, args.i)
    envelopes = [_envelope("satake", "info", row) for row in rows]
    if args.p is not None:
        value = satake.p_rank_constant(g, args.p)
        envelopes.append(
            _envelope("satake", "info", {"g": g, "p": args.p, "p_rank_zero_constant": str(value)})
        )
    return envelopes


def _satake_csv(envelopes: list[dict], out) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["g", "i", "coefficient", "label", "matches_thm34"])
    for env in envelopes:
        row = env["payload"]
        writer.writerow(
            [
                row["g"],
                row["i"],
                row["coefficient"],
                "{" + ",".join(str(x) for x in row["label"]) + "}",
                "" if row["matches_thm34"] is None else str(row["matches_thm34"]).lower(),
            ]
        )
    out.write(buffer.getvalue())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abtaut",
        description="Exact computations in the tautological ring of moduli of abelian varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, csv_ok=False):
        choices = ["json", "text", "csv"] if csv_ok else ["json", "text"]
        p.add_argument("--format", choices=choices, default="json", help="output format")

    p = sub.add_parser("bernoulli", help="Bernoulli number B_n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_bernoulli)

    p = sub.add_parser("zeta", help="zeta(1-2g)")
    p.add_argument("--g", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser("constant", help="the boundary constant (-1)^g zeta(1-2g)")
    p.add_argument("--g", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_constant)

    p = sub.add_parser("ring", help="tautological ring structure queries")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--show", choices=["dims", "basis", "pairing"], required=True)
    p.add_argument("--degree", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_ring)

    p = sub.add_parser("reduce", help="normal form of a polynomial in l1..lg")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--monomial", type=str, required=True, help="e.g. 'l1^6' or '2*l2 - l1^2'")
    add_format(p)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("verify", help="run a verification")
    p.add_argument("--check", choices=["grr", "borel-serre", "ring", "recursion", "all"], required=True)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--gmax", type=int, default=None, help="run the check for every genus 1..GMAX")
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("satake", help="stratum-class constant table")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--p", type=int, default=None, help="also emit the p-rank-zero constant for this prime")
    add_format(p, csv_ok=True)
    p.set_defaults(handler=_cmd_satake)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        envelopes = args.handler(args)
    except ValueError as exc:
        print(f"abtaut: error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if args.format == "csv":
        _satake_csv(envelopes, sys.stdout)
    else:
        _emit(envelopes, args.format, sys.stdout)
    print(f"elapsed_ms={elapsed_ms:.3f}", file=sys.stderr)
    return 1 if any(env["status"] == "fail" for env in envelopes) else 0


if __name__ == "__main__":
    sys.exit(main())
