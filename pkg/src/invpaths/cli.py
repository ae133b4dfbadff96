"""Command-line front end: ``python -m invpaths <verb> ...``.

Exit status is 0 on success, 1 when some identity or contract fails, and 2
for usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import bijections, paths, perms, qpoly, sign_involutions
from .errors import BoundError, DomainError, ParseError
from .genfun import GenFunSpec, genfun
from .identities import IDENTITY_IDS, closed_form, get_identity
from .rsk import rsk, transpose_involution
from .verify import MAIN_BOUND, VerificationReport, check, check_involution_contracts, check_range, run_suite

MAPS = ("delta", "delta-inv", "xi", "xi-inv", "to-grand", "from-grand", "rsk", "transpose")
CASES = tuple(c.value for c in sign_involutions.Case)


class UsageError(ValueError):
    pass


def _points(pts) -> list[list[int]]:
    return [[p.x, p.y] for p in pts]


def _path_details(label: str, p: str) -> dict:
    return {
        f"{label}_endpoint": list(paths.endpoint(p)),
        f"{label}_peaks": _points(paths.peaks(p)),
        f"{label}_sump": paths.sump(p),
    }


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return value


# -- verbs ------------------------------------------------------------------


def cmd_stats(args) -> tuple[dict, int]:
    p = perms.parse_perm(_need(args, "perm"))
    s = perms.stats(p)
    return {
        "perm": perms.format_perm(p),
        "inv": s.inv,
        "des_set": list(s.des_set),
        "des": s.des,
        "maj": s.maj,
        "ldes": s.ldes,
        "lead": s.lead,
        "involution": perms.is_involution(p),
        "avoids_321": not perms.contains_pattern(p, "321"),
        "avoids_123": not perms.contains_pattern(p, "123"),
    }, 0


def cmd_map(args) -> tuple[dict, int]:
    m = args.name
    rec: dict = {"map": m}
    if m in ("delta", "to-grand", "rsk", "transpose"):
        sigma = perms.parse_perm(_need(args, "perm"))
        rec["input"] = perms.format_perm(sigma)
        if m == "delta":
            out = bijections.delta(sigma)
            rec.update(output=out, **_path_details("output", out))
        elif m == "to-grand":
            tau = bijections.delta(sigma)
            out = bijections.xi(tau)
            rec.update(output=out, partial=tau, **_path_details("output", out))
        elif m == "rsk":
            P, Q = rsk(sigma)
            rec.update(output=f"P={P.to_json()} Q={Q.to_json()}", P=[list(r) for r in P.rows],
                       Q=[list(r) for r in Q.rows])
        else:
            out = transpose_involution(sigma)
            rec.update(output=perms.format_perm(out), des_set_in=list(perms.descent_set(sigma)),
                       des_set_out=list(perms.descent_set(out)))
        return rec, 0

    p = paths.parse_path(_need(args, "path"))
    rec["input"] = p
    if m == "delta-inv":
        sigma = bijections.delta_inv(p)
        cp = bijections.coupling(p)
        rec.update(output=perms.format_perm(sigma), cycles=perms.format_cycles(sigma),
                   couples=[list(c) for c in cp.couples], fixed_points=list(cp.unmatched))
    elif m == "xi":
        out = bijections.xi(p)
        unmatched = bijections.unmatched_north(p)
        rec.update(output=out, unmatched_north=list(unmatched),
                   flipped=list(unmatched[: (len(unmatched) + 1) // 2]),
                   **_path_details("input", p), **_path_details("output", out))
    elif m == "xi-inv":
        out = bijections.xi_inv(p, args.n)
        rec.update(output=out, **_path_details("output", out))
    else:
        sigma = bijections.from_grand(p, args.n if args.n is not None else len(p))
        rec.update(output=perms.format_perm(sigma), cycles=perms.format_cycles(sigma))
    return rec, 0


def cmd_involution(args) -> tuple[dict | list[dict], int]:
    case = sign_involutions.Case(_case_name(args.case))
    if args.path is not None:
        p = paths.parse_path(args.path)
        image = sign_involutions.apply(case, p)
        return {
            "case": case.value,
            "input": p,
            "output": image,
            "fixed": image == p,
            "subset_index": paths.b_subset_index(p),
            "sump_in": paths.sump(p),
            "sump_out": paths.sump(image),
        }, 0
    n = _need(args, "n")
    report = check_involution_contracts(case, n, allow_large=args.allow_large)
    return report.to_dict(), 0 if report.equal else 1


def _case_name(text: str) -> str:
    for c in CASES:
        if c.lower() == text.lower():
            return c
    raise UsageError(f"unknown case {text!r}; expected one of {CASES}")


def cmd_enumerate(args) -> tuple[list[dict], int]:
    family = perms.Family(args.family)
    n = _need(args, "n")
    if args.where:
        stat, value = perms.parse_where(args.where)
        stream = perms.enumerate_filtered(family, n, stat, value)
    else:
        stream = perms.enumerate_family(family, n)
    return [{"perm": perms.format_perm(p)} for p in stream], 0


def cmd_genfun(args) -> tuple[dict, int]:
    where = perms.parse_where(args.where) if args.where else None
    spec = GenFunSpec(args.family, _need(args, "n"), args.weight, args.sign, args.scale, where)
    poly = genfun(spec)
    return {"family": spec.family.value, "n": spec.n, "output": str(poly), "poly": poly.to_pairs()}, 0


def cmd_qpoly(args) -> tuple[dict, int]:
    kind = args.kind
    if kind == "int":
        poly = qpoly.q_int(_need(args, "n"))
    elif kind == "binom":
        poly = qpoly.q_binomial(_need(args, "n"), _need(args, "k"))
    elif kind == "espec":
        poly = qpoly.e_spec(_need(args, "k"), _need(args, "a"), _need(args, "b"))
    elif kind == "closed":
        ident = get_identity(_need(args, "id"))
        params = {}
        if ident.param:
            params[ident.param] = _need(args, ident.param)
        poly = closed_form(ident.id, _need(args, "n"), **params)
    else:
        poly = qpoly.LaurentPolynomial.parse(_need(args, "poly"))
    rec = {"kind": kind, "poly": poly.to_pairs(), "output": str(poly)}
    if args.at is not None:
        value = poly.evaluate(args.at)
        rec.update(at=args.at, value=value, output=str(value))
    return rec, 0


def cmd_verify(args) -> tuple[dict | list[dict], int]:
    ident = get_identity(_need(args, "id"))
    n = _need(args, "n")
    if ident.param:
        value = getattr(args, ident.param)
        if value is None:
            reports = check_range(ident.id, n, allow_large=args.allow_large)
        else:
            reports = [check(ident.id, n, allow_large=args.allow_large, **{ident.param: value})]
    else:
        reports = [check(ident.id, n, allow_large=args.allow_large)]
    status = 0 if all(r.equal for r in reports) else 1
    if len(reports) == 1:
        return reports[0].to_dict(), status
    return [r.to_dict() for r in reports], status


def cmd_verify_all(args) -> tuple[list[dict], int]:
    reports = list(run_suite(args.n_max))
    return [r.to_dict() for r in reports], 0 if all(r.equal for r in reports) else 1


# -- rendering --------------------------------------------------------------


def _render_text(verb: str, result) -> str:
    if verb in ("verify", "verify-all") or (verb == "involution" and "equal" in _first(result)):
        rows = result if isinstance(result, list) else [result]
        return _report_table(rows, summary=verb == "verify-all")
    if verb == "enumerate":
        return "\n".join(r["perm"] for r in result)
    if verb == "stats":
        return "\n".join(f"{k}: {_plain(v)}" for k, v in result.items())
    if verb == "involution":
        return f"{result['output']}\nfixed: {str(result['fixed']).lower()}"
    return str(result["output"])


def _first(result) -> dict:
    return result[0] if isinstance(result, list) and result else result if isinstance(result, dict) else {}


def _plain(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, list):
        return "{" + ",".join(map(str, v)) + "}"
    return "-" if v is None else str(v)


def _report_table(rows: list[dict], summary: bool) -> str:
    out = []
    if summary:
        out.append(f"{'id':<12} {'n':>3} {'params':<8} {'result':<8} {'ms':>7}")
    for r in rows:
        params = ",".join(f"{k}={v}" for k, v in r["params"].items())
        verdict = "equal" if r["equal"] else "MISMATCH"
        if summary:
            out.append(f"{r['id']:<12} {r['n']:>3} {params:<8} {verdict:<8} {r['elapsed_ms']:>7}")
        else:
            label = VerificationReport.from_dict(r).label
            out.append(f"{label}: {verdict}")
            out.append(f"  lhs: {r['lhs_text']}")
            out.append(f"  rhs: {r['rhs_text']}")
            out.extend(f"  failure: {f}" for f in r["failures"])
        if summary and not r["equal"]:
            out.append(f"  lhs: {r['lhs_text']}")
            out.append(f"  rhs: {r['rhs_text']}")
            out.extend(f"  failure: {f}" for f in r["failures"])
    if summary:
        bad = sum(not r["equal"] for r in rows)
        out.append(f"{len(rows)} checks, {bad} mismatches")
    return "\n".join(out)


def _render_csv(result) -> str:
    rows = result if isinstance(result, list) else [result]
    flat = [{k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()} for r in rows]
    if not flat:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue().rstrip("\n")


def render(verb: str, result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result)
    if fmt == "csv":
        return _render_csv(result)
    return _render_text(verb, result)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="invpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("stats", parents=[common], help="statistics of a permutation")
    p.add_argument("--perm", required=True)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("name", choices=MAPS)
    p.add_argument("--perm")
    p.add_argument("--path")
    p.add_argument("--n", type=int)

    p = sub.add_parser("involution", parents=[common], help="apply a sign-reversing involution or sweep its domain")
    p.add_argument("case", help="Phi1, Phi2, Phi3 or Phi4")
    p.add_argument("--path")
    p.add_argument("--n", type=int)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("enumerate", parents=[common], help="list a permutation family")
    p.add_argument("--family", required=True, choices=[f.value for f in perms.Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--where", help="STAT=VALUE with STAT in lead, des, maj, ldes")

    p = sub.add_parser("genfun", parents=[common], help="signed weighted generating function")
    p.add_argument("--family", required=True, choices=[f.value for f in perms.Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", choices=perms.STAT_NAMES)
    p.add_argument("--sign", choices=perms.STAT_NAMES)
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--where")

    p = sub.add_parser("qpoly", parents=[common], help="q-integers, q-binomials, specialisations, closed forms")
    p.add_argument("kind", choices=("int", "binom", "espec", "closed", "parse"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--id", choices=IDENTITY_IDS)
    p.add_argument("--poly")
    p.add_argument("--at", type=int, help="evaluate at this integer")

    p = sub.add_parser("verify", parents=[common], help="check one identity")
    p.add_argument("--id", required=True, choices=IDENTITY_IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("verify-all", parents=[common], help="check every identity and involution")
    p.add_argument("--n-max", type=int, default=MAIN_BOUND,
                   help=f"largest permutation length to enumerate (default {MAIN_BOUND})")
    return parser


COMMANDS = {
    "stats": cmd_stats,
    "map": cmd_map,
    "involution": cmd_involution,
    "enumerate": cmd_enumerate,
    "genfun": cmd_genfun,
    "qpoly": cmd_qpoly,
    "verify": cmd_verify,
    "verify-all": cmd_verify_all,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, status = COMMANDS[args.verb](args)
    except (UsageError, DomainError, ParseError, BoundError, ValueError, ArithmeticError) as exc:
        print(f"invpaths {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    text = render(args.verb, result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
