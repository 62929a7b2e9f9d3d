"""Command-line front end: batch verification and computation commands.

Every command takes the field size explicitly via --q (an integer prime power
or "p^r") and produces deterministic plain, json, or csv output.  Exit status
is 0 exactly when everything requested passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gf import FieldSpec, field_make
from .groups import group_id
from .hilbert import (
    NotGorensteinSymmetricError,
    from_free_module,
    gorenstein_exponent,
)
from .invariants import basis_degrees, run_identity_suite, verify_h_star_symmetry
from .poly import parse_poly
from .ringcalc import (
    dimension_table,
    hsop_degrees,
    relative_trace,
    subalgebra_nonmembership_h1,
    verify_free_basis,
    verify_generators,
)

_BASIS_GROUP_FLAG = {"p2": "P", "sl2": "S", "gl2": "D"}


def parse_prime_power(text: str) -> tuple[int, int]:
    """Accept "p^r" or a plain prime-power integer; return (p, r)."""
    if "^" in text:
        ps, _, rs = text.partition("^")
        p, r = int(ps), int(rs)
    else:
        n = int(text)
        if n < 2:
            raise ValueError(f"{text!r} is not a prime power")
        p = next(d for d in range(2, n + 1) if n % d == 0)
        r = 0
        while n % p == 0:
            n //= p
            r += 1
        if n != 1:
            raise ValueError(f"{text!r} is not a prime power")
    return p, r


def _field_from_args(args, parser) -> FieldSpec:
    try:
        p, r = parse_prime_power(args.q)
        return field_make(p, r)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(rows: list[str]) -> str:
    return "\n".join(rows) + "\n"


def cmd_identities(args, parser) -> int:
    spec = _field_from_args(args, parser)
    tag_results = run_identity_suite(spec)
    star_results = verify_h_star_symmetry(spec)
    results = tag_results + star_results
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "q": spec.q,
            "results": [
                {
                    "q": spec.q,
                    "tag": r.tag,
                    "status": r.status,
                    **({"witness": r.witness_text()} if not r.passed else {}),
                }
                for r in results
            ],
        }
        text = _json_text(payload)
    elif args.format == "csv":
        text = _csv_text([f"{r.tag},{r.status}" for r in results])
    else:
        lines = [f"{r.status} {r.tag}" for r in results]
        npass = sum(r.passed for r in tag_results)
        lines.append(f"{npass}/{len(tag_results)} identities PASS (q={spec.q})")
        lines.append(
            f"h-star symmetry: {'PASS' if all(r.passed for r in star_results) else 'FAIL'}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_dims(args, parser) -> int:
    spec = _field_from_args(args, parser)
    table = dimension_table(group_id(args.group, spec), args.max_deg)
    if args.format == "json":
        text = _json_text(table.to_json_dict())
    elif args.format == "csv":
        text = _csv_text(table.to_csv_rows())
    else:
        text = "\n".join(f"{d}: {v}" for d, v in enumerate(table.dims)) + "\n"
    _emit(text, args.out)
    return 0


def _series_for_group(spec: FieldSpec, group: str):
    basis_id = _BASIS_GROUP_FLAG[group]
    return from_free_module(
        basis_degrees(spec.q, basis_id), hsop_degrees(group, spec.q)
    )


def cmd_hilbert(args, parser) -> int:
    spec = _field_from_args(args, parser)
    series = _series_for_group(spec, args.group)
    payload = {"group": args.group, "q": spec.q, **series.to_json_dict()}
    if args.expand is not None:
        payload["expansion"] = series.expand(args.expand)
    if args.format == "json":
        text = _json_text(payload)
    elif args.format == "csv":
        if args.expand is None:
            parser.error("csv output for hilbert requires --expand")
        text = _csv_text([f"{d},{c}" for d, c in enumerate(payload["expansion"])])
    else:
        lines = [
            f"numerator: {payload['numerator']}",
            f"denominator: {payload['denominator']}",
        ]
        if args.expand is not None:
            lines.append(f"expansion: {payload['expansion']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_gorenstein(args, parser) -> int:
    spec = _field_from_args(args, parser)
    series = _series_for_group(spec, args.group)
    try:
        i = gorenstein_exponent(series)
        ok, payload = True, {"group": args.group, "q": spec.q, "i": i}
    except NotGorensteinSymmetricError as exc:
        ok, payload = False, {
            "group": args.group,
            "q": spec.q,
            "error": "not symmetric",
            "pair": list(map(list, exc.pair)),
        }
    if args.format == "json":
        text = _json_text(payload)
    elif args.format == "csv":
        text = _csv_text([f"{args.group},{spec.q},{payload.get('i', 'FAIL')}"])
    else:
        text = (f"i = {payload['i']}\n" if ok else f"not Gorenstein-symmetric: {payload['pair']}\n")
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_basis_check(args, parser) -> int:
    spec = _field_from_args(args, parser)
    report = verify_free_basis(spec, args.basis, args.max_deg)
    if args.format == "json":
        text = _json_text(report.to_json_dict())
    elif args.format == "csv":
        text = _csv_text(report.to_csv_rows())
    else:
        lines = [
            f"{d}: count={c} rank={r} dim={m}" for d, c, r, m in report.rows
        ]
        lines.append(
            f"{'PASS' if report.verdict else 'FAIL'} basis {args.basis} q={spec.q} "
            f"through degree {report.verified_through_degree}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if report.verdict else 1


def cmd_generators_check(args, parser) -> int:
    spec = _field_from_args(args, parser)
    if args.group not in ("sl2", "gl2"):
        parser.error("generators-check supports --group sl2 or gl2")
    report = verify_generators(spec, args.group, args.max_deg)
    if args.format == "json":
        text = _json_text(report.to_json_dict())
    elif args.format == "csv":
        text = _csv_text(report.to_csv_rows())
    else:
        lines = [f"{d}: count={c} rank={r} dim={m}" for d, c, r, m in report.rows]
        lines.append(
            f"{'PASS' if report.verdict else 'FAIL'} generators {args.group} q={spec.q}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if report.verdict else 1


def cmd_nonmembership_h1(args, parser) -> int:
    spec = _field_from_args(args, parser)
    try:
        report = subalgebra_nonmembership_h1(spec)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        text = _json_text(report.to_json_dict())
    elif args.format == "csv":
        d = report.to_json_dict()
        text = _csv_text([f"{k},{v}" for k, v in d.items()])
    else:
        text = (
            f"degree {report.degree} span rank {report.span_rank}, with h_1 {report.rank_with_h1}\n"
            f"h_1 outside span: {report.h1_outside_span}\n"
            f"controls: c21 in span {report.c21_in_span}, h_0 in span {report.h0_in_span}\n"
            f"{'PASS' if report.verdict else 'FAIL'}\n"
        )
    _emit(text, args.out)
    return 0 if report.verdict else 1


def cmd_trace(args, parser) -> int:
    spec = _field_from_args(args, parser)
    try:
        f = parse_poly(spec, args.poly)
    except (ValueError, KeyError) as exc:
        parser.error(f"cannot parse polynomial: {exc}")
    try:
        result = relative_trace(f, spec)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    if args.format == "json":
        text = _json_text({"q": spec.q, "input": f.to_text(), "trace": result.to_text()})
    else:
        text = result.to_text() + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcinv",
        description="Exact modular invariant theory of 2x2 groups on a vector and a covector.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=False, basis=False, max_deg=False, poly=False, expand=False):
        p.add_argument("--q", required=True, help='field size: prime power or "p^r"')
        if group:
            p.add_argument("--group", required=True, choices=["p2", "sl2", "gl2"])
        if basis:
            p.add_argument("--basis", required=True, choices=["P", "S", "G", "D"])
        if max_deg:
            p.add_argument("--max-deg", type=int, required=True, dest="max_deg")
        if poly:
            p.add_argument("--poly", required=True, help="polynomial in canonical text form")
        if expand:
            p.add_argument("--expand", type=int, default=None, metavar="DEGREE")
        p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("identities", help="run the full polynomial identity suite")
    common(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("dims", help="graded invariant dimensions by brute force")
    common(p, group=True, max_deg=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("hilbert", help="free-module Hilbert series (optionally expanded)")
    common(p, group=True, expand=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gorenstein", help="Gorenstein functional-equation exponent")
    common(p, group=True)
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("basis-check", help="free-basis certificate (count=rank=dim)")
    common(p, basis=True, max_deg=True)
    p.set_defaults(func=cmd_basis_check)

    p = sub.add_parser("generators-check", help="generating-set spanning certificate")
    common(p, group=True, max_deg=True)
    p.set_defaults(func=cmd_generators_check)

    p = sub.add_parser("nonmembership-h1", help="h_1 subalgebra membership test (q=3)")
    common(p)
    p.set_defaults(func=cmd_nonmembership_h1)

    p = sub.add_parser("trace", help="relative trace of a special-linear invariant")
    common(p, poly=True)
    p.set_defaults(func=cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
