"""Command-line client.

Thin wrapper over the core package: each subcommand shapes its output with
the same pydantic models the service uses and writes JSON lines or CSV.

    overq pbar --max 10
    overq stable --n 5 --format csv
    overq enumerate --n 3
    overq verify th2 --seq phi --alpha 1 --beta 0 --kmax 4 --max 120

Exit codes: 0 = success / all checks pass, 1 = identity violation,
2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import pydantic

from .arith import SEQUENCE_NAMES
from .identities import IDENTITY_IDS, run_identity
from .overpartitions import ENUMERATION_CAP, enumerate_overpartitions, pbar, s_row
from .schemas import STableRequest, VerifyRequest, verify_row


def _emit(records: list[dict], fieldnames: list[str], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    else:
        writer = csv.DictWriter(out, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(records)


def cmd_pbar(args, out) -> int:
    records = [{"n": n, "value": str(pbar(n))} for n in range(args.max + 1)]
    _emit(records, ["n", "value"], args.format, out)
    return 0


def cmd_stable(args, out) -> int:
    req = STableRequest(n_max=args.n, method=args.method)
    records = [
        {"n": n, "k": k, "value": str(v)}
        for n in range(1, req.n_max + 1)
        for k, v in enumerate(s_row(n, req.method), start=1)
    ]
    _emit(records, ["n", "k", "value"], args.format, out)
    return 0


def cmd_enumerate(args, out) -> int:
    if not 0 <= args.n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration needs 0 <= n <= {ENUMERATION_CAP}")
    for op in enumerate_overpartitions(args.n):
        out.write(op.render() + "\n")
    return 0


def cmd_verify(args, out) -> int:
    req = VerifyRequest(
        identity=args.identity,
        seq=args.seq,
        alpha=args.alpha,
        beta=args.beta,
        k=args.k,
        k_max=args.kmax,
        n_max=args.max,
    )
    report = run_identity(
        req.identity, seq=req.seq, alpha=req.alpha, beta=req.beta,
        k=req.k, k_max=req.k_max, n_max=req.n_max,
    )
    records = []
    for row in report.rows:
        vr = verify_row(report, row)
        records.append({
            "identity_id": vr.identity_id,
            "params": vr.params if args.format == "json" else json.dumps(vr.params),
            "n": vr.n,
            "lhs": vr.lhs,
            "rhs": vr.rhs,
            "pass": vr.ok,
        })
    _emit(records, ["identity_id", "params", "n", "lhs", "rhs", "pass"],
          args.format, out)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    summary = "PASS" if report.passed else f"FAIL ({len(report.violations)} violations)"
    print(f"{report.identity_id}: {summary} "
          f"[{len(report.rows)} checks, {report.elapsed:.2f}s]", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overq")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("pbar", help="table of overpartition counts")
    p.add_argument("--max", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(func=cmd_pbar)

    p = sub.add_parser("stable", help="table of S(k, n) part counts")
    p.add_argument("--n", type=int, required=True, help="largest n in the table")
    p.add_argument("--method", choices=("series", "enumerate"), default="series")
    add_output_flags(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("enumerate", help="list the overpartitions of n")
    p.add_argument("--n", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run one identity checker")
    p.add_argument("identity", choices=IDENTITY_IDS)
    p.add_argument("--seq", default="phi", choices=SEQUENCE_NAMES)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--max", type=int, default=120)
    add_output_flags(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.out:
            with open(args.out, "w", newline="") as fh:
                return args.func(args, fh)
        if args.format == "csv":
            # csv wants universal newline handling
            buf = io.StringIO(newline="")
            code = args.func(args, buf)
            sys.stdout.write(buf.getvalue())
            return code
        return args.func(args, sys.stdout)
    except (ValueError, pydantic.ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
