"""Command-line interface.

Every subcommand prints a human-readable summary to stdout, writes JSON to
``--out`` when given and reports progress on stderr.  Exit codes: 0 success,
1 verification failure, 2 bad arguments, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .gf import FieldError, build_field, prime_power

EXIT_OK, EXIT_FAIL, EXIT_ARGS, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def _threads(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("FINMUB_THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _write(path: str | None, obj) -> None:
    if path is None:
        return
    with open(path, "w", encoding="utf-8") as fh:
        if isinstance(obj, str):
            fh.write(obj)
        else:
            json.dump(obj, fh, indent=1)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _field(q: int):
    p, r = prime_power(q)
    return build_field(p, r)


# ---------------------------------------------------------------------------


def cmd_search(args) -> int:
    from .search import DEFAULT_TABLE_CAP, search_full

    cap = args.max_table_bytes if args.max_table_bytes is not None else DEFAULT_TABLE_CAP
    _progress(f"searching d={args.dim} q={args.q}")
    rep = search_full(
        args.dim, args.q, threads=_threads(args.threads), galois=args.galois_quotient, max_bytes=cap, streaming=args.streaming
    )
    out = rep.to_json()
    out["nu_witness"] = rep.nu_witness.to_json() if rep.nu_witness is not None else None
    _write(args.out, out)
    print(f"d={rep.d} q={rep.q} M={rep.M} nu={rep.nu} witnesses={len(rep.witnesses)}")
    print(f"nodes={rep.stats.get('nodes')} prunes={rep.stats.get('prunes')} seconds={rep.stats.get('seconds'):.2f}")
    return EXIT_OK


def _certificates(obj) -> list:
    from .hermitian import MubSet

    if "witnesses" in obj:
        certs = [MubSet.from_json(w) for w in obj["witnesses"]]
        if obj.get("nu_witness"):
            certs.append(MubSet.from_json(obj["nu_witness"]))
        return certs
    return [MubSet.from_json(obj)]


def cmd_verify(args) -> int:
    from .hermitian import verify_mub_set

    with open(args.cert, encoding="utf-8") as fh:
        obj = json.load(fh)
    certs = _certificates(obj)
    reports = [verify_mub_set(c) for c in certs]
    for k, rep in enumerate(reports):
        if len(reports) > 1:
            print(f"[{k}]", end=" ")
        print(rep.summary())
    _write(
        args.out,
        [
            {"passed": r.passed, "checks": {k: list(v) for k, v in r.checks.items()}, "violations": [v.__dict__ for v in r.violations]}
            for r in reports
        ],
    )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _report(mubs) -> int:
    from .hermitian import verify_mub_set

    rep = verify_mub_set(mubs)
    print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_construct(args) -> int:
    from .constructions import WfParams, admissible_q, dardo71_report, tensor_mubs, wf_mubs, wf_needs_twist
    from .hermitian import load_certificate

    if args.kind == "wf":
        params = WfParams(args.l, args.k, _field(args.q))
        mubs = wf_mubs(params)
        print(f"dimension {mubs.d}: {mubs.size} bases over q={args.q} (twist={'yes' if wf_needs_twist(params) else 'no'})")
        _write(args.out, mubs.to_json())
        return _report(mubs)
    if args.kind == "tensor":
        mubs = tensor_mubs(load_certificate(args.a), load_certificate(args.b))
        print(f"dimension {mubs.d}: {mubs.size} bases")
        _write(args.out, mubs.to_json())
        return _report(mubs)
    if args.kind == "admissible":
        qs = admissible_q(args.dim, args.bound)
        for p, r in qs:
            print(f"q = {p ** r} = {p}^{r}")
        if not qs:
            print("none")
        _write(args.out, {"d": args.dim, "bound": args.bound, "q": [[p, r] for p, r in qs]})
        return EXIT_OK
    rows = dardo71_report()
    print(" k  H1  D0  MU")
    for row in rows:
        print(f"{row['k']:2d}  {'yes' if row['H1_hadamard'] else 'no':3s} {'yes' if row['D0_hadamard'] else 'no':3s} {'yes' if row['mutually_unbiased'] else 'no'}")
    _write(args.out, rows)
    return EXIT_OK


def cmd_quiver(args) -> int:
    from .nfield import reduce_mod, verify_quiver_char0

    if args.action == "verify-char0":
        rep = verify_quiver_char0()
        print(rep.summary())
        _write(args.out, {"passed": rep.passed, "checks": {k: list(v) for k, v in rep.checks.items()}})
        return EXIT_OK if rep.passed else EXIT_FAIL
    mubs = reduce_mod(args.q)
    _write(args.out, mubs.to_json())
    return _report(mubs)


def cmd_polysys(args) -> int:
    from .polysys import generate_system

    sysm = generate_system(args.dim, args.bases, args.c)
    cnt = sysm.counts()
    print(f"{len(sysm.polys)} polynomials in {len(sysm.variables)} variables: I={cnt['I']} II={cnt['II']} III={cnt['III']}")
    if args.format == "json":
        _write(args.out, sysm.to_json())
    else:
        _write(args.out, sysm.to_text())
    if args.out is None and args.format == "txt":
        sys.stdout.write(sysm.to_text())
    return EXIT_OK


def cmd_tables(args) -> int:
    from .tables import run_table

    print(f"table {args.table}: expected (M, nu) vs computed")
    ok_all = True
    rows = []
    for cell, got, secs in run_table(args.table, args.max_q, threads=_threads(args.threads), progress=_progress):
        ok = got == (cell.M, cell.nu)
        ok_all &= ok
        rows.append({"d": cell.d, "q": cell.q, "expected": [cell.M, cell.nu], "computed": list(got), "pass": ok, "seconds": secs})
        print(f"d={cell.d} q={cell.q:3d}  expected ({cell.M},{cell.nu})  computed ({got[0]},{got[1]})  {'PASS' if ok else 'FAIL'}")
    _write(args.out, rows)
    return EXIT_OK if ok_all else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="finmub", description="Mutually unbiased bases over finite fields")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("search", help="exhaustive search for M and nu")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--threads", type=int)
    s.add_argument("--galois-quotient", action="store_true")
    s.add_argument("--max-table-bytes", type=int)
    s.add_argument("--streaming", action="store_true", help="classify on the fly above the table cap")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="check a certificate or search report")
    v.add_argument("cert")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="known constructions")
    csub = c.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    w = csub.add_parser("wf")
    w.add_argument("--l", type=int, required=True)
    w.add_argument("--k", type=int, default=1)
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--out")
    t = csub.add_parser("tensor")
    t.add_argument("a")
    t.add_argument("b")
    t.add_argument("--out")
    a = csub.add_parser("admissible")
    a.add_argument("--dim", type=int, required=True)
    a.add_argument("--bound", type=int, required=True)
    a.add_argument("--out")
    f = csub.add_parser("dardo71", help="per-generator status of the q=71 fixtures")
    f.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    qv = sub.add_parser("quiver", help="the hyperbolic example in dimension 6")
    qsub = qv.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q0 = qsub.add_parser("verify-char0")
    q0.add_argument("--out")
    q1 = qsub.add_parser("reduce")
    q1.add_argument("--q", type=int, required=True)
    q1.add_argument("--out")
    qv.set_defaults(func=cmd_quiver)

    p = sub.add_parser("polysys", help="export the defining polynomial system")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--bases", type=int, required=True)
    p.add_argument("--c", type=int, default=-1)
    p.add_argument("--format", choices=["json", "txt"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_polysys)

    tb = sub.add_parser("tables", help="reproduce the published tables")
    tb.add_argument("--table", type=int, choices=[1, 2, 3], required=True)
    tb.add_argument("--max-q", type=int)
    tb.add_argument("--threads", type=int)
    tb.add_argument("--out")
    tb.set_defaults(func=cmd_tables)
    return ap


def run(argv=None) -> int:
    from .search import TableCapError

    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except TableCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FieldError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser"]
