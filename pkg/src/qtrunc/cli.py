"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a verification failure or an
inequality violation (including a conjecture finding) was found, 2 on a
usage or configuration error.
"""

from __future__ import annotations

import argparse
import os
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import __version__
from .identities import KINDS as IDENTITY_KINDS
from .identities import IdentityId, InvalidIdentityError, verify
from .inequalities import FAMILY_KINDS, FamilyId, crosscheck_conj2, crosscheck_rr, scan
from .partitions import PartitionFunctionId, pf_crosscheck, table
from . import reports

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FUNCTIONS = {"p": "P", "overp": "OVERP", "pod": "POD", "jmr": "JMR", "t": "T3", "t3": "T3"}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtrunc", description="Exact truncated q-series toolkit.")
    parser.add_argument("--version", action="version", version=f"qtrunc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", choices=["csv", "json"], default=default_format)
        p.add_argument("--output", "-o", help="write here instead of standard output")
        p.add_argument("--metadata", action="store_true",
                       help="add a run-info header (not part of the deterministic data)")

    t = sub.add_parser("table", help="value table of a partition function")
    t.add_argument("--function", required=True, choices=sorted(FUNCTIONS))
    t.add_argument("--n-max", type=_nonneg, required=True)
    t.add_argument("--m", type=_positive)
    t.add_argument("--r", type=_positive)
    common(t, "csv")

    v = sub.add_parser("verify", help="verify one identity coefficientwise")
    v.add_argument("--identity", required=True, choices=sorted(k.lower() for k in IDENTITY_KINDS))
    v.add_argument("--order", type=_positive, required=True)
    for name in ("k", "n", "m", "r"):
        v.add_argument(f"--{name}", type=_nonneg)
    common(v, "json")

    s = sub.add_parser("scan", help="scan an inequality family for violations")
    s.add_argument("--family", required=True, choices=sorted(k.lower() for k in FAMILY_KINDS))
    s.add_argument("--k-max", type=_positive, required=True)
    s.add_argument("--n-max", type=_positive, required=True)
    s.add_argument("--m", type=_positive)
    s.add_argument("--r", type=_positive)
    common(s, "json")

    u = sub.add_parser("suite", help="run the full verification battery")
    u.add_argument("--order", type=_positive,
                   help="override every identity's truncation order")
    u.add_argument("--quick", action="store_true", help="smaller bounds, for smoke runs")
    common(u, "json")
    return parser


def _meta(args) -> dict:
    return {"tool": "qtrunc", "version": __version__, "python": platform.python_version(),
            "argv": [a for a in sys.argv[1:]]}


def _function_id(args) -> PartitionFunctionId:
    kind = FUNCTIONS[args.function]
    try:
        if kind == "JMR":
            if args.m is None or args.r is None:
                raise UsageError("--function jmr needs --m and --r")
            return PartitionFunctionId("JMR", args.m, args.r)
        if args.m is not None or args.r is not None:
            raise UsageError(f"--function {args.function} takes no --m/--r")
        return PartitionFunctionId(kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _family_id(args) -> FamilyId:
    kind = args.family.upper()
    try:
        if kind == "CONJ1":
            if args.m is None or args.r is None:
                raise UsageError("--family conj1 needs --m and --r")
            return FamilyId(kind, args.m, args.r)
        if args.m is not None or args.r is not None:
            raise UsageError(f"--family {args.family} takes no --m/--r")
        return FamilyId(kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _identity_id(args) -> IdentityId:
    params = {name: getattr(args, name) for name in ("k", "n", "m", "r")}
    try:
        return IdentityId.make(args.identity, **params)
    except InvalidIdentityError as exc:
        raise UsageError(str(exc)) from None


def cmd_table(args) -> tuple[str, int]:
    fid = _function_id(args)
    check = pf_crosscheck(fid, args.n_max)
    tab = table(fid, args.n_max)
    if not check.ok:
        # Never emit unverified numbers.
        d = reports.table_dict(tab, check)
        d["values"] = []
        return reports.dump_json(d), EXIT_FAIL
    if args.format == "csv":
        return reports.table_csv(tab), EXIT_OK
    return reports.dump_json(reports.table_dict(tab, check)), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    rep = verify(_identity_id(args), args.order)
    d = reports.identity_dict(rep)
    text = reports.identity_csv([d]) if args.format == "csv" else reports.dump_json(d)
    return text, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_scan(args) -> tuple[str, int]:
    rep = scan(_family_id(args), args.k_max, args.n_max)
    text = reports.inequality_csv(rep) if args.format == "csv" else reports.dump_json(reports.inequality_dict(rep))
    return text, EXIT_OK if rep.passed else EXIT_FAIL


# --- suite ----------------------------------------------------------------------

def suite_jobs(order: Optional[int] = None, quick: bool = False) -> list[tuple]:
    """The acceptance battery as picklable job tuples, in output order."""
    def o(default):
        return order if order is not None else default

    kmax, nmax_proved, nmax_conj, rr_order = (3, 200, 200, 100) if quick else (12, 1000, 800, 500)
    small = 5 if quick else 20
    jobs: list[tuple] = []
    for kind in ("EULER_PENT", "GAUSS_SQUARE", "GAUSS_TRIANGULAR", "JACOBI_CUBE"):
        jobs.append(("identity", kind, {}, o(256)))
    for m in range(1, 11):
        for r in range(1, m // 2 + 1):
            jobs.append(("identity", "JTP_SPECIAL", {"m": m, "r": r}, o(256)))
    for kind in ("AM_TRUNCATED", "THM1", "THM3", "NEWOVP"):
        for k in range(1, (3 if quick else 8) + 1):
            jobs.append(("identity", kind, {"k": k}, o(300)))
    for n in range(0, small + 1):
        jobs.append(("identity", "AGJ_GAUSS", {"n": n}, o(200)))
    for n in range(1, small + 1):
        jobs.append(("identity", "SHANKS", {"n": n}, o(200)))
    for k in range(0, small + 1):
        jobs.append(("identity", "QBT_SPECIAL", {"k": k}, o(200)))
    for n in range(0, (3 if quick else 8) + 1):
        jobs.append(("identity", "AGJ", {"n": n}, o(60)))
    for kind in ("LEMMA_S2", "LEMMA_S5"):
        jobs.append(("lemma_grid", kind, {"n_max": 10 if quick else 40, "k_max": 4 if quick else 12}, o(120)))
    for fam in ("AM", "COR2", "COR4"):
        jobs.append(("scan", fam, {"k_max": kmax}, nmax_proved))
    for m in range(2, 11):
        for r in range(1, m // 2 + 1):
            jobs.append(("scan", "CONJ1", {"m": m, "r": r, "k_max": 3 if quick else 8}, nmax_conj))
    jobs.append(("scan", "CONJ2", {"k_max": 3 if quick else 10}, nmax_conj))
    jobs.append(("scan", "CONJ3", {"k_max": 3 if quick else 10}, nmax_conj))
    for fam in ("RR1", "RR2"):
        jobs.append(("scan", fam, {"k_max": 3 if quick else 8}, rr_order - 1))
    jobs.append(("crosscheck", "conj2", {"k_max": 5}, o(200)))
    jobs.append(("crosscheck", "rr1", {"k_max": 5}, o(200)))
    jobs.append(("crosscheck", "rr2", {"k_max": 5}, o(200)))
    return jobs


def run_job(job: tuple) -> dict:
    kind, name, params, bound = job
    if kind == "identity":
        return reports.identity_dict(verify(IdentityId.make(name, **params), bound))
    if kind == "lemma_grid":
        failures = []
        for n in range(1, params["n_max"] + 1):
            for k in range(1, params["k_max"] + 1):
                rep = verify(IdentityId.make(name, n=n, k=k), bound)
                if not rep.passed:
                    failures.append(reports.identity_dict(rep))
        return {
            "kind": "identity",
            "id": name.lower(),
            "params": dict(params),
            "status": "fail" if failures else "pass",
            "checked_up_to": bound - 1,
            "violations": failures,
            "first_mismatch": failures[0]["first_mismatch"] if failures else None,
        }
    if kind == "scan":
        p = dict(params)
        k_max = p.pop("k_max")
        return reports.inequality_dict(scan(FamilyId(name, **p), k_max, bound))
    if name == "conj2":
        ok = crosscheck_conj2(params["k_max"], bound)
    else:
        ok = crosscheck_rr(name.upper(), params["k_max"], bound)
    return reports.crosscheck_dict(name, dict(params), ok, bound - 1)


def _workers() -> int:
    raw = os.environ.get("QTRUNC_THREADS")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QTRUNC_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("QTRUNC_THREADS must be >= 1")
    return n


def run_suite(order: Optional[int] = None, quick: bool = False, workers: int = 1) -> dict:
    jobs = suite_jobs(order, quick)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            members = list(pool.map(run_job, jobs))
    else:
        members = [run_job(j) for j in jobs]
    failed = [m.get("id") or m.get("family") for m in members if m["status"] != "pass"]
    findings = sum(1 for m in members if m.get("finding") == "conjecture finding")
    return {
        "kind": "suite",
        "id": "suite",
        "params": {"order": order, "quick": quick},
        "status": "fail" if failed else "pass",
        "checked_up_to": max(m["checked_up_to"] for m in members),
        "violations": failed,
        "summary": {
            "members": len(members),
            "passed": len(members) - len(failed),
            "failed": len(failed),
            "conjecture_findings": findings,
        },
        "members": members,
    }


def cmd_suite(args) -> tuple[str, int]:
    result = run_suite(args.order, args.quick, _workers())
    if args.format == "csv":
        text = reports.suite_csv(result["members"])
    else:
        text = reports.dump_json(result)
    s = result["summary"]
    print(f"suite: {s['passed']}/{s['members']} passed, "
          f"{s['conjecture_findings']} conjecture finding(s)", file=sys.stderr)
    return text, EXIT_OK if result["status"] == "pass" else EXIT_FAIL


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "scan": cmd_scan, "suite": cmd_suite}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qtrunc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.metadata:
        if args.format == "json":
            import json
            data = json.loads(text)
            data["meta"] = _meta(args)
            text = reports.dump_json(data)
        else:
            text = f"# qtrunc {__version__} {' '.join(sys.argv[1:])}\n" + text
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
