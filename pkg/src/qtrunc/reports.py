"""JSON / CSV rendering of tables and reports.

Dicts are built with keys in a fixed order and contain no timestamps, so
equal inputs always serialize to equal bytes.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional

from .identities import IdentityReport
from .inequalities import InequalityReport
from .partitions import CrossCheck, ValueTable

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["kind", "params", "status", "checked_up_to", "violations"],
    "properties": {
        "kind": {"enum": ["table", "identity", "inequality", "crosscheck", "suite"]},
        "id": {"type": "string"},
        "family": {"type": "string"},
        "params": {"type": "object"},
        "status": {"enum": ["pass", "fail"]},
        "checked_up_to": {"type": "integer", "minimum": 0},
        "violations": {"type": "array"},
        "first_mismatch": {
            "type": ["object", "null"],
            "required": ["power", "lhs", "rhs"],
        },
    },
    "oneOf": [{"required": ["id"]}, {"required": ["family"]}],
}


def _scalar(x):
    return x if isinstance(x, int) else str(x)


def table_dict(tab: ValueTable, check: CrossCheck) -> dict:
    fid = tab.id
    params = {"n_max": tab.n_max}
    if fid.kind == "JMR":
        params.update(m=fid.m, r=fid.r)
    return {
        "kind": "table",
        "id": fid.name,
        "params": params,
        "status": "pass" if check.ok else "fail",
        "checked_up_to": tab.n_max,
        "violations": [] if check.ok else [{"n": check.first_mismatch}],
        "values": list(tab.values),
    }


def identity_dict(rep: IdentityReport) -> dict:
    mismatch = None
    if rep.first_mismatch is not None:
        power, lhs, rhs = rep.first_mismatch
        mismatch = {"power": power, "lhs": _scalar(lhs), "rhs": _scalar(rhs)}
    return {
        "kind": "identity",
        "id": rep.id.kind.lower(),
        "params": dict(rep.id.params),
        "status": rep.status,
        "checked_up_to": rep.order - 1,
        "violations": [] if mismatch is None else [mismatch],
        "first_mismatch": mismatch,
    }


def inequality_dict(rep: InequalityReport) -> dict:
    fam = rep.family
    params = {"k_max": rep.k_range[1], "n_min": rep.n_range[0], "n_max": rep.n_range[1]}
    if fam.kind == "CONJ1":
        params.update(m=fam.m, r=fam.r)
    finding = None
    if not rep.passed:
        finding = "conjecture finding" if rep.conjecture else "proved inequality violated"
    return {
        "kind": "inequality",
        "family": fam.kind.lower(),
        "params": params,
        "status": rep.status,
        "checked_up_to": rep.n_range[1],
        "violations": [{"k": k, "n": n, "value": v} for k, n, v in rep.violations],
        "strictness_violations": [{"k": k, "n": n} for k, n in rep.strictness_violations],
        "conjecture": rep.conjecture,
        "finding": finding,
        "thresholds": {str(k): t for k, t in sorted(rep.thresholds.items())},
    }


def crosscheck_dict(name: str, params: dict, ok: bool, checked_up_to: int) -> dict:
    return {
        "kind": "crosscheck",
        "id": name,
        "params": params,
        "status": "pass" if ok else "fail",
        "checked_up_to": checked_up_to,
        "violations": [] if ok else [{"detail": "routes disagree"}],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table_csv(tab: ValueTable) -> str:
    return _csv(["n", "value"], enumerate(tab.values))


def identity_csv(reports: Iterable[dict]) -> str:
    rows = []
    for d in reports:
        fm: Optional[dict] = d.get("first_mismatch")
        params = ";".join(f"{k}={v}" for k, v in d["params"].items())
        rows.append([
            d["id"], params, d["status"], d["checked_up_to"],
            "" if fm is None else fm["power"],
            "" if fm is None else fm["lhs"],
            "" if fm is None else fm["rhs"],
        ])
    return _csv(["id", "params", "status", "checked_up_to", "mismatch_power", "lhs", "rhs"], rows)


def inequality_csv(rep: InequalityReport) -> str:
    """One record per k: counts of sign and strictness violations."""
    bad = {}
    strict = {}
    for k, _, _ in rep.violations:
        bad[k] = bad.get(k, 0) + 1
    for k, _ in rep.strictness_violations:
        strict[k] = strict.get(k, 0) + 1
    rows = []
    for k in range(rep.k_range[0], rep.k_range[1] + 1):
        thr = rep.thresholds.get(k)
        first_bad = next((n for kk, n, _ in rep.violations if kk == k), "")
        status = "pass" if not bad.get(k) and not strict.get(k) else "fail"
        rows.append([
            rep.family.name, k, "" if thr is None else thr, rep.n_range[0], rep.n_range[1],
            bad.get(k, 0), strict.get(k, 0), first_bad, status,
        ])
    header = ["family", "k", "threshold", "n_min", "n_max", "violations",
              "strictness_violations", "first_violation_n", "status"]
    return _csv(header, rows)


def suite_csv(members: list[dict]) -> str:
    rows = []
    for d in members:
        name = d.get("id") or d.get("family")
        params = ";".join(f"{k}={v}" for k, v in d["params"].items())
        rows.append([d["kind"], name, params, d["status"], d["checked_up_to"]])
    return _csv(["kind", "name", "params", "status", "checked_up_to"], rows)
