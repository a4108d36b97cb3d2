"""Scanning proved and conjectured partition inequalities over (k, n) grids.

Every family is normalized so that its claim reads ``value >= 0`` for
n >= 1, with ``value > 0`` from a closed-form threshold on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .identities import IdentityId, sides
from .partitions import OVERP, P, POD, T3, PartitionFunctionId, ValueTable, jmr, table
from .qobjects import check_jmr, poch_divide, qpoch
from .series import TruncSeries

FAMILY_KINDS = ("AM", "COR2", "COR4", "CONJ1", "CONJ2", "RR1", "RR2", "CONJ3")
PROVED = ("AM", "COR2", "COR4")


class MissingTableError(LookupError):
    pass


@dataclass(frozen=True)
class FamilyId:
    kind: str
    m: Optional[int] = None
    r: Optional[int] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown inequality family {self.kind!r}")
        if self.kind == "CONJ1":
            check_jmr(self.m, self.r)
        elif self.m is not None or self.r is not None:
            raise ValueError(f"{self.kind} takes no (m, r) parameters")

    @property
    def name(self) -> str:
        if self.kind == "CONJ1":
            return f"conj1({self.m},{self.r})"
        return self.kind.lower()

    @property
    def conjecture(self) -> bool:
        return self.kind not in PROVED

    def needs(self) -> PartitionFunctionId:
        """The counting function whose table the family reads."""
        return {
            "AM": P,
            "COR2": OVERP,
            "CONJ2": OVERP,
            "COR4": POD,
            "CONJ3": T3,
        }.get(self.kind) or {
            "CONJ1": lambda: jmr(self.m, self.r),
            "RR1": lambda: jmr(5, 1),
            "RR2": lambda: jmr(5, 2),
        }[self.kind]()

    def threshold(self, k: int) -> Optional[int]:
        """Least n from which the value is claimed strictly positive."""
        if self.kind == "AM":
            return k * (3 * k + 1) // 2
        if self.kind == "COR2":
            return (k + 1) ** 2
        if self.kind == "COR4":
            return (2 * k + 1) * k
        if self.kind == "CONJ1":
            return k * (self.m * k + self.m - 2 * self.r) // 2
        if self.kind == "CONJ2":
            return k * k
        if self.kind == "CONJ3":
            return (k + 1) * (k + 2) // 2
        return None

    def __str__(self):
        return self.name


AM = FamilyId("AM")
COR2 = FamilyId("COR2")
COR4 = FamilyId("COR4")
CONJ2 = FamilyId("CONJ2")
RR1 = FamilyId("RR1")
RR2 = FamilyId("RR2")
CONJ3 = FamilyId("CONJ3")


def conj1(m: int, r: int) -> FamilyId:
    return FamilyId("CONJ1", m, r)


def _sign(j: int) -> int:
    return -1 if j % 2 else 1


def _half(x: int) -> int:
    if x % 2:
        raise ValueError(f"index offset {x}/2 is not an integer")
    return x // 2


def _alternating_pairs(f: ValueTable, n: int, k: int, lo: Callable[[int], int], hi: Callable[[int], int]) -> int:
    """sum_{j<k} (-1)^j (f(n - lo(j)) - f(n - hi(j)))."""
    total = 0
    for j in range(k):
        total += (-1) ** j * (f[n - lo(j)] - f[n - hi(j)])
    return total


def _rr_offset(kind: str, j: int) -> int:
    return _half(j * (5 * j + 3)) if kind == "RR1" else _half(j * (5 * j + 1))


def family_value(family: FamilyId, k: int, n: int, tables: Mapping[PartitionFunctionId, ValueTable]) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    fid = family.needs()
    f = tables.get(fid)
    if f is None:
        raise MissingTableError(f"{family} needs a {fid} table")
    if n > f.n_max:
        raise MissingTableError(f"{fid} table stops at {f.n_max}, need {n}")
    kind = family.kind

    if kind == "AM":
        v = _alternating_pairs(f, n, k, lambda j: j * (3 * j + 1) // 2, lambda j: (j + 1) * (3 * j + 2) // 2)
        return (-1) ** (k - 1) * v
    if kind == "COR2":
        return (-1) ** k * (f[n] + 2 * sum((-1) ** j * f[n - j * j] for j in range(1, k + 1)))
    if kind == "COR4":
        v = _alternating_pairs(f, n, k, lambda j: j * (2 * j + 1), lambda j: (j + 1) * (2 * j + 1))
        return (-1) ** (k - 1) * v
    if kind == "CONJ1":
        m, r = family.m, family.r
        v = _alternating_pairs(
            f, n, k,
            lambda j: _half(j * (m * j + m - 2 * r)),
            lambda j: _half((j + 1) * (m * j + 2 * r)),
        )
        return (-1) ** (k - 1) * v
    if kind == "CONJ2":
        inner = f[n] + 2 * sum((-1) ** j * f[n - j * j] for j in range(1, k))
        return (-1) ** (k - 1) * inner - f[n - k * k]
    if kind in ("RR1", "RR2"):
        v = sum(_sign(j) * f[n - _rr_offset(kind, j)] for j in range(-k, k))
        return (-1) ** (k - 1) * v + ((-1) ** k if n == 0 else 0)
    # CONJ3
    return (-1) ** k * sum((-1) ** j * (2 * j + 1) * f[n - j * (j + 1) // 2] for j in range(k + 1))


@dataclass
class InequalityReport:
    family: FamilyId
    k_range: tuple[int, int]
    n_range: tuple[int, int]
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    strictness_violations: list[tuple[int, int]] = field(default_factory=list)
    thresholds: dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if not self.violations and not self.strictness_violations else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def conjecture(self) -> bool:
        return self.family.conjecture


def tables_for(family: FamilyId, n_max: int) -> dict[PartitionFunctionId, ValueTable]:
    fid = family.needs()
    return {fid: table(fid, n_max)}


def scan(family: FamilyId, k_max: int, n_max: int, tables=None, n_min: int = 1) -> InequalityReport:
    """Check the family's sign and strictness claims for 1 <= k <= k_max, n_min <= n <= n_max."""
    if tables is None:
        tables = tables_for(family, n_max)
    report = InequalityReport(family, (1, k_max), (n_min, n_max))
    for k in range(1, k_max + 1):
        thr = family.threshold(k)
        report.thresholds[k] = thr
        for n in range(n_min, n_max + 1):
            v = family_value(family, k, n, tables)
            if v < 0:
                report.violations.append((k, n, v))
            elif v == 0 and thr is not None and n >= thr:
                report.strictness_violations.append((k, n))
    return report


def values(family: FamilyId, k: int, n_max: int, tables=None) -> list[int]:
    if tables is None:
        tables = tables_for(family, n_max)
    return [family_value(family, k, n, tables) for n in range(n_max + 1)]


def crosscheck_conj2(k_max: int, order: int) -> bool:
    """The series side of the NEWOVP identity has the CONJ2 values as coefficients."""
    tables = tables_for(CONJ2, order - 1)
    for k in range(1, k_max + 1):
        _, rhs = sides(IdentityId.make("NEWOVP", k=k), order)
        if list(rhs.coeffs) != values(CONJ2, k, order - 1, tables):
            return False
    return True


def rr_series(variant: str, k: int, order: int) -> TruncSeries:
    """(-1)^k + (-1)^(k-1) * (bilateral partial theta sum) / (q^r, q^(5-r), q^5; q^5)_inf."""
    if variant not in ("RR1", "RR2"):
        raise ValueError("variant must be RR1 or RR2")
    r = 1 if variant == "RR1" else 2
    terms = [(_rr_offset(variant, j), _sign(j)) for j in range(-k, k)]
    s = TruncSeries.from_terms(terms, order)
    for shift in (r, 5 - r, 5):
        s = poch_divide(s, qpoch(1, shift, 5))
    return TruncSeries.monomial(0, order, (-1) ** k) + s.scale((-1) ** (k - 1))


def crosscheck_rr(variant: str, k_max: int, order: int) -> bool:
    """Series route, bilateral-table route and CONJ1(5, r) route agree for n < order."""
    family = RR1 if variant == "RR1" else RR2
    r = 1 if variant == "RR1" else 2
    c1 = conj1(5, r)
    tables = tables_for(family, order - 1)
    for k in range(1, k_max + 1):
        series = list(rr_series(variant, k, order).coeffs)
        bilateral = values(family, k, order - 1, tables)
        # CONJ1 has the same sum without the (-1)^k constant term.
        via_conj1 = values(c1, k, order - 1, tables)
        via_conj1[0] += (-1) ** k
        if not (series == bilateral == via_conj1):
            return False
    return True
