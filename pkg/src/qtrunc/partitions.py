"""Exact value tables for p, overpartitions, pod, J_{m,r} and t.

Each function is computed two ways: a convolution recurrence driven by the
sparse theta expansion of the reciprocal generating function, and a direct
expansion of the generating product.  :func:`pf_crosscheck` compares them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .qobjects import (
    ThetaExpansion,
    check_jmr,
    poch_divide,
    poch_mul,
    qpoch,
    theta_cube,
    theta_jmr,
    theta_pentagonal,
    theta_square,
    theta_triangular,
)
from .series import TruncSeries

KINDS = ("P", "OVERP", "POD", "JMR", "T3")


@dataclass(frozen=True)
class PartitionFunctionId:
    kind: str
    m: Optional[int] = None
    r: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown partition function {self.kind!r}")
        if self.kind == "JMR":
            check_jmr(self.m, self.r)
        elif self.m is not None or self.r is not None:
            raise ValueError(f"{self.kind} takes no (m, r) parameters")

    @property
    def name(self) -> str:
        if self.kind == "JMR":
            return f"jmr({self.m},{self.r})"
        return self.kind.lower()

    def __str__(self):
        return self.name


P = PartitionFunctionId("P")
OVERP = PartitionFunctionId("OVERP")
POD = PartitionFunctionId("POD")
T3 = PartitionFunctionId("T3")


def jmr(m: int, r: int) -> PartitionFunctionId:
    return PartitionFunctionId("JMR", m, r)


@dataclass(frozen=True)
class ValueTable:
    id: PartitionFunctionId
    values: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        """f(n), with f(negative) = 0.  Indices past the table raise."""
        if n < 0:
            return 0
        if n > self.n_max:
            raise IndexError(f"{self.id} table only covers n <= {self.n_max}, asked {n}")
        return self.values[n]

    def __len__(self):
        return len(self.values)


def theta_for(fid: PartitionFunctionId, order: int) -> ThetaExpansion:
    """The theta expansion whose reciprocal generates ``fid``."""
    if fid.kind == "P":
        return theta_pentagonal(None, order)
    if fid.kind == "OVERP":
        return theta_square(None, order)
    if fid.kind == "POD":
        return theta_triangular(None, order)
    if fid.kind == "JMR":
        return theta_jmr(fid.m, fid.r, order)
    return theta_cube(order)


def recurrence_values(theta: ThetaExpansion, n_max: int) -> list[int]:
    """f(n) = -sum_{i>=1} c_i f(n - e_i), f(0) = 1."""
    tail = theta.terms[1:]
    f = [0] * (n_max + 1)
    f[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        for e, c in tail:
            if e > n:
                break
            acc += c * f[n - e]
        f[n] = -acc
    return f


@lru_cache(maxsize=64)
def pf_by_recurrence(fid: PartitionFunctionId, n_max: int) -> ValueTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return ValueTable(fid, tuple(recurrence_values(theta_for(fid, n_max + 1), n_max)))


def generating_series(fid: PartitionFunctionId, order: int) -> TruncSeries:
    """Expand the generating product of ``fid`` to ``order`` coefficients."""
    s = TruncSeries.one(order)
    if fid.kind == "P":
        return poch_divide(s, qpoch(1, 1))
    if fid.kind == "OVERP":
        return poch_divide(poch_mul(s, qpoch(-1, 1)), qpoch(1, 1))
    if fid.kind == "POD":
        return poch_divide(poch_mul(s, qpoch(-1, 1, 2)), qpoch(1, 2, 2))
    if fid.kind == "JMR":
        m, r = fid.m, fid.r
        for shift in (r, m - r, m):
            s = poch_divide(s, qpoch(1, shift, m))
        return s
    for _ in range(3):
        s = poch_divide(s, qpoch(1, 1))
    return s


@lru_cache(maxsize=64)
def pf_by_product(fid: PartitionFunctionId, n_max: int) -> ValueTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return ValueTable(fid, generating_series(fid, n_max + 1).coeffs)


class CrossCheck(NamedTuple):
    ok: bool
    first_mismatch: Optional[int]


def pf_crosscheck(fid: PartitionFunctionId, n_max: int) -> CrossCheck:
    rec = pf_by_recurrence(fid, n_max).values
    prod = pf_by_product(fid, n_max).values
    for n, (x, y) in enumerate(zip(rec, prod)):
        if x != y:
            return CrossCheck(False, n)
    return CrossCheck(True, None)


def table(fid: PartitionFunctionId, n_max: int) -> ValueTable:
    """The table consumers should use (recurrence route)."""
    return pf_by_recurrence(fid, n_max)
