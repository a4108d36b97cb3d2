"""Coefficientwise verification of truncated q-series identities.

Every identity is built as a pair of :class:`TruncSeries` (left side, right
side) and compared up to a truncation order.  Infinite sums over an index n
are cut at the first n whose term cannot reach below q^order; all such sums
here have a strictly increasing minimal exponent, so the cut is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, Optional

from .qobjects import (
    PochSpec,
    poch_divide,
    poch_mul,
    q_binomial,
    qpoch,
    theta_cube,
    theta_jmr,
    theta_pentagonal,
    theta_square,
    theta_triangular,
    check_jmr,
)
from .rings import BIVAR, INT, BivarPoly
from .series import (
    TruncSeries,
    div_binomial,
    mul_binomial,
    series_mul,
    series_shift,
)

# kind -> required parameter names
KINDS: dict[str, tuple[str, ...]] = {
    "EULER_PENT": (),
    "GAUSS_SQUARE": (),
    "GAUSS_TRIANGULAR": (),
    "AM_TRUNCATED": ("k",),
    "THM1": ("k",),
    "THM3": ("k",),
    "AGJ": ("n",),
    "AGJ_GAUSS": ("n",),
    "QBT_SPECIAL": ("k",),
    "SHANKS": ("n",),
    "JTP_SPECIAL": ("m", "r"),
    "JACOBI_CUBE": (),
    "LEMMA_S2": ("n", "k"),
    "LEMMA_S5": ("n", "k"),
    "NEWOVP": ("k",),
}

# Identities whose construction contains a sum cut by the tail rule.
TAIL_KINDS = ("AM_TRUNCATED", "THM1", "THM3", "QBT_SPECIAL", "NEWOVP")


class InvalidIdentityError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityId:
    kind: str
    params: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, kind: str, **params) -> "IdentityId":
        kind = kind.upper()
        if kind not in KINDS:
            raise InvalidIdentityError(f"unknown identity {kind!r}")
        need = KINDS[kind]
        given = {k: v for k, v in params.items() if v is not None}
        if set(given) != set(need):
            raise InvalidIdentityError(f"{kind} takes parameters {need}, got {sorted(given)}")
        ident = cls(kind, tuple((name, int(given[name])) for name in need))
        ident.validate()
        return ident

    def __getattr__(self, name):
        for key, val in object.__getattribute__(self, "params"):
            if key == name:
                return val
        raise AttributeError(name)

    def validate(self):
        p = dict(self.params)
        kind = self.kind
        if kind in ("AM_TRUNCATED", "THM1", "THM3", "NEWOVP") and p["k"] < 1:
            raise InvalidIdentityError(f"{kind} needs k >= 1")
        if kind == "QBT_SPECIAL" and p["k"] < 0:
            raise InvalidIdentityError("QBT_SPECIAL needs k >= 0")
        if kind in ("AGJ", "AGJ_GAUSS") and p["n"] < 0:
            raise InvalidIdentityError(f"{kind} needs n >= 0")
        if kind == "SHANKS" and p["n"] < 1:
            raise InvalidIdentityError("SHANKS needs n >= 1")
        if kind in ("LEMMA_S2", "LEMMA_S5") and (p["n"] < 1 or p["k"] < 1):
            raise InvalidIdentityError(f"{kind} needs n, k >= 1")
        if kind == "JTP_SPECIAL":
            try:
                check_jmr(p["m"], p["r"])
            except ValueError as exc:
                raise InvalidIdentityError(str(exc)) from None

    @property
    def name(self) -> str:
        if not self.params:
            return self.kind.lower()
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind.lower()}({args})"

    def __str__(self):
        return self.name


@dataclass
class IdentityReport:
    id: IdentityId
    order: int
    status: str
    first_mismatch: Optional[tuple[int, object, object]] = None
    tail_extra: int = field(default=0, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


# --- small builders ------------------------------------------------------------

def _one(order: int, ring=INT) -> TruncSeries:
    return TruncSeries.one(order, ring)


def _mono(e: int, order: int, c=1) -> TruncSeries:
    return TruncSeries.monomial(e, order, c)


def _sparse(terms, order: int) -> TruncSeries:
    return TruncSeries.from_terms(terms, order)


def _pad_shift(s: TruncSeries, e: int, order: int) -> TruncSeries:
    """q^e * s where s was built at order - e; lifts back to ``order``."""
    return TruncSeries._raw((s.ring.zero,) * e + s.coeffs[: order - e], s.ring)


def shifted_term(e: int, order: int, build: Callable[[int], TruncSeries], ring=INT) -> TruncSeries:
    """q^e * build(...), building only the coefficients that survive truncation."""
    if e >= order:
        return TruncSeries.zero(order, ring)
    return _pad_shift(build(order - e), e, order)


def tail_indices(start: int, min_exp: Callable[[int], int], order: int, extra: int = 0) -> Iterator[int]:
    """Summation indices from ``start`` until the term's minimal exponent reaches order.

    ``extra`` appends that many further indices, for checking the cut is sound.
    """
    n = start
    while min_exp(n) < order:
        yield n
        n += 1
    for i in range(extra):
        yield n + i


def _sum(terms, order: int, ring=INT) -> TruncSeries:
    acc = TruncSeries.zero(order, ring)
    for t in terms:
        acc = acc + t
    return acc


def _chain(s: TruncSeries, mul=(), div=()) -> TruncSeries:
    for spec in mul:
        s = poch_mul(s, spec)
    for spec in div:
        s = poch_divide(s, spec)
    return s


def _qbin(M: int, K: int, order: int, base_power: int = 1) -> TruncSeries:
    return q_binomial(M, K, base_power, order)


# --- classical product identities ----------------------------------------------

def _euler_pent(order, **_):
    lhs = theta_pentagonal(None, order).to_series(order)
    rhs = _chain(_one(order), mul=[qpoch(1, 1)])
    return lhs, rhs


def _gauss_square(order, **_):
    lhs = theta_square(None, order).to_series(order)
    rhs = _chain(_one(order), mul=[qpoch(1, 1)], div=[qpoch(-1, 1)])
    return lhs, rhs


def _gauss_triangular(order, **_):
    lhs = theta_triangular(None, order).to_series(order)
    rhs = _chain(_one(order), mul=[qpoch(1, 2, 2)], div=[qpoch(-1, 1, 2)])
    return lhs, rhs


def _jtp_special(order, m, r, **_):
    lhs = theta_jmr(m, r, order).to_series(order)
    rhs = _chain(_one(order), mul=[qpoch(1, r, m), qpoch(1, m - r, m), qpoch(1, m, m)])
    return lhs, rhs


def _jacobi_cube(order, **_):
    lhs = theta_cube(order).to_series(order)
    rhs = _chain(_one(order), mul=[qpoch(1, 1)] * 3)
    return lhs, rhs


# --- truncated identities ---------------------------------------------------------

def _am_truncated(order, k, tail_extra=0, **_):
    partial = []
    for j in range(k):
        sign = (-1) ** j
        partial += [(j * (3 * j + 1) // 2, sign), ((j + 1) * (3 * j + 2) // 2, -sign)]
    lhs = _chain(_sparse(partial, order), div=[qpoch(1, 1)])

    c = comb(k, 2)

    def term(n):
        return shifted_term(
            (k + 1) * n + c,
            order,
            lambda N: _chain(_qbin(n - 1, k - 1, N), div=[qpoch(1, 1, 1, n)]),
        )

    idx = tail_indices(k, lambda n: (k + 1) * n + c, order, tail_extra)
    rhs = _one(order) + _sum((term(n) for n in idx), order).scale((-1) ** (k - 1))
    return lhs, rhs


def _thm1(order, k, tail_extra=0, **_):
    theta = theta_square(k, order).to_series(order)
    lhs = _chain(theta, mul=[qpoch(-1, 1)], div=[qpoch(1, 1)])

    def term(n):
        return shifted_term(
            (k + 1) * n,
            order,
            lambda N: _chain(
                _qbin(n - 1, k, N),
                mul=[qpoch(-1, 1, 1, k), qpoch(-1, 0, 1, n - k)],
                div=[qpoch(1, 1, 1, n)],
            ),
        )

    idx = tail_indices(k + 1, lambda n: (k + 1) * n, order, tail_extra)
    rhs = _one(order) + _sum((term(n) for n in idx), order).scale((-1) ** k)
    return lhs, rhs


def _thm3(order, k, tail_extra=0, **_):
    theta = theta_triangular(k, order).to_series(order)
    lhs = _chain(theta, mul=[qpoch(-1, 1, 2)], div=[qpoch(1, 2, 2)])

    def term(n):
        return shifted_term(
            2 * (k + 1) * n - k,
            order,
            lambda N: _chain(
                _qbin(n - 1, k - 1, N, base_power=2),
                mul=[qpoch(-1, 1, 2, k), qpoch(-1, 1, 2, n - k)],
                div=[qpoch(1, 2, 2, n)],
            ),
        )

    idx = tail_indices(k, lambda n: 2 * (k + 1) * n - k, order, tail_extra)
    rhs = _one(order) + _sum((term(n) for n in idx), order).scale((-1) ** (k - 1))
    return lhs, rhs


def _qbt_special(order, k, tail_extra=0, **_):
    def term(i):
        return shifted_term(
            (k + 1) * i,
            order,
            lambda N: _chain(_one(N), mul=[qpoch(-1, 0, 1, i)], div=[qpoch(1, 1, 1, i)]),
        )

    lhs = _sum((term(i) for i in tail_indices(0, lambda i: (k + 1) * i, order, tail_extra)), order)
    rhs = _chain(_one(order), mul=[qpoch(-1, k + 1)], div=[qpoch(1, k + 1)])
    return lhs, rhs


def _newovp(order, k, tail_extra=0, **_):
    sign = (-1) ** (k - 1)
    core = [(0, 1), (k * k, (-1) ** k)] + [(j * j, 2 * (-1) ** j) for j in range(1, k)]
    lhs = _chain(_sparse(core, order), mul=[qpoch(-1, 1)], div=[qpoch(1, 1)]).scale(sign)

    def first(n):
        return shifted_term(
            k * n,
            order,
            lambda N: _chain(
                _qbin(n - 1, k - 1, N),
                mul=[qpoch(-1, 1, 1, k - 1), qpoch(-1, 1, 1, n - k)],
                div=[qpoch(1, 1, 1, n)],
            ),
        )

    def second(n):
        return shifted_term(
            (k + 1) * n,
            order,
            lambda N: _chain(
                _qbin(n - 1, k, N),
                mul=[qpoch(-1, 1, 1, k), qpoch(-1, 1, 1, n - k - 1)],
                div=[qpoch(1, 1, 1, n)],
            ),
        )

    s1 = _sum((first(n) for n in tail_indices(k, lambda n: k * n, order, tail_extra)), order)
    s2 = _sum(
        (second(n) for n in tail_indices(k + 1, lambda n: (k + 1) * n, order, tail_extra)), order
    )
    rhs = _mono(0, order, sign) + s1 - s2
    return lhs, rhs


# --- finite identities used inside the proofs ---------------------------------------

def _agj_gauss(order, n, **_):
    lhs = theta_square(n, order).to_series(order) if n else _one(order)

    def term(j):
        return shifted_term(
            (n + 1) * j,
            order,
            lambda N: _chain(
                _one(N),
                mul=[qpoch(-1, 0, 1, j), qpoch(1, 1, 1, n)],
                div=[qpoch(1, 1, 1, j), qpoch(-1, 1, 1, n)],
            ).scale((-1) ** j),
        )

    rhs = _sum((term(j) for j in range(n + 1)), order)
    return lhs, rhs


def _mul_a_minus_bq(s: TruncSeries, i: int) -> TruncSeries:
    """s * (a - b q^i) over the bivariate ring."""
    a, b = BivarPoly.a(), BivarPoly.b()
    return s.scale(a) - series_shift(s, i).scale(b)


def _b_over_a_poch(s: TruncSeries, j: int) -> TruncSeries:
    """s * (b/a; q)_j a^j, written as prod_{i<j} (a - b q^i) so a never divides."""
    for i in range(j):
        s = _mul_a_minus_bq(s, i)
    return s


def _agj(order, n, **_):
    a, b = BivarPoly.a(), BivarPoly.b()

    def div_q(s, count):
        for i in range(1, count + 1):
            s = div_binomial(s, 1, i)
        return s

    def div_aq(s, count):
        for i in range(1, count + 1):
            s = div_binomial(s, a, i)
        return s

    def lhs_term(j):
        if j == 0:
            # (b)_0 (1 - b) / (1 - b) = 1
            return _one(order, BIVAR)

        def build(N):
            s = _one(N, BIVAR)
            # (b)_j / (1 - b) = (bq; q)_{j-1}
            for i in range(1, j):
                s = mul_binomial(s, b, i)
            s = mul_binomial(s, b, 2 * j)
            s = _b_over_a_poch(s, j)
            return div_aq(div_q(s, j), j)

        return shifted_term(j * j, order, build, BIVAR)

    lhs = _sum((lhs_term(j) for j in range(n + 1)), order, BIVAR)

    def rhs_term(j):
        return shifted_term(
            (n + 1) * j, order, lambda N: div_q(_b_over_a_poch(_one(N, BIVAR), j), j), BIVAR
        )

    inner = _sum((rhs_term(j) for j in range(n + 1)), order, BIVAR)
    for i in range(1, n + 1):
        inner = mul_binomial(inner, b, i)
    rhs = div_aq(inner, n)
    return lhs, rhs


def _shanks(order, n, **_):
    lhs_terms = []
    for j in range(n):
        e = j * (2 * j + 1)
        lhs_terms += [(e, 1), (e + 2 * j + 1, 1)]
    lhs = _sparse(lhs_terms, order)

    def term(j):
        return shifted_term(
            j * (2 * n + 1),
            order,
            lambda N: _chain(
                _one(N),
                mul=[qpoch(1, 1, 2, j), qpoch(1, 2, 2, n)],
                div=[qpoch(1, 2, 2, j), qpoch(1, 1, 2, n)],
            ),
        )

    rhs = _sum((term(j) for j in range(n)), order)
    return lhs, rhs


@lru_cache(maxsize=4096)
def _s2_block(j: int, order: int) -> TruncSeries:
    """(-1; q)_j / (q)_j."""
    return _chain(_one(order), mul=[qpoch(-1, 0, 1, j)], div=[qpoch(1, 1, 1, j)])


def _lemma_s2(order, n, k, **_):
    terms = (
        series_mul(_s2_block(j, order), _s2_block(n - j, order)).scale((-1) ** j)
        for j in range(min(k, n) + 1)
    )
    lhs = _sum(terms, order)
    if n <= k:
        return lhs, TruncSeries.zero(order)
    rhs = _chain(
        _one(order),
        mul=[qpoch(-1, 1, 1, k), qpoch(-1, 0, 1, n - k)],
        div=[qpoch(1, n, 1, 1), qpoch(1, 1, 1, n - k - 1), qpoch(1, 1, 1, k)],
    ).scale((-1) ** k)
    return lhs, rhs


def shifted_neg_inverse_poch(i: int, order: int) -> TruncSeries:
    """q^i (-q^{-1}; q^2)_i = prod_{t<i} (q^(2t) + q), with no negative powers stored."""
    s = _one(order)
    for t in range(i):
        if t == 0:
            s = mul_binomial(s, -1, 1)  # 1 + q
        else:
            s = series_shift(mul_binomial(s, -1, 2 * t - 1), 1)  # q (1 + q^(2t-1))
    return s


@lru_cache(maxsize=4096)
def _s5_left(j: int, order: int) -> TruncSeries:
    """(-q; q^2)_j / (q^2; q^2)_j."""
    return _chain(_one(order), mul=[qpoch(-1, 1, 2, j)], div=[qpoch(1, 2, 2, j)])


@lru_cache(maxsize=4096)
def _s5_right(i: int, order: int) -> TruncSeries:
    """q^i (-q^{-1}; q^2)_i / (q^2; q^2)_i."""
    return _chain(shifted_neg_inverse_poch(i, order), div=[qpoch(1, 2, 2, i)])


def _lemma_s5(order, n, k, **_):
    terms = (
        series_mul(_s5_left(j, order), _s5_right(n - j, order)).scale((-1) ** j)
        for j in range(min(k - 1, n) + 1)
    )
    lhs = _sum(terms, order)
    if n <= k - 1:
        return lhs, TruncSeries.zero(order)
    rhs = shifted_term(
        n - k,
        order,
        lambda N: _chain(
            _one(N),
            mul=[qpoch(-1, 1, 2, k), qpoch(-1, 1, 2, n - k)],
            div=[qpoch(1, 2 * n, 1, 1), qpoch(1, 2, 2, n - k), qpoch(1, 2, 2, k - 1)],
        ),
    ).scale((-1) ** (k - 1))
    return lhs, rhs


_BUILDERS = {
    "EULER_PENT": _euler_pent,
    "GAUSS_SQUARE": _gauss_square,
    "GAUSS_TRIANGULAR": _gauss_triangular,
    "AM_TRUNCATED": _am_truncated,
    "THM1": _thm1,
    "THM3": _thm3,
    "AGJ": _agj,
    "AGJ_GAUSS": _agj_gauss,
    "QBT_SPECIAL": _qbt_special,
    "SHANKS": _shanks,
    "JTP_SPECIAL": _jtp_special,
    "JACOBI_CUBE": _jacobi_cube,
    "LEMMA_S2": _lemma_s2,
    "LEMMA_S5": _lemma_s5,
    "NEWOVP": _newovp,
}


def sides(ident: IdentityId, order: int, tail_extra: int = 0) -> tuple[TruncSeries, TruncSeries]:
    """Left and right sides of ``ident`` truncated to ``order``."""
    if order < 1:
        raise InvalidIdentityError("order must be >= 1")
    ident.validate()
    return _BUILDERS[ident.kind](order, tail_extra=tail_extra, **dict(ident.params))


def verify(ident: IdentityId, order: int, tail_extra: int = 0) -> IdentityReport:
    lhs, rhs = sides(ident, order, tail_extra)
    i = lhs.first_difference(rhs)
    if i is None:
        return IdentityReport(ident, order, "pass", None, tail_extra)
    return IdentityReport(ident, order, "fail", (i, lhs[i], rhs[i]), tail_extra)


def specialize(s: TruncSeries, a: int, b: int) -> TruncSeries:
    """Evaluate a bivariate-coefficient series at integer a, b."""
    return s.map_coeffs(lambda c: c.evaluate(a, b), INT)
