"""Named q-objects: q-Pochhammer products, Gaussian binomials, theta expansions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rings import INT, Ring
from .series import TruncSeries, div_binomial, mul_binomial, series_substitute_power

INFINITE = None


@dataclass(frozen=True)
class PochSpec:
    """(sign * q^shift; q^step)_count.  ``count=None`` means infinite."""

    sign: int = 1
    shift: int = 1
    step: int = 1
    count: Optional[int] = INFINITE

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.shift < 0 or self.step < 1:
            raise ValueError("need shift >= 0 and step >= 1")
        if self.count is not None and self.count < 0:
            raise ValueError("negative count")
        if self.count is None and self.shift == 0:
            raise ValueError("infinite product with a constant first factor")

    def exponents(self, order: int) -> list[int]:
        """Exponents of the factors that can touch q^0..q^(order-1)."""
        out = []
        i = 0
        while self.count is None or i < self.count:
            e = self.shift + self.step * i
            if e >= order and e > 0:
                if self.count is None:
                    break
                # Factor is 1 modulo q^order.
                i += 1
                continue
            out.append(e)
            i += 1
        return out


def poch(spec: PochSpec, order: int, ring: Ring = INT) -> TruncSeries:
    s = TruncSeries.one(order, ring)
    for e in spec.exponents(order):
        s = mul_binomial(s, spec.sign, e)
    return s


def poch_divide(s: TruncSeries, spec: PochSpec) -> TruncSeries:
    """s / (sign q^shift; q^step)_count.  Fails on a constant factor such as (-1;q)_n."""
    for e in spec.exponents(s.order):
        s = div_binomial(s, spec.sign, e)
    return s


def poch_mul(s: TruncSeries, spec: PochSpec) -> TruncSeries:
    for e in spec.exponents(s.order):
        s = mul_binomial(s, spec.sign, e)
    return s


# Shorthands for the products that recur everywhere.  ``qpoch(c, shift, step, n)``
# is (c q^shift; q^step)_n.
def qpoch(sign: int, shift: int, step: int = 1, count: Optional[int] = INFINITE) -> PochSpec:
    return PochSpec(sign=sign, shift=shift, step=step, count=count)


# --- Gaussian binomials ----------------------------------------------------

_QBINOM_CACHE: dict[tuple[int, int, int], tuple[int, ...]] = {}


def _add_shifted(x: tuple, y: tuple, shift: int, length: int) -> tuple:
    out = list(x) + [0] * (length - len(x))
    for i, c in enumerate(y):
        if i + shift >= length:
            break
        out[i + shift] += c
    return tuple(out)


def qbinom_coeffs(M: int, K: int, length: int) -> tuple[int, ...]:
    """Coefficients of [M choose K]_q below q^length, by the Pascal recurrence.

    Zero when K < 0, M < 0 or K > M.
    """
    if K < 0 or M < 0 or K > M:
        return (0,) * length
    key = (M, K, length)
    hit = _QBINOM_CACHE.get(key)
    if hit is not None:
        return hit
    # Fill rows bottom-up so deep M never recurses.
    for m in range(M + 1):
        for k in range(max(0, K - (M - m)), min(m, K) + 1):
            if (m, k, length) in _QBINOM_CACHE:
                continue
            if k == 0 or k == m:
                val = (1,) + (0,) * (length - 1)
            else:
                # [m,k] = [m-1,k] + q^(m-k) [m-1,k-1]
                val = _add_shifted(
                    _QBINOM_CACHE[(m - 1, k, length)],
                    _QBINOM_CACHE[(m - 1, k - 1, length)],
                    m - k,
                    length,
                )
            _QBINOM_CACHE[(m, k, length)] = val
    return _QBINOM_CACHE[key]


def q_binomial(M: int, K: int, base_power: int, order: int) -> TruncSeries:
    if base_power < 1:
        raise ValueError("base_power must be positive")
    length = (order - 1) // base_power + 1
    base = TruncSeries._raw(qbinom_coeffs(M, K, length) + (0,) * (order - length), INT)
    if base_power == 1:
        return base
    return series_substitute_power(base, base_power)


# --- Theta expansions --------------------------------------------------------


@dataclass(frozen=True)
class ThetaExpansion:
    """Sparse series sum c_i q^(e_i) with e_0 = 0, c_0 = 1."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.terms or self.terms[0] != (0, 1):
            raise ValueError("theta expansion must start with the term 1")
        exps = [e for e, _ in self.terms]
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly increasing")

    @classmethod
    def from_pairs(cls, pairs, order: int) -> "ThetaExpansion":
        merged: dict[int, int] = {}
        for e, c in pairs:
            if e < order:
                merged[e] = merged.get(e, 0) + c
        return cls(tuple((e, c) for e, c in sorted(merged.items()) if c))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def to_series(self, order: int) -> TruncSeries:
        return TruncSeries.from_terms(self.terms, order)


def _limit(k_limit, default_stop):
    return range(1, default_stop) if k_limit is None else range(1, k_limit + 1)


def theta_pentagonal(k_limit: Optional[int], order: int) -> ThetaExpansion:
    pairs = [(0, 1)]
    for j in _limit(k_limit, order + 1):
        lo = j * (3 * j - 1) // 2
        if lo >= order and k_limit is None:
            break
        sign = (-1) ** j
        pairs += [(lo, sign), (j * (3 * j + 1) // 2, sign)]
    return ThetaExpansion.from_pairs(pairs, order)


def theta_square(k_limit: Optional[int], order: int) -> ThetaExpansion:
    pairs = [(0, 1)]
    for j in _limit(k_limit, order + 1):
        if j * j >= order and k_limit is None:
            break
        pairs.append((j * j, 2 * (-1) ** j))
    return ThetaExpansion.from_pairs(pairs, order)


def theta_triangular(k_limit: Optional[int], order: int) -> ThetaExpansion:
    """sum_{j<k_limit} (-1)^j q^(j(2j+1)) (1 - q^(2j+1))."""
    if k_limit is not None and k_limit < 1:
        raise ValueError("the triangular partial sum needs k_limit >= 1")
    pairs = []
    j = 0
    while k_limit is None or j < k_limit:
        lo = j * (2 * j + 1)
        if lo >= order and k_limit is None:
            break
        sign = (-1) ** j
        pairs += [(lo, sign), ((j + 1) * (2 * j + 1), -sign)]
        j += 1
    return ThetaExpansion.from_pairs(pairs, order)


def check_jmr(m: int, r: int):
    if m < 1 or r < 1 or 2 * r > m:
        raise ValueError(f"need 1 <= r <= m/2, got m={m}, r={r}")


def theta_jmr(m: int, r: int, order: int, k_limit: Optional[int] = None) -> ThetaExpansion:
    """Triple-product expansion of (q^r, q^(m-r), q^m; q^m)_inf."""
    check_jmr(m, r)
    pairs = [(0, 1)]
    for j in _limit(k_limit, order + 1):
        lo = j * (m * j - m + 2 * r) // 2
        if lo >= order and k_limit is None:
            break
        sign = (-1) ** j
        pairs += [(j * (m * j + m - 2 * r) // 2, sign), (lo, sign)]
    return ThetaExpansion.from_pairs(pairs, order)


def theta_cube(order: int) -> ThetaExpansion:
    pairs = []
    j = 0
    while j * (j + 1) // 2 < order:
        pairs.append((j * (j + 1) // 2, (-1) ** j * (2 * j + 1)))
        j += 1
    return ThetaExpansion.from_pairs(pairs, order)
