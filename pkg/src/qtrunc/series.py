"""Truncated formal power series in q.

A :class:`TruncSeries` keeps the coefficients of q^0 .. q^(N-1) densely.
Values are immutable; every operation returns a new series whose order is
the minimum of the operand orders.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rings import INT, Ring, coerce_all

# Below this order the Kronecker packing costs more than it saves.
KRONECKER_MIN_ORDER = 24


class RingMismatchError(TypeError):
    pass


class NonUnitError(ArithmeticError):
    pass


class TruncSeries:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable, ring: Ring = INT):
        coeffs = coerce_all(ring, coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs order >= 1")
        self.coeffs = coeffs
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: tuple, ring: Ring) -> "TruncSeries":
        s = object.__new__(cls)
        s.coeffs = coeffs
        s.ring = ring
        return s

    @classmethod
    def zero(cls, order: int, ring: Ring = INT) -> "TruncSeries":
        return cls._raw((ring.zero,) * order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = INT) -> "TruncSeries":
        return cls.monomial(0, order, ring=ring)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1, ring: Ring = INT) -> "TruncSeries":
        """coeff * q^exponent truncated to ``order``."""
        if order < 1:
            raise ValueError("order must be positive")
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        c = [ring.zero] * order
        if exponent < order:
            c[exponent] = ring.coerce(coeff)
        return cls._raw(tuple(c), ring)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]], order: int, ring: Ring = INT):
        """Build from sparse (exponent, coeff) pairs; exponents >= order are dropped."""
        c = [ring.zero] * order
        for e, v in terms:
            if e < 0:
                raise ValueError("negative exponents are not representable")
            if e < order:
                c[e] = c[e] + ring.coerce(v)
        return cls._raw(tuple(c), ring)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, ring={self.ring.name})"

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries._raw(self.coeffs[:order], self.ring)

    def map_coeffs(self, fn, ring: Ring) -> "TruncSeries":
        return TruncSeries._raw(tuple(ring.coerce(fn(c)) for c in self.coeffs), ring)

    def first_difference(self, other: "TruncSeries"):
        """Smallest power where the two series differ, or None."""
        _check_ring(self, other)
        for i, (x, y) in enumerate(zip(self.coeffs, other.coeffs)):
            if x != y:
                return i
        return None

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __neg__(self):
        return TruncSeries._raw(tuple(-c for c in self.coeffs), self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TruncSeries":
        c = self.ring.coerce(c)
        return TruncSeries._raw(tuple(c * x for x in self.coeffs), self.ring)


def _check_ring(s: TruncSeries, t: TruncSeries):
    if s.ring is not t.ring:
        raise RingMismatchError(f"ring mismatch: {s.ring.name} vs {t.ring.name}")


def series_add(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    _check_ring(s, t)
    return TruncSeries._raw(tuple(x + y for x, y in zip(s.coeffs, t.coeffs)), s.ring)


def mul_schoolbook(a: Sequence, b: Sequence, n: int, zero=0) -> list:
    """Reference Cauchy product of two coefficient lists, truncated to n terms."""
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        lim = n - i
        for j, y in enumerate(b[:lim]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _pack(values: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def mul_kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Integer Cauchy product via Kronecker substitution.

    Both inputs are evaluated at q = 2^(8w) where w bytes hold any product
    coefficient with room for its sign; one big-integer multiply then does
    the whole convolution. Negative coefficients are handled by splitting
    each operand into positive and negative parts and by adding a bias of
    2^(8w-1) per slot before unpacking.
    """
    a = list(a[:n])
    b = list(b[:n])
    ma = max((abs(x) for x in a), default=0)
    mb = max((abs(x) for x in b), default=0)
    if not ma or not mb:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width

    pa = _pack([x if x > 0 else 0 for x in a], width) - _pack([-x if x < 0 else 0 for x in a], width)
    pb = _pack([x if x > 0 else 0 for x in b], width) - _pack([-x if x < 0 else 0 for x in b], width)
    prod = pa * pb

    slots = len(a) + len(b) - 1
    half = 1 << (bits - 1)
    bias = _pack([half] * slots, width)
    raw = (prod + bias).to_bytes(slots * width, "little")
    out = [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(min(slots, n))
    ]
    out.extend([0] * (n - len(out)))
    return out


def _density(c: Sequence) -> int:
    return sum(1 for x in c if x)


def series_mul(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    _check_ring(s, t)
    n = min(s.order, t.order)
    if s.ring is INT and n >= KRONECKER_MIN_ORDER:
        # Sparse factors (theta expansions, single binomials) are cheaper directly.
        if min(_density(s.coeffs[:n]), _density(t.coeffs[:n])) > 8:
            return TruncSeries._raw(tuple(mul_kronecker(s.coeffs, t.coeffs, n)), INT)
    a, b = s.coeffs, t.coeffs
    if _density(a[:n]) > _density(b[:n]):
        a, b = b, a
    return TruncSeries._raw(tuple(mul_schoolbook(a, b, n, s.ring.zero)), s.ring)


def series_invert(s: TruncSeries) -> TruncSeries:
    """Reciprocal by the constant-term recurrence; needs a unit constant term."""
    ring = s.ring
    c0 = s.coeffs[0]
    if c0 == ring.one:
        inv0 = ring.one
    elif c0 == -ring.one:
        inv0 = -ring.one
    else:
        raise NonUnitError(f"constant term {c0!r} is not a unit")
    n = s.order
    nz = [(i, c) for i, c in enumerate(s.coeffs) if i and c]
    out = [ring.zero] * n
    out[0] = inv0
    for m in range(1, n):
        acc = ring.zero
        for i, c in nz:
            if i > m:
                break
            acc = acc + c * out[m - i]
        out[m] = -(inv0 * acc)
    return TruncSeries._raw(tuple(out), ring)


def series_shift(s: TruncSeries, t: int) -> TruncSeries:
    """Multiply by q^t, keeping the order."""
    if t < 0:
        raise ValueError("shift must be nonnegative")
    n = s.order
    if t >= n:
        return TruncSeries.zero(n, s.ring)
    return TruncSeries._raw((s.ring.zero,) * t + s.coeffs[: n - t], s.ring)


def series_substitute_power(s: TruncSeries, m: int) -> TruncSeries:
    """Replace q by q^m, keeping the order."""
    if m < 1:
        raise ValueError("power must be positive")
    n = s.order
    out = [s.ring.zero] * n
    for j in range(0, (n - 1) // m + 1):
        out[m * j] = s.coeffs[j]
    return TruncSeries._raw(tuple(out), s.ring)


def mul_binomial(s: TruncSeries, c, e: int) -> TruncSeries:
    """Multiply by the factor (1 - c q^e) in O(N)."""
    ring = s.ring
    c = ring.coerce(c)
    if e == 0:
        return s.scale(ring.one - c)
    out = list(s.coeffs)
    for m in range(len(out) - 1, e - 1, -1):
        out[m] = out[m] - c * out[m - e]
    return TruncSeries._raw(tuple(out), ring)


def div_binomial(s: TruncSeries, c, e: int) -> TruncSeries:
    """Divide by the factor (1 - c q^e), e >= 1, in O(N); no ring division occurs."""
    ring = s.ring
    if e < 1:
        raise NonUnitError("cannot divide by a factor without unit constant term")
    c = ring.coerce(c)
    out = list(s.coeffs)
    for m in range(e, len(out)):
        out[m] = out[m] + c * out[m - e]
    return TruncSeries._raw(tuple(out), ring)
