import random

import pytest
from hypothesis import given, settings, strategies as st

from qtrunc.rings import BIVAR, INT, BivarPoly
from qtrunc.series import (
    NonUnitError,
    RingMismatchError,
    TruncSeries,
    div_binomial,
    mul_binomial,
    mul_kronecker,
    series_add,
    series_invert,
    series_mul,
    series_shift,
    series_substitute_power,
)
from qtrunc.qobjects import poch, qpoch

PENTAGONAL_8 = [1, -1, -1, 0, 0, 1, 0, 1]
OVERP_7 = [1, 2, 4, 8, 14, 24, 40]


def naive_mul(a, b):
    n = min(len(a), len(b))
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if i + j < n:
                out[i + j] += a[i] * b[j]
    return out


def brute_euler_product(order):
    # expand prod_{i>=1} (1 - q^i) one factor at a time with plain lists
    c = [1] + [0] * (order - 1)
    for i in range(1, order):
        c = [c[m] - (c[m - i] if m >= i else 0) for m in range(order)]
    return c


def S(*c):
    return TruncSeries(c)


def test_pentagonal_oracle():
    assert brute_euler_product(8) == PENTAGONAL_8


def test_add_examples():
    assert list(S(1, -1, 0) + S(0, 1, 0)) == [1, 0, 0]
    s = S(3, 1, 4, 1)
    assert s + TruncSeries.zero(4) == s
    pent = TruncSeries(PENTAGONAL_8)
    assert list(series_add(pent, -pent)) == [0] * 8


def test_mul_examples():
    assert list(S(1, -1, 0, 0) * S(1, 1, 1, 1)) == [1, 0, 0, 0]
    assert list(series_mul(S(1, -2, 0, 0, 0, 0, 0), TruncSeries(OVERP_7))) == [1, 0, 0, 0, -2, -4, -8]
    s = S(5, -3, 2)
    assert s * TruncSeries.one(3) == s


def test_order_mismatch_takes_minimum():
    assert (S(1, 2, 3) + S(1, 1)).order == 2
    assert (S(1, 2, 3) * S(1, 1, 1, 1, 1)).order == 3


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        S(1, 2) + TruncSeries.one(2, BIVAR)


def test_invert_examples():
    assert list(series_invert(S(1, -1, 0, 0, 0))) == [1] * 5
    p = series_invert(poch(qpoch(1, 1), 7))
    assert list(p) == [1, 1, 2, 3, 5, 7, 11]


def test_invert_rejects_non_unit():
    with pytest.raises(NonUnitError):
        series_invert(S(2, 1))
    with pytest.raises(NonUnitError):
        series_invert(S(0, 1))


def test_invert_negative_unit():
    s = S(-1, 3, 0, 2)
    assert series_invert(s) * s == TruncSeries.one(4)


def test_shift_examples():
    assert list(series_shift(S(1, 1, 1), 1)) == [0, 1, 1]
    s = S(4, 5, 6)
    assert series_shift(s, 0) == s
    p = series_invert(poch(qpoch(1, 1), 10))
    assert series_shift(p, 5)[9] == 5
    assert list(series_shift(s, 7)) == [0, 0, 0]


def test_substitute_examples():
    assert list(series_substitute_power(S(1, 1, 1, 0, 0), 2)) == [1, 0, 1, 0, 1]
    s = S(1, 2, 3)
    assert series_substitute_power(s, 1) == s
    p = series_invert(poch(qpoch(1, 1), 7))
    assert series_substitute_power(p, 2)[6] == 3


def test_binomial_factor_helpers_match_generic_mul():
    s = S(1, 3, -2, 7, 0, 5)
    f = S(1, 0, -3, 0, 0, 0)  # 1 - 3q^2
    assert mul_binomial(s, 3, 2) == s * f
    assert div_binomial(s, 3, 2) * f == s
    assert mul_binomial(s, 1, 0) == TruncSeries.zero(6)


def test_constructor_rejects_empty():
    with pytest.raises(ValueError):
        TruncSeries([])


coeff = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def series_triples(draw):
    n = draw(st.integers(min_value=1, max_value=64))
    mk = lambda: TruncSeries(draw(st.lists(coeff, min_size=n, max_size=n)))
    return mk(), mk(), mk()


@settings(max_examples=1000, deadline=None)
@given(series_triples())
def test_ring_axioms_integer_series(triple):
    s, t, u = triple
    n = s.order
    assert (s + t) + u == s + (t + u)
    assert s + t == t + s
    assert s * t == t * s
    assert (s * t) * u == s * (t * u)
    assert s * (t + u) == s * t + s * u
    assert s + TruncSeries.zero(n) == s
    assert s * TruncSeries.one(n) == s
    assert s + (-s) == TruncSeries.zero(n)


@st.composite
def unit_series(draw):
    n = draw(st.integers(min_value=1, max_value=64))
    c0 = draw(st.sampled_from([1, -1]))
    rest = draw(st.lists(st.integers(-50, 50), min_size=n - 1, max_size=n - 1))
    return TruncSeries([c0] + rest)


@settings(max_examples=1000, deadline=None)
@given(unit_series())
def test_inversion_round_trip(s):
    inv = series_invert(s)
    assert all(isinstance(c, int) for c in inv)
    assert s * inv == TruncSeries.one(s.order)
    assert series_invert(inv) == s


@settings(max_examples=300, deadline=None)
@given(st.lists(coeff, min_size=1, max_size=64), st.lists(coeff, min_size=1, max_size=64))
def test_mul_matches_naive_double_loop(a, b):
    assert list(TruncSeries(a) * TruncSeries(b)) == naive_mul(a, b)


def test_kronecker_matches_naive_on_big_coefficients():
    rng = random.Random(7)
    for n in (1, 2, 24, 64, 200):
        a = [rng.randint(-10**40, 10**40) for _ in range(n)]
        b = [rng.randint(-10**3, 10**3) for _ in range(n)]
        b[0] = 0
        assert mul_kronecker(a, b, n) == naive_mul(a, b)
    assert mul_kronecker([0, 0], [1, 2], 2) == [0, 0]


poly = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5
).map(BivarPoly)


@settings(max_examples=1000, deadline=None)
@given(poly, poly, poly)
def test_bivariate_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + BIVAR.zero == x
    assert x * BIVAR.one == x
    assert x - x == BIVAR.zero


def test_bivariate_canonical_zero_pruning():
    a, b = BivarPoly.a(), BivarPoly.b()
    p = (a + b) - b
    assert p == a
    assert p.terms == {(1, 0): 1}
    assert hash(p) == hash(a)
    assert ((a - b) * (a + b)).evaluate(3, 2) == 5
    with pytest.raises(ValueError):
        BivarPoly({(-1, 0): 1})


def test_bivariate_series_invert_with_symbolic_terms():
    a = BivarPoly.a()
    s = TruncSeries([1, -a, 0, 0, 0], BIVAR)  # 1 - a q
    inv = series_invert(s)
    assert list(inv) == [a**i for i in range(5)]
    assert s * inv == TruncSeries.one(5, BIVAR)
