import pytest

import qtrunc.identities as ids
from qtrunc.identities import (
    TAIL_KINDS,
    IdentityId,
    InvalidIdentityError,
    shifted_neg_inverse_poch,
    sides,
    specialize,
    verify,
)
from qtrunc.series import TruncSeries


def make(kind, **p):
    return IdentityId.make(kind, **p)


def test_thm1_k1_example():
    rep = verify(make("THM1", k=1), 7)
    assert rep.passed and rep.first_mismatch is None
    lhs, rhs = sides(make("THM1", k=1), 7)
    assert list(lhs) == list(rhs) == [1, 0, 0, 0, -2, -4, -8]


def test_shanks_n1_example():
    lhs, rhs = sides(make("SHANKS", n=1), 4)
    assert list(lhs) == list(rhs) == [1, 1, 0, 0]


@pytest.mark.parametrize("order", [1, 5, 40])
def test_agj_zero_is_one(order):
    lhs, rhs = sides(make("AGJ", n=0), order)
    assert lhs == rhs == TruncSeries.one(order, lhs.ring)


def test_jtp_31_is_euler():
    assert verify(make("JTP_SPECIAL", m=3, r=1), 64).passed
    assert sides(make("JTP_SPECIAL", m=3, r=1), 64) == sides(make("EULER_PENT"), 64)


def test_lemma_s2_1_1_is_zero():
    lhs, rhs = sides(make("LEMMA_S2", n=1, k=1), 16)
    assert lhs == rhs == TruncSeries.zero(16)
    assert verify(make("LEMMA_S2", n=1, k=1), 16).passed


@pytest.mark.parametrize("kind", ["AM_TRUNCATED", "THM1", "THM3", "NEWOVP"])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_truncated_identities(kind, k):
    assert verify(make(kind, k=k), 120).passed


@pytest.mark.parametrize("n", range(0, 9))
def test_agj_bivariate(n):
    assert verify(make("AGJ", n=n), 30).passed


@pytest.mark.parametrize("n", range(0, 9))
def test_agj_specializes_to_gauss(n):
    lhs, rhs = sides(make("AGJ", n=n), 40)
    g_lhs, g_rhs = sides(make("AGJ_GAUSS", n=n), 40)
    assert specialize(lhs, -1, 1) == g_lhs
    assert specialize(rhs, -1, 1) == g_rhs


def test_verifier_detects_a_broken_identity(monkeypatch):
    real = ids._BUILDERS["THM1"]

    def off_by_one(order, k, tail_extra=0, **_):
        lhs, rhs = real(order, k=k + 1, tail_extra=tail_extra)
        lhs2, _ = real(order, k=k, tail_extra=tail_extra)
        return lhs2, rhs

    monkeypatch.setitem(ids._BUILDERS, "THM1", off_by_one)
    rep = verify(make("THM1", k=1), 30)
    assert rep.status == "fail"
    power, l, r = rep.first_mismatch
    assert l != r
    # k=1 and k=2 sides first differ at q^4
    assert power == 4


@pytest.mark.parametrize("k", range(1, 9))
def test_thm1_rhs_sign_pattern(k):
    _, rhs = sides(make("THM1", k=k), 300)
    sign = (-1) ** k
    for m in range(1, 300):
        assert sign * rhs[m] >= 0
        if m >= (k + 1) ** 2:
            assert sign * rhs[m] > 0


@pytest.mark.parametrize("kind", TAIL_KINDS)
@pytest.mark.parametrize("k", [1, 3, 6])
def test_tail_cutoff_soundness(kind, k):
    ident = make(kind, k=k)
    assert sides(ident, 150) == sides(ident, 150, tail_extra=3)


def test_tail_indices():
    assert list(ids.tail_indices(2, lambda n: 3 * n, 10)) == [2, 3]
    assert list(ids.tail_indices(2, lambda n: 3 * n, 10, extra=3)) == [2, 3, 4, 5, 6]


def test_shifted_neg_inverse_poch_against_laurent_expansion():
    for i in range(0, 7):
        # expand prod_{t<i} (1 + q^(2t-1)) over a dict that allows q^-1, then multiply by q^i
        laurent = {0: 1}
        for t in range(i):
            nxt = {}
            for e, c in laurent.items():
                nxt[e] = nxt.get(e, 0) + c
                nxt[e + 2 * t - 1] = nxt.get(e + 2 * t - 1, 0) + c
            laurent = nxt
        shifted = {e + i: c for e, c in laurent.items()}
        assert min(shifted) >= 0
        assert shifted_neg_inverse_poch(i, 60) == TruncSeries.from_terms(shifted.items(), 60)


def test_lemmas_small_grid():
    for kind in ("LEMMA_S2", "LEMMA_S5"):
        for n in range(1, 9):
            for k in range(1, 6):
                assert verify(make(kind, n=n, k=k), 60).passed, (kind, n, k)


@pytest.mark.parametrize(
    "kind, params",
    [
        ("THM1", {}),
        ("THM1", {"k": 0}),
        ("SHANKS", {"n": 0}),
        ("JTP_SPECIAL", {"m": 5, "r": 3}),
        ("LEMMA_S2", {"n": 0, "k": 1}),
        ("NOPE", {}),
        ("EULER_PENT", {"k": 1}),
    ],
)
def test_invalid_parameters(kind, params):
    with pytest.raises(InvalidIdentityError):
        make(kind, **params)


def test_order_must_be_positive():
    with pytest.raises(InvalidIdentityError):
        verify(make("EULER_PENT"), 0)


def test_identity_names():
    assert make("thm1", k=3).name == "thm1(k=3)"
    assert make("JTP_SPECIAL", m=7, r=2).m == 7
