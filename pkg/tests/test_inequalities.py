import pytest

from qtrunc.combinatorics import count_jmr
from qtrunc.inequalities import (
    AM,
    CONJ2,
    CONJ3,
    COR2,
    COR4,
    RR1,
    RR2,
    FamilyId,
    MissingTableError,
    conj1,
    crosscheck_conj2,
    crosscheck_rr,
    family_value,
    rr_series,
    scan,
    tables_for,
    values,
)
from qtrunc.partitions import OVERP, P, POD, T3, jmr, table

# small reference values
P_VALS = [1, 1, 2, 3, 5, 7, 11]
OVERP_VALS = [1, 2, 4, 8, 14, 24, 40]
POD_VALS = [1, 1, 1, 2, 3, 4, 5, 7]


def f(vals, n):
    return vals[n] if n >= 0 else 0


def test_cor2_k1_values():
    expected = [2 * f(OVERP_VALS, n - 1) - OVERP_VALS[n] for n in range(1, 7)]
    assert expected == [0, 0, 0, 2, 4, 8]
    assert values(COR2, 1, 6)[1:] == expected


def test_cor4_k2_n6_equality():
    direct = -(POD_VALS[6] - POD_VALS[5] - POD_VALS[3] + POD_VALS[0])
    assert direct == 0
    assert family_value(COR4, 2, 6, tables_for(COR4, 6)) == 0


def test_four_term_combination_is_the_k2_am_value():
    combo_at_5 = P_VALS[5] - P_VALS[4] - P_VALS[3] + P_VALS[0]
    assert combo_at_5 == 0
    tabs = tables_for(AM, 10)
    assert family_value(AM, 2, 5, tabs) == -combo_at_5
    # k = 1 is the plain difference p(n) - p(n-1)
    assert family_value(AM, 1, 5, tabs) == P_VALS[5] - P_VALS[4]


def test_conj3_k1_n1():
    assert family_value(CONJ3, 1, 1, tables_for(CONJ3, 1)) == 3 * 1 - 3


def test_scan_cor2_proved():
    rep = scan(COR2, 10, 1000)
    assert rep.passed and rep.violations == [] and rep.strictness_violations == []
    assert rep.thresholds[3] == 16
    assert not rep.conjecture


def test_scan_cor4_k1():
    rep = scan(COR4, 1, 10)
    assert rep.passed
    v = values(COR4, 1, 10)
    assert v[1] == v[2] == 0
    assert all(x > 0 for x in v[3:])


def test_conj1_52_strictness_finding_is_real():
    # J_{5,2}: parts congruent to 0, +-2 mod 5; the k=1 value is J(n) - J(n-2).
    oracle = [count_jmr(n, 5, 2) for n in range(6)]
    assert oracle[4] - oracle[2] == 0
    rep = scan(conj1(5, 2), 8, 800)
    assert rep.violations == []
    assert (1, 4) in rep.strictness_violations
    assert rep.status == "fail" and rep.conjecture


def test_conj1_51_strictness_finding_is_real():
    oracle = [count_jmr(n, 5, 1) for n in range(8)]
    assert oracle[7] == oracle[6] == 4
    rep = scan(conj1(5, 1), 8, 800)
    assert rep.violations == []
    assert rep.strictness_violations == [(1, 7)]


@pytest.mark.parametrize("m", range(2, 11))
def test_conj1_sign_claim_holds(m):
    for r in range(1, m // 2 + 1):
        assert scan(conj1(m, r), 8, 400).violations == []


def test_conj1_half_integral_offsets_rejected():
    from qtrunc.inequalities import _half
    with pytest.raises(ValueError):
        _half(7)


def test_equivalent_families():
    for k in range(1, 7):
        assert values(conj1(3, 1), k, 300) == values(AM, k, 300)
        assert values(conj1(2, 1), k, 300) == values(CONJ2, k, 300)
        assert values(conj1(4, 1), k, 300) == values(COR4, k, 300)


def test_conj2_dominance_over_cor2():
    # COR2(k-1, n) - CONJ2(k, n) = overp(n - k^2), so CONJ2 >= 0 forces COR2(k-1) >= 0
    ov = table(OVERP, 400)
    tabs = {OVERP: ov}
    for k in range(2, 9):
        for n in range(401):
            diff = family_value(COR2, k - 1, n, tabs) - family_value(CONJ2, k, n, tabs)
            assert diff == ov[n - k * k]
    assert scan(CONJ2, 8, 400).passed and scan(COR2, 7, 400).passed


def test_crosscheck_conj2_examples():
    assert values(CONJ2, 1, 6)[1:] == [1, 2, 4, 6, 10, 16]
    assert crosscheck_conj2(2, 200)
    for k in range(1, 6):
        assert values(CONJ2, k, 0) == [(-1) ** (k - 1)]


def test_crosscheck_rr():
    assert crosscheck_rr("RR1", 5, 300)
    assert crosscheck_rr("RR2", 5, 200)
    assert rr_series("RR1", 1, 5)[0] == 0
    assert all(c >= 0 for c in rr_series("RR2", 2, 300))


def test_value_at_zero_matches_generating_function_constant():
    expected = {AM: lambda k: (-1) ** (k - 1), COR2: lambda k: (-1) ** k,
                COR4: lambda k: (-1) ** (k - 1), CONJ2: lambda k: (-1) ** (k - 1),
                CONJ3: lambda k: (-1) ** k, RR1: lambda k: 0, RR2: lambda k: 0}
    for fam, want in expected.items():
        for k in range(1, 6):
            assert values(fam, k, 0)[0] == want(k)


def test_missing_tables():
    with pytest.raises(MissingTableError):
        family_value(COR2, 1, 5, {})
    with pytest.raises(MissingTableError):
        family_value(COR2, 1, 50, {OVERP: table(OVERP, 10)})


def test_family_validation():
    with pytest.raises(ValueError):
        FamilyId("CONJ1", 4, 3)
    with pytest.raises(ValueError):
        FamilyId("AM", 3, 1)
    assert RR1.needs() == jmr(5, 1) and CONJ3.needs() == T3 and AM.needs() == P
    assert COR4.needs() == POD
