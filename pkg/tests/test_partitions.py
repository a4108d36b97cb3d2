import pytest

from qtrunc.combinatorics import restricted_partitions
from qtrunc.partitions import (
    OVERP,
    P,
    POD,
    T3,
    PartitionFunctionId,
    ValueTable,
    jmr,
    pf_by_product,
    pf_by_recurrence,
    pf_crosscheck,
)


def test_recurrence_examples():
    assert pf_by_recurrence(P, 6).values == (1, 1, 2, 3, 5, 7, 11)
    assert pf_by_recurrence(OVERP, 6).values == (1, 2, 4, 8, 14, 24, 40)
    assert pf_by_recurrence(POD, 7).values == (1, 1, 1, 2, 3, 4, 5, 7)
    assert pf_by_recurrence(T3, 9).values == (1, 3, 9, 22, 51, 108, 221, 429, 810, 1479)


def test_product_examples():
    # parts from {1,4,5,6}: n=6 has {6},{5,1},{4,1,1},{1^6}
    oracle = [sum(1 for _ in restricted_partitions(n, [1, 4, 5, 6])) for n in range(7)]
    assert oracle == [1, 1, 1, 1, 2, 3, 4]
    assert list(pf_by_product(jmr(5, 1), 6).values) == oracle
    assert pf_by_product(OVERP, 6).values == (1, 2, 4, 8, 14, 24, 40)
    assert pf_by_product(T3, 1).values == (1, 3)


@pytest.mark.parametrize("fid, n_max", [(P, 1000), (jmr(7, 2), 500), (T3, 0), (OVERP, 400), (POD, 400)])
def test_crosscheck(fid, n_max):
    assert pf_crosscheck(fid, n_max) == (True, None)


def test_crosscheck_reports_first_mismatch(monkeypatch):
    import qtrunc.partitions as pm

    real = pm.pf_by_product.__wrapped__

    def skewed(fid, n_max):
        t = real(fid, n_max)
        vals = list(t.values)
        vals[5] += 1
        return ValueTable(fid, tuple(vals))

    monkeypatch.setattr(pm, "pf_by_product", skewed)
    assert pm.pf_crosscheck(P, 20) == (False, 5)


def test_specializations_agree_to_2000():
    for (m, r), fid in [((3, 1), P), ((2, 1), OVERP), ((4, 1), POD)]:
        assert pf_by_recurrence(jmr(m, r), 2000).values == pf_by_recurrence(fid, 2000).values


def test_table_invariants():
    for fid in (P, OVERP, POD, T3, jmr(9, 4), jmr(6, 3)):
        t = pf_by_recurrence(fid, 300)
        assert t[0] == 1
        assert all(v >= 0 for v in t.values)
        assert t[-3] == 0
        with pytest.raises(IndexError):
            t[301]


def test_overpartition_doubling_bound():
    v = pf_by_recurrence(OVERP, 1500).values
    assert all(v[n - 1] <= v[n] <= 2 * v[n - 1] for n in range(1, len(v)))


def test_big_integers_exceed_machine_words():
    assert pf_by_recurrence(OVERP, 1000)[1000] > 2**64
    assert pf_by_recurrence(T3, 800)[800] > 2**64


def test_id_validation():
    with pytest.raises(ValueError):
        jmr(4, 3)
    with pytest.raises(ValueError):
        PartitionFunctionId("P", 3, 1)
    with pytest.raises(ValueError):
        PartitionFunctionId("Q")
