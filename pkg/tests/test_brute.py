"""Tests for the enumeration oracle: generation, statistics, weighted tables."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cranktab import brute
from cranktab.brute import (
    colored_partitions,
    crank,
    crank_contributions,
    first_residual_contributions,
    halved_even_subpartition,
    kcrank,
    nonoverlined_subpartition,
    oracle_rows,
    overpartitions,
    partitions,
    rank,
    second_residual_contributions,
)
from cranktab.series import overpartition_series, partition_series

# the worked overpartition example: non-overlined subpartition (9,7,5,5,4,3,1,1)
EXAMPLE_OP = (
    (9, True), (9, False), (7, False), (6, True), (5, False), (5, False),
    (4, True), (4, False), (3, False), (1, True), (1, False), (1, False),
)


def test_partitions_base_cases():
    assert list(partitions(0)) == [()]
    assert len(list(partitions(4))) == 5
    assert len(list(partitions(10))) == 42


def test_partitions_complete_and_duplicate_free():
    p = partition_series(14).coeffs
    for n in range(15):
        objs = list(partitions(n))
        assert len(objs) == len(set(objs)) == p[n]
        assert all(sum(o) == n for o in objs)
        assert all(list(o) == sorted(o, reverse=True) for o in objs)


def test_overpartitions_n2():
    assert list(overpartitions(2)) == [
        ((2, False),),
        ((2, True),),
        ((1, False), (1, False)),
        ((1, True), (1, False)),
    ]


def test_overpartitions_counts():
    assert list(overpartitions(0)) == [()]
    assert len(list(overpartitions(4))) == 14
    expected = overpartition_series(10).coeffs
    for n in range(11):
        objs = list(overpartitions(n))
        assert len(objs) == len(set(objs)) == expected[n]


def test_overpartition_canonical_form():
    for n in range(8):
        for op in overpartitions(n):
            values = [v for v, _ in op]
            assert values == sorted(values, reverse=True)
            # at most one overline per value, and it precedes equal plain copies
            for i, (v, over) in enumerate(op):
                if over:
                    assert all(u != v for u, o in op[:i])


def test_rank_examples():
    assert rank((4,)) == 3
    assert rank((2, 1)) == 0
    assert rank((1, 1, 1, 1)) == -3
    with pytest.raises(ValueError):
        rank(())


def test_crank_examples():
    assert crank((9, 7, 5, 5, 4, 3, 1, 1)) == 4
    assert crank((3,)) == 3
    assert crank((1, 1)) == -2
    assert crank((1,)) == -1
    with pytest.raises(ValueError):
        crank(())


def test_crank_contributions_conventions():
    assert crank_contributions((1,)) == ((0, -1), (-1, 1), (1, 1))
    assert crank_contributions(()) == ((0, 1),)
    assert crank_contributions((2, 1)) == ((0, 1),)


def test_first_residual_contributions():
    op = ((7, True), (5, True), (2, True), (1, False))
    assert sum(v for v, _ in op) == 15
    assert first_residual_contributions(op) == ((0, -1), (-1, 1), (1, 1))

    assert nonoverlined_subpartition(EXAMPLE_OP) == (9, 7, 5, 5, 4, 3, 1, 1)
    assert first_residual_contributions(EXAMPLE_OP) == ((4, 1),)

    assert first_residual_contributions(((2, True),)) == ((0, 1),)


def test_second_residual_contributions():
    op = (
        (10, True), (9, False), (9, False), (7, True), (7, False), (6, True),
        (5, False), (3, False), (3, False), (2, True), (2, False),
    )
    assert halved_even_subpartition(op) == (1,)
    assert second_residual_contributions(op) == ((0, -1), (-1, 1), (1, 1))

    assert halved_even_subpartition(EXAMPLE_OP) == (2,)
    assert second_residual_contributions(EXAMPLE_OP) == ((2, 1),)

    assert second_residual_contributions(((1, False), (1, False))) == ((0, 1),)


def test_kcrank():
    assert kcrank(((1,), (), ())) == 1
    assert kcrank(((), (1, 1))) == -2
    assert kcrank(((2, 1), (3,))) == 1
    with pytest.raises(ValueError):
        kcrank(((1,),))


def test_colored_partitions_counts():
    for k in (2, 3):
        expected = partition_series(8).pow(k).coeffs
        for n in range(9):
            objs = list(colored_partitions(n, k))
            assert len(objs) == len(set(objs)) == expected[n]
            assert all(sum(map(sum, o)) == n for o in objs)


def test_oracle_rows_crank_convention():
    rows = oracle_rows("crank", 3)
    assert rows[0] == {0: 1}
    assert rows[1] == {-1: 1, 0: -1, 1: 1}
    assert rows[3] == {-3: 1, 0: 1, 3: 1}


def test_oracle_rows_ocrank_n2():
    rows = oracle_rows("ocrank", 2)
    assert rows[2] == {-2: 1, -1: 1, 1: 1, 2: 1}


def test_oracle_rows_rank_n4():
    rows = oracle_rows("rank", 4)
    assert rows[4] == {-3: 1, -1: 1, 0: 1, 1: 1, 3: 1}


def test_oracle_rows_kcrank_matches_direct_enumeration():
    for k in (2, 3, 4):
        rows = oracle_rows("kcrank", 7, k=k)
        for n in range(8):
            direct = {}
            for c in colored_partitions(n, k):
                m = kcrank(c)
                direct[m] = direct.get(m, 0) + 1
            assert rows[n] == direct


def test_oracle_row_sums_count_objects():
    p = partition_series(12).coeffs
    op = overpartition_series(12).coeffs
    crank_rows = oracle_rows("crank", 12)
    ocrank_rows = oracle_rows("ocrank", 12)
    m2_rows = oracle_rows("m2crank", 12)
    for n in range(13):
        assert sum(crank_rows[n].values()) == p[n]
        assert sum(ocrank_rows[n].values()) == op[n]
        assert sum(m2_rows[n].values()) == op[n]


def test_oracle_rows_symmetric():
    for stat, k in (("crank", None), ("ocrank", None), ("m2crank", None),
                    ("rank", None), ("kcrank", 3)):
        for n, row in enumerate(oracle_rows(stat, 10, k=k)):
            assert row == {-m: c for m, c in row.items()}, (stat, n)
            assert all(abs(m) <= n for m in row), (stat, n)


@settings(max_examples=30)
@given(st.integers(min_value=0, max_value=12))
def test_contribution_weights_sum_to_one(n):
    for p in partitions(n):
        assert sum(w for _, w in crank_contributions(p)) == 1
    for op in overpartitions(n):
        assert sum(w for _, w in first_residual_contributions(op)) == 1
        assert sum(w for _, w in second_residual_contributions(op)) == 1


def test_unknown_statistic_rejected():
    with pytest.raises(ValueError):
        oracle_rows("nope", 3)
    with pytest.raises(ValueError):
        oracle_rows("kcrank", 3)  # k missing
    with pytest.raises(ValueError):
        brute._rows_kcrank(3, 1)
