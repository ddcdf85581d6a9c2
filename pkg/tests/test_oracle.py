# -*- coding: utf-8 -*-
"""2색 분할 오라클 테스트"""
import pytest

from certify import oracle
from certify.oracle import Color, TwoColorPartition, is_admissible
from qseries import special
from qseries.errors import ConstructionError

R, B = Color.RED, Color.BLUE


def test_small_counts():
    assert oracle.enumerate_c(0) == 0
    assert oracle.enumerate_c(1) == 1
    assert oracle.enumerate_c(2) == 2
    assert oracle.enumerate_c(3) == 5


def test_small_counts_finite_k():
    assert oracle.enumerate_c_k(1, 0) == 0
    assert oracle.enumerate_c_k(1, 2) == 2
    assert oracle.enumerate_c_k(1, 3) == 6
    with pytest.raises(ConstructionError):
        oracle.enumerate_c_k(0, 3)


def test_listing_matches_count():
    for n in range(1, 12):
        listed = list(oracle.two_color_partitions(n))
        assert len(listed) == oracle.enumerate_c(n)
        assert len(set(listed)) == len(listed)
        assert all(p.total == n and is_admissible(p) for p in listed)


def test_listing_matches_count_finite_k():
    for k in (1, 2):
        for n in range(1, 11):
            listed = list(oracle.two_color_partitions(n, k))
            assert len(listed) == oracle.enumerate_c_k(k, n)
            assert all(is_admissible(p, k) for p in listed)


def test_n_equals_one_needs_blue():
    assert [str(p) for p in oracle.two_color_partitions(1)] == ["1b"]
    assert not is_admissible(TwoColorPartition.of([(1, R)]))


def test_admissibility_rules():
    # 가장 작은 부분이 짝수
    assert not is_admissible(TwoColorPartition.of([(2, B)]))
    # 같은 색 짝수 부분 반복
    assert not is_admissible(TwoColorPartition.of([(1, B), (2, R), (2, R)]))
    # 색이 다르면 짝수 부분 반복 허용 (blue 짝수는 k 가 있을 때만)
    assert is_admissible(TwoColorPartition.of([(1, B), (4, R), (4, B)]), k=2)
    assert not is_admissible(TwoColorPartition.of([(1, B), (4, R), (4, B)]))
    # blue 짝수 부분 하한 s + 2k - 1
    assert not is_admissible(TwoColorPartition.of([(1, B), (2, B)]), k=2)
    assert is_admissible(TwoColorPartition.of([(1, B), (2, B)]), k=1)
    assert not is_admissible(TwoColorPartition.of([]))


def test_finite_k_equals_limit_when_2k_exceeds_n():
    for k in (3, 4):
        for n in range(0, 2 * k):
            assert oracle.enumerate_c_k(k, n) == oracle.enumerate_c(n)


def test_count_table_matches_series():
    table = oracle.count_table(25)
    series = special.series_C_sum(26)
    assert [table[n] for n in range(26)] == series.tolist()


def test_count_table_finite_k_matches_series():
    for k in (1, 2, 3):
        table = oracle.count_table(20, k)
        assert [table[n] for n in range(21)] == special.series_C_k(k, 21).tolist()


def test_convolution_check():
    result = oracle.convolution_check(300)
    assert result.passed
    assert result.name == "c-equals-q-a-s"


def test_oracle_checks_pass():
    assert oracle.check_oracle_c(20).passed
    assert oracle.check_oracle_c_k(2, 18).name == "oracle-c2-enumeration"
    assert oracle.check_oracle_c_k(2, 18).passed


@pytest.mark.slow
def test_oracle_equivalence_to_forty():
    assert oracle.check_oracle_c(40).passed
    for k in (1, 2, 3):
        assert oracle.check_oracle_c_k(k, 30).passed


@pytest.mark.slow
def test_count_table_with_workers():
    assert oracle.count_table(15, workers=2) == oracle.count_table(15)
