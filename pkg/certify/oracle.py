# -*- coding: utf-8 -*-
"""
2색 분할 brute-force 오라클
생성함수 C(q), C_k(q) 의 계수를 분할을 직접 세어서 독립적으로 확인
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import partial
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Tuple

from qseries import fps, special
from qseries.errors import ConstructionError
from qseries.settings import get_settings

from .identities import check_identity
from .results import CheckResult

logger = logging.getLogger(__name__)


class Color(Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class TwoColorPartition:
    """(크기, 색) 쌍의 multiset, 크기 내림차순 / red 먼저로 정렬해 저장"""
    parts: Tuple[Tuple[int, Color], ...]

    @classmethod
    def of(cls, parts) -> "TwoColorPartition":
        ordered = sorted(parts, key=lambda p: (-p[0], p[1] is Color.BLUE))
        return cls(tuple(ordered))

    @property
    def total(self) -> int:
        return sum(size for size, _ in self.parts)

    @property
    def smallest(self) -> Optional[int]:
        return min((size for size, _ in self.parts), default=None)

    def count(self, size: int, color: Color) -> int:
        return sum(1 for s, c in self.parts if s == size and c is color)

    def __str__(self) -> str:
        return " + ".join(f"{s}{'b' if c is Color.BLUE else 'r'}" for s, c in self.parts) or "()"


def is_admissible(partition: TwoColorPartition, k: Optional[int] = None) -> bool:
    """
    C(k, n) 가 세는 분할인지 판정 (k=None 은 k -> inf 극한)

    - 비어 있지 않고 가장 작은 부분 s 가 홀수이며 s 중 적어도 하나는 blue
    - 같은 색의 짝수 부분은 서로 다름
    - blue 짝수 부분은 s + 2k - 1 이상 (극한에서는 blue 짝수 부분 없음)
    """
    s = partition.smallest
    if s is None or s % 2 == 0:
        return False
    if partition.count(s, Color.BLUE) == 0:
        return False
    counts = Counter(partition.parts)
    for (size, color), mult in counts.items():
        if size % 2:
            continue
        if mult > 1:
            return False
        if color is Color.BLUE and (k is None or size < s + 2 * k - 1):
            return False
    return True


def _multiplicity_maps(remaining: int, min_part: int, max_even: int) -> Iterator[List[Tuple[int, int]]]:
    """
    remaining 의 분할을 [(크기, 개수), ...] (크기 오름차순) 로 생성
    짝수 크기의 개수는 max_even 이하로 제한
    """
    if remaining == 0:
        yield []
        return
    for size in range(min_part, remaining + 1):
        limit = remaining // size
        if size % 2 == 0:
            limit = min(limit, max_even)
        for mult in range(1, limit + 1):
            for rest in _multiplicity_maps(remaining - size * mult, size + 1, max_even):
                yield [(size, mult)] + rest


def _partitions_with_odd_smallest(n: int, max_even: int) -> Iterator[List[Tuple[int, int]]]:
    """가장 작은 부분이 홀수인 분할만"""
    for s in range(1, n + 1, 2):
        for mult in range(1, n // s + 1):
            for rest in _multiplicity_maps(n - s * mult, s + 1, max_even):
                yield [(s, mult)] + rest


def _blue_count_options(size: int, mult: int, smallest: int, k: Optional[int]) -> List[int]:
    """한 크기에서 허용되는 blue 개수 목록 (나머지는 red)"""
    options = []
    for blue in range(mult + 1):
        red = mult - blue
        if size == smallest and blue == 0:
            continue
        if size % 2 == 0:
            if red > 1 or blue > 1:
                continue
            if blue and (k is None or size < smallest + 2 * k - 1):
                continue
        options.append(blue)
    return options


def two_color_partitions(n: int, k: Optional[int] = None) -> Iterator[TwoColorPartition]:
    """n 의 허용 2색 분할 전부 (분할 -> 색 배정 순서로 열거)"""
    for mults in _partitions_with_odd_smallest(n, 2):
        smallest = mults[0][0]
        per_size = [_blue_count_options(size, mult, smallest, k) for size, mult in mults]
        for blues in itertools.product(*per_size):
            parts = []
            for (size, mult), blue in zip(mults, blues):
                parts += [(size, Color.BLUE)] * blue + [(size, Color.RED)] * (mult - blue)
            yield TwoColorPartition.of(parts)


def _count(n: int, k: Optional[int]) -> int:
    total = 0
    for mults in _partitions_with_odd_smallest(n, 2):
        smallest = mults[0][0]
        ways = 1
        for size, mult in mults:
            ways *= len(_blue_count_options(size, mult, smallest, k))
            if not ways:
                break
        total += ways
    return total


def _warn_if_large(n: int) -> None:
    max_n = get_settings().get("oracle.max_n", 60)
    if n > max_n:
        logger.warning("Oracle enumeration at n=%d exceeds the practical bound %d", n, max_n)


def enumerate_c(n: int) -> int:
    """k -> inf 극한 규칙의 2색 분할 개수"""
    _warn_if_large(n)
    return _count(n, None)


def enumerate_c_k(k: int, n: int) -> int:
    """유한 k 규칙 (blue 짝수 부분 >= s + 2k - 1) 의 2색 분할 개수"""
    if k < 1:
        raise ConstructionError(f"k must be positive, got {k}")
    _warn_if_large(n)
    return _count(n, k)


def count_table(max_n: int, k: Optional[int] = None, workers: int = 1) -> Dict[int, int]:
    """
    n = 0..max_n 의 개수 표

    Args:
        max_n: 최대 n
        k: None 이면 극한 규칙
        workers: 1 보다 크면 multiprocessing.Pool 로 n 별 병렬 계산

    Returns:
        {n: 개수}
    """
    ns = list(range(max_n + 1))
    if workers > 1:
        with Pool(workers) as pool:
            counts = pool.map(partial(_count, k=k), ns)
    else:
        counts = [_count(n, k) for n in ns]
    return dict(zip(ns, counts))


def _table_series(table: Dict[int, int]) -> fps.Series:
    return fps.make([table[n] for n in sorted(table)], len(table))


def convolution_check(prec: int) -> CheckResult:
    """C(q) == q A(q) S(q)"""
    lhs = special.series_C_sum(prec)
    rhs = fps.shift(fps.mul(special.series_A(prec), special.series_S(prec)), 1)
    return check_identity("c-equals-q-a-s", lhs, rhs)


def check_oracle_c(max_n: int, workers: int = 1) -> CheckResult:
    """분할 개수 c(n) == C(q) 의 계수, n <= max_n"""
    oracle = _table_series(count_table(max_n, None, workers))
    return check_identity("oracle-c-enumeration", oracle, special.series_C_sum(max_n + 1))


def check_oracle_c_k(k: int, max_n: int, workers: int = 1) -> CheckResult:
    """분할 개수 C(k, n) == C_k(q) 의 계수, n <= max_n"""
    oracle = _table_series(count_table(max_n, k, workers))
    return check_identity(
        f"oracle-c{k}-enumeration", oracle, special.series_C_k(k, max_n + 1)
    )
