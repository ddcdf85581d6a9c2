# -*- coding: utf-8 -*-
"""
등차수열 지수에 대한 분해(dissection) / 제한 연산
F(q) = sum_j q^j F_j(q^m) 의 성분 F_j 를 정확한 절단 차수와 함께 꺼낸다
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from . import fps
from .errors import ConstructionError
from .fps import Series


@dataclass(frozen=True)
class Progression:
    """지수 집합 {r + n m : n >= 0}"""
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ConstructionError(f"Progression modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ConstructionError(
                f"Residue {self.residue} is not in [0, {self.modulus})"
            )

    def members(self, bound: int) -> range:
        """bound 미만의 지수들"""
        return range(self.residue, max(bound, self.residue), self.modulus)

    def count_below(self, bound: int) -> int:
        return len(self.members(bound))

    def __str__(self) -> str:
        return f"{self.modulus}n+{self.residue}"


def component_prec(prec: int, m: int, j: int) -> int:
    """성분 F_j 의 절단 차수 ceil((prec - j)/m), 음수면 0"""
    return max(0, -(-(prec - j) // m))


def dissect(f: Series, m: int) -> List[Series]:
    """
    m-분해 성분 F_0..F_{m-1}

    Args:
        f: 분해할 급수
        m: 법 (>= 1)

    Returns:
        F_j(q) = sum_n coeff(f, m n + j) q^n, prec = ceil((f.prec - j)/m)
    """
    if m < 1:
        raise ConstructionError(f"Dissection modulus must be >= 1, got {m}")
    if m == 1:
        return [f]
    coeffs = f.tolist()
    return [fps.make(coeffs[j::m], component_prec(f.prec, m, j)) for j in range(m)]


def restrict_R(f: Series) -> Series:
    """sum_n coeff(f, 4n+1) q^n"""
    return dissect(f, 4)[1]


def coeffs_on(f: Series, p: Progression) -> list:
    """Progression 위의 계수 [coeff(f, r + n m) ...] (prec 미만만)"""
    return f.coeffs[p.residue::p.modulus].tolist()


def reassemble(components: List[Series]) -> Series:
    """sum_j q^j F_j(q^m), m = len(components); dissect 의 역"""
    m = len(components)
    if m == 0:
        raise ConstructionError("Cannot reassemble an empty dissection")
    prec = min(comp.prec * m + j for j, comp in enumerate(components))
    total = fps.zero(prec)
    for j, comp in enumerate(components):
        piece = fps.shift(fps.substitute_power(comp, m), j)
        total = fps.add(total, fps.truncate(piece, min(piece.prec, prec)))
    return total
