# -*- coding: utf-8 -*-
"""
q-Pochhammer 기호, 무한곱, eta quotient, 고전 theta 급수
무한곱은 인수 개수가 아니라 지수 상한(prec)으로 잘라 q^prec 까지 정확하다
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from . import fps
from .errors import ConstructionError
from .fps import Series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PochSpec:
    """
    인수 (1 - sign * q^e), e = offset, offset + step, ... 의 곱

    예: (q;q^2)_inf -> PochSpec(+1, 1, 2), (-q^2;q^2)_inf -> PochSpec(-1, 2, 2)
    """
    sign: int = 1
    offset: int = 1
    step: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ConstructionError(f"PochSpec sign must be +1 or -1, got {self.sign}")
        if self.offset < 1:
            raise ConstructionError(f"PochSpec offset must be >= 1, got {self.offset}")
        if self.step < 1:
            raise ConstructionError(f"PochSpec step must be >= 1, got {self.step}")

    def exponents(self, bound: int) -> range:
        """bound 미만의 인수 지수들"""
        return range(self.offset, max(bound, self.offset), self.step)

    def __str__(self) -> str:
        base = "q" if self.offset == 1 else f"q^{self.offset}"
        nome = "q" if self.step == 1 else f"q^{self.step}"
        prefix = "" if self.sign == 1 else "-"
        return f"({prefix}{base};{nome})"


def poch_finite(spec: PochSpec, n: int, prec: int) -> Series:
    """n 개 인수의 유한곱 (1 - sign q^{offset}) ... (1 - sign q^{offset+(n-1)step})"""
    if n < 0:
        raise ConstructionError(f"Number of factors must be nonnegative, got {n}")
    result = fps.one(prec)
    for j in range(n):
        e = spec.offset + j * spec.step
        if e >= prec:
            break
        result = fps.mul_binomial(result, spec.sign, e)
    return result


@lru_cache(maxsize=256)
def poch_infinite(spec: PochSpec, prec: int) -> Series:
    """무한곱을 지수 < prec 인 인수만으로 정확히 절단"""
    result = fps.one(prec)
    for e in spec.exponents(prec):
        result = fps.mul_binomial(result, spec.sign, e)
    logger.debug("Built %s_inf to prec %d", spec, prec)
    return result


def poch_power(spec: PochSpec, k: int, prec: int) -> Series:
    """(spec)_inf^k, k 는 음수 가능"""
    return fps.power(poch_infinite(spec, prec), k)


# ---------------------------------------------------------------------------
# Euler 오각수 정리 경로: (q^d;q^d)_inf
# ---------------------------------------------------------------------------

def pentagonal_exponents(bound: int):
    """일반화 오각수 k(3k-1)/2 (k = 0, 1, -1, 2, -2, ...) 와 부호 (-1)^k"""
    yield 0, 1
    k = 1
    while k * (3 * k - 1) // 2 < bound:
        sign = -1 if k % 2 else 1
        yield k * (3 * k - 1) // 2, sign
        if k * (3 * k + 1) // 2 < bound:
            yield k * (3 * k + 1) // 2, sign
        k += 1


@lru_cache(maxsize=64)
def pentagonal_series(prec: int) -> Series:
    """sum_k (-1)^k q^{k(3k-1)/2}  (오각수 합 쪽 경로)"""
    return fps.from_terms(dict(pentagonal_exponents(prec)), prec)


@lru_cache(maxsize=256)
def euler_product(d: int, prec: int) -> Series:
    """(q^d;q^d)_inf, 오각수 합에 q -> q^d 를 대입해서 만든다"""
    if d < 1:
        raise ConstructionError(f"Eta index must be positive, got {d}")
    base = pentagonal_series(-(-prec // d))
    return fps.truncate(fps.substitute_power(base, d), prec)


@lru_cache(maxsize=512)
def eta_power(d: int, k: int, prec: int) -> Series:
    """(q^d;q^d)_inf^k"""
    return fps.power(euler_product(d, prec), k)


def eta_quotient(exponents: Mapping[int, int], prec: int, scalar: int = 1) -> Series:
    """
    scalar * prod_d (q^d;q^d)_inf^{e_d}

    Args:
        exponents: {d: e_d}, 예: {2: 5, 1: -2, 4: -2} 는 Theta(q)
        prec: 절단 차수
        scalar: 앞에 곱할 정수 상수

    Returns:
        정수 계수 Series
    """
    numerator = fps.one(prec)
    denominator = fps.one(prec)
    for d, e in sorted(exponents.items()):
        if e > 0:
            numerator = fps.mul(numerator, eta_power(d, e, prec))
        elif e < 0:
            denominator = fps.mul(denominator, eta_power(d, -e, prec))
    result = fps.divide(numerator, denominator)
    return fps.scale(result, scalar) if scalar != 1 else result


# 자주 쓰는 곱의 eta quotient 표현
THETA_QUOTIENT = {2: 5, 1: -2, 4: -2}        # Theta(q)
THETA_NEG_QUOTIENT = {1: 2, 2: -1}           # Theta(-q)
PSI_QUOTIENT = {2: 2, 1: -1}                 # psi(q)


# ---------------------------------------------------------------------------
# theta 급수: 합 경로와 곱 경로
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def theta(prec: int, via_product: bool = False) -> Series:
    """Theta(q) = sum_{n in Z} q^{n^2}"""
    if via_product:
        return eta_quotient(THETA_QUOTIENT, prec)
    terms = {0: 1}
    n = 1
    while n * n < prec:
        terms[n * n] = 2
        n += 1
    return fps.from_terms(terms, prec)


@lru_cache(maxsize=64)
def theta_neg(prec: int, via_product: bool = False) -> Series:
    """Theta(-q) = sum_{n in Z} (-1)^n q^{n^2}"""
    if via_product:
        return eta_quotient(THETA_NEG_QUOTIENT, prec)
    terms = {0: 1}
    n = 1
    while n * n < prec:
        terms[n * n] = -2 if n % 2 else 2
        n += 1
    return fps.from_terms(terms, prec)


@lru_cache(maxsize=64)
def psi(prec: int, via_product: bool = False) -> Series:
    """psi(q) = sum_{n >= 0} q^{n(n+1)/2}"""
    if via_product:
        return eta_quotient(PSI_QUOTIENT, prec)
    terms = {}
    n = 0
    while n * (n + 1) // 2 < prec:
        terms[n * (n + 1) // 2] = 1
        n += 1
    return fps.from_terms(terms, prec)


def partition_generating_function(prec: int) -> Series:
    """1/(q;q)_inf = sum p(n) q^n"""
    return eta_power(1, -1, prec)
