# -*- coding: utf-8 -*-
"""
이름 붙은 q-급수 카탈로그
각 급수는 정의식(항별 합)으로 만들고, 닫힌 형태가 알려진 경우 그 경로도 따로 둔다
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Optional

from . import fps, qprod
from .errors import CatalogError, ConstructionError
from .fps import Series
from .qprod import PochSpec

logger = logging.getLogger(__name__)

# 자주 쓰는 Pochhammer 곱
ODD_STEP_TWO = PochSpec(sign=1, offset=1, step=2)        # (q;q^2)
NEG_EVEN_STEP_TWO = PochSpec(sign=-1, offset=2, step=2)  # (-q^2;q^2)


class DefinitionPath(Enum):
    """급수를 만드는 경로"""
    SUM = "sum"
    PRODUCT = "product"
    LERCH = "lerch"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class NamedSeries:
    """카탈로그 이름과 경로가 붙은 급수"""
    name: str
    series: Series
    definition_path: DefinitionPath
    source: str


def at_power(builder: Callable[[int], Series], d: int, prec: int, sign: int = 1) -> Series:
    """builder 로 만든 급수에 q -> sign * q^d 를 대입해 prec 까지 돌려준다"""
    inner = builder(-(-prec // d))
    return fps.truncate(fps.substitute_power(inner, d, sign), prec)


def termwise_sum(
    prec: int,
    first: Series,
    valuation: Callable[[int], int],
    advance: Callable[[Series, int], Series],
) -> Series:
    """
    sum_{n >= 0} q^{valuation(n)} X_n 를 누적

    Args:
        prec: 절단 차수
        first: X_0 (prec 까지)
        valuation: n 번째 항의 q 지수 (증가함수)
        advance: X_n -> X_{n+1}

    Returns:
        q^prec 까지 정확한 합
    """
    buffer = fps.SeriesBuffer(prec)
    term = first
    n = 0
    while valuation(n) < prec:
        v = valuation(n)
        term = fps.truncate(term, prec - v)
        buffer.add_shifted(term, v)
        term = advance(term, n)
        n += 1
    logger.debug("Termwise sum to prec %d used %d terms", prec, n)
    return buffer.freeze()


def _inverse_square_binomial(f: Series, e: int) -> Series:
    """f / (1 - q^e)^2"""
    return fps.div_binomial(fps.div_binomial(f, 1, e), 1, e)


# ---------------------------------------------------------------------------
# 정의식 경로
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def series_A(prec: int) -> Series:
    """A(q) = (-q^2;q^2)_inf / (q;q^2)_inf^2"""
    numerator = qprod.poch_infinite(NEG_EVEN_STEP_TWO, prec)
    denominator = qprod.poch_power(ODD_STEP_TWO, 2, prec)
    return fps.divide(numerator, denominator)


@lru_cache(maxsize=32)
def series_S(prec: int) -> Series:
    """S(q) = sum_{n>=0} (q;q^2)_n^2 q^{2n} / (-q^2;q^2)_n"""
    def advance(term: Series, n: int) -> Series:
        term = fps.mul_binomial(term, 1, 2 * n + 1)
        term = fps.mul_binomial(term, 1, 2 * n + 1)
        return fps.div_binomial(term, -1, 2 * n + 2)

    return termwise_sum(prec, fps.one(prec), lambda n: 2 * n, advance)


def _c_family(prec: int, k: Optional[int]) -> Series:
    """
    C(q) (k=None) 또는 C_k(q) 의 항별 합

    꼬리곱 P_n = (-q^{2n+2};q^2)_inf [(-q^{2n+2k};q^2)_inf] / (q^{2n+1};q^2)_inf^2 을
    위쪽 n 에서부터 아래로 쌓아 올린다. 모든 P_n 은 prec-1 까지 유지한다.
    """
    buffer = fps.SeriesBuffer(prec)
    if prec <= 1:
        return buffer.freeze()
    tail = fps.one(prec - 1)
    for n in range((prec - 2) // 2, -1, -1):
        tail = fps.mul_binomial(tail, -1, 2 * n + 2)
        if k is not None:
            tail = fps.mul_binomial(tail, -1, 2 * n + 2 * k)
        tail = _inverse_square_binomial(tail, 2 * n + 1)
        buffer.add_shifted(tail, 2 * n + 1)
    return buffer.freeze()


@lru_cache(maxsize=32)
def series_C_sum(prec: int) -> Series:
    """C(q) = sum_{n>=0} (-q^{2n+2};q^2)_inf q^{2n+1} / (q^{2n+1};q^2)_inf^2"""
    return _c_family(prec, None)


@lru_cache(maxsize=64)
def series_C_k(k: int, prec: int) -> Series:
    """C_k(q): C(q) 의 각 항에 (-q^{2n+2k};q^2)_inf 를 더 곱한 합"""
    if k < 1:
        raise ConstructionError(f"C_k requires k >= 1, got {k}")
    return _c_family(prec, k)


@lru_cache(maxsize=32)
def series_omega(prec: int) -> Series:
    """omega(q) = sum_{n>=0} q^{2n(n+1)} / (q;q^2)_{n+1}^2"""
    first = _inverse_square_binomial(fps.one(prec), 1)
    return termwise_sum(
        prec, first,
        lambda n: 2 * n * (n + 1),
        lambda term, n: _inverse_square_binomial(term, 2 * n + 3),
    )


@lru_cache(maxsize=32)
def series_B_sum(prec: int) -> Series:
    """B(q) = sum_{n>=0} (-q^2;q^2)_n q^{n(n+1)} / (q;q^2)_{n+1}^2"""
    def advance(term: Series, n: int) -> Series:
        term = fps.mul_binomial(term, -1, 2 * n + 2)
        return _inverse_square_binomial(term, 2 * n + 3)

    first = _inverse_square_binomial(fps.one(prec), 1)
    return termwise_sum(prec, first, lambda n: n * (n + 1), advance)


@lru_cache(maxsize=32)
def series_f(prec: int) -> Series:
    """f(q) = sum_{n>=0} q^{n^2} / (-q;q)_n^2"""
    def advance(term: Series, n: int) -> Series:
        term = fps.div_binomial(term, -1, n + 1)
        return fps.div_binomial(term, -1, n + 1)

    return termwise_sum(prec, fps.one(prec), lambda n: n * n, advance)


# ---------------------------------------------------------------------------
# Lerch 형 양방향 합
# ---------------------------------------------------------------------------

def appell_lerch_sum(prec: int, alternating: bool = True, denominator_sign: int = 1) -> Series:
    """
    sum_{n in Z} (±1)^n q^{2n(n+1)} / (1 - s q^{2n+1})

    n <= -1 인 항은 1/(1 - s q^{-m}) = -s q^m / (1 - s q^m) (m = -2n-1) 로 바꿔
    양의 지수만 남긴다. 각 항은 등비급수이므로 지수 등차 슬라이스에 더한다.

    Args:
        prec: 절단 차수
        alternating: True 면 분자에 (-1)^n
        denominator_sign: 분모의 s (+1 또는 -1)
    """
    if denominator_sign not in (1, -1):
        raise ConstructionError(f"Denominator sign must be +1 or -1, got {denominator_sign}")
    s = denominator_sign
    buffer = fps.SeriesBuffer(prec)

    n = 0
    while 2 * n * (n + 1) < prec:
        sign = -1 if alternating and n % 2 else 1
        buffer.add_geometric(2 * n * (n + 1), 2 * n + 1, sign, s)
        n += 1

    n = -1
    while 2 * n * n - 1 < prec:
        m = -2 * n - 1
        sign = -1 if alternating and n % 2 else 1
        buffer.add_geometric(2 * n * (n + 1) + m, m, -s * sign, s)
        n -= 1
    return buffer.freeze()


@lru_cache(maxsize=32)
def series_B_lerch(prec: int) -> Series:
    """B(q) = (-q^2;q^2)_inf / (q^2;q^2)_inf * sum_{n in Z} (-1)^n q^{2n(n+1)} / (1 - q^{2n+1})"""
    prefactor = qprod.eta_quotient({4: 1, 2: -2}, prec)
    return fps.mul(prefactor, appell_lerch_sum(prec))


# ---------------------------------------------------------------------------
# G 와 그 4-분해 성분
# ---------------------------------------------------------------------------

def _theta_at_q2(prec: int) -> Series:
    return at_power(qprod.theta, 2, prec)


def _psi_at_q2(prec: int) -> Series:
    return at_power(qprod.psi, 2, prec)


@lru_cache(maxsize=32)
def series_G(prec: int) -> Series:
    """G(q) = Theta(q) Theta(q^2)^2 / (q^4;q^4)_inf^2"""
    numerator = fps.mul(qprod.theta(prec), fps.power(_theta_at_q2(prec), 2))
    return fps.mul(numerator, qprod.eta_power(4, -2, prec))


@lru_cache(maxsize=64)
def series_G_j(j: int, prec: int) -> Series:
    """G_j(q) = 2^j Theta(q)^{3-j} psi(q^2)^j / (q;q)_inf^2, j = 0..3"""
    if j not in (0, 1, 2, 3):
        raise ConstructionError(f"G_j is defined for j in 0..3, got {j}")
    body = fps.mul(
        fps.power(qprod.theta(prec), 3 - j),
        fps.power(_psi_at_q2(prec), j),
    )
    return fps.scale(fps.mul(body, qprod.eta_power(1, -2, prec)), 2 ** j)


# ---------------------------------------------------------------------------
# 닫힌 형태
# ---------------------------------------------------------------------------

def _closed_M(prec: int) -> Series:
    # 4 (q^2;q^2)^2 / (q;q^2)^6
    return qprod.eta_quotient({2: 8, 1: -6}, prec, scalar=4)


def _closed_D(prec: int) -> Series:
    prefactor = fps.divide(
        qprod.poch_power(ODD_STEP_TWO, 2, prec),
        qprod.poch_infinite(NEG_EVEN_STEP_TWO, prec),
    )
    return fps.mul(prefactor, fps.substitute_power(series_omega(prec), 1, -1))


def _closed_A0(prec: int) -> Series:
    return qprod.eta_quotient({2: 5, 1: -1, 4: -2}, prec)


def _closed_A1(prec: int) -> Series:
    return qprod.eta_quotient({1: 1, 4: 2, 2: -1}, prec, scalar=2)


def _closed_B0(prec: int) -> Series:
    return qprod.eta_quotient({2: 14, 1: -9, 4: -4}, prec)


def _closed_B1(prec: int) -> Series:
    # B(-q) 의 4n+1 성분 부호
    return qprod.eta_quotient({2: 8, 1: -7}, prec, scalar=-2)


def _closed_omega0(prec: int) -> Series:
    body = fps.mul(fps.power(qprod.theta(prec), 2), _psi_at_q2(prec))
    return fps.mul(body, qprod.eta_power(1, -2, prec))


def _closed_omega1(prec: int) -> Series:
    body = fps.mul(qprod.theta(prec), fps.power(_psi_at_q2(prec), 2))
    return fps.scale(fps.mul(body, qprod.eta_power(1, -2, prec)), 2)


def _closed_T(prec: int) -> Series:
    terms = {}
    n = 1
    while n * n < prec:
        terms[n * n] = 1
        n += 1
    return fps.from_terms(terms, prec)


CLOSED_FORMS: Dict[str, Callable[[int], Series]] = {
    "M_closed": _closed_M,
    "D": _closed_D,
    "A0": _closed_A0,
    "A1": _closed_A1,
    "B0_closed": _closed_B0,
    "B1_closed": _closed_B1,
    "omega0": _closed_omega0,
    "omega1": _closed_omega1,
    "T": _closed_T,
}


@lru_cache(maxsize=128)
def series_closed(name: str, prec: int) -> Series:
    """닫힌 형태 급수 (M_closed, D, A0, A1, B0_closed, B1_closed, omega0, omega1, T)"""
    if name not in CLOSED_FORMS:
        raise CatalogError(f"Unknown closed form: '{name}'")
    return CLOSED_FORMS[name](prec)


# ---------------------------------------------------------------------------
# 카탈로그
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """카탈로그 한 줄: 이름, 경로, 출처 설명, 생성 함수"""
    name: str
    definition_path: DefinitionPath
    source: str
    builder: Callable[[int], Series]


def _g_component(j: int) -> Callable[[int], Series]:
    return lambda prec: series_G_j(j, prec)


def _closed(name: str) -> Callable[[int], Series]:
    return lambda prec: series_closed(name, prec)


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry for entry in [
        CatalogEntry("A", DefinitionPath.PRODUCT,
                     "A(q) = (-q^2;q^2)_inf/(q;q^2)_inf^2, two-colour odd parts times distinct even parts",
                     series_A),
        CatalogEntry("S", DefinitionPath.SUM,
                     "S(q) = sum (q;q^2)_n^2 q^{2n}/(-q^2;q^2)_n", series_S),
        CatalogEntry("C", DefinitionPath.SUM,
                     "C(q) = sum (-q^{2n+2};q^2)_inf q^{2n+1}/(q^{2n+1};q^2)_inf^2, limit of C_k",
                     series_C_sum),
        CatalogEntry("C_k", DefinitionPath.SUM,
                     "C_k(q) = sum (-q^{2n+2k},-q^{2n+2};q^2)_inf q^{2n+1}/(q^{2n+1};q^2)_inf^2",
                     None),
        CatalogEntry("omega", DefinitionPath.SUM,
                     "third order mock theta omega(q) = sum q^{2n(n+1)}/(q;q^2)_{n+1}^2", series_omega),
        CatalogEntry("B", DefinitionPath.SUM,
                     "B(q) = sum (-q^2;q^2)_n q^{n(n+1)}/(q;q^2)_{n+1}^2", series_B_sum),
        CatalogEntry("B_lerch", DefinitionPath.LERCH,
                     "B(q) as (-q^2;q^2)_inf/(q^2;q^2)_inf times a bilateral Lerch sum", series_B_lerch),
        CatalogEntry("f", DefinitionPath.SUM,
                     "third order mock theta f(q) = sum q^{n^2}/(-q;q)_n^2", series_f),
        CatalogEntry("G", DefinitionPath.CLOSED_FORM,
                     "G(q) = Theta(q) Theta(q^2)^2/(q^4;q^4)_inf^2", series_G),
        CatalogEntry("G0", DefinitionPath.CLOSED_FORM, "G_0(q) = Theta^3(q)/(q)_inf^2", _g_component(0)),
        CatalogEntry("G1", DefinitionPath.CLOSED_FORM,
                     "G_1(q) = 2 Theta^2(q) psi(q^2)/(q)_inf^2", _g_component(1)),
        CatalogEntry("G2", DefinitionPath.CLOSED_FORM,
                     "G_2(q) = 4 Theta(q) psi^2(q^2)/(q)_inf^2", _g_component(2)),
        CatalogEntry("G3", DefinitionPath.CLOSED_FORM, "G_3(q) = 8 psi^3(q^2)/(q)_inf^2", _g_component(3)),
        CatalogEntry("M_closed", DefinitionPath.CLOSED_FORM,
                     "M(q) = 4 (q^2;q^2)_inf^2/(q;q^2)_inf^6", _closed("M_closed")),
        CatalogEntry("D", DefinitionPath.CLOSED_FORM,
                     "D(q) = (q;q^2)_inf^2/(-q^2;q^2)_inf * omega(-q)", _closed("D")),
        CatalogEntry("A0", DefinitionPath.CLOSED_FORM,
                     "A_0(q) = (q^2;q^2)^5/((q)(q^4;q^4)^2), the 4n part of A mod 4", _closed("A0")),
        CatalogEntry("A1", DefinitionPath.CLOSED_FORM,
                     "A_1(q) = 2 (q)(q^4;q^4)^2/(q^2;q^2), the 4n+1 part of A mod 4", _closed("A1")),
        CatalogEntry("B0_closed", DefinitionPath.CLOSED_FORM,
                     "sum c_B(4n) q^n = (q^2;q^2)^14/((q)^9 (q^4;q^4)^4)", _closed("B0_closed")),
        CatalogEntry("B1_closed", DefinitionPath.CLOSED_FORM,
                     "-2 (q^2;q^2)^8/(q)^7, the 4n+1 part of B(-q)", _closed("B1_closed")),
        CatalogEntry("omega0", DefinitionPath.CLOSED_FORM,
                     "omega_0(q) = Theta^2(q) psi(q^2)/(q)_inf^2 = G_1/2", _closed("omega0")),
        CatalogEntry("omega1", DefinitionPath.CLOSED_FORM,
                     "omega_1(q) = 2 Theta(q) psi^2(q^2)/(q)_inf^2 = G_2/2", _closed("omega1")),
        CatalogEntry("T", DefinitionPath.SUM, "T(q) = sum_{n>=1} q^{n^2}", _closed("T")),
        CatalogEntry("theta", DefinitionPath.SUM, "Theta(q) = sum_{n in Z} q^{n^2}",
                     lambda prec: qprod.theta(prec)),
        CatalogEntry("theta_neg", DefinitionPath.SUM, "Theta(-q) = sum_{n in Z} (-1)^n q^{n^2}",
                     lambda prec: qprod.theta_neg(prec)),
        CatalogEntry("psi", DefinitionPath.SUM, "psi(q) = sum_{n>=0} q^{n(n+1)/2}",
                     lambda prec: qprod.psi(prec)),
        CatalogEntry("p", DefinitionPath.PRODUCT, "partition function 1/(q;q)_inf",
                     qprod.partition_generating_function),
    ]
}


def available_series() -> list:
    """카탈로그 이름 목록 (정렬)"""
    return sorted(CATALOG)


def build(name: str, prec: int, k: Optional[int] = None) -> NamedSeries:
    """
    카탈로그 이름으로 급수 생성

    Args:
        name: 카탈로그 이름
        prec: 절단 차수
        k: C_k 에만 필요한 매개변수

    Returns:
        NamedSeries
    """
    if name not in CATALOG:
        raise CatalogError(f"Unknown series '{name}'. Available: {', '.join(available_series())}")
    entry = CATALOG[name]
    if name == "C_k":
        if k is None:
            raise ConstructionError("Series 'C_k' requires a parameter k")
        series = series_C_k(k, prec)
    else:
        if k is not None:
            raise ConstructionError(f"Series '{name}' takes no parameter k")
        series = entry.builder(prec)
    logger.debug("Built series %s to prec %d", name, prec)
    return NamedSeries(name, series, entry.definition_path, entry.source)
