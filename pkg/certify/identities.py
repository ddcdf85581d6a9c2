# -*- coding: utf-8 -*-
"""
급수 항등식 검증
양변을 가능한 한 서로 다른 생성 경로로 만든 뒤 계수별로 비교한다
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from qseries import fps, qprod, special
from qseries.errors import ConstructionError
from qseries.fps import Series
from qseries.progression import dissect, reassemble, restrict_R
from qseries.special import ODD_STEP_TWO, at_power

from .results import CheckResult

logger = logging.getLogger(__name__)


def first_mismatch(lhs: Series, rhs: Series) -> Optional[Tuple[int, object, object]]:
    """공통 prec 안에서 처음 다른 지수와 양변 계수"""
    n = min(lhs.prec, rhs.prec)
    for exponent, (a, b) in enumerate(zip(lhs.coeffs[:n].tolist(), rhs.coeffs[:n].tolist())):
        if a != b:
            return exponent, a, b
    return None


def check_identity(name: str, lhs: Series, rhs: Series) -> CheckResult:
    """
    lhs == rhs 를 min(lhs.prec, rhs.prec) 까지 계수별로 비교

    Returns:
        CheckResult (실패 시 가장 작은 불일치 지수와 양변 계수 포함)
    """
    prec = min(lhs.prec, rhs.prec)
    mismatch = first_mismatch(lhs, rhs)
    if mismatch is None:
        return CheckResult.passing(name, prec)
    exponent, a, b = mismatch
    logger.info("Check %s failed at q^%d: %s != %s", name, exponent, a, b)
    return CheckResult.failing(name, prec, exponent, a, b)


def _neg_q(f: Series) -> Series:
    return fps.substitute_power(f, 1, -1)


# ---------------------------------------------------------------------------
# theta 계열 이중 경로와 Euler 곱
# ---------------------------------------------------------------------------

def check_theta_sum_product(prec: int) -> CheckResult:
    return check_identity("theta-sum-product", qprod.theta(prec), qprod.theta(prec, via_product=True))


def check_theta_neg_sum_product(prec: int) -> CheckResult:
    return check_identity(
        "theta-neg-sum-product", qprod.theta_neg(prec), qprod.theta_neg(prec, via_product=True)
    )


def check_psi_sum_product(prec: int) -> CheckResult:
    return check_identity("psi-sum-product", qprod.psi(prec), qprod.psi(prec, via_product=True))


def check_euler_pentagonal(prec: int) -> CheckResult:
    """(q;q)_inf 무한곱 == 오각수 합"""
    product = qprod.poch_infinite(qprod.PochSpec(1, 1, 1), prec)
    return check_identity("euler-pentagonal", product, qprod.pentagonal_series(prec))


def check_theta_even_odd_split(prec: int) -> CheckResult:
    """Theta(q) == Theta(q^4) + 2q psi(q^8)"""
    rhs = fps.add(
        at_power(qprod.theta, 4, prec),
        fps.scale(fps.shift(at_power(qprod.psi, 8, prec), 1), 2),
    )
    return check_identity("theta-even-odd-split", qprod.theta(prec), rhs)


# ---------------------------------------------------------------------------
# S, C 와 mock theta 함수
# ---------------------------------------------------------------------------

def check_s_mock_theta_relation(prec: int) -> CheckResult:
    """S(q) == 2B(-q) - (q;q^2)_inf^2/(-q^2;q^2)_inf omega(-q)"""
    rhs = fps.sub(
        fps.scale(_neg_q(special.series_B_sum(prec)), 2),
        special.series_closed("D", prec),
    )
    return check_identity("s-mock-theta-relation", special.series_S(prec), rhs)


def check_c_mock_theta_relation(prec: int) -> CheckResult:
    """C(q) == 2q A(q) B(-q) - q omega(-q)"""
    body = fps.sub(
        fps.scale(fps.mul(special.series_A(prec), _neg_q(special.series_B_sum(prec))), 2),
        _neg_q(special.series_omega(prec)),
    )
    return check_identity("c-mock-theta-relation", special.series_C_sum(prec), fps.shift(body, 1))


def check_c_k_stabilisation(prec: int, k_max: int = 20) -> CheckResult:
    """C_k 와 C 는 지수 2k 까지 같다 (k = 1..k_max)"""
    full = special.series_C_sum(prec)
    for k in range(1, k_max + 1):
        bound = min(prec, 2 * k + 1)
        lhs = fps.truncate(special.series_C_k(k, prec), bound)
        result = check_identity("c-k-stabilisation", lhs, fps.truncate(full, bound))
        if not result.passed:
            logger.info("C_%d departs from C below exponent %d", k, 2 * k + 1)
            return result
    return CheckResult.passing("c-k-stabilisation", prec)


# ---------------------------------------------------------------------------
# 세 매개변수 변환식 (유리수 특수화)
# ---------------------------------------------------------------------------

def _binomial_pair_quotient(f: Series, a_over_c: Fraction, b_over_c: Fraction, e: int) -> Series:
    """f / ((1 - (a/c) q^e)(1 - (b/c) q^e))"""
    return fps.div_binomial(fps.div_binomial(f, a_over_c, e), b_over_c, e)


def parametric_sides(a, b, c, prec: int) -> Tuple[Series, Series]:
    """
    sum_{n>=0} (-aq,-bq)_n q^{n+1}/(-cq)_n 의 양변

    우변 = (c/ab) sum_{n>=1} (-1/c)_n (ab/c)^n q^{n(n+1)/2} / (aq/c, bq/c)_n
         - c (-aq,-bq)_inf / (ab (-cq)_inf) sum_{n>=1} (ab/c^2)^n q^{n^2} / (aq/c, bq/c)_n

    Args:
        a, b, c: 0 이 아닌 유리수
        prec: 절단 차수

    Returns:
        (좌변, 우변)
    """
    a, b, c = (Fraction(x) for x in (a, b, c))
    if a == 0 or b == 0 or c == 0:
        raise ConstructionError(f"Parameters must be nonzero, got a={a}, b={b}, c={c}")
    ab = a * b

    def lhs_advance(term: Series, n: int) -> Series:
        term = fps.mul_binomial(term, -a, n + 1)
        term = fps.mul_binomial(term, -b, n + 1)
        return fps.div_binomial(term, -c, n + 1)

    lhs = special.termwise_sum(prec, fps.one(prec), lambda n: n + 1, lhs_advance)

    # m 번째 항 = (n = m+1) 번째 summand
    first = _binomial_pair_quotient(fps.constant((1 + 1 / c) * ab / c, prec), a / c, b / c, 1)

    def first_advance(term: Series, m: int) -> Series:
        term = fps.mul_binomial(term, -1 / c, m + 1)
        term = fps.scale(term, ab / c)
        return _binomial_pair_quotient(term, a / c, b / c, m + 2)

    first_sum = special.termwise_sum(
        prec, first, lambda m: (m + 1) * (m + 2) // 2, first_advance
    )

    second = _binomial_pair_quotient(fps.constant(ab / c ** 2, prec), a / c, b / c, 1)

    def second_advance(term: Series, m: int) -> Series:
        term = fps.scale(term, ab / c ** 2)
        return _binomial_pair_quotient(term, a / c, b / c, m + 2)

    second_sum = special.termwise_sum(prec, second, lambda m: (m + 1) ** 2, second_advance)

    prefactor = fps.one(prec)
    for e in range(1, prec):
        prefactor = fps.mul_binomial(prefactor, -a, e)
        prefactor = fps.mul_binomial(prefactor, -b, e)
        prefactor = fps.div_binomial(prefactor, -c, e)

    rhs = fps.sub(
        fps.scale(first_sum, c / ab),
        fps.scale(fps.mul(prefactor, second_sum), c / ab),
    )
    return lhs, rhs


def check_parametric_transformation(a, b, c, prec: int) -> CheckResult:
    a, b, c = (Fraction(x) for x in (a, b, c))
    lhs, rhs = parametric_sides(a, b, c, prec)
    return check_identity(f"parametric-transformation[a={a},b={b},c={c}]", lhs, rhs)


def check_parametric_triples(triples: Sequence[Tuple], prec: int) -> List[CheckResult]:
    return [check_parametric_transformation(a, b, c, prec) for a, b, c in triples]


# ---------------------------------------------------------------------------
# B 의 Lerch 표현과 4-분해
# ---------------------------------------------------------------------------

def check_b_lerch_representation(prec: int) -> CheckResult:
    return check_identity(
        "b-lerch-representation", special.series_B_sum(prec), special.series_B_lerch(prec)
    )


def check_lerch_pairing(prec: int) -> CheckResult:
    """sum_{n in Z} q^{2n(n+1)}/(1+q^{2n+1}) == psi(q^4), n 과 -n-1 짝짓기"""
    lhs = special.appell_lerch_sum(prec, alternating=False, denominator_sign=-1)
    return check_identity("lerch-pairing", lhs, at_power(qprod.psi, 4, prec))


def check_b_4n_component(prec: int) -> CheckResult:
    """sum c_B(4n) q^n == (q^2;q^2)^14 / ((q)^9 (q^4;q^4)^4)"""
    lhs = dissect(special.series_B_sum(prec), 4)[0]
    return check_identity("b-4n-component", lhs, special.series_closed("B0_closed", lhs.prec))


def check_b_4n1_component(prec: int) -> CheckResult:
    """sum c_B(4n+1) q^n == 2 (q^2;q^2)^8 / (q)^7"""
    lhs = dissect(special.series_B_sum(prec), 4)[1]
    rhs = fps.neg(special.series_closed("B1_closed", lhs.prec))
    return check_identity("b-4n+1-component", lhs, rhs)


def check_b_neg_4n1_component(prec: int) -> CheckResult:
    """B(-q) 의 4n+1 성분 == -2 (q^2;q^2)^8 / (q)^7"""
    lhs = dissect(_neg_q(special.series_B_sum(prec)), 4)[1]
    return check_identity(
        "b-neg-4n+1-component", lhs, special.series_closed("B1_closed", lhs.prec)
    )


# ---------------------------------------------------------------------------
# omega, f, G
# ---------------------------------------------------------------------------

def check_omega_f_theta_relation(prec: int) -> CheckResult:
    """f(q^8) + 2q omega(q) + 2q^3 omega(-q^4) == G(q)"""
    lhs = fps.add(
        at_power(special.series_f, 8, prec),
        fps.scale(fps.shift(special.series_omega(prec), 1), 2),
    )
    lhs = fps.add(
        lhs,
        fps.scale(fps.shift(at_power(special.series_omega, 4, prec, sign=-1), 3), 2),
    )
    return check_identity("omega-f-theta-relation", lhs, special.series_G(prec))


def check_g_dissection(prec: int) -> CheckResult:
    """G(q) == sum_{j=0}^{3} q^j G_j(q^4)"""
    components = [special.series_G_j(j, -(-(prec - j) // 4)) for j in range(4)]
    return check_identity("g-4-dissection", special.series_G(prec), reassemble(components))


def check_omega_component(j: int, prec: int) -> CheckResult:
    """omega 의 4-분해 성분 j (0 또는 1) == 닫힌 형태 omega_j"""
    lhs = dissect(special.series_omega(prec), 4)[j]
    rhs = special.series_closed(f"omega{j}", lhs.prec)
    result = check_identity(f"omega-component-{j}", lhs, rhs)
    if result.passed:
        # omega_j == G_{j+1}/2
        half = fps.scale(special.series_G_j(j + 1, lhs.prec), Fraction(1, 2))
        return check_identity(f"omega-component-{j}", rhs, half)
    return result


# ---------------------------------------------------------------------------
# A 의 theta 몫 표현과 4-분해 성분
# ---------------------------------------------------------------------------

def check_a_theta_quotient(prec: int) -> CheckResult:
    """A(q) == (q^4;q^4)_inf / Theta(-q)"""
    rhs = fps.divide(qprod.euler_product(4, prec), qprod.theta_neg(prec))
    return check_identity("a-theta-quotient", special.series_A(prec), rhs)


def check_a0_theta_form(prec: int) -> CheckResult:
    """A_0(q) == (q)_inf Theta(q)"""
    rhs = fps.mul(qprod.euler_product(1, prec), qprod.theta(prec))
    return check_identity("a0-theta-form", special.series_closed("A0", prec), rhs)


def check_a1_psi_form(prec: int) -> CheckResult:
    """A_1(q) == 2 (q)_inf sum_{n>=0} q^{n(n+1)}"""
    rhs = fps.scale(fps.mul(qprod.euler_product(1, prec), at_power(qprod.psi, 2, prec)), 2)
    return check_identity("a1-psi-form", special.series_closed("A1", prec), rhs)


def check_t_square_split(prec: int) -> CheckResult:
    """T(q) == sum_{n>=1} q^{4n^2} + q sum_{n>=0} q^{4n(n+1)}"""
    even_squares = fps.sub(at_power(qprod.theta, 4, prec), fps.one(prec))
    even_squares = fps.scale(even_squares, Fraction(1, 2))
    odd_squares = fps.shift(at_power(qprod.psi, 8, prec), 1)
    rhs = fps.add(even_squares, odd_squares)
    return check_identity("t-square-split", special.series_closed("T", prec), rhs)


# ---------------------------------------------------------------------------
# R 연산자, M, D
# ---------------------------------------------------------------------------

def _theta_omega(prec: int) -> Series:
    return fps.mul(qprod.theta(prec), special.series_omega(prec))


def check_m_closed_form(prec: int) -> CheckResult:
    """R(Theta(q) omega(q)) == 4 (q^2;q^2)^2 / (q;q^2)^6"""
    lhs = restrict_R(_theta_omega(prec))
    return check_identity("m-closed-form", lhs, special.series_closed("M_closed", lhs.prec))


def check_m_theta_split(prec: int) -> CheckResult:
    """R(Theta omega) == Theta(q) omega_1(q) + 2 psi(q^2) omega_0(q), omega_j 는 omega 의 분해 성분"""
    lhs = restrict_R(_theta_omega(prec))
    n = lhs.prec
    omega_parts = dissect(special.series_omega(4 * n), 4)
    rhs = fps.add(
        fps.mul(qprod.theta(n), omega_parts[1]),
        fps.scale(fps.mul(at_power(qprod.psi, 2, n), omega_parts[0]), 2),
    )
    return check_identity("m-theta-split", lhs, rhs)


def check_r_theta_neg_omega_neg(prec: int) -> CheckResult:
    """R(Theta(-q) omega(-q)) == -M(q)"""
    lhs = restrict_R(fps.mul(qprod.theta_neg(prec), _neg_q(special.series_omega(prec))))
    rhs = fps.neg(special.series_closed("M_closed", lhs.prec))
    return check_identity("r-theta-neg-omega-neg", lhs, rhs)


def check_d_theta_form(prec: int) -> CheckResult:
    """D(q) == Theta(-q) omega(-q) / (q^4;q^4)_inf"""
    rhs = fps.divide(
        fps.mul(qprod.theta_neg(prec), _neg_q(special.series_omega(prec))),
        qprod.euler_product(4, prec),
    )
    return check_identity("d-theta-form", special.series_closed("D", prec), rhs)


def check_r_d_via_m(prec: int) -> CheckResult:
    """R(D(q)) == -M(q)/(q)_inf"""
    lhs = restrict_R(special.series_closed("D", prec))
    n = lhs.prec
    rhs = fps.neg(fps.divide(special.series_closed("M_closed", n), qprod.euler_product(1, n)))
    return check_identity("r-d-via-m", lhs, rhs)


def _minus_four_eta_over_odd_poch(prec: int) -> Series:
    """-4 (q^2;q^2)_inf / (q;q^2)_inf^7 (Pochhammer 곱 경로)"""
    body = fps.divide(
        qprod.poch_infinite(qprod.PochSpec(1, 2, 2), prec),
        qprod.poch_power(ODD_STEP_TWO, 7, prec),
    )
    return fps.scale(body, -4)


def check_r_2b_neg_closed(prec: int) -> CheckResult:
    """R(2B(-q)) == -4 (q^2;q^2)^8/(q)^7 == -4 (q^2;q^2)/(q;q^2)^7"""
    lhs = restrict_R(fps.scale(_neg_q(special.series_B_sum(prec)), 2))
    n = lhs.prec
    middle = qprod.eta_quotient({2: 8, 1: -7}, n, scalar=-4)
    result = check_identity("r-2b-neg-closed", lhs, middle)
    if result.passed:
        return check_identity("r-2b-neg-closed", middle, _minus_four_eta_over_odd_poch(n))
    return result


def check_r_d_closed(prec: int) -> CheckResult:
    """R(D(q)) == -4 (q^2;q^2)_inf/(q;q^2)_inf^7"""
    lhs = restrict_R(special.series_closed("D", prec))
    return check_identity("r-d-closed", lhs, _minus_four_eta_over_odd_poch(lhs.prec))


def check_r_2b_neg_equals_r_d(prec: int) -> CheckResult:
    """R(2B(-q)) == R(D(q))"""
    lhs = restrict_R(fps.scale(_neg_q(special.series_B_sum(prec)), 2))
    rhs = restrict_R(special.series_closed("D", prec))
    return check_identity("r-2b-neg-equals-r-d", lhs, rhs)
