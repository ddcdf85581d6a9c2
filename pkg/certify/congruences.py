# -*- coding: utf-8 -*-
"""
합동식 검증
정확한 정수 계수를 먼저 만든 뒤 법으로 줄인다 (mod-m 전용 파이프라인은 쓰지 않음)
"""
from __future__ import annotations

import logging
from typing import List, Optional

from qseries import fps, qprod, special
from qseries.errors import NonIntegralError
from qseries.fps import Series
from qseries.progression import Progression, coeffs_on, dissect
from qseries.special import at_power

from .identities import check_identity
from .results import CheckResult, CongruenceClaim

logger = logging.getLogger(__name__)


def check_congruence(claim: CongruenceClaim, f: Series, name: Optional[str] = None) -> CheckResult:
    """
    progression 위의 계수가 모두 0 mod modulus (modulus 0 이면 정확히 0) 인지 확인

    Args:
        claim: 합동식 주장
        f: 정수 계수 급수
        name: 결과 이름 (None이면 claim.label)

    Returns:
        CheckResult (실패 시 지수, 계수, 0)
    """
    if not f.is_integral:
        raise NonIntegralError(f"Congruence check on '{claim.series_name}' needs integer coefficients")
    name = name or claim.label
    p = claim.progression
    for n, value in enumerate(coeffs_on(f, p)):
        if not claim.holds_for(value):
            exponent = p.residue + n * p.modulus
            logger.info("Check %s failed at q^%d: coefficient %s", name, exponent, value)
            return CheckResult.failing(name, f.prec, exponent, value, 0)
    return CheckResult.passing(name, f.prec)


def check_congruent_series(name: str, lhs: Series, rhs: Series, modulus: int) -> CheckResult:
    """lhs ≡ rhs (mod modulus) 를 계수별로 확인"""
    if not (lhs.is_integral and rhs.is_integral):
        raise NonIntegralError(f"Congruence check '{name}' needs integer coefficients")
    return check_identity(name, fps.reduce_mod(lhs, modulus), fps.reduce_mod(rhs, modulus))


def _claim(series_name: str, residue: int, step: int, modulus: int) -> CongruenceClaim:
    return CongruenceClaim(Progression(residue, step), modulus, series_name)


# ---------------------------------------------------------------------------
# c(n), c_omega(n), s(n) 정리
# ---------------------------------------------------------------------------

# (이름, 잔여, 법(수열), 합동 법)
C_THEOREMS = [
    ("c-8n+4-mod-4", 4, 8, 4),
    ("c-8n+6-mod-8", 6, 8, 8),
    ("c-16n+13-mod-4", 13, 16, 4),
]

OMEGA_THEOREMS = [
    ("omega-8n+3-mod-4", 3, 8, 4),
    ("omega-8n+5-mod-8", 5, 8, 8),
    ("omega-16n+12-mod-4", 12, 16, 4),
]

PARTITION_THEOREMS = [
    ("p-5n+4-mod-5", 4, 5, 5),
    ("p-7n+5-mod-7", 5, 7, 7),
    ("p-11n+6-mod-11", 6, 11, 11),
]


def check_c_theorem(name: str, prec: int) -> CheckResult:
    residue, step, modulus = _lookup(C_THEOREMS, name)
    return check_congruence(_claim("C", residue, step, modulus), special.series_C_sum(prec), name)


def check_omega_theorem(name: str, prec: int) -> CheckResult:
    residue, step, modulus = _lookup(OMEGA_THEOREMS, name)
    return check_congruence(_claim("omega", residue, step, modulus), special.series_omega(prec), name)


def check_partition_theorem(name: str, prec: int) -> CheckResult:
    residue, step, modulus = _lookup(PARTITION_THEOREMS, name)
    return check_congruence(
        _claim("p", residue, step, modulus), qprod.partition_generating_function(prec), name
    )


def _lookup(table, name):
    for entry in table:
        if entry[0] == name:
            return entry[1:]
    raise KeyError(f"Unknown congruence theorem: '{name}'")


def check_s_vanishing(prec: int) -> CheckResult:
    """s(4n+1) == 0 (정확히)"""
    return check_congruence(_claim("S", 1, 4, 0), special.series_S(prec), "s-4n+1-vanishes")


# ---------------------------------------------------------------------------
# A(q)B(-q) 관련 합동식
# ---------------------------------------------------------------------------

def _a_times_b_neg(prec: int) -> Series:
    b_neg = fps.substitute_power(special.series_B_sum(prec), 1, -1)
    return fps.mul(special.series_A(prec), b_neg)


def check_ab_neg_4n1_mod_4(prec: int) -> CheckResult:
    """coeff_{4n+1}(A(q)B(-q)) ≡ 0 mod 4"""
    return check_congruence(_claim("A*B(-q)", 1, 4, 4), _a_times_b_neg(prec), "ab-neg-4n+1-mod-4")


def check_a_residue_mod_4(j: int, prec: int) -> CheckResult:
    """coeff_{4n+j}(A(q)) ≡ 0 mod 4, j in {2, 3}"""
    return check_congruence(_claim("A", j, 4, 4), special.series_A(prec), f"a-4n+{j}-mod-4")


def check_a_dissection_mod_4(prec: int) -> CheckResult:
    """A(q) ≡ A_0(q^4) + q A_1(q^4) (mod 4)"""
    rhs = fps.add(
        at_power(lambda n: special.series_closed("A0", n), 4, prec),
        fps.shift(at_power(lambda n: special.series_closed("A1", n), 4, prec), 1),
    )
    return check_congruent_series("a-4-dissection-mod-4", special.series_A(prec), rhs, 4)


def f1_series(prec: int) -> Series:
    """F_1 = -A_0 B_1 + A_1 B_0, B_j 는 B(q) 의 4-분해 성분"""
    parts = dissect(special.series_B_sum(4 * prec), 4)
    a0 = special.series_closed("A0", prec)
    a1 = special.series_closed("A1", prec)
    return fps.add(fps.neg(fps.mul(a0, parts[1])), fps.mul(a1, parts[0]))


def check_f1_cancellation(prec: int) -> CheckResult:
    f1 = f1_series(-(-prec // 4))
    return check_congruence(_claim("F1", 0, 1, 4), f1, "f1-cancellation-mod-4")


def check_ab_neg_mod_2(prec: int) -> CheckResult:
    """A(q)B(-q) ≡ (q^16;q^16)_inf (mod 2)"""
    return check_congruent_series(
        "ab-neg-mod-2", _a_times_b_neg(prec), qprod.euler_product(16, prec), 2
    )


def check_a_mod_2(prec: int) -> CheckResult:
    """A(q) ≡ (q^4;q^4)_inf (mod 2)"""
    return check_congruent_series("a-mod-2", special.series_A(prec), qprod.euler_product(4, prec), 2)


def check_b_neg_mod_2(prec: int) -> CheckResult:
    """B(-q) ≡ psi(q^4) (mod 2)"""
    b_neg = fps.substitute_power(special.series_B_sum(prec), 1, -1)
    return check_congruent_series("b-neg-mod-2", b_neg, at_power(qprod.psi, 4, prec), 2)


def check_theta_neg_mod_4(prec: int) -> CheckResult:
    """Theta(-q) ≡ 1 + 2T(q) (mod 4)"""
    rhs = fps.add(fps.one(prec), fps.scale(special.series_closed("T", prec), 2))
    return check_congruent_series("theta-neg-mod-4", qprod.theta_neg(prec), rhs, 4)


def check_mod_claims(prec: int) -> List[CheckResult]:
    """A(q), B(-q) 에 대한 합동식 묶음"""
    return [
        check_ab_neg_4n1_mod_4(prec),
        check_a_residue_mod_4(2, prec),
        check_a_residue_mod_4(3, prec),
        check_a_dissection_mod_4(prec),
        check_f1_cancellation(prec),
        check_ab_neg_mod_2(prec),
        check_a_mod_2(prec),
        check_b_neg_mod_2(prec),
        check_theta_neg_mod_4(prec),
    ]
