# -*- coding: utf-8 -*-
"""합동식 검증 테스트"""
from fractions import Fraction

import pytest

from certify import congruences
from certify.congruences import check_congruence, check_congruent_series
from certify.results import CongruenceClaim
from qseries import fps, special
from qseries.errors import NonIntegralError
from qseries.progression import Progression

PREC = 400


def test_congruence_on_c():
    claim = CongruenceClaim(Progression(4, 8), 4, "C")
    assert check_congruence(claim, special.series_C_sum(PREC)).passed


def test_congruence_on_omega():
    claim = CongruenceClaim(Progression(3, 8), 4, "omega")
    assert check_congruence(claim, special.series_omega(PREC)).passed


def test_congruence_failure_reports_coefficient():
    claim = CongruenceClaim(Progression(0, 2), 4, "f")
    result = check_congruence(claim, fps.make([1, 0, 1], 3))
    assert not result.passed
    assert result.first_failure.exponent == 0
    assert (result.first_failure.lhs, result.first_failure.rhs) == (1, 0)
    assert result.name == "f(2n+0) = 0 mod 4"


def test_congruence_rejects_rational_coefficients():
    claim = CongruenceClaim(Progression(0, 1), 2, "x")
    with pytest.raises(NonIntegralError):
        check_congruence(claim, fps.make([Fraction(1, 2)], 1))


def test_exact_vanishing_is_stricter_than_any_modulus():
    f = fps.make([0, 8, 0, 16], 4)
    assert check_congruence(CongruenceClaim(Progression(1, 2), 8, "f"), f).passed
    assert not check_congruence(CongruenceClaim(Progression(1, 2), 0, "f"), f).passed


def test_congruent_series():
    lhs = fps.make([1, 5, 9], 3)
    rhs = fps.make([3, 1, 1], 3)
    assert check_congruent_series("mod-2", lhs, rhs, 2).passed
    assert not check_congruent_series("mod-4", lhs, rhs, 4).passed


@pytest.mark.parametrize("name", [n for n, *_ in congruences.C_THEOREMS])
def test_c_theorems(name):
    result = congruences.check_c_theorem(name, PREC)
    assert result.passed and result.name == name


@pytest.mark.parametrize("name", [n for n, *_ in congruences.OMEGA_THEOREMS])
def test_omega_theorems(name):
    assert congruences.check_omega_theorem(name, PREC).passed


@pytest.mark.parametrize("name", [n for n, *_ in congruences.PARTITION_THEOREMS])
def test_partition_theorems(name):
    assert congruences.check_partition_theorem(name, PREC).passed


def test_unknown_theorem_name():
    with pytest.raises(KeyError):
        congruences.check_c_theorem("c-3n+1-mod-3", 10)


def test_s_vanishing():
    result = congruences.check_s_vanishing(PREC)
    assert result.passed
    s = special.series_S(PREC)
    assert s[1] == 0 and s[5] == 0 and s[2] == 1


def test_a_coefficient_two_is_four():
    assert special.series_A(3)[2] == 4


def test_f1_series_vanishes_mod_four():
    f1 = congruences.f1_series(60)
    assert all(c % 4 == 0 for c in f1.tolist())


def test_mod_claims_all_pass():
    results = congruences.check_mod_claims(PREC)
    names = [r.name for r in results]
    assert "ab-neg-mod-2" in names and "f1-cancellation-mod-4" in names
    for r in results:
        assert r.passed, (r.name, r.first_failure)
