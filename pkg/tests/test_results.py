# -*- coding: utf-8 -*-
"""결과 데이터 클래스 테스트"""
import json
from dataclasses import replace
from fractions import Fraction

import pytest

from certify.results import (
    CheckResult,
    CheckStatus,
    CongruenceClaim,
    Evidence,
    Mismatch,
    format_exact,
    parse_exact,
)
from qseries.errors import ConstructionError
from qseries.progression import Progression


def test_status_and_failure_must_agree():
    with pytest.raises(ConstructionError):
        CheckResult("x", 10, CheckStatus.PASS, Mismatch(1, 2, 3))
    with pytest.raises(ConstructionError):
        CheckResult("x", 10, CheckStatus.FAIL)


def test_to_dict_schema():
    data = replace(CheckResult.failing("x", 10, 3, 2 ** 100, Fraction(-1, 3)), elapsed=0.5).to_dict()
    assert set(data) == {"check", "prec", "status", "first_failure", "elapsed_ms"}
    assert data["status"] == "fail"
    assert data["first_failure"] == {"exponent": 3, "lhs": str(2 ** 100), "rhs": "-1/3"}
    assert data["elapsed_ms"] == 500.0
    json.dumps(data)


def test_passing_to_dict_has_null_failure():
    data = CheckResult.passing("ok", 7).to_dict()
    assert data["first_failure"] is None
    assert data["status"] == "pass"


def test_from_dict_restores_result():
    original = CheckResult.failing("x", 10, 3, 5, Fraction(7, 2))
    assert CheckResult.from_dict(original.to_dict()) == original


def test_exact_formatting():
    assert format_exact(Fraction(6, 3)) == "2"
    assert format_exact(-12) == "-12"
    assert parse_exact("-7/2") == Fraction(-7, 2)
    assert parse_exact("10") == 10


def test_claim_modulus_rules():
    p = Progression(1, 4)
    with pytest.raises(ConstructionError):
        CongruenceClaim(p, 1, "S")
    exact_claim = CongruenceClaim(p, 0, "S")
    assert exact_claim.is_exact_vanishing
    assert exact_claim.holds_for(0)
    assert not exact_claim.holds_for(4)
    mod_claim = CongruenceClaim(Progression(4, 8), 4, "C")
    assert mod_claim.holds_for(-8)
    assert not mod_claim.holds_for(6)


def test_claim_label_and_dict():
    claim = CongruenceClaim(Progression(4, 8), 4, "C", Evidence.EMPIRICAL, witnesses=25)
    assert claim.label == "C(8n+4) = 0 mod 4"
    assert CongruenceClaim(Progression(1, 4), 0, "S").label == "S(4n+1) = 0"
    assert CongruenceClaim.from_dict(claim.to_dict()) == claim
