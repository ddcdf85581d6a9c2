# -*- coding: utf-8 -*-
"""등차수열 분해 테스트"""
import pytest

from qseries import fps, qprod, special
from qseries.errors import ConstructionError
from qseries.progression import Progression, coeffs_on, component_prec, dissect, reassemble, restrict_R


def test_progression_validation_and_str():
    assert str(Progression(4, 8)) == "8n+4"
    with pytest.raises(ConstructionError):
        Progression(8, 8)
    with pytest.raises(ConstructionError):
        Progression(0, 0)


def test_progression_members():
    p = Progression(23, 32)
    assert list(p.members(100)) == [23, 55, 87]
    assert p.count_below(23) == 0


def test_component_prec():
    assert component_prec(10, 4, 0) == 3
    assert component_prec(10, 4, 1) == 3
    assert component_prec(10, 4, 2) == 2
    assert component_prec(2, 4, 3) == 0


def test_dissect_examples():
    f = fps.make([1, 1, 1, 1], 4)
    assert [c.tolist() for c in dissect(f, 2)] == [[1, 1], [1, 1]]
    assert dissect(f, 1) == [f]
    with pytest.raises(ConstructionError):
        dissect(f, 0)


def test_theta_dissection_mod_four():
    parts = dissect(qprod.theta(400), 4)
    assert parts[2] == fps.zero(parts[2].prec)
    assert parts[3] == fps.zero(parts[3].prec)


def test_restrict_R_examples():
    assert restrict_R(fps.make([0, 1], 2)).tolist() == [1]
    even = fps.from_terms({0: 1, 2: 3, 4: 5, 6: 7}, 9)
    assert restrict_R(even) == fps.zero(2)


def test_restrict_R_sign_flip():
    prec = 200
    direct = fps.mul(qprod.theta(prec), special.series_omega(prec))
    flipped = fps.substitute_power(direct, 1, -1)
    assert restrict_R(flipped) == fps.neg(restrict_R(direct))


def test_coeffs_on_examples():
    f = fps.make([1, 2, 3], 3)
    assert coeffs_on(f, Progression(1, 2)) == [2]
    assert coeffs_on(f, Progression(0, 1)) == [1, 2, 3]
    assert all(c == 0 for c in coeffs_on(special.series_S(400), Progression(1, 4)))


def test_reassemble_requires_components():
    with pytest.raises(ConstructionError):
        reassemble([])
