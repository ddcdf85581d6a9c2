# -*- coding: utf-8 -*-
"""이름 붙은 급수 테스트 (손으로 전개한 앞쪽 계수)"""
import pytest

from qseries import fps, special
from qseries.errors import CatalogError, ConstructionError, PrecisionError
from qseries.special import DefinitionPath


def test_series_A_leading():
    assert special.series_A(4).tolist() == [1, 2, 4, 8]
    with pytest.raises(PrecisionError):
        fps.coeff(special.series_A(4), 4)


def test_series_S_leading():
    assert special.series_S(4).tolist() == [1, 0, 1, -2]


def test_series_C_leading():
    c = special.series_C_sum(20)
    assert c.tolist()[:4] == [0, 1, 2, 5]
    assert c[4] % 4 == 0


def test_series_C_k_leading():
    assert special.series_C_k(1, 4).tolist() == [0, 1, 2, 6]
    for k in (1, 2, 5):
        assert special.series_C_k(k, 30)[0] == 0
    with pytest.raises(ConstructionError):
        special.series_C_k(0, 10)


def test_series_omega_leading():
    omega = special.series_omega(6)
    assert omega.tolist() == [1, 2, 3, 4, 6, 8]
    assert omega[3] % 4 == 0
    assert omega[5] % 8 == 0


def test_series_B_leading():
    assert special.series_B_sum(4).tolist() == [1, 2, 4, 6]


def test_series_f_leading():
    assert special.series_f(4).tolist() == [1, 1, -2, 3]


@pytest.mark.parametrize("builder", [
    special.series_A, special.series_C_sum, special.series_omega, special.series_B_sum,
])
def test_counting_series_are_nonnegative_integers(builder):
    f = builder(600)
    assert f.is_integral
    assert all(c >= 0 for c in f.tolist())


def test_b_lerch_matches_sum():
    assert special.series_B_lerch(300) == special.series_B_sum(300)
    assert special.series_B_lerch(1)[0] == 1


def test_appell_lerch_rejects_bad_sign():
    with pytest.raises(ConstructionError):
        special.appell_lerch_sum(10, denominator_sign=2)


def test_g_constant_term_and_g3_divisible_by_eight():
    assert special.series_G(10)[0] == 1
    assert all(c % 8 == 0 for c in special.series_G_j(3, 100).tolist())
    with pytest.raises(ConstructionError):
        special.series_G_j(4, 10)


def test_closed_form_constants():
    assert special.series_closed("M_closed", 5)[0] == 4
    assert special.series_closed("B1_closed", 5)[0] == -2
    assert special.series_closed("T", 5).tolist() == [0, 1, 0, 0, 1]
    with pytest.raises(CatalogError):
        special.series_closed("nope", 5)


def test_at_power():
    assert special.at_power(lambda n: fps.make([1] * n, n), 3, 7).tolist() == [1, 0, 0, 1, 0, 0, 1]
    flipped = special.at_power(lambda n: fps.make([1] * n, n), 1, 4, sign=-1)
    assert flipped.tolist() == [1, -1, 1, -1]


def test_build_catalog_entries():
    named = special.build("omega", 6)
    assert named.series.tolist() == [1, 2, 3, 4, 6, 8]
    assert named.definition_path is DefinitionPath.SUM
    assert special.build("C_k", 4, k=1).series.tolist() == [0, 1, 2, 6]


def test_build_errors():
    with pytest.raises(CatalogError):
        special.build("nope", 10)
    with pytest.raises(ConstructionError):
        special.build("C_k", 10)
    with pytest.raises(ConstructionError):
        special.build("S", 10, k=2)


def test_catalog_lists_required_names():
    names = set(special.available_series())
    for required in ("A", "S", "C", "C_k", "omega", "B", "B_lerch", "f", "G",
                     "G0", "G1", "G2", "G3", "M_closed", "D", "A0", "A1",
                     "B0_closed", "B1_closed", "omega0", "omega1", "T",
                     "theta", "theta_neg", "psi", "p"):
        assert required in names


@pytest.mark.parametrize("name", ["A", "S", "C", "omega", "B", "f", "G", "M_closed", "theta", "p"])
def test_builders_are_deterministic(name):
    assert special.build(name, 60).series == special.build(name, 60).series
