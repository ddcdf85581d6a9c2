# -*- coding: utf-8 -*-
"""합동식 스캔 / 탐색 테스트"""
from fractions import Fraction

import pytest

from certify import congruences
from certify.results import Evidence
from qseries import fps, special
from qseries.errors import ConfigurationError, ConstructionError, NonIntegralError
from qseries.progression import Progression
from scan import (
    FAMILIES,
    ConjectureScanner,
    DiscoveryScanner,
    congruence_name,
    discover,
    scan_conjecture_family,
    scan_conjecture_openq,
)


@pytest.mark.parametrize("k, expected", [
    (0, [(4, 8), (6, 8), (13, 16)]),
    (1, [(15, 32), (23, 32), (51, 64)]),
    (2, [(59, 128), (91, 128), (203, 256)]),
])
def test_family_progressions(k, expected):
    got = [(p.residue, p.modulus) for p in (family.progression(k) for family in FAMILIES)]
    assert got == expected


def test_family_rejects_negative_k():
    with pytest.raises(ConfigurationError):
        FAMILIES[0].progression(-1)
    with pytest.raises(ConfigurationError):
        ConjectureScanner(k_max=-1)


def test_congruence_names():
    assert congruence_name("c", Progression(4, 8), 4) == "c-8n+4-mod-4"
    assert congruence_name("s", Progression(1, 4), 0) == "s-4n+1-vanishes"


def test_openq_small_prec():
    results = scan_conjecture_openq(600)
    assert len(results) == 1
    assert results[0].name == "c-32n+23-mod-8"
    assert results[0].passed


def test_family_scan_order_and_progress():
    seen = []
    results = scan_conjecture_family(1, 600, progress_callback=lambda i, n: seen.append((i, n)))
    assert len(results) == 6
    assert [r.name for r in results[:3]] == ["c-8n+4-mod-4", "c-8n+6-mod-8", "c-16n+13-mod-4"]
    assert results[4].name == "c-32n+23-mod-8"
    assert all(r.passed for r in results)
    assert seen[-1] == (6, 6)


def test_scanner_has_no_cancel_hook():
    scanner = ConjectureScanner(k_max=1)
    assert not hasattr(scanner, "stop")
    assert len(scanner.scan(special.series_C_sum(200))) == 6


def test_family_k0_matches_theorem_checks():
    prec = 400
    family = scan_conjecture_family(0, prec)
    for result in family:
        theorem = congruences.check_c_theorem(result.name, prec)
        assert result.to_dict() | {"elapsed_ms": 0} == theorem.to_dict() | {"elapsed_ms": 0}


def test_discover_s_vanishing():
    claims = discover(special.series_S(200), [0], 8, series_name="S")
    found = {(c.progression.residue, c.progression.modulus) for c in claims}
    assert (1, 4) in found
    assert (5, 8) in found
    assert all(c.evidence is Evidence.EMPIRICAL for c in claims)
    assert not any(c.degenerate for c in claims)


def test_discover_c_mod_four():
    claims = discover(special.series_C_sum(400), [4], 8, series_name="C")
    found = {(c.progression.residue, c.progression.modulus) for c in claims}
    assert (4, 8) in found
    claim = next(c for c in claims if (c.progression.residue, c.progression.modulus) == (4, 8))
    assert claim.witnesses == 50


def test_discover_results_sorted():
    claims = discover(special.series_S(200), [0, 2], 8, series_name="S")
    keys = [(c.progression.modulus, c.progression.residue, c.modulus) for c in claims]
    assert keys == sorted(keys)


def test_discover_zero_series_degenerate():
    claims = discover(fps.zero(200), [0, 4], 8)
    # m <= 8 에서 (m, r) 쌍 36개, 법마다
    assert len(claims) == 72
    assert all(c.degenerate for c in claims)


def test_discover_min_witnesses():
    assert discover(special.series_S(40), [0], 4, min_witnesses=20) == []


def test_discover_validation():
    with pytest.raises(ConstructionError):
        DiscoveryScanner([1], 8)
    with pytest.raises(ConstructionError):
        DiscoveryScanner([2], 0)
    with pytest.raises(NonIntegralError):
        discover(fps.make([Fraction(1, 2), 1, 1], 3), [2], 2, min_witnesses=1)
