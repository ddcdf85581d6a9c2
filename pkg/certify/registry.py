# -*- coding: utf-8 -*-
"""
검증 레지스트리
이름 -> 검증 함수 매핑, 전체 실행 (run_all)
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, replace
from functools import partial
from multiprocessing import Pool, current_process
from typing import Callable, Dict, Iterable, List, Optional, Union

from qseries.errors import CatalogError
from qseries.settings import get_settings

from . import congruences, identities, oracle
from .results import CheckResult

logger = logging.getLogger(__name__)

Runner = Callable[[int], Union[CheckResult, List[CheckResult]]]


@dataclass(frozen=True)
class CheckEntry:
    """
    레지스트리 항목

    single_path: 양변이 서로 다른 경로로 만들어지지 않는 검증
    prec_cap: 설정 키 (실행 시 prec 를 이 값으로 제한), None 이면 제한 없음
    """
    name: str
    description: str
    runner: Runner
    single_path: bool = False
    prec_cap: Optional[str] = None


def _parametric(prec: int) -> List[CheckResult]:
    triples = get_settings().get_parametric_triples()
    return identities.check_parametric_triples(triples, prec)


def _oracle_workers() -> int:
    # 하위 프로세스 안에서 다시 Pool 을 만들지 않음
    return 1 if _in_worker() else get_settings().get("verify.workers", 1)


def _oracle_c(prec: int) -> CheckResult:
    return oracle.check_oracle_c(max(prec - 1, 0), workers=_oracle_workers())


def _oracle_c_k(k: int, prec: int) -> CheckResult:
    return oracle.check_oracle_c_k(k, max(prec - 1, 0), workers=_oracle_workers())


def _in_worker() -> bool:
    return current_process().name != "MainProcess"


_ENTRIES = [
    CheckEntry("theta-sum-product", "Theta(q): theta sum == eta quotient",
               identities.check_theta_sum_product),
    CheckEntry("theta-neg-sum-product", "Theta(-q): alternating sum == (q;q)^2/(q^2;q^2)",
               identities.check_theta_neg_sum_product),
    CheckEntry("psi-sum-product", "psi(q): triangular sum == (q^2;q^2)^2/(q;q)",
               identities.check_psi_sum_product),
    CheckEntry("euler-pentagonal", "(q;q)_inf product == pentagonal number sum",
               identities.check_euler_pentagonal),
    CheckEntry("theta-even-odd-split", "Theta(q) = Theta(q^4) + 2q psi(q^8)",
               identities.check_theta_even_odd_split),
    CheckEntry("s-mock-theta-relation", "S(q) = 2B(-q) - (q;q^2)^2/(-q^2;q^2) omega(-q)",
               identities.check_s_mock_theta_relation),
    CheckEntry("c-mock-theta-relation", "C(q) = 2q(-q^2;q^2)/(q;q^2)^2 B(-q) - q omega(-q)",
               identities.check_c_mock_theta_relation),
    CheckEntry("c-equals-q-a-s", "C(q) = q A(q) S(q)", oracle.convolution_check),
    CheckEntry("c-k-stabilisation", "C_k agrees with C through q^{2k}, k <= 20",
               identities.check_c_k_stabilisation, prec_cap="oracle.c_k_prec"),
    CheckEntry("parametric-transformation", "three-parameter transformation at rational triples",
               _parametric, prec_cap="parametric.prec"),
    CheckEntry("b-lerch-representation", "B(q) termwise sum == Lerch-type bilateral sum",
               identities.check_b_lerch_representation),
    CheckEntry("lerch-pairing", "bilateral sum q^{2n(n+1)}/(1+q^{2n+1}) == psi(q^4)",
               identities.check_lerch_pairing),
    CheckEntry("b-4n-component", "sum c_B(4n) q^n == (q^2;q^2)^14/((q;q)^9 (q^4;q^4)^4)",
               identities.check_b_4n_component),
    CheckEntry("b-4n+1-component", "sum c_B(4n+1) q^n == 2(q^2;q^2)^8/(q;q)^7",
               identities.check_b_4n1_component),
    CheckEntry("b-neg-4n+1-component", "residue-1 component of B(-q) == -2(q^2;q^2)^8/(q;q)^7",
               identities.check_b_neg_4n1_component),
    CheckEntry("omega-f-theta-relation", "f(q^8) + 2q omega(q) + 2q^3 omega(-q^4) == G(q)",
               identities.check_omega_f_theta_relation),
    CheckEntry("g-4-dissection", "G(q) == sum_j q^j G_j(q^4)", identities.check_g_dissection),
    CheckEntry("omega-component-0", "residue-0 component of omega == omega_0 == G_1/2",
               partial(identities.check_omega_component, 0)),
    CheckEntry("omega-component-1", "residue-1 component of omega == omega_1 == G_2/2",
               partial(identities.check_omega_component, 1)),
    CheckEntry("a-theta-quotient", "A(q) == (q^4;q^4)/Theta(-q)", identities.check_a_theta_quotient),
    CheckEntry("a0-theta-form", "A_0 closed form against theta quotient",
               identities.check_a0_theta_form, single_path=True),
    CheckEntry("a1-psi-form", "A_1 closed form against psi quotient",
               identities.check_a1_psi_form, single_path=True),
    CheckEntry("t-square-split", "T(q) = T(q^4) + q sum q^{4n(n+1)}", identities.check_t_square_split),
    CheckEntry("m-closed-form", "R(Theta omega) == 4(q^2;q^2)^2/(q;q^2)^6",
               identities.check_m_closed_form),
    CheckEntry("m-theta-split", "M == Theta omega_1 + 2 psi(q^2) omega_0",
               identities.check_m_theta_split),
    CheckEntry("r-theta-neg-omega-neg", "R(Theta(-q) omega(-q)) == -M(q)",
               identities.check_r_theta_neg_omega_neg),
    CheckEntry("d-theta-form", "D(q) == Theta(-q) omega(-q)/(q^4;q^4)",
               identities.check_d_theta_form),
    CheckEntry("r-d-via-m", "R(D(q)) == -M(q)/(q;q)", identities.check_r_d_via_m),
    CheckEntry("r-2b-neg-closed", "R(2B(-q)) == -4(q^2;q^2)/(q;q^2)^7",
               identities.check_r_2b_neg_closed),
    CheckEntry("r-d-closed", "R(D(q)) == -4(q^2;q^2)/(q;q^2)^7", identities.check_r_d_closed),
    CheckEntry("r-2b-neg-equals-r-d", "R(2B(-q)) == R(D(q))", identities.check_r_2b_neg_equals_r_d),
    CheckEntry("s-4n+1-vanishes", "s(4n+1) == 0 exactly", congruences.check_s_vanishing,
               single_path=True),
    CheckEntry("mod-claims", "A(q), B(-q) congruences used for c(8n+6), c(16n+13)",
               congruences.check_mod_claims),
    CheckEntry("oracle-c-enumeration", "two-colour partition count == c(n)", _oracle_c,
               prec_cap="oracle.registry_max_n"),
]

for _k in (1, 2, 3):
    _ENTRIES.append(CheckEntry(f"oracle-c{_k}-enumeration", f"k={_k} two-colour partition count == c_k(n)",
                               partial(_oracle_c_k, _k), prec_cap="oracle.registry_c_k_max_n"))

for _name, *_ in congruences.C_THEOREMS:
    _ENTRIES.append(CheckEntry(_name, f"c(n) congruence {_name}",
                               partial(congruences.check_c_theorem, _name), single_path=True))
for _name, *_ in congruences.OMEGA_THEOREMS:
    _ENTRIES.append(CheckEntry(_name, f"c_omega(n) congruence {_name}",
                               partial(congruences.check_omega_theorem, _name), single_path=True))
for _name, *_ in congruences.PARTITION_THEOREMS:
    _ENTRIES.append(CheckEntry(_name, f"partition congruence {_name}",
                               partial(congruences.check_partition_theorem, _name), single_path=True))

CHECKS: Dict[str, CheckEntry] = {entry.name: entry for entry in sorted(_ENTRIES, key=lambda e: e.name)}

# 짧은 이름
ALIASES: Dict[str, str] = {
    "theorem-S": "s-mock-theta-relation",
    "convolution": "c-equals-q-a-s",
}

# prec_cap 키가 설정 파일에 없을 때
_DEFAULT_CAPS = {
    "oracle.c_k_prec": 100,
    "parametric.prec": 60,
    "oracle.registry_max_n": 41,
    "oracle.registry_c_k_max_n": 31,
}


def available_checks() -> List[str]:
    """등록된 검증 이름 목록 (이름순)"""
    return list(CHECKS.keys())


def get_entry(name: str) -> CheckEntry:
    key = ALIASES.get(name, name)
    if key not in CHECKS:
        raise CatalogError(f"Check '{name}' not found")
    return CHECKS[key]


def effective_prec(entry: CheckEntry, prec: int) -> int:
    """prec_cap 을 적용한 실제 절단 차수"""
    if entry.prec_cap is None:
        return prec
    cap = get_settings().get(entry.prec_cap, _DEFAULT_CAPS[entry.prec_cap])
    return min(prec, cap)


def run_check(name: str, prec: int) -> List[CheckResult]:
    """
    검증 하나 실행

    Args:
        name: 레지스트리 이름 (또는 별칭)
        prec: 절단 차수

    Returns:
        CheckResult 목록 (대부분 1개, 매개변수 검증은 여러 개)
    """
    entry = get_entry(name)
    actual = effective_prec(entry, prec)
    start = time.perf_counter()
    outcome = entry.runner(actual)
    elapsed = time.perf_counter() - start
    results = outcome if isinstance(outcome, list) else [outcome]
    share = elapsed / len(results) if results else 0.0
    results = [replace(r, elapsed=share, description=entry.description) for r in results]
    for r in results:
        logger.debug("%s: %s (prec=%d, %.1f ms)", r.name, r.status.value, r.prec, r.elapsed * 1000)
    return results


def run_all(prec: int, workers: int = 1, names: Optional[Iterable[str]] = None,
            progress: Optional[Callable[[int, int], None]] = None) -> List[CheckResult]:
    """
    레지스트리 전체 (또는 names) 실행, 결과는 검증 이름순

    Args:
        prec: 절단 차수
        workers: 1 보다 크면 multiprocessing.Pool
        names: 실행할 이름 (None이면 전부)
        progress: 콜백 (완료 수, 전체 수)
    """
    selected = [get_entry(n).name for n in names] if names is not None else available_checks()
    total = len(selected)
    logger.info("Running %d checks at prec %d (workers=%d)", total, prec, workers)

    batches: List[List[CheckResult]] = []
    if workers > 1 and total > 1:
        with Pool(workers) as pool:
            for i, batch in enumerate(pool.imap_unordered(partial(_run_named, prec=prec), selected), 1):
                batches.append(batch)
                if progress:
                    progress(i, total)
    else:
        for i, name in enumerate(selected, 1):
            batches.append(run_check(name, prec))
            if progress:
                progress(i, total)

    results = [r for batch in batches for r in batch]
    results.sort(key=lambda r: r.name)
    failed = sum(1 for r in results if not r.passed)
    if failed:
        logger.warning("%d of %d checks failed", failed, len(results))
    else:
        logger.info("All %d checks passed", len(results))
    return results


def _run_named(name: str, prec: int) -> List[CheckResult]:
    return run_check(name, prec)


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)
