# -*- coding: utf-8 -*-
"""
c(n) 합동식 추측 검사
c(32n+23) ≡ 0 (mod 8) 와 k 로 매개된 세 가지 계열
"""
from __future__ import annotations

import logging
from typing import Callable, List, Optional

from certify.results import CheckResult, CongruenceClaim
from qseries import special
from qseries.errors import ConfigurationError
from qseries.fps import Series
from qseries.progression import Progression

from .scanner_base import FAMILIES, ScannerBase

logger = logging.getLogger(__name__)

OPENQ_PROGRESSION = Progression(23, 32)
OPENQ_MODULUS = 8


class ConjectureScanner(ScannerBase):
    """
    추측 계열 스캐너

    scan() 은 k = 0..k_max 의 모든 계열 인스턴스를 정확한 정수로 확인
    """

    def __init__(self, k_max: int = 2,
                 progress_callback: Optional[Callable[[int, int], None]] = None):
        super().__init__(progress_callback)
        if k_max < 0:
            raise ConfigurationError(f"k_max must be nonnegative, got {k_max}")
        self.k_max = k_max

    def claims(self) -> List[CongruenceClaim]:
        """k 순, 계열 순"""
        return [
            CongruenceClaim(family.progression(k), family.modulus, "C")
            for k in range(self.k_max + 1)
            for family in FAMILIES
        ]

    def scan(self, f: Series, series_name: str = "C") -> List[CheckResult]:
        claims = self.claims()
        logger.info("Scanning %d family instances of %s at prec %d", len(claims), series_name, f.prec)
        results = self._certify_all(claims, f, "c")
        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.warning("Counterexamples found: %s", ", ".join(failed))
        return results


def scan_conjecture_openq(prec: int) -> List[CheckResult]:
    """c(32n+23) ≡ 0 (mod 8), 32n+23 < prec"""
    if prec <= OPENQ_PROGRESSION.residue:
        logger.warning("prec %d checks no index of %s", prec, OPENQ_PROGRESSION)
    claim = CongruenceClaim(OPENQ_PROGRESSION, OPENQ_MODULUS, "C")
    return [ScannerBase._certify(claim, special.series_C_sum(prec), "c")]


def scan_conjecture_family(k_max: int, prec: int,
                           progress_callback: Optional[Callable[[int, int], None]] = None
                           ) -> List[CheckResult]:
    """
    세 계열을 k = 0..k_max 에 대해 확인

    Returns:
        3 (k_max + 1) 개의 CheckResult (k 순, 계열 순)
    """
    scanner = ConjectureScanner(k_max, progress_callback)
    return scanner.scan(special.series_C_sum(prec))
