# -*- coding: utf-8 -*-
"""
합동식 스캐너 베이스 클래스
추측 검사 / 등차수열 탐색 스캐너가 상속받는 추상 클래스
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Optional

from certify.congruences import check_congruence
from certify.results import CheckResult, CongruenceClaim
from qseries.errors import ConfigurationError
from qseries.fps import Series
from qseries.progression import Progression

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CongruenceFamily:
    """
    c(2^{2k+base} n + (numerator 4^k + 1)/3) ≡ 0 (mod modulus), k >= 0
    """
    name: str
    numerator: int
    base_exponent: int  # 수열 법의 지수: 2k + base_exponent
    modulus: int

    def progression(self, k: int) -> Progression:
        """k 번째 등차수열 (오프셋이 정수가 아니면 ConfigurationError)"""
        if k < 0:
            raise ConfigurationError(f"Family index k must be nonnegative, got {k}")
        top = self.numerator * 4 ** k + 1
        if top % 3:
            raise ConfigurationError(
                f"Family '{self.name}': offset ({self.numerator}*4^{k}+1)/3 is not an integer"
            )
        return Progression(top // 3, 2 ** (2 * k + self.base_exponent))


# k=0 에서 c(8n+4) mod 4, c(8n+6) mod 8, c(16n+13) mod 4
FAMILIES = [
    CongruenceFamily("family-1", numerator=11, base_exponent=3, modulus=4),
    CongruenceFamily("family-2", numerator=17, base_exponent=3, modulus=8),
    CongruenceFamily("family-3", numerator=38, base_exponent=4, modulus=4),
]


def congruence_name(prefix: str, progression: Progression, modulus: int) -> str:
    """예: ('c', 8n+4, 4) -> 'c-8n+4-mod-4', modulus 0 이면 'c-4n+1-vanishes'"""
    if modulus == 0:
        return f"{prefix}-{progression}-vanishes"
    return f"{prefix}-{progression}-mod-{modulus}"


class ScannerBase(ABC):
    """스캐너 베이스 클래스"""

    def __init__(self, progress_callback: Optional[Callable[[int, int], None]] = None):
        """
        Args:
            progress_callback: 진행 상황 콜백 (current, total)
        """
        self.progress_callback = progress_callback

    @abstractmethod
    def scan(self, f: Series, series_name: str) -> list:
        """급수 f 에 대해 스캔 실행"""

    def _report_progress(self, current: int, total: int) -> None:
        if self.progress_callback:
            self.progress_callback(current, total)

    @staticmethod
    def _certify(claim: CongruenceClaim, f: Series, prefix: str) -> CheckResult:
        """정확한 정수 계수로 주장 하나 검증"""
        name = congruence_name(prefix, claim.progression, claim.modulus)
        result = check_congruence(claim, f, name)
        logger.debug("%s: %s (%d members below %d)", name, result.status.value,
                     claim.progression.count_below(f.prec), f.prec)
        return result

    def _certify_all(self, claims: List[CongruenceClaim], f: Series, prefix: str) -> List[CheckResult]:
        results = []
        for i, claim in enumerate(claims, 1):
            results.append(self._certify(claim, f, prefix))
            self._report_progress(i, len(claims))
        return results
