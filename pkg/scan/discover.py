# -*- coding: utf-8 -*-
"""
등차수열 합동식 탐색
모든 (r mod m), m <= m_max 와 법 집합에 대해 계수가 0 이 되는 수열을 찾는다.
탐색은 int64 나머지 배열로 하고, 보고 전에 정확한 정수로 다시 확인.
"""
from __future__ import annotations

import logging
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np

from certify.results import CongruenceClaim, Evidence
from qseries.errors import ConstructionError, NonIntegralError
from qseries.fps import Series
from qseries.progression import Progression

from .scanner_base import ScannerBase

logger = logging.getLogger(__name__)

DEFAULT_MIN_WITNESSES = 20


class DiscoveryScanner(ScannerBase):
    """
    등차수열 탐색 (경험적 후보만 보고, 증명 없음)

    특징:
    - modulus 0 은 정확히 0 인 계수
    - 수열 위 계수가 min_witnesses 개 미만이면 보고하지 않음
    - 급수 전체가 0 이 되는 법에서는 모든 후보가 degenerate
    """

    def __init__(self, moduli: Iterable[int], m_max: int,
                 min_witnesses: int = DEFAULT_MIN_WITNESSES,
                 progress_callback: Optional[Callable[[int, int], None]] = None):
        super().__init__(progress_callback)
        self.moduli = sorted(set(moduli))
        for modulus in self.moduli:
            if modulus != 0 and modulus < 2:
                raise ConstructionError(f"Tested modulus must be 0 or >= 2, got {modulus}")
        if m_max < 1:
            raise ConstructionError(f"m_max must be >= 1, got {m_max}")
        self.m_max = m_max
        self.min_witnesses = min_witnesses

    @staticmethod
    def _residue_tables(f: Series, moduli: List[int]) -> Dict[int, np.ndarray]:
        """법별 '계수 ≡ 0' 불리언 배열"""
        tables = {}
        for modulus in moduli:
            if modulus == 0:
                tables[0] = f.coeffs == 0
            else:
                tables[modulus] = (f.coeffs % modulus).astype(np.int64) == 0
        return tables

    def scan(self, f: Series, series_name: str = "f") -> List[CongruenceClaim]:
        """
        Returns:
            CongruenceClaim 목록, (m, r, modulus) 순
        """
        if not f.is_integral:
            raise NonIntegralError(f"Discovery on '{series_name}' needs integer coefficients")
        tables = self._residue_tables(f, self.moduli)
        degenerate = {modulus: bool(table.all()) for modulus, table in tables.items()}

        grid = [(m, r) for m in range(1, self.m_max + 1) for r in range(m)]
        candidates = []
        for i, ((m, r), modulus) in enumerate(product(grid, self.moduli), 1):
            hits = tables[modulus][r::m]
            if len(hits) >= self.min_witnesses and hits.all():
                candidates.append(CongruenceClaim(
                    Progression(r, m), modulus, series_name,
                    evidence=Evidence.EMPIRICAL,
                    witnesses=len(hits),
                    degenerate=degenerate[modulus],
                ))
            self._report_progress(i, len(grid) * len(self.moduli))

        claims = []
        for claim in candidates:
            if self._certify(claim, f, series_name.lower()).passed:
                claims.append(claim)
            else:
                logger.warning("Candidate %s failed exact re-verification", claim.label)
        claims.sort(key=lambda c: (c.progression.modulus, c.progression.residue, c.modulus))
        logger.info("Discovered %d progressions for %s (m <= %d, moduli %s)",
                    len(claims), series_name, self.m_max, self.moduli)
        return claims


def discover(f: Series, moduli: Iterable[int], m_max: int,
             min_witnesses: int = DEFAULT_MIN_WITNESSES,
             series_name: str = "f") -> List[CongruenceClaim]:
    """DiscoveryScanner 한 번 실행"""
    return DiscoveryScanner(moduli, m_max, min_witnesses).scan(f, series_name)
