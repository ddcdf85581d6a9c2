# -*- coding: utf-8 -*-
"""
합동식 스캔 모듈
c(n) 추측 계열 검사와 등차수열 합동식 탐색
"""
from .scanner_base import ScannerBase, CongruenceFamily, FAMILIES, congruence_name
from .conjectures import ConjectureScanner, scan_conjecture_openq, scan_conjecture_family
from .discover import DiscoveryScanner, discover

__all__ = [
    'ScannerBase',
    'CongruenceFamily',
    'FAMILIES',
    'congruence_name',
    'ConjectureScanner',
    'scan_conjecture_openq',
    'scan_conjecture_family',
    'DiscoveryScanner',
    'discover',
]
