# -*- coding: utf-8 -*-
"""
검증 모듈
항등식/합동식 검증, 2색 분할 오라클, 검증 레지스트리
"""
from .results import CheckResult, CheckStatus, CongruenceClaim, Evidence, Mismatch
from .identities import check_identity
from .congruences import check_congruence, check_congruent_series, check_mod_claims
from .oracle import enumerate_c, enumerate_c_k, two_color_partitions
from .registry import CHECKS, CheckEntry, available_checks, run_all, run_check

__all__ = [
    'CheckResult',
    'CheckStatus',
    'CongruenceClaim',
    'Evidence',
    'Mismatch',
    'check_identity',
    'check_congruence',
    'check_congruent_series',
    'check_mod_claims',
    'enumerate_c',
    'enumerate_c_k',
    'two_color_partitions',
    'CHECKS',
    'CheckEntry',
    'available_checks',
    'run_all',
    'run_check',
]
