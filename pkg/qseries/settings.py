# -*- coding: utf-8 -*-
"""
설정 저장/불러오기 관리
JSON 파일로 절단 차수, 검증 매개변수, 스캔 범위 등 저장
"""
import copy
import json
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Tuple

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

# 기본 절단 차수를 덮어쓰는 환경 변수
PREC_ENV_VAR = "QCERT_PREC"


class Settings:
    """애플리케이션 설정 관리"""

    DEFAULT_SETTINGS = {
        "verify": {
            "prec": 1000,
            "workers": 1,
        },
        "parametric": {
            "prec": 60,
            "triples": [
                ["1", "1", "1"],
                ["2", "1/3", "-1/2"],
                ["-1", "2", "3"],
                ["1/2", "1/2", "1/2"],
                ["-3", "-1/5", "2"],
                ["5/7", "-2", "-3/4"],
                ["3", "4", "-5"],
                ["-1/3", "1/6", "7/2"],
            ],
        },
        "oracle": {
            "max_n": 60,
            "registry_max_n": 41,
            "registry_c_k_max_n": 31,
            "c_k_prec": 100,
        },
        "scan": {
            "openq_prec": 5001,
            "family_prec": 6000,
            "k_max": 2,
            "min_witnesses": 20,
            "moduli": [0, 2, 4, 8],
            "m_max": 16,
        },
        "report": {
            "format": "text",
        },
    }

    def __init__(self, settings_file: Optional[str] = None):
        """
        Args:
            settings_file: 설정 파일 경로 (None이면 기본 위치)
        """
        if settings_file:
            self.settings_file = Path(settings_file)
        else:
            # 프로젝트 루트의 settings.json
            self.settings_file = Path(__file__).parent.parent / "settings.json"

        self._settings: dict = {}
        self.load()

    def load(self) -> bool:
        """설정 파일 로드"""
        if self.settings_file.exists():
            try:
                with open(self.settings_file, 'r', encoding='utf-8') as f:
                    loaded = json.load(f)
                # 기본값과 병합 (새 키가 추가된 경우 대비)
                self._settings = self._merge_settings(copy.deepcopy(self.DEFAULT_SETTINGS), loaded)
                logger.debug("Settings loaded from: %s", self.settings_file)
                return True
            except (OSError, ValueError) as e:
                logger.warning("Failed to load settings: %s", e)
                self._settings = copy.deepcopy(self.DEFAULT_SETTINGS)
                return False
        else:
            self._settings = copy.deepcopy(self.DEFAULT_SETTINGS)
            logger.debug("Using default settings")
            return False

    def _merge_settings(self, default: dict, loaded: dict) -> dict:
        """기본값과 로드된 값 병합"""
        result = default.copy()
        for key, value in loaded.items():
            if key in result:
                if isinstance(value, dict) and isinstance(result[key], dict):
                    result[key] = self._merge_settings(result[key], value)
                else:
                    result[key] = value
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """설정값 가져오기 (점 표기법 지원: 'verify.prec')"""
        keys = key.split('.')
        value = self._settings
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def get_int(self, key: str) -> int:
        """정수 설정값 (없거나 정수가 아니면 ConfigurationError)"""
        value = self.get(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigurationError(f"Setting '{key}' must be an integer, got {value!r}")
        return value

    def get_parametric_triples(self) -> List[Tuple[Fraction, Fraction, Fraction]]:
        """유리수 매개변수 (a, b, c) 목록"""
        triples = []
        for raw in self.get("parametric.triples", []):
            try:
                a, b, c = (Fraction(str(x)) for x in raw)
            except (TypeError, ValueError, ZeroDivisionError) as e:
                raise ConfigurationError(f"Invalid parameter triple {raw!r}: {e}") from e
            triples.append((a, b, c))
        return triples


def resolve_prec(flag: Optional[int], key: str = "verify.prec",
                 settings: Optional[Settings] = None) -> int:
    """
    절단 차수 결정: --prec 플래그 > QCERT_PREC > 설정 파일 > 기본값

    Args:
        flag: 명령행에서 받은 값 (없으면 None)
        key: 설정 파일에서 찾을 키
        settings: 사용할 Settings (None이면 전역 인스턴스)

    Returns:
        음이 아닌 정수 prec
    """
    if flag is not None:
        if flag < 0:
            raise ConfigurationError(f"prec must be nonnegative, got {flag}")
        return flag
    raw = os.environ.get(PREC_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError as e:
            raise ConfigurationError(f"{PREC_ENV_VAR}={raw!r} is not an integer") from e
        if value < 0:
            raise ConfigurationError(f"{PREC_ENV_VAR} must be nonnegative, got {value}")
        return value
    settings = settings or get_settings()
    return settings.get_int(key)


# 전역 설정 인스턴스
_settings_instance: Optional[Settings] = None


def get_settings() -> Settings:
    """전역 설정 인스턴스 가져오기"""
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = Settings()
    return _settings_instance
