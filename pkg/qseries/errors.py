# -*- coding: utf-8 -*-
"""
q-series 엔진 예외 정의
각 예외는 대응하는 built-in 예외(ValueError, KeyError 등)도 함께 상속한다
"""


class QSeriesError(Exception):
    """모든 엔진 예외의 기본 클래스"""


class ConstructionError(QSeriesError, ValueError):
    """잘못된 인자로 객체를 만들려 할 때"""


class PrecisionError(QSeriesError, IndexError):
    """절단 차수(prec) 밖의 계수를 요청할 때"""


class NotAUnitError(QSeriesError, ZeroDivisionError):
    """상수항이 0인 급수의 역원 요청"""


class NotDivisibleError(QSeriesError, ValueError):
    """q^k 로 나누어 떨어지지 않는 급수의 음수 shift"""


class NonIntegralError(QSeriesError, ValueError):
    """정수 계수가 필요한 연산에 유리수 계수가 들어온 경우"""


class CatalogError(QSeriesError, KeyError):
    """카탈로그/레지스트리에 없는 이름"""


class ConfigurationError(QSeriesError, ValueError):
    """설정값 또는 환경 변수 오류"""
