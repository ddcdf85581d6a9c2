# -*- coding: utf-8 -*-
"""
q-급수 엔진
정확한 절단 멱급수 산술, 무한곱, 이름 붙은 급수, 등차수열 분해
"""
from .errors import (
    QSeriesError,
    ConstructionError,
    PrecisionError,
    NotAUnitError,
    NotDivisibleError,
    NonIntegralError,
    CatalogError,
    ConfigurationError,
)
from .fps import Series, SeriesBuffer
from .qprod import PochSpec
from .progression import Progression, dissect, restrict_R, coeffs_on, reassemble
from .special import CATALOG, DefinitionPath, NamedSeries, build
from .settings import Settings, get_settings, resolve_prec

__all__ = [
    'QSeriesError',
    'ConstructionError',
    'PrecisionError',
    'NotAUnitError',
    'NotDivisibleError',
    'NonIntegralError',
    'CatalogError',
    'ConfigurationError',
    'Series',
    'SeriesBuffer',
    'PochSpec',
    'Progression',
    'dissect',
    'restrict_R',
    'coeffs_on',
    'reassemble',
    'CATALOG',
    'DefinitionPath',
    'NamedSeries',
    'build',
    'Settings',
    'get_settings',
    'resolve_prec',
]
