# -*- coding: utf-8 -*-
"""
명령행 모듈
"""
from .commands import main, build_parser, EXIT_OK, EXIT_FAILED, EXIT_USAGE
from .report_io import ReportIO

__all__ = [
    'main',
    'build_parser',
    'EXIT_OK',
    'EXIT_FAILED',
    'EXIT_USAGE',
    'ReportIO',
]
