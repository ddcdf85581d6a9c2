# -*- coding: utf-8 -*-
"""
명령행 인터페이스
verify / coeff / dissect / scan / list 하위 명령

종료 코드: 0 = 모두 통과, 1 = 실패 또는 반례, 2 = 사용법/설정 오류
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from typing import Callable, Iterator, List, Optional

from tqdm import tqdm

from certify import registry
from qseries import special
from qseries.errors import (
    CatalogError,
    ConfigurationError,
    ConstructionError,
    NonIntegralError,
    PrecisionError,
)
from qseries.fps import coeff
from qseries.progression import dissect
from qseries.settings import PREC_ENV_VAR, get_settings, resolve_prec
from scan.conjectures import ConjectureScanner, scan_conjecture_openq
from scan.discover import DiscoveryScanner

from .report_io import ReportIO

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """명령행 사용법 오류 (종료 코드 2)"""


# ---------------------------------------------------------------------------
# 공통
# ---------------------------------------------------------------------------

@contextmanager
def _progress(enabled: bool, desc: str) -> Iterator[Optional[Callable[[int, int], None]]]:
    """tqdm 진행 표시줄 콜백 (비활성화면 None)"""
    if not enabled:
        yield None
        return
    bar = tqdm(desc=desc, file=sys.stderr, leave=False)

    def update(current: int, total: int) -> None:
        if bar.total != total:
            bar.reset(total=total)
        bar.n = current
        bar.refresh()

    try:
        yield update
    finally:
        bar.close()


def _show_progress(args) -> bool:
    return args.format == "text" and not args.output and sys.stderr.isatty()


def _emit(args, text: str) -> None:
    if args.output:
        ReportIO.save(text, args.output)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# 하위 명령
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    """레지스트리 검증 실행"""
    prec = resolve_prec(args.prec)
    names = None if args.all else args.check
    if names:
        for name in names:
            registry.get_entry(name)
    workers = args.workers or get_settings().get("verify.workers", 1)
    with _progress(_show_progress(args), "verify") as progress:
        results = registry.run_all(prec, workers=workers, names=names, progress=progress)
    _emit(args, ReportIO(args.format).render_results(results))
    return EXIT_OK if registry.all_passed(results) else EXIT_FAILED


def _coeff_prec(args) -> int:
    # --prec 도 환경 변수도 없으면 필요한 만큼만
    if args.prec is None and not os.environ.get(PREC_ENV_VAR):
        return args.n + 1
    return resolve_prec(args.prec)


def cmd_coeff(args) -> int:
    """계수 하나 출력"""
    if args.n < 0:
        raise UsageError(f"--n must be nonnegative, got {args.n}")
    prec = _coeff_prec(args)
    if args.n >= prec:
        raise PrecisionError(f"Index {args.n} is beyond truncation order {prec}")
    named = special.build(args.series, prec, args.k)
    _emit(args, ReportIO(args.format).render_coeff(args.series, args.n, coeff(named.series, args.n)))
    return EXIT_OK


def cmd_dissect(args) -> int:
    """m-분해 성분 출력"""
    if args.mod < 1:
        raise UsageError(f"--mod must be >= 1, got {args.mod}")
    prec = resolve_prec(args.prec)
    named = special.build(args.series, prec, args.k)
    components = dissect(named.series, args.mod)
    _emit(args, ReportIO(args.format).render_dissection(args.series, args.mod, components, args.leading))
    return EXIT_OK


def cmd_scan(args) -> int:
    """추측 검사 / 등차수열 탐색"""
    settings = get_settings()
    report = ReportIO(args.format)
    if args.target == "openq":
        prec = resolve_prec(args.prec, key="scan.openq_prec")
        results = scan_conjecture_openq(prec)
    elif args.target == "family":
        prec = resolve_prec(args.prec, key="scan.family_prec")
        k_max = args.kmax if args.kmax is not None else settings.get_int("scan.k_max")
        with _progress(_show_progress(args), "family") as progress:
            scanner = ConjectureScanner(k_max, progress)
            results = scanner.scan(special.series_C_sum(prec))
    else:
        if not args.series:
            raise UsageError("scan --target discover requires --series")
        prec = resolve_prec(args.prec)
        moduli = args.moduli if args.moduli else settings.get("scan.moduli", [0, 2, 4, 8])
        m_max = args.mmax if args.mmax is not None else settings.get_int("scan.m_max")
        min_witnesses = settings.get_int("scan.min_witnesses")
        named = special.build(args.series, prec, args.k)
        with _progress(_show_progress(args), "discover") as progress:
            scanner = DiscoveryScanner(moduli, m_max, min_witnesses, progress)
            claims = scanner.scan(named.series, args.series)
        _emit(args, report.render_claims(claims))
        return EXIT_OK
    _emit(args, report.render_results(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def cmd_list(args) -> int:
    """레지스트리와 급수 카탈로그 출력"""
    report = ReportIO(args.format)
    checks = report.render_table(
        ["check", "single_path", "description"],
        [(e.name, "yes" if e.single_path else "no", e.description) for e in registry.CHECKS.values()],
    )
    catalog = report.render_table(
        ["series", "path", "source"],
        [(e.name, e.definition_path.value, e.source) for _, e in sorted(special.CATALOG.items())],
    )
    if args.format == "text":
        text = checks + "\n" + catalog
    else:
        text = checks if args.what == "checks" else catalog
    _emit(args, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# 파서
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, formats=("text", "json", "csv")) -> None:
    p.add_argument("--prec", type=int, default=None,
                   help=f"Truncation order (default: ${PREC_ENV_VAR} or settings.json).")
    p.add_argument("--format", choices=list(formats), default=None,
                   help="Report format (default: report.format in settings.json).")
    p.add_argument("--output", type=str, default=None, help="Write the report to this file.")
    p.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcert",
        description="Exact q-series certification: identities, congruences, conjecture scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="Run registry checks.")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="Run every registered check.")
    group.add_argument("--check", action="append", metavar="NAME", help="Run one check (repeatable).")
    p.add_argument("--workers", type=int, default=None, help="Worker processes (default: verify.workers).")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coeff", help="Print one exact coefficient.")
    p.add_argument("--series", required=True, metavar="NAME")
    p.add_argument("--n", type=int, required=True, metavar="INDEX")
    p.add_argument("--k", type=int, default=None, help="Parameter for C_k.")
    _add_common(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("dissect", help="Print the m-dissection components of a series.")
    p.add_argument("--series", required=True, metavar="NAME")
    p.add_argument("--mod", type=int, required=True, metavar="M")
    p.add_argument("--k", type=int, default=None, help="Parameter for C_k.")
    p.add_argument("--leading", type=int, default=8, help="Coefficients shown per component.")
    _add_common(p)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("scan", help="Scan conjectured congruences or discover new ones.")
    p.add_argument("--target", choices=["openq", "family", "discover"], required=True)
    p.add_argument("--kmax", type=int, default=None, help="Largest k for --target family.")
    p.add_argument("--series", default=None, metavar="NAME", help="Series for --target discover.")
    p.add_argument("--k", type=int, default=None, help="Parameter for C_k.")
    p.add_argument("--mmax", type=int, default=None, help="Largest progression modulus for discover.")
    p.add_argument("--moduli", type=int, nargs="+", default=None,
                   help="Tested congruence moduli for discover (0 = exact vanishing).")
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("list", help="List registry checks and catalog series.")
    p.add_argument("--what", choices=["checks", "series"], default="checks",
                   help="Table to print for json/csv output.")
    _add_common(p)
    p.set_defaults(func=cmd_list)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    명령행 진입점

    Returns:
        종료 코드 (0, 1, 2)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.format is None:
        args.format = get_settings().get("report.format", "text")
        if args.format not in ReportIO.SUPPORTED_FORMATS:
            args.format = "text"
    try:
        return args.func(args)
    except (CatalogError, ConfigurationError, PrecisionError, ConstructionError,
            NonIntegralError, UsageError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"qcert {args.command}: error: {message}", file=sys.stderr)
        return EXIT_USAGE
