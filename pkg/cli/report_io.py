# -*- coding: utf-8 -*-
"""
보고서 출력 처리
검증 결과, 합동식 후보, 분해 성분을 text / json / csv 로 렌더링하고 저장
"""
from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from certify.results import CheckResult, CongruenceClaim, format_exact
from qseries import fps
from qseries.fps import Series

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["check", "prec", "status", "first_failure_exponent", "elapsed_ms"]


class ReportIO:
    """보고서 렌더링/저장 클래스"""

    SUPPORTED_FORMATS = ["text", "json", "csv"]

    def __init__(self, fmt: str = "text"):
        """
        Args:
            fmt: 출력 형식 (text, json, csv)
        """
        if fmt not in self.SUPPORTED_FORMATS:
            raise ValueError(f"Unsupported report format '{fmt}'")
        self.fmt = fmt

    # ------------------------------------------------------------------
    # 검증 결과
    # ------------------------------------------------------------------

    def render_results(self, results: Sequence[CheckResult]) -> str:
        if self.fmt == "json":
            return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
        if self.fmt == "csv":
            return self._results_csv(results)
        return self._results_text(results)

    @staticmethod
    def _results_text(results: Sequence[CheckResult]) -> str:
        width = max((len(r.name) for r in results), default=0)
        lines = []
        for r in results:
            lines.append(
                f"{r.status.value.upper():4}  {r.name:<{width}}  prec={r.prec}  {r.elapsed * 1000:.1f} ms"
            )
            if r.first_failure is not None:
                ff = r.first_failure
                lines.append(
                    f"      first failure at q^{ff.exponent}: "
                    f"lhs={format_exact(ff.lhs)} rhs={format_exact(ff.rhs)}"
                )
        passed = sum(1 for r in results if r.passed)
        lines.append(f"{passed}/{len(results)} checks passed")
        return "\n".join(lines) + "\n"

    @staticmethod
    def _results_csv(results: Sequence[CheckResult]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in results:
            row = r.to_dict()
            exponent = r.first_failure.exponent if r.first_failure else ""
            writer.writerow([row["check"], row["prec"], row["status"], exponent, row["elapsed_ms"]])
        return buffer.getvalue()

    # ------------------------------------------------------------------
    # 합동식 후보
    # ------------------------------------------------------------------

    def render_claims(self, claims: Sequence[CongruenceClaim]) -> str:
        if self.fmt == "json":
            return json.dumps([c.to_dict() for c in claims], indent=2) + "\n"
        if self.fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["series", "modulus_of_progression", "residue", "modulus",
                             "witnesses", "evidence", "degenerate"])
            for c in claims:
                writer.writerow([c.series_name, c.progression.modulus, c.progression.residue,
                                 c.modulus, c.witnesses, c.evidence.value, c.degenerate])
            return buffer.getvalue()
        lines = []
        for c in claims:
            flags = c.evidence.value + (", degenerate" if c.degenerate else "")
            lines.append(f"{c.label}  [{c.witnesses} witnesses, {flags}]")
        lines.append(f"{len(claims)} progressions found")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # 계수 / 분해
    # ------------------------------------------------------------------

    def render_coeff(self, name: str, n: int, value) -> str:
        if self.fmt == "json":
            return json.dumps({"series": name, "n": n, "coefficient": format_exact(value)}) + "\n"
        if self.fmt == "csv":
            return f"series,n,coefficient\n{name},{n},{format_exact(value)}\n"
        return format_exact(value) + "\n"

    def render_dissection(self, name: str, modulus: int, components: List[Series],
                          leading: int = 8) -> str:
        rows = [
            (j, comp.prec, [format_exact(c) for c in fps.leading(comp, leading)])
            for j, comp in enumerate(components)
        ]
        if self.fmt == "json":
            payload = {
                "series": name,
                "modulus": modulus,
                "components": [{"residue": j, "prec": p, "leading": lead} for j, p, lead in rows],
            }
            return json.dumps(payload, indent=2) + "\n"
        if self.fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["residue", "prec", "leading"])
            for j, p, lead in rows:
                writer.writerow([j, p, " ".join(lead)])
            return buffer.getvalue()
        lines = [f"{name} = sum_j q^j F_j(q^{modulus})"]
        for j, p, lead in rows:
            lines.append(f"F_{j} (prec {p}): " + (", ".join(lead) if lead else "(empty)"))
        return "\n".join(lines) + "\n"

    def render_table(self, header: Iterable[str], rows: Iterable[Sequence]) -> str:
        """list 명령용 단순 표"""
        rows = [list(map(str, row)) for row in rows]
        header = list(header)
        if self.fmt == "json":
            return json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n"
        if self.fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            return buffer.getvalue()
        widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------

    @staticmethod
    def save(text: str, output: Optional[str]) -> Optional[str]:
        """
        output 경로에 저장 (None 이면 저장하지 않음)

        Returns:
            저장된 파일 경로
        """
        if not output:
            return None
        path = Path(output)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Saved: %s", path)
        return str(path)
