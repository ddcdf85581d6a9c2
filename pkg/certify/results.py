# -*- coding: utf-8 -*-
"""
검증 결과 데이터 클래스
CheckResult (항등식/합동식 한 건의 결과) 와 CongruenceClaim (합동식 주장)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from qseries.errors import ConstructionError
from qseries.fps import Exact, exact
from qseries.progression import Progression


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"


class Evidence(Enum):
    """합동식 주장의 근거 수준"""
    CERTIFIED = "certified"   # 정리/보조정리, 레지스트리가 정확한 정수로 검증
    EMPIRICAL = "empirical"   # 스캐너가 찾은 후보, 증명 없음


def format_exact(value: Exact) -> str:
    """정확한 10진 문자열 (유리수는 p/q)"""
    if isinstance(value, Fraction):
        return str(exact(value))
    return str(value)


def parse_exact(text: str) -> Exact:
    return exact(Fraction(text))


@dataclass(frozen=True)
class Mismatch:
    """첫 불일치 지점"""
    exponent: int
    lhs: Exact
    rhs: Exact

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "lhs": format_exact(self.lhs),
            "rhs": format_exact(self.rhs),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Mismatch":
        return cls(
            exponent=int(data["exponent"]),
            lhs=parse_exact(str(data["lhs"])),
            rhs=parse_exact(str(data["rhs"])),
        )


@dataclass(frozen=True)
class CheckResult:
    """이름 붙은 검증 한 건의 결과"""
    name: str
    prec: int
    status: CheckStatus
    first_failure: Optional[Mismatch] = None
    elapsed: float = 0.0  # 소요 시간 (초)
    description: str = field(default="", compare=False)

    def __post_init__(self):
        if (self.status is CheckStatus.PASS) != (self.first_failure is None):
            raise ConstructionError(
                f"Check '{self.name}': status {self.status.value} "
                f"inconsistent with first_failure={self.first_failure}"
            )

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def passing(cls, name: str, prec: int, description: str = "") -> "CheckResult":
        return cls(name, prec, CheckStatus.PASS, description=description)

    @classmethod
    def failing(cls, name: str, prec: int, exponent: int, lhs, rhs,
                description: str = "") -> "CheckResult":
        return cls(name, prec, CheckStatus.FAIL, Mismatch(exponent, lhs, rhs),
                   description=description)

    def to_dict(self) -> dict:
        """JSON 보고서 스키마"""
        return {
            "check": self.name,
            "prec": self.prec,
            "status": self.status.value,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        """딕셔너리에서 생성"""
        failure = data.get("first_failure")
        return cls(
            name=data["check"],
            prec=int(data["prec"]),
            status=CheckStatus(data["status"]),
            first_failure=Mismatch.from_dict(failure) if failure else None,
            elapsed=float(data.get("elapsed_ms", 0.0)) / 1000,
        )


@dataclass(frozen=True)
class CongruenceClaim:
    """
    '급수 series_name 의 progression 위 계수 ≡ 0 (mod modulus)'

    modulus 0 은 계수가 정확히 0 이라는 뜻 (x ≡ 0 mod 0 <=> x = 0).
    """
    progression: Progression
    modulus: int
    series_name: str
    evidence: Evidence = Evidence.CERTIFIED
    witnesses: int = 0
    degenerate: bool = False

    def __post_init__(self):
        if self.modulus != 0 and self.modulus < 2:
            raise ConstructionError(
                f"Congruence modulus must be 0 (exact) or >= 2, got {self.modulus}"
            )

    @property
    def is_exact_vanishing(self) -> bool:
        return self.modulus == 0

    def holds_for(self, value: int) -> bool:
        if self.modulus == 0:
            return value == 0
        return value % self.modulus == 0

    @property
    def label(self) -> str:
        """예: 'C(8n+4) = 0 mod 4', 'S(4n+1) = 0'"""
        base = f"{self.series_name}({self.progression})"
        return f"{base} = 0" if self.modulus == 0 else f"{base} = 0 mod {self.modulus}"

    def to_dict(self) -> dict:
        return {
            "series": self.series_name,
            "residue": self.progression.residue,
            "modulus_of_progression": self.progression.modulus,
            "modulus": self.modulus,
            "evidence": self.evidence.value,
            "witnesses": self.witnesses,
            "degenerate": self.degenerate,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CongruenceClaim":
        return cls(
            progression=Progression(int(data["residue"]), int(data["modulus_of_progression"])),
            modulus=int(data["modulus"]),
            series_name=data["series"],
            evidence=Evidence(data.get("evidence", Evidence.CERTIFIED.value)),
            witnesses=int(data.get("witnesses", 0)),
            degenerate=bool(data.get("degenerate", False)),
        )
