"""
검증 결과 데이터 모델
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer

from models.shapes import SkewShape


class CountReport(BaseModel):
    """여러 방법으로 센 |LHT_{n,m}(λ/μ)|

    counts의 키는 방법 이름 (brute_force, determinant, hook_content, syt_formula, naruse),
    JSON에서 값은 십진 문자열입니다.
    """
    model_config = ConfigDict(frozen=True)

    shape: SkewShape
    n: int
    m: int
    counts: Dict[str, int]
    skipped: Dict[str, str] = Field(default_factory=dict)  # 방법 -> 건너뛴 이유

    @computed_field
    @property
    def agreement(self) -> bool:
        return len(set(self.counts.values())) <= 1

    @field_serializer("counts")
    def _counts_as_text(self, counts: Dict[str, int]) -> Dict[str, str]:
        return {method: str(value) for method, value in counts.items()}


class IdentityCheck(BaseModel):
    """항등식 검사 결과. 실패하면 witness에 처음 다른 단항식/값을 담음"""
    model_config = ConfigDict(frozen=True)

    ok: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


class ProbabilityCheck(BaseModel):
    """|SSCT_n(λ/μ)| / Π(n+c)  대  |SYT(λ/μ)| / |λ/μ|!"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lhs: Fraction
    rhs: Fraction

    @computed_field
    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @field_serializer("lhs", "rhs")
    def _fraction_as_text(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"


class CaseResult(BaseModel):
    """일괄 검증의 한 사례"""
    model_config = ConfigDict(frozen=True)

    identity: str
    params: Tuple[Tuple[str, str], ...]  # (이름, 값) 쌍, 출력 순서 유지
    ok: bool
    witness: Optional[str] = None

    def describe(self) -> str:
        params = " ".join(f"{name}={value}" for name, value in self.params)
        status = "OK" if self.ok else f"FAIL ({self.witness})"
        return f"{self.identity} {params} {status}"
