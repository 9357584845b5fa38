"""명령 요청 DTO 스키마"""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.shared.rationals import parse_q_spec, parse_rational

Command = Literal["cliques", "ktheory", "compare", "classify", "growth", "verify", "reproduce"]

GRAPH_COMMANDS = {"cliques", "ktheory", "growth", "verify"}


class RunConfig(BaseModel):
    """명령 실행 설정"""
    command: Command
    graphs: List[str] = Field(default_factory=list)

    # 변형 매개변수: 'a/b' (균일) 또는 'a=1/3,b=1/2' (꼭짓점별)
    q: str = "1"
    q_second: Optional[str] = None

    # classify
    n: Optional[int] = None
    q1: Optional[str] = None
    q2: Optional[str] = None
    thickness: bool = False

    radius: int = Field(4, ge=0)
    tolerance: float = Field(1e-12, gt=0)
    exact: bool = False
    output: Literal["json", "text"] = "json"
    element_cap: Optional[int] = Field(None, gt=0)

    @field_validator("q", "q_second")
    @classmethod
    def validate_q_spec(cls, value: Optional[str]) -> Optional[str]:
        """q 가 (0, 1] 범위의 유리수인지 확인"""
        if value is not None:
            spec = parse_q_spec(value)
            values = spec.values() if isinstance(spec, dict) else [spec]
            for q in values:
                if not 0 < q <= 1:
                    raise ValueError(f"q = {q} 는 (0, 1] 범위 밖입니다")
        return value

    @field_validator("q1", "q2")
    @classmethod
    def validate_single_q(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            q = parse_rational(value)
            if not 0 < q <= 1:
                raise ValueError(f"q = {q} 는 (0, 1] 범위 밖입니다")
        return value

    @model_validator(mode="after")
    def validate_command_arguments(self) -> "RunConfig":
        """명령별 필수 인자 확인"""
        if self.command in GRAPH_COMMANDS and len(self.graphs) != 1:
            raise ValueError(f"{self.command} 명령에는 그래프 파일 하나가 필요합니다")
        if self.command == "compare" and len(self.graphs) != 2:
            raise ValueError("compare 명령에는 그래프 파일 두 개가 필요합니다")
        if self.command == "classify" and (self.n is None or self.q1 is None or self.q2 is None):
            raise ValueError("classify 명령에는 -n, --q1, --q2 가 필요합니다")
        return self
