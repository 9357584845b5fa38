"""K-이론 불변량 도메인 엔티티"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from src.core.entities.graph import Clique, Graph
from src.core.exceptions import DomainError

RationalLike = Union[Fraction, int, str]


def _check_range(label: str, value: Fraction) -> Fraction:
    if not 0 < value <= 1:
        raise DomainError(
            f"q_{label} = {value} 는 (0, 1] 범위 밖입니다",
            details={"vertex": label, "value": str(value)},
        )
    return value


@dataclass(frozen=True)
class DeformationParameter:
    """꼭짓점별 정확한 유리수 변형 매개변수 q_s ∈ (0, 1]"""
    values: Tuple[Tuple[str, Fraction], ...]

    def __post_init__(self):
        for label, value in self.values:
            _check_range(label, value)

    @classmethod
    def uniform(cls, graph: Graph, q: RationalLike) -> "DeformationParameter":
        """모든 생성원에 같은 q"""
        value = Fraction(q)
        return cls(tuple((v, value) for v in graph.vertices))

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[str, RationalLike]) -> "DeformationParameter":
        """꼭짓점 이름 -> q 매핑 (모든 꼭짓점이 정의되어야 함)"""
        for label in mapping:
            graph.index(label)
        missing = [v for v in graph.vertices if v not in mapping]
        if missing:
            raise DomainError(
                f"q 가 정의되지 않은 꼭짓점: {', '.join(missing)}",
                details={"missing": missing},
            )
        return cls(tuple((v, Fraction(mapping[v])) for v in graph.vertices))

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(self.values)

    def __getitem__(self, label: str) -> Fraction:
        for name, value in self.values:
            if name == label:
                return value
        raise DomainError(f"q 가 정의되지 않은 꼭짓점: {label}", details={"vertex": label})

    def covers(self, graph: Graph) -> "DeformationParameter":
        """그래프의 모든 꼭짓점에 정의되어 있는지 확인"""
        defined = {name for name, _ in self.values}
        missing = [v for v in graph.vertices if v not in defined]
        if missing:
            raise DomainError(
                f"q 가 정의되지 않은 꼭짓점: {', '.join(missing)}",
                details={"missing": missing},
            )
        return self

    def is_uniform(self) -> bool:
        return len({value for _, value in self.values}) <= 1


@dataclass(frozen=True)
class KTheoryInvariant:
    """K_0 기저(클리크 사영 [p_C]), 계수, K_1 = 0"""
    k0_basis: Tuple[Clique, ...]
    k1_rank: int = 0

    @property
    def k0_rank(self) -> int:
        return len(self.k0_basis)

    @property
    def unit_index(self) -> int:
        """[p_∅] = [1] 의 위치"""
        return self.k0_basis.index(Clique())


@dataclass(frozen=True)
class TracePairing:
    """자연 대각합과 K_0 의 짝짓기 τ_*([p_C]) = ∏ 1/(1+q_s)"""
    basis: Tuple[Clique, ...]
    values: Tuple[Fraction, ...]

    def value_for(self, clique: Clique) -> Fraction:
        return self.values[self.basis.index(clique)]

    def sorted_values(self) -> Tuple[Fraction, ...]:
        """기저 순서와 무관한 다중집합 (내림차순)"""
        return tuple(sorted(self.values, reverse=True))


@dataclass(frozen=True)
class RationalSubgroup:
    """Q 의 순환 부분군 d·Z (d = 0 이면 자명군)"""
    generator: Fraction

    def __post_init__(self):
        object.__setattr__(self, "generator", abs(Fraction(self.generator)))

    def __contains__(self, x: RationalLike) -> bool:
        x = Fraction(x)
        if self.generator == 0:
            return x == 0
        return (x / self.generator).denominator == 1

    def label(self) -> str:
        if self.generator == 0:
            return "0"
        if self.generator.numerator == 1:
            return f"(1/{self.generator.denominator})Z"
        return f"({self.generator})Z"


class ComparisonVerdict(Enum):
    """그래프 불변량 비교 판정"""
    ISOMORPHIC = "Isomorphic"
    NOT_ISOMORPHIC = "NotIsomorphic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GraphComparison:
    """판정과 판정 근거"""
    verdict: ComparisonVerdict
    ranks: Tuple[int, int]
    trace_images: Tuple[RationalSubgroup, RationalSubgroup]
    pairings: Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]
    reason: str
