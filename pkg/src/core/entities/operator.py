"""절단 연산자와 수치 검증 보고 엔티티"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np
from scipy import sparse

from src.core.entities.graph import Graph
from src.core.entities.word import Word

Matrix = sparse.spmatrix


@dataclass(frozen=True)
class BallBasis:
    """ℓ²(W) 의 절단 기저: 길이 ≤ L 인 원소들 (공 열거 순서)"""
    graph: Graph
    radius: int
    words: Tuple[Word, ...]
    index: Dict[Word, int] = field(compare=False, hash=False)
    lengths: np.ndarray = field(compare=False, hash=False)
    action: Dict[str, Tuple[np.ndarray, np.ndarray]] = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    @property
    def dimension(self) -> int:
        return len(self.words)

    def interior(self, depth: int = 1) -> np.ndarray:
        """길이 ≤ L - depth 인 기저 번호 (depth 개 생성원을 곱해도 공 안에 남음)"""
        return np.flatnonzero(self.lengths <= self.radius - depth)


@dataclass(frozen=True)
class TruncatedOperator:
    """공 기저 위의 희소 행렬, 표현하는 연산자는 matrix / scale

    실수 모드는 float 행렬에 scale = 1, 정확 모드는 정수 행렬과 정수 scale.
    """
    matrix: Matrix
    basis: BallBasis
    exact: bool = False
    scale: int = 1

    @property
    def radius(self) -> int:
        return self.basis.radius

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    @property
    def interior_mask(self) -> np.ndarray:
        return self.basis.interior(1)


@dataclass(frozen=True)
class RelationReport:
    """생성원 관계 잔차 (내부 열에서만 측정)"""
    radius: int
    exact: bool
    involution: float
    symmetry: float
    commutation: float
    unitarity: float
    tolerance: float

    @property
    def passed(self) -> bool:
        residuals = (self.involution, self.symmetry, self.commutation, self.unitarity)
        if self.exact:
            return all(r == 0 for r in residuals)
        return all(r < self.tolerance for r in residuals)


@dataclass(frozen=True)
class TraceReport:
    """τ(x) = <x δ_e, δ_e> 와 닫힌 형태 값의 비교"""
    label: str
    computed: float
    target: Fraction
    radius: int

    @property
    def error(self) -> float:
        return abs(self.computed - float(self.target))


@dataclass(frozen=True)
class EtaSeries:
    """‖η‖² = Σ s_k q^k 의 부분합과 기하급수 꼬리 한계"""
    n: int
    q: Fraction
    radius: int
    partial_sum: Fraction
    tail_bound: Fraction
    closed_form: Fraction

    @property
    def within_bound(self) -> bool:
        return 0 <= self.closed_form - self.partial_sum <= self.tail_bound


@dataclass(frozen=True)
class FreeProductTraceReport:
    """t̂ = 1/부분합, φ̂(p_i) 와 닫힌 형태 비교"""
    series: EtaSeries
    t_estimate: float
    t_target: Fraction
    t_tolerance: float
    phi_estimate: float
    phi_target: Fraction
    phi_tolerance: float

    @property
    def t_error(self) -> float:
        return abs(self.t_estimate - float(self.t_target))

    @property
    def phi_error(self) -> float:
        return abs(self.phi_estimate - float(self.phi_target))

    @property
    def passed(self) -> bool:
        return (
            self.series.within_bound
            and self.t_error <= self.t_tolerance
            and self.phi_error <= self.phi_tolerance
        )


@dataclass(frozen=True)
class EigenvectorReport:
    """λ_q(s)η = η 의 내부 좌표 잔차"""
    radius: int
    residual: float
    tolerance: float
    worst_generator: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance
