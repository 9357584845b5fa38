"""자유곱 Z/2Z^{*n} 의 Elliott 불변량 도메인 엔티티"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple


class Regime(Enum):
    """q 와 1/(n-1) 의 비교로 정해지는 영역"""
    SIMPLE = "Simple"          # 단순, 유일한 대각합
    BOUNDARY = "Boundary"      # 지표의 핵이 단순
    NON_SIMPLE = "NonSimple"   # C ⊕ 단순, 극단 대각합 두 개


class TraceSimplex(Enum):
    """대각합 단체 T(A)"""
    POINT = "Point"
    INTERVAL = "Interval"


class ClassificationVerdict(Enum):
    """분류 판정 (InvariantIsomorphic 은 대수 동형을 주장하지 않음)"""
    REGIME_MISMATCH = "NotIsomorphic_RegimeMismatch"
    INVARIANT_MISMATCH = "NotIsomorphic_InvariantMismatch"
    INVARIANT_ISOMORPHIC = "InvariantIsomorphic_AlgebraOpen"


@dataclass(frozen=True)
class UnorderedElliottInvariant:
    """(K_0, K_1, [1], T(A), ρ_A), 순서 구조 제외"""
    n: int
    q: Fraction
    regime: Regime
    trace_simplex: TraceSimplex
    extremal_pairings: Tuple[Tuple[Fraction, ...], ...]
    k1_rank: int = 0

    @property
    def k0_rank(self) -> int:
        return self.n + 1

    @property
    def unit(self) -> Tuple[int, ...]:
        return (1,) + (0,) * self.n

    def same_invariant(self, other: "UnorderedElliottInvariant") -> bool:
        """q 를 제외한 불변량 자료가 같은지"""
        return (
            self.n == other.n
            and self.trace_simplex == other.trace_simplex
            and self.extremal_pairings == other.extremal_pairings
        )


@dataclass(frozen=True)
class FreeProductTraceData:
    """NonSimple 영역의 보조 양: t = τ(p), ‖η‖², φ(p_i)"""
    n: int
    q: Fraction
    t: Fraction
    eta_norm_sq: Fraction
    phi_value: Fraction


@dataclass(frozen=True)
class Classification:
    """classify_pair 결과와 근거"""
    n: int
    q1: Fraction
    q2: Fraction
    regime1: Regime
    regime2: Regime
    order1: Optional[int]
    order2: Optional[int]
    verdict: ClassificationVerdict


@dataclass(frozen=True)
class AffineWitness:
    """x·1 = C + B·(y·1), B ∈ GL_n(Z)"""
    matrix: Tuple[Tuple[int, ...], ...]
    offset: Tuple[int, ...]
