"""보고서 응답 DTO 스키마 (정확한 유리수는 항상 'num/den' 문자열)"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CliquesResponse(BaseModel):
    """클리크 열거 응답"""
    vertices: List[str]
    cliques: List[List[str]]
    count: int
    recursive_count: int
    max_clique_size: int
    counts_by_size: List[int]
    irreducible: bool


class KTheoryResponse(BaseModel):
    """K-이론 불변량 응답"""
    rank: int
    k1: int = 0
    basis: List[List[str]]
    unit_index: int
    q: Dict[str, str]
    pairing: List[str]
    trace_image: str


class CompareResponse(BaseModel):
    """그래프 불변량 비교 응답"""
    verdict: str
    reason: str
    ranks: List[int]
    trace_images: List[str]
    pairings: List[List[str]]


class ElliottInvariantResponse(BaseModel):
    """비순서 Elliott 불변량"""
    q: str
    regime: str
    k0_rank: int
    k1: int = 0
    unit: List[int]
    trace_simplex: str
    extremal_pairings: List[List[str]]


class ThicknessEntry(BaseModel):
    d: int
    q: str
    order: int


class ClassifyResponse(BaseModel):
    """분류 판정 응답"""
    n: int
    q1: str
    q2: str
    regime1: str
    regime2: str
    order1: Optional[int]
    order2: Optional[int]
    verdict: str
    invariants: List[Optional[ElliottInvariantResponse]] = Field(default_factory=list)
    thickness: Optional[List[ThicknessEntry]] = None


class GrowthResponse(BaseModel):
    """성장 수열 응답"""
    vertices: List[str]
    radius: int
    growth: List[int]
    total: int


class RelationResidualsResponse(BaseModel):
    radius: int
    exact: bool
    involution: float
    symmetry: float
    commutation: float
    unitarity: float
    tolerance: float
    passed: bool


class TraceErrorResponse(BaseModel):
    label: str
    computed: float
    target: str
    error: float


class EigenvectorResponse(BaseModel):
    radius: int
    residual: float
    passed: bool


class SeriesRowResponse(BaseModel):
    """급수 수렴표 한 줄"""
    radius: int
    partial_sum: float
    tail_bound: float
    closed_form: str
    within_bound: bool
    t_estimate: float
    t_target: str
    t_error: float
    phi_estimate: float
    phi_target: str
    phi_error: float
    passed: bool


class VerifyResponse(BaseModel):
    """수치 검증 보고서"""
    vertices: List[str]
    q: Dict[str, str]
    dimension: int
    relations: RelationResidualsResponse
    traces: List[TraceErrorResponse]
    complementary_traces: List[TraceErrorResponse]
    eigenvector: EigenvectorResponse
    series: List[SeriesRowResponse] = Field(default_factory=list)
    passed: bool


class CriterionResponse(BaseModel):
    """재현 기준 하나의 결과"""
    id: int
    name: str
    passed: bool
    detail: str


class ReproduceResponse(BaseModel):
    """재현 스위트 결과표"""
    criteria: List[CriterionResponse]
    passed: bool
