"""도메인 엔티티 -> 응답 스키마 매핑"""
from typing import List, Optional, Sequence

from src.core.entities.elliott import Classification, UnorderedElliottInvariant
from src.core.entities.graph import Clique, Graph
from src.core.entities.invariants import (
    DeformationParameter,
    GraphComparison,
    KTheoryInvariant,
    RationalSubgroup,
    TracePairing,
)
from src.core.entities.operator import (
    EigenvectorReport,
    FreeProductTraceReport,
    RelationReport,
    TraceReport,
)
from src.presentation.schemas.reports import (
    ClassifyResponse,
    CliquesResponse,
    CompareResponse,
    EigenvectorResponse,
    ElliottInvariantResponse,
    GrowthResponse,
    KTheoryResponse,
    RelationResidualsResponse,
    SeriesRowResponse,
    ThicknessEntry,
    TraceErrorResponse,
)
from src.shared.rationals import format_rational, format_rationals


def map_q(q: DeformationParameter) -> dict:
    return {label: format_rational(value) for label, value in q.values}


def map_subgroup(subgroup: RationalSubgroup) -> str:
    """부분군 d·Z 를 생성원 'num/den' 으로"""
    return format_rational(subgroup.generator)


def map_cliques(
    graph: Graph,
    cliques: Sequence[Clique],
    recursive_count: int,
    max_size: int,
    counts_by_size: List[int],
    irreducible: bool,
) -> CliquesResponse:
    return CliquesResponse(
        vertices=list(graph.vertices),
        cliques=[list(c.vertices) for c in cliques],
        count=len(cliques),
        recursive_count=recursive_count,
        max_clique_size=max_size,
        counts_by_size=counts_by_size,
        irreducible=irreducible,
    )


def map_ktheory(
    invariant: KTheoryInvariant,
    pairing: TracePairing,
    image: RationalSubgroup,
    q: DeformationParameter,
) -> KTheoryResponse:
    return KTheoryResponse(
        rank=invariant.k0_rank,
        k1=invariant.k1_rank,
        basis=[list(c.vertices) for c in invariant.k0_basis],
        unit_index=invariant.unit_index,
        q=map_q(q),
        pairing=format_rationals(pairing.values),
        trace_image=map_subgroup(image),
    )


def map_comparison(comparison: GraphComparison) -> CompareResponse:
    return CompareResponse(
        verdict=comparison.verdict.value,
        reason=comparison.reason,
        ranks=list(comparison.ranks),
        trace_images=[map_subgroup(s) for s in comparison.trace_images],
        pairings=[format_rationals(p) for p in comparison.pairings],
    )


def map_elliott(invariant: UnorderedElliottInvariant) -> ElliottInvariantResponse:
    return ElliottInvariantResponse(
        q=format_rational(invariant.q),
        regime=invariant.regime.value,
        k0_rank=invariant.k0_rank,
        k1=invariant.k1_rank,
        unit=list(invariant.unit),
        trace_simplex=invariant.trace_simplex.value,
        extremal_pairings=[format_rationals(p) for p in invariant.extremal_pairings],
    )


def map_classification(
    classification: Classification,
    invariants: Sequence[Optional[UnorderedElliottInvariant]] = (),
    thickness: Optional[Sequence[tuple]] = None,
) -> ClassifyResponse:
    return ClassifyResponse(
        n=classification.n,
        q1=format_rational(classification.q1),
        q2=format_rational(classification.q2),
        regime1=classification.regime1.value,
        regime2=classification.regime2.value,
        order1=classification.order1,
        order2=classification.order2,
        verdict=classification.verdict.value,
        invariants=[map_elliott(i) if i is not None else None for i in invariants],
        thickness=None if thickness is None else [
            ThicknessEntry(d=d, q=f"1/{d}", order=order) for d, order in thickness
        ],
    )


def map_growth(graph: Graph, radius: int, growth: List[int]) -> GrowthResponse:
    return GrowthResponse(vertices=list(graph.vertices), radius=radius, growth=growth, total=sum(growth))


def map_relations(report: RelationReport) -> RelationResidualsResponse:
    return RelationResidualsResponse(
        radius=report.radius,
        exact=report.exact,
        involution=report.involution,
        symmetry=report.symmetry,
        commutation=report.commutation,
        unitarity=report.unitarity,
        tolerance=report.tolerance,
        passed=report.passed,
    )


def map_trace(report: TraceReport) -> TraceErrorResponse:
    return TraceErrorResponse(
        label=report.label,
        computed=report.computed,
        target=format_rational(report.target),
        error=report.error,
    )


def map_eigenvector(report: EigenvectorReport) -> EigenvectorResponse:
    return EigenvectorResponse(radius=report.radius, residual=report.residual, passed=report.passed)


def map_series(report: FreeProductTraceReport) -> SeriesRowResponse:
    series = report.series
    return SeriesRowResponse(
        radius=series.radius,
        partial_sum=float(series.partial_sum),
        tail_bound=float(series.tail_bound),
        closed_form=format_rational(series.closed_form),
        within_bound=series.within_bound,
        t_estimate=report.t_estimate,
        t_target=format_rational(report.t_target),
        t_error=report.t_error,
        phi_estimate=report.phi_estimate,
        phi_target=format_rational(report.phi_target),
        phi_error=report.phi_error,
        passed=report.passed,
    )
