"""정확한 K-이론 불변량: K_0 기저와 계수, 대각합 짝짓기, 대각합 상, 그래프 간 비교

K-이론은 변형 매개변수 q 와 무관하므로 (축약 사상이 KK-동치) 한 그래프에
대해 하나의 불변량만 계산하고, q 는 대각합 짝짓기에만 들어간다.
모든 산술은 Fraction 으로 정확하게 수행한다.
"""
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterable

from src.core.entities.graph import Graph
from src.core.entities.invariants import (
    ComparisonVerdict,
    DeformationParameter,
    GraphComparison,
    KTheoryInvariant,
    RationalSubgroup,
    TracePairing,
)
from src.core.usecases.graph_core import enumerate_cliques
from src.shared.logging import get_logger

logger = get_logger(__name__)


def generator_value(q_s: Fraction) -> Fraction:
    """φ_s(χ_1) = 1/(1+q_s)"""
    return 1 / (1 + Fraction(q_s))


def complementary_value(q_s: Fraction) -> Fraction:
    """φ_s(χ_{-1}) = q_s/(1+q_s)"""
    return Fraction(q_s) / (1 + Fraction(q_s))


def k_theory(graph: Graph) -> KTheoryInvariant:
    """K_0 = Z^{클리크}, 기저 [p_C], K_1 = 0"""
    graph.require_nonempty()
    invariant = KTheoryInvariant(k0_basis=tuple(enumerate_cliques(graph)))
    logger.debug("k_theory", vertices=len(graph), rank=invariant.k0_rank)
    return invariant


def trace_pairing(graph: Graph, q: DeformationParameter) -> TracePairing:
    """τ_*([p_C]) = ∏_{s∈C} 1/(1+q_s), 기저 순서대로"""
    q.covers(graph)
    basis = k_theory(graph).k0_basis
    values = tuple(
        prod((generator_value(q[s]) for s in clique), start=Fraction(1))
        for clique in basis
    )
    return TracePairing(basis=basis, values=values)


def subgroup_generated_by(values: Iterable[Fraction]) -> RationalSubgroup:
    """유리수들이 생성하는 Q 의 부분군: gcd(분자) / lcm(분모)"""
    values = [Fraction(v) for v in values if v != 0]
    if not values:
        return RationalSubgroup(Fraction(0))
    numerator = 0
    denominator = 1
    for v in values:
        numerator = gcd(numerator, v.numerator)
        denominator = lcm(denominator, v.denominator)
    return RationalSubgroup(Fraction(numerator, denominator))


def trace_image(pairing: TracePairing) -> RationalSubgroup:
    """τ_*(K_0) ⊂ Q"""
    return subgroup_generated_by(pairing.values)


def _compare_rank_two(x: Fraction, y: Fraction) -> ComparisonVerdict:
    """(Z², e_0, (1, x)) ≅ (Z², e_0, (1, y)) ⇔ x - y ∈ Z 또는 x + y ∈ Z"""
    if (x - y).denominator == 1 or (x + y).denominator == 1:
        return ComparisonVerdict.ISOMORPHIC
    return ComparisonVerdict.NOT_ISOMORPHIC


def compare_graph_invariants(
    g1: Graph,
    q1: DeformationParameter,
    g2: Graph,
    q2: DeformationParameter,
) -> GraphComparison:
    """(Z^C, [1], τ_*) 데이터 비교

    계수나 대각합 상이 다르면 동형이 아니고, 짝짓기 다중집합이 같으면
    (단위 1 은 공클리크에서만 나오므로 단위를 보존하는 기저 치환) 동형이다.
    계수 2 (꼭짓점 하나) 에서는 단위를 고정하는 GL_2(Z) 원소가 [[1, c], [0, ±1]]
    뿐이므로 x ≡ ±y (mod 1) 로 정확히 판정한다. 그 밖의 경우는 판정하지 않는다.
    """
    p1, p2 = trace_pairing(g1, q1), trace_pairing(g2, q2)
    ranks = (len(p1.values), len(p2.values))
    images = (trace_image(p1), trace_image(p2))
    multisets = (p1.sorted_values(), p2.sorted_values())

    if ranks[0] != ranks[1]:
        verdict, reason = ComparisonVerdict.NOT_ISOMORPHIC, "rank"
    elif images[0] != images[1]:
        verdict, reason = ComparisonVerdict.NOT_ISOMORPHIC, "trace_image"
    elif multisets[0] == multisets[1]:
        verdict, reason = ComparisonVerdict.ISOMORPHIC, "pairing_multiset"
    elif ranks[0] == 2:
        verdict, reason = _compare_rank_two(p1.values[1], p2.values[1]), "rank_two"
    else:
        verdict, reason = ComparisonVerdict.UNKNOWN, "undecided"

    logger.info("compare_graph_invariants", verdict=verdict.value, reason=reason, ranks=ranks)
    return GraphComparison(
        verdict=verdict,
        ranks=ranks,
        trace_images=images,
        pairings=multisets,
        reason=reason,
    )
