"""불변량 계산 서비스 파사드"""
from fractions import Fraction
from typing import List, Optional

from src.core.entities.elliott import Regime
from src.core.entities.graph import Graph
from src.core.entities.invariants import DeformationParameter
from src.core.ports.graph_source_port import GraphSourcePort
from src.core.usecases import elliott_classify, graph_core, hecke_oracle, k_invariants
from src.core.usecases.coxeter_words import growth_sequence
from src.presentation.mappers.reports import (
    map_classification,
    map_cliques,
    map_comparison,
    map_eigenvector,
    map_growth,
    map_ktheory,
    map_q,
    map_relations,
    map_series,
    map_trace,
)
from src.presentation.schemas.reports import (
    ClassifyResponse,
    CliquesResponse,
    CompareResponse,
    GrowthResponse,
    KTheoryResponse,
    VerifyResponse,
)
from src.shared.config import Settings
from src.shared.logging import LoggerMixin
from src.shared.rationals import QSpec, parse_q_spec, parse_rational
from src.shared.result import Result, try_catch


def deformation_for(graph: Graph, spec: QSpec) -> DeformationParameter:
    """q 지정 (균일 또는 꼭짓점별) 을 그래프에 맞춘 매개변수로"""
    if isinstance(spec, dict):
        return DeformationParameter.from_mapping(graph, spec)
    return DeformationParameter.uniform(graph, spec)


class InvariantService(LoggerMixin):
    """cliques / ktheory / compare / classify / growth / verify 명령 파사드"""

    def __init__(self, graph_source: GraphSourcePort, settings: Settings):
        self.graph_source = graph_source
        self.settings = settings

    def _run(self, command: str, fn) -> Result:
        result = try_catch(fn)
        if result.is_failure():
            error = result.get_error()
            self.logger.warning(
                "command_failed",
                command=command,
                error=type(error).__name__,
                message=error.message,
                **error.details,
            )
        return result

    def cliques(self, path: str) -> "Result[CliquesResponse]":
        """클리크 열거, 재귀 개수, 최대 크기, 크기별 개수"""
        def compute() -> CliquesResponse:
            graph = self.graph_source.load(path)
            return map_cliques(
                graph,
                graph_core.enumerate_cliques(graph),
                graph_core.clique_count_recursive(graph),
                graph_core.max_clique_size(graph),
                graph_core.clique_counts_by_size(graph),
                graph_core.is_irreducible(graph) if not graph.is_empty() else False,
            )
        return self._run("cliques", compute)

    def ktheory(self, path: str, q: str) -> "Result[KTheoryResponse]":
        """K_0 기저, 대각합 짝짓기, 대각합 상"""
        def compute() -> KTheoryResponse:
            graph = self.graph_source.load(path)
            parameter = deformation_for(graph, parse_q_spec(q))
            invariant = k_invariants.k_theory(graph)
            pairing = k_invariants.trace_pairing(graph, parameter)
            return map_ktheory(invariant, pairing, k_invariants.trace_image(pairing), parameter)
        return self._run("ktheory", compute)

    def compare(self, first: str, second: str, q: str, q_second: Optional[str] = None) -> "Result[CompareResponse]":
        """두 그래프의 K-이론 데이터 비교"""
        def compute() -> CompareResponse:
            g1, g2 = self.graph_source.load(first), self.graph_source.load(second)
            q1 = deformation_for(g1, parse_q_spec(q))
            q2 = deformation_for(g2, parse_q_spec(q_second or q))
            return map_comparison(k_invariants.compare_graph_invariants(g1, q1, g2, q2))
        return self._run("compare", compute)

    def classify(self, n: int, q1: str, q2: str, thickness: bool = False) -> "Result[ClassifyResponse]":
        """Z/2Z^{*n} 의 두 매개변수 분류 판정"""
        def compute() -> ClassifyResponse:
            first, second = parse_rational(q1), parse_rational(q2)
            classification = elliott_classify.classify_pair(n, first, second)
            invariants = [
                elliott_classify.free_product_invariant(n, q)
                if elliott_classify.regime(n, q) is not Regime.BOUNDARY else None
                for q in (first, second)
            ]
            scan = elliott_classify.recognised_thickness(n) if thickness else None
            return map_classification(classification, invariants, scan)
        return self._run("classify", compute)

    def growth(self, path: str, radius: int) -> "Result[GrowthResponse]":
        """[s_0, ..., s_L]"""
        def compute() -> GrowthResponse:
            graph = self.graph_source.load(path)
            return map_growth(graph, radius, growth_sequence(graph, radius, self.settings.element_cap))
        return self._run("growth", compute)

    def _series_radii(self) -> List[int]:
        top = self.settings.series_radius
        return sorted({r for r in (5, 10, 20, top) if r <= top})

    def verify(
        self,
        path: str,
        q: str,
        radius: Optional[int] = None,
        tolerance: Optional[float] = None,
        exact: bool = False,
    ) -> "Result[VerifyResponse]":
        """절단 λ_q 의 관계 잔차, 클리크 사영 대각합, η 고정 잔차, 자유곱 급수"""
        def compute() -> VerifyResponse:
            graph = self.graph_source.load(path)
            graph.require_nonempty()
            parameter = deformation_for(graph, parse_q_spec(q))
            L = self.settings.default_radius if radius is None else radius
            tol = tolerance or self.settings.residual_tolerance

            basis = hecke_oracle.build_basis(graph, L, self.settings.element_cap)
            relations = hecke_oracle.check_relations(graph, parameter, L, tol, exact)
            traces = hecke_oracle.clique_trace_reports(graph, parameter, L, exact)
            complementary = hecke_oracle.complementary_trace_reports(graph, parameter, L)
            eigenvector = hecke_oracle.eta_fixed_residual(graph, parameter, L, tol)

            series = []
            n = len(graph)
            if not graph.edges and n >= 3 and parameter.is_uniform():
                value: Fraction = parameter[graph.vertices[0]]
                if elliott_classify.regime(n, value) is Regime.NON_SIMPLE:
                    series = [
                        hecke_oracle.free_product_trace_checks(n, value, r)
                        for r in self._series_radii()
                    ]

            passed = (
                relations.passed
                and all(t.error < tol for t in traces + complementary)
                and eigenvector.passed
                and all(s.passed for s in series)
            )
            self.logger.info("verify_completed", dimension=basis.dimension, radius=L, passed=passed)
            return VerifyResponse(
                vertices=list(graph.vertices),
                q=map_q(parameter),
                dimension=basis.dimension,
                relations=map_relations(relations),
                traces=[map_trace(t) for t in traces],
                complementary_traces=[map_trace(t) for t in complementary],
                eigenvector=map_eigenvector(eigenvector),
                series=[map_series(s) for s in series],
                passed=passed,
            )
        return self._run("verify", compute)
