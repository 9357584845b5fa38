"""재현 스위트: 닫힌 형태 결과와 계산 결과의 교차 검증 기준표"""
import random
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Tuple

from src.core.entities.elliott import ClassificationVerdict, Regime
from src.core.entities.graph import Graph
from src.core.entities.invariants import ComparisonVerdict, DeformationParameter
from src.core.exceptions import HeckeError
from src.core.usecases import corpus, elliott_classify, graph_core, hecke_oracle, k_invariants, oracles
from src.core.usecases.coxeter_words import ball, free_product_growth, growth_sequence, mult_gen, normal_form
from src.presentation.schemas.reports import CriterionResponse, ReproduceResponse
from src.shared.config import Settings
from src.shared.logging import LoggerMixin

Check = Tuple[bool, str]


class CriterionFailed(Exception):
    """기준 내부의 개별 검사 실패"""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CriterionFailed(message)


class ReproduceService(LoggerMixin):
    """기준 1-8 실행"""

    def __init__(self, settings: Settings):
        self.settings = settings

    # 그래프 모음

    def _named(self) -> Dict[str, Graph]:
        return corpus.named_corpus()

    def _full_corpus(self) -> List[Graph]:
        randoms = corpus.random_graphs(self.settings.random_graph_count, self.settings.random_seed)
        return list(self._named().values()) + randoms

    def _small_corpus(self, max_vertices: int = 4) -> List[Graph]:
        return [g for g in self._full_corpus() if len(g) <= max_vertices]

    # 기준

    def rank_agreement(self) -> Check:
        """재귀 클리크 수 = 전수 부분집합 수 = K_0 계수"""
        graphs = self._full_corpus()
        for graph in graphs:
            recursive = graph_core.clique_count_recursive(graph)
            _expect(recursive == oracles.brute_force_clique_count(graph), f"brute force mismatch on {graph.vertices}")
            _expect(recursive == k_invariants.k_theory(graph).k0_rank, f"rank mismatch on {graph.vertices}")
        named = self._named()
        for n in range(1, 7):
            _expect(k_invariants.k_theory(named[f"edgeless{n}"]).k0_rank == n + 1, f"edgeless{n}")
        for k in range(1, 6):
            _expect(k_invariants.k_theory(named[f"complete{k}"]).k0_rank == 2 ** k, f"complete{k}")
        for name in ("path3_plus_isolated", "two_disjoint_edges"):
            _expect(k_invariants.k_theory(named[name]).k0_rank == 7, name)
        return True, f"{len(graphs)} graphs"

    def trace_pairing(self) -> Check:
        """q = 1 예제 짝짓기 다중집합, 비교 판정, 대각합 상 (1/2^c)Z"""
        expected = tuple(sorted(
            [Fraction(1)] + [Fraction(1, 2)] * 4 + [Fraction(1, 4)] * 2, reverse=True
        ))
        g1, g2 = corpus.path_plus_isolated(), corpus.two_disjoint_edges()
        q1, q2 = DeformationParameter.uniform(g1, 1), DeformationParameter.uniform(g2, 1)
        for graph, q in ((g1, q1), (g2, q2)):
            _expect(k_invariants.trace_pairing(graph, q).sorted_values() == expected, "pairing multiset")
        verdict = k_invariants.compare_graph_invariants(g1, q1, g2, q2).verdict
        _expect(verdict is ComparisonVerdict.ISOMORPHIC, f"compare verdict {verdict.value}")

        graphs = self._full_corpus()
        for graph in graphs:
            pairing = k_invariants.trace_pairing(graph, DeformationParameter.uniform(graph, 1))
            c = graph_core.max_clique_size(graph)
            image = k_invariants.trace_image(pairing)
            _expect(image.generator == Fraction(1, 2 ** c), f"trace image on {graph.vertices}")
            _expect(all(value in image for value in pairing.values), f"pairing outside image on {graph.vertices}")
        return True, f"{len(graphs)} trace images"

    def _parameters(self, graph: Graph) -> List[DeformationParameter]:
        mixed = {v: Fraction(1, 3) if i % 2 == 0 else Fraction(1, 2) for i, v in enumerate(graph.vertices)}
        return [
            DeformationParameter.uniform(graph, 1),
            DeformationParameter.uniform(graph, Fraction(1, 2)),
            DeformationParameter.from_mapping(graph, mixed),
        ]

    def oracle_agreement(self) -> Check:
        """절단 연산자의 τ(p_C) 와 ∏ 1/(1+q_s)"""
        checked = 0
        for graph in self._small_corpus():
            for q in self._parameters(graph):
                for report in hecke_oracle.clique_trace_reports(graph, q, 4):
                    _expect(report.error < 1e-12, f"{report.label} on {graph.vertices}: {report.error:.3e}")
                    checked += 1
        return True, f"{checked} clique traces"

    def relation_residuals(self) -> Check:
        """L = 4 에서 관계 잔차 (부동소수 < 1e-12, 정확 모드 = 0), 전체 그래프 모음"""
        graphs = self._full_corpus()
        for graph in graphs:
            basis = hecke_oracle.build_basis(graph, 4, self.settings.element_cap)
            for value in (Fraction(1), Fraction(1, 2), Fraction(1, 4)):
                q = DeformationParameter.uniform(graph, value)
                report = hecke_oracle.check_relations(graph, q, 4, 1e-12, basis=basis)
                _expect(report.passed, f"q = {value} on {graph.vertices}")
            for value in (Fraction(1, 4), Fraction(4, 9)):
                q = DeformationParameter.uniform(graph, value)
                report = hecke_oracle.check_relations(graph, q, 4, exact=True, basis=basis)
                _expect(report.passed, f"exact q = {value} on {graph.vertices}")
        return True, f"{len(graphs)} graphs, 3 float + 2 exact parameters"

    def free_product_traces(self) -> Check:
        """‖η‖² 부분합, t̂, φ̂ 와 성장 수열"""
        for n, q, radius in ((3, Fraction(1, 4), 30), (4, Fraction(1, 5), 30)):
            report = hecke_oracle.free_product_trace_checks(n, q, radius)
            _expect(report.series.within_bound, f"tail bound n={n}")
            _expect(report.t_error < 1e-6, f"t error {report.t_error:.3e} n={n}")
            _expect(report.phi_error < 1e-5, f"phi error {report.phi_error:.3e} n={n}")
        for n in (3, 4):
            expected = [1] + [n * (n - 1) ** (k - 1) for k in range(1, 13)]
            _expect(free_product_growth(n, 12) == expected, f"counted growth n={n}")
        # 공 열거는 원소 수가 작은 범위에서 교차 확인
        for n, radius in ((3, 12), (4, 8)):
            expected = [1] + [n * (n - 1) ** (k - 1) for k in range(1, radius + 1)]
            observed = growth_sequence(corpus.edgeless(n), radius, self.settings.element_cap)
            _expect(observed == expected, f"ball growth n={n}")
        return True, "(3,1/4,30), (4,1/5,30); growth k <= 12"

    def classification(self) -> Check:
        """예제 판정과 난수 쌍의 대칭성/반사성"""
        examples = [
            (3, Fraction(1, 2), Fraction(2, 3), ClassificationVerdict.REGIME_MISMATCH),
            (3, Fraction(2, 3), Fraction(3, 4), ClassificationVerdict.INVARIANT_MISMATCH),
            (3, Fraction(6, 7), Fraction(5, 8), ClassificationVerdict.INVARIANT_ISOMORPHIC),
            (4, Fraction(1, 4), Fraction(1, 5), ClassificationVerdict.INVARIANT_ISOMORPHIC),
        ]
        for n, q1, q2, expected in examples:
            _expect(elliott_classify.classify_pair(n, q1, q2).verdict is expected, f"({n}, {q1}, {q2})")

        rng = random.Random(self.settings.random_seed)
        for _ in range(50):
            n = rng.randint(3, 6)
            d1, d2 = rng.randint(1, 20), rng.randint(1, 20)
            q1, q2 = Fraction(rng.randint(1, d1), d1), Fraction(rng.randint(1, d2), d2)
            forward = elliott_classify.classify_pair(n, q1, q2)
            _expect(forward.verdict is elliott_classify.classify_pair(n, q2, q1).verdict, f"symmetry ({n}, {q1}, {q2})")
            _expect(
                elliott_classify.classify_pair(n, q1, q1).verdict is ClassificationVerdict.INVARIANT_ISOMORPHIC,
                f"reflexivity ({n}, {q1})",
            )
            if forward.regime1 is Regime.SIMPLE and forward.regime2 is Regime.SIMPLE:
                agrees = elliott_classify.subgroup_equal(
                    k_invariants.generator_value(q1), k_invariants.generator_value(q2)
                )
                _expect(
                    agrees == (forward.verdict is ClassificationVerdict.INVARIANT_ISOMORPHIC),
                    f"simple regime consistency ({n}, {q1}, {q2})",
                )
        return True, "4 examples, 50 random pairs"

    def lemma_cross_validation(self, max_denominator: int = 50) -> Check:
        """기약분모 판정 vs 격자 포함 전수 탐색, 그리고 증인 탐색"""
        rationals = sorted({Fraction(a, d) for d in range(1, max_denominator + 1) for a in range(d)})
        for x, y in product(rationals, repeat=2):
            _expect(
                elliott_classify.subgroup_equal(x, y) == oracles.lattice_subgroup_equal(x, y, max_denominator),
                f"subgroup ({x}, {y})",
            )
        positives = [
            (Fraction(1, 2), Fraction(1, 2), 1),
            (Fraction(3, 2), Fraction(1, 2), 1),
            (Fraction(1, 3), Fraction(2, 3), 2),
            (Fraction(1, 5), Fraction(4, 5), 2),
        ]
        for x, y, bound in positives:
            _expect(elliott_classify.affine_orbit_witness_search(x, y, 3, bound) is not None, f"witness ({x}, {y})")
        negatives = [(Fraction(3, 5), Fraction(4, 7), 2)]
        for x, y, bound in negatives:
            _expect(elliott_classify.affine_orbit_witness_search(x, y, 3, bound) is None, f"no witness ({x}, {y})")
        return True, f"{len(rationals) ** 2} pairs, {len(positives)}+{len(negatives)} witness cases"

    def word_engine(self, max_length: int = 6, graph_count: int = 20) -> Check:
        """정규형 vs 재작성 폐포, |sw| = |w| ± 1, 삼각형 그래프의 포화"""
        graphs = corpus.random_graphs(graph_count, self.settings.random_seed, max_vertices=4)
        for graph in graphs:
            for length in range(max_length + 1):
                for labels in product(graph.vertices, repeat=length):
                    _expect(
                        normal_form(labels, graph) == oracles.rewriting_normal_form(labels, graph),
                        f"normal form {' '.join(labels)} on {graph.vertices}",
                    )
            for word in ball(graph, 5, self.settings.element_cap):
                for s in graph.vertices:
                    product_word, delta = mult_gen(word, s, graph)
                    _expect(product_word.length - word.length == delta and abs(delta) == 1, "length change")
        triangle = ball(corpus.complete(3), 6, self.settings.element_cap)
        _expect(len(triangle) == 8, f"triangle group has {len(triangle)} elements")
        return True, f"{len(graphs)} graphs, words up to length {max_length}"

    def criteria(self) -> List[Tuple[int, str, Callable[[], Check]]]:
        return [
            (1, "clique / K_0 rank agreement", self.rank_agreement),
            (2, "exact trace pairing", self.trace_pairing),
            (3, "oracle-formula agreement", self.oracle_agreement),
            (4, "relation residuals", self.relation_residuals),
            (5, "free-product trace analysis", self.free_product_traces),
            (6, "classification procedure", self.classification),
            (7, "lemma cross-validation", self.lemma_cross_validation),
            (8, "word engine", self.word_engine),
        ]

    def run(self) -> ReproduceResponse:
        """모든 기준을 실행 (한 기준의 실패가 나머지를 막지 않음)"""
        results = []
        for criterion_id, name, check in self.criteria():
            try:
                passed, detail = check()
            except (CriterionFailed, HeckeError) as e:
                passed, detail = False, str(e)
            self.logger.info("criterion_completed", id=criterion_id, name=name, passed=passed)
            results.append(CriterionResponse(id=criterion_id, name=name, passed=passed, detail=detail))
        return ReproduceResponse(criteria=results, passed=all(r.passed for r in results))
