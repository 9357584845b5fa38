"""수치 검증 엔진 단위 테스트"""
from fractions import Fraction

import numpy as np
import pytest

from src.core.entities.graph import Clique
from src.core.entities.invariants import DeformationParameter
from src.core.exceptions import CapacityError, DivergenceError, DomainError
from src.core.usecases import corpus
from src.core.usecases.hecke_oracle import (
    build_basis,
    build_lambda,
    check_relations,
    clique_projection,
    clique_trace_reports,
    complementary_trace_reports,
    eta_fixed_residual,
    eta_norm_partial,
    exact_trace_of,
    free_product_trace_checks,
    projection,
    rational_sqrt,
    supports_exact_mode,
    trace_of,
)

F = Fraction


def mixed(graph):
    return DeformationParameter.from_mapping(
        graph, {v: F(1, 3) if i % 2 == 0 else F(1, 2) for i, v in enumerate(graph.vertices)}
    )


class TestBuildLambda:
    """절단된 λ_q(s)"""

    def test_basis_order(self, path3):
        basis = build_basis(path3, 2)
        assert basis.words[0].is_identity()
        assert list(basis.lengths) == sorted(basis.lengths)
        assert basis.dimension == len(basis.words)

    def test_at_most_two_entries_per_column(self, path_plus_isolated):
        q = DeformationParameter.uniform(path_plus_isolated, F(1, 2))
        op = build_lambda(path_plus_isolated, q, "a", 3)
        assert np.diff(op.matrix.tocsc().indptr).max() <= 2

    def test_group_case_is_permutation(self, edgeless3):
        """q = 1 이면 대각 성분이 없고 δ_w -> δ_{sw}"""
        q = DeformationParameter.uniform(edgeless3, 1)
        op = build_lambda(edgeless3, q, "s1", 3)
        assert op.matrix.diagonal().max() == 0
        assert op.matrix[1, 0] == pytest.approx(1.0)

    def test_radius_must_be_positive(self, path3):
        with pytest.raises(DomainError):
            build_lambda(path3, DeformationParameter.uniform(path3, 1), "a", 0)

    def test_unknown_generator(self, path3):
        with pytest.raises(DomainError):
            build_lambda(path3, DeformationParameter.uniform(path3, 1), "z", 2)

    def test_left_action_cached_on_basis(self, path3):
        basis = build_basis(path3, 3)
        build_lambda(path3, DeformationParameter.uniform(path3, F(1, 2)), "a", 3, basis=basis)
        targets, deltas = basis.action["a"]
        assert targets[0] == 1
        assert set(deltas.tolist()) == {1, -1}
        assert targets.max() < basis.dimension

    def test_interior(self, edgeless3):
        basis = build_basis(edgeless3, 3)
        assert all(basis.lengths[i] <= 2 for i in basis.interior(1))
        assert len(basis.interior(3)) == 1


class TestRelations:
    """관계 잔차"""

    @pytest.mark.parametrize("value", [F(1), F(1, 2), F(1, 4)])
    def test_float_residuals(self, path_plus_isolated, value):
        q = DeformationParameter.uniform(path_plus_isolated, value)
        report = check_relations(path_plus_isolated, q, 4, 1e-12)
        assert report.passed
        assert report.commutation < 1e-12

    def test_mixed_parameters(self, path3):
        report = check_relations(path3, mixed(path3), 4, 1e-12)
        assert report.passed

    @pytest.mark.parametrize("value", [F(1, 4), F(4, 9)])
    @pytest.mark.parametrize("name", ["path3_plus_isolated", "two_disjoint_edges", "cycle4", "complete3", "edgeless3"])
    def test_exact_residuals_are_zero(self, name, value):
        graph = corpus.named_corpus()[name]
        report = check_relations(graph, DeformationParameter.uniform(graph, value), 4, exact=True)
        assert (report.involution, report.symmetry, report.commutation, report.unitarity) == (0, 0, 0, 0)
        assert report.passed

    def test_non_edge_does_not_commute(self, edgeless3):
        """q = 1, 변이 아닌 (s, t): ‖λ(s)λ(t)δ_e - λ(t)λ(s)δ_e‖ = √2"""
        q = DeformationParameter.uniform(edgeless3, 1)
        s, t = (build_lambda(edgeless3, q, v, 2).matrix for v in ("s1", "s2"))
        delta_e = np.zeros(s.shape[0])
        delta_e[0] = 1.0
        difference = s @ (t @ delta_e) - t @ (s @ delta_e)
        assert np.linalg.norm(difference) == pytest.approx(np.sqrt(2))

    def test_edge_commutes_exactly(self, path3):
        q = DeformationParameter.uniform(path3, 1)
        a, b = (build_lambda(path3, q, v, 2).matrix for v in ("a", "b"))
        delta_e = np.zeros(a.shape[0])
        delta_e[0] = 1.0
        assert np.array_equal(a @ (b @ delta_e), b @ (a @ delta_e))

    def test_exact_mode_needs_squares(self, path3):
        q = DeformationParameter.uniform(path3, F(1, 2))
        assert not supports_exact_mode(q)
        with pytest.raises(DomainError):
            check_relations(path3, q, 4, exact=True)

    def test_radius_guard(self, path3):
        with pytest.raises(DomainError):
            check_relations(path3, DeformationParameter.uniform(path3, 1), 1)

    def test_rational_sqrt(self):
        assert rational_sqrt(F(4, 9)) == F(2, 3)
        assert rational_sqrt(F(1, 2)) is None


class TestTraces:
    """대각합 τ(x) = <x δ_e, δ_e>"""

    def test_empty_clique_is_identity(self, path3):
        op = clique_projection(path3, DeformationParameter.uniform(path3, 1), Clique(), 3)
        assert np.array_equal(op.matrix.toarray(), np.eye(op.dimension))

    def test_non_clique(self, path3):
        with pytest.raises(DomainError):
            clique_projection(path3, DeformationParameter.uniform(path3, 1), Clique(("a", "c")), 3)

    def test_projection_trace(self, path3):
        q = DeformationParameter.uniform(path3, F(1, 3))
        assert trace_of(projection(path3, q, "a", 3)) == pytest.approx(0.75, abs=1e-15)

    @pytest.mark.parametrize("name", ["path3_plus_isolated", "two_disjoint_edges", "complete3", "cycle4"])
    def test_clique_traces_match_formula(self, name):
        graph = corpus.named_corpus()[name]
        for q in (DeformationParameter.uniform(graph, 1), DeformationParameter.uniform(graph, F(1, 2)), mixed(graph)):
            for report in clique_trace_reports(graph, q, 4):
                assert report.error < 1e-12

    def test_exact_clique_trace(self, triangle):
        q = DeformationParameter.uniform(triangle, F(4, 9))
        op = clique_projection(triangle, q, Clique(("a", "b", "c")), 4, exact=True)
        assert exact_trace_of(op) == F(9, 13) ** 3

    def test_exact_trace_near_int64_limit(self):
        """q = (99/100)² 의 4-클리크: 성분 상한 약 2.5e18 은 int64 안"""
        graph = corpus.complete(4)
        q = DeformationParameter.uniform(graph, F(99, 100) ** 2)
        op = clique_projection(graph, q, Clique(graph.vertices), 4, exact=True)
        assert exact_trace_of(op) == F(10000, 19801) ** 4

    def test_exact_overflow_refused(self):
        """5-클리크 곱은 int64 를 넘으므로 조용히 넘치지 않고 거절"""
        graph = corpus.complete(5)
        q = DeformationParameter.uniform(graph, F(99, 100) ** 2)
        with pytest.raises(CapacityError) as exc_info:
            clique_trace_reports(graph, q, 5, exact=True)
        assert exc_info.value.requested > np.iinfo(np.int64).max

    def test_complementary_traces(self, path_plus_isolated):
        for report in complementary_trace_reports(path_plus_isolated, mixed(path_plus_isolated), 3):
            assert report.error < 1e-12

    def test_eta_is_fixed(self, path_plus_isolated):
        report = eta_fixed_residual(path_plus_isolated, mixed(path_plus_isolated), 4, 1e-12)
        assert report.passed

    def test_eta_free_product(self):
        graph = corpus.edgeless(3)
        report = eta_fixed_residual(graph, DeformationParameter.uniform(graph, F(1, 4)), 5, 1e-12)
        assert report.passed


class TestEtaSeries:
    """‖η‖² = Σ s_k q^k"""

    def test_closed_form(self):
        series = eta_norm_partial(3, F(1, 4), 30)
        assert series.closed_form == F(5, 2)
        assert series.within_bound
        assert isinstance(series.partial_sum, Fraction)

    def test_radius_zero(self):
        assert eta_norm_partial(3, F(1, 4), 0).partial_sum == 1

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            eta_norm_partial(4, F(1, 3), 10)

    @pytest.mark.parametrize("radius", [0, 1, 5, 12])
    def test_tail_bound_holds(self, radius):
        assert eta_norm_partial(4, F(1, 5), radius).within_bound

    @pytest.mark.parametrize(
        "n, q, t, phi",
        [(3, F(1, 4), F(2, 5), F(2, 3)), (4, F(1, 5), F(1, 3), F(3, 4))],
    )
    def test_trace_checks(self, n, q, t, phi):
        report = free_product_trace_checks(n, q, 30)
        assert report.passed
        assert report.t_target == t
        assert report.phi_target == phi
        assert abs(report.t_estimate - float(t)) < 1e-6
        assert abs(report.phi_estimate - float(phi)) < 1e-5

    def test_trace_checks_need_non_simple_regime(self):
        with pytest.raises(DomainError):
            free_product_trace_checks(3, F(2, 3), 10)
