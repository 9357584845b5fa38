"""자유곱 분류 판정 단위 테스트"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from src.core.entities.elliott import ClassificationVerdict, Regime, TraceSimplex
from src.core.exceptions import CapacityError, DomainError, UnsupportedRegimeError
from src.core.usecases.elliott_classify import (
    affine_orbit_same,
    affine_orbit_witness_search,
    building_thickness_order,
    classify_pair,
    free_product_invariant,
    free_product_trace_data,
    order_in_Q_mod_Z,
    recognised_thickness,
    regime,
    subgroup_equal,
)
from src.core.usecases.k_invariants import generator_value
from src.core.usecases.oracles import lattice_subgroup_equal
from src.tests.strategies import unit_rationals

F = Fraction


def apply_witness(witness, y):
    """C + B·(y·1) 의 각 성분"""
    return [c + sum(row) * y for row, c in zip(witness.matrix, witness.offset)]


def determinant(matrix):
    return int(Matrix(matrix).det())


class TestRegime:
    """q 와 1/(n-1) 비교"""

    @pytest.mark.parametrize(
        "n, q, expected",
        [
            (3, F(2, 3), Regime.SIMPLE),
            (3, F(1, 2), Regime.BOUNDARY),
            (4, F(1, 4), Regime.NON_SIMPLE),
            (5, F(1), Regime.SIMPLE),
        ],
    )
    def test_examples(self, n, q, expected):
        assert regime(n, q) is expected

    def test_rank_too_small(self):
        with pytest.raises(DomainError):
            regime(2, F(1, 2))

    @pytest.mark.parametrize("q", [F(0), F(5, 4)])
    def test_parameter_out_of_range(self, q):
        with pytest.raises(DomainError):
            regime(3, q)


class TestFreeProductInvariant:
    """비순서 Elliott 불변량"""

    def test_simple(self):
        invariant = free_product_invariant(3, F(2, 3))
        assert invariant.k0_rank == 4
        assert invariant.trace_simplex is TraceSimplex.POINT
        assert invariant.extremal_pairings == ((F(1), F(3, 5), F(3, 5), F(3, 5)),)
        assert invariant.unit == (1, 0, 0, 0)

    def test_non_simple(self):
        invariant = free_product_invariant(4, F(1, 4))
        assert invariant.k0_rank == 5
        assert invariant.trace_simplex is TraceSimplex.INTERVAL
        assert invariant.extremal_pairings == (
            (F(1),) * 5,
            (F(1),) + (F(3, 4),) * 4,
        )

    def test_boundary_is_unsupported(self):
        with pytest.raises(UnsupportedRegimeError):
            free_product_invariant(3, F(1, 2))

    def test_non_simple_independent_of_q(self):
        assert free_product_invariant(4, F(1, 4)).same_invariant(free_product_invariant(4, F(1, 5)))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=3, max_value=8), unit_rationals(max_denominator=40))
    def test_trace_data_identity(self, n, q):
        """t · ‖η‖² = 1"""
        if regime(n, q) is not Regime.NON_SIMPLE:
            with pytest.raises(DomainError):
                free_product_trace_data(n, q)
            return
        data = free_product_trace_data(n, q)
        assert data.t * data.eta_norm_sq == 1
        assert data.phi_value == F(n - 1, n)

    def test_trace_data_example(self):
        data = free_product_trace_data(3, F(1, 4))
        assert data.t == F(2, 5)
        assert data.eta_norm_sq == F(5, 2)
        assert data.phi_value == F(2, 3)


class TestOrders:
    """Q/Z 위수와 부분군 비교"""

    @pytest.mark.parametrize("x, order", [(F(7, 13), 13), (F(1, 2), 2), (F(3), 1)])
    def test_order(self, x, order):
        assert order_in_Q_mod_Z(x) == order

    def test_subgroup_equal(self):
        assert subgroup_equal(F(7, 13), F(8, 13))
        assert not subgroup_equal(F(3, 5), F(4, 7))
        assert subgroup_equal(F(2, 9), F(2, 9))

    def test_affine_orbit_same(self):
        assert affine_orbit_same(F(7, 13), F(8, 13), 3)
        assert not affine_orbit_same(F(3, 5), F(4, 7), 3)
        assert affine_orbit_same(F(1, 7), F(1, 7), 5)

    def test_affine_orbit_requires_rank(self):
        with pytest.raises(DomainError):
            affine_orbit_same(F(1, 2), F(1, 2), 2)

    def test_lattice_oracle_small_denominators(self):
        """기약분모 판정 = 격자 포함 전수 탐색 (분모 ≤ 20)"""
        rationals = sorted({F(a, d) for d in range(1, 21) for a in range(d)})
        for x in rationals:
            for y in rationals:
                assert subgroup_equal(x, y) == lattice_subgroup_equal(x, y, 20)

    @settings(max_examples=100, deadline=None)
    @given(unit_rationals(max_denominator=50), unit_rationals(max_denominator=50))
    def test_lattice_oracle_property(self, x, y):
        assert subgroup_equal(x, y) == lattice_subgroup_equal(x, y, 50)


class TestWitnessSearch:
    """GL_n(Z) ⋉ Z^n 증인 탐색"""

    @pytest.mark.parametrize(
        "x, y, bound",
        [
            (F(1, 2), F(1, 2), 1),
            (F(3, 2), F(1, 2), 1),
            (F(1, 3), F(2, 3), 2),
            (F(1, 5), F(4, 5), 2),
        ],
    )
    def test_positive_pairs(self, x, y, bound):
        witness = affine_orbit_witness_search(x, y, 3, bound)
        assert witness is not None
        assert apply_witness(witness, y) == [x, x, x]
        assert abs(determinant(witness.matrix)) == 1

    def test_identity_witness(self):
        witness = affine_orbit_witness_search(F(3, 2), F(1, 2), 3, 1)
        assert witness.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert witness.offset == (1, 1, 1)

    def test_enumerated_witness(self):
        """±I 로는 안 되는 (1/5, 2/5): 행 합이 3 또는 -2 인 행들로 det ±1 행렬을 찾는다"""
        x, y = F(1, 5), F(2, 5)
        witness = affine_orbit_witness_search(x, y, 3, 1)
        assert witness is not None
        assert witness.matrix not in (
            ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
            ((-1, 0, 0), (0, -1, 0), (0, 0, -1)),
        )
        assert all(abs(e) <= 1 for row in witness.matrix for e in row)
        assert apply_witness(witness, y) == [x, x, x]
        assert abs(determinant(witness.matrix)) == 1

    def test_zero_bound_has_no_witness(self):
        """성분 한도 0 이면 ±I 도 범위 밖"""
        assert affine_orbit_witness_search(F(1, 2), F(1, 2), 3, 0) is None

    def test_negative_pair(self):
        assert affine_orbit_witness_search(F(3, 5), F(4, 7), 3, 2) is None

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            affine_orbit_witness_search(F(2, 7), F(3, 7), 3, 2, candidate_cap=10)

    def test_witness_implies_criterion(self):
        """찾은 증인은 항상 판정 기준과 일치"""
        for d in range(2, 7):
            for a in range(1, d):
                for b in range(1, d):
                    x, y = F(a, d), F(b, d)
                    witness = affine_orbit_witness_search(x, y, 3, 1)
                    if witness is not None:
                        assert affine_orbit_same(x, y, 3)
                        assert apply_witness(witness, y) == [x, x, x]
                        assert abs(determinant(witness.matrix)) == 1


class TestClassifyPair:
    """분류 판정 절차"""

    @pytest.mark.parametrize(
        "n, q1, q2, verdict",
        [
            (3, F(1, 2), F(2, 3), ClassificationVerdict.REGIME_MISMATCH),
            (3, F(2, 3), F(3, 4), ClassificationVerdict.INVARIANT_MISMATCH),
            (3, F(6, 7), F(5, 8), ClassificationVerdict.INVARIANT_ISOMORPHIC),
            (4, F(1, 4), F(1, 5), ClassificationVerdict.INVARIANT_ISOMORPHIC),
            (3, F(1, 2), F(1, 2), ClassificationVerdict.INVARIANT_ISOMORPHIC),
        ],
    )
    def test_examples(self, n, q1, q2, verdict):
        assert classify_pair(n, q1, q2).verdict is verdict

    def test_orders_reported(self):
        result = classify_pair(3, F(2, 3), F(3, 4))
        assert (result.order1, result.order2) == (5, 7)
        result = classify_pair(3, F(6, 7), F(5, 8))
        assert (result.order1, result.order2) == (13, 13)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=3, max_value=6), unit_rationals(20), unit_rationals(20))
    def test_symmetric_and_reflexive(self, n, q1, q2):
        assert classify_pair(n, q1, q2).verdict is classify_pair(n, q2, q1).verdict
        assert classify_pair(n, q1, q1).verdict is ClassificationVerdict.INVARIANT_ISOMORPHIC

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=3, max_value=6), unit_rationals(20), unit_rationals(20))
    def test_simple_regime_consistency(self, n, q1, q2):
        result = classify_pair(n, q1, q2)
        if result.regime1 is Regime.SIMPLE and result.regime2 is Regime.SIMPLE:
            same = subgroup_equal(generator_value(q1), generator_value(q2))
            assert same == (result.verdict is ClassificationVerdict.INVARIANT_ISOMORPHIC)
            assert same == affine_orbit_same(generator_value(q1), generator_value(q2), n)


class TestThickness:
    """건물 두께 d 의 인식"""

    @pytest.mark.parametrize("n, d, order", [(5, 3, 4), (5, 4, 5), (4, 2, 3)])
    def test_order(self, n, d, order):
        assert building_thickness_order(n, d) == order

    def test_invalid_thickness(self):
        with pytest.raises(DomainError):
            building_thickness_order(5, 1)

    def test_scan_orders_are_distinct(self):
        scan = recognised_thickness(6)
        assert [d for d, _ in scan] == [2, 3, 4, 5]
        assert len({order for _, order in scan}) == len(scan)
