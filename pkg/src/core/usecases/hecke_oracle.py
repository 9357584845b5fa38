"""수치 검증 엔진: 공 위의 절단된 λ_q 행렬, 관계 잔차, 대각합, 급수 수렴

λ_q(s)δ_w = ±(1-q_s)/(1+q_s) δ_w + 2 q_s^{1/2}/(1+q_s) δ_{sw}  (|sw| > |w| 이면 +)

|sw| > L 이면 δ_{sw} 항을 버린다. 모든 정확성 주장은 그 항이 살아 있는
내부 열 (길이 < L) 에 한정된다. 모든 q_s = a²/b² 가 유리수의 제곱이면 정확
모드에서 (a²+b²)·λ_q(s) 가 정수 행렬이 되므로 정수 희소 행렬로 계산하고,
잔차는 정확히 0 이어야 한다.
"""
from fractions import Fraction
from math import isqrt, prod, sqrt
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import sparse

from src.core.entities.graph import Clique, Graph
from src.core.entities.invariants import DeformationParameter
from src.core.entities.operator import (
    BallBasis,
    EigenvectorReport,
    EtaSeries,
    FreeProductTraceReport,
    Matrix,
    RelationReport,
    TraceReport,
    TruncatedOperator,
)
from src.core.exceptions import CapacityError, DivergenceError, DomainError
from src.core.usecases.coxeter_words import ball, free_product_growth, mult_gen
from src.core.usecases.elliott_classify import free_product_trace_data
from src.core.usecases.k_invariants import complementary_value, generator_value, trace_pairing
from src.shared.config import get_settings
from src.shared.logging import get_logger

logger = get_logger(__name__)

INT64_MAX = int(np.iinfo(np.int64).max)


def build_basis(graph: Graph, radius: int, element_cap: Optional[int] = None) -> BallBasis:
    """공 열거 순서를 기저 번호로 쓰는 절단 기저"""
    words = tuple(ball(graph, radius, element_cap))
    return BallBasis(
        graph=graph,
        radius=radius,
        words=words,
        index={w: i for i, w in enumerate(words)},
        lengths=np.array([w.length for w in words], dtype=int),
    )


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """유리수 제곱근 (제곱수가 아니면 None)"""
    value = Fraction(value)
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def supports_exact_mode(q: DeformationParameter) -> bool:
    """모든 q_s 가 유리수의 제곱인지"""
    return all(rational_sqrt(value) is not None for _, value in q.values)


def _coefficients(q_s: Fraction, exact: bool) -> Tuple[float, float, int]:
    """((1-q)/(1+q), 2√q/(1+q)) 와 배율

    정확 모드에서 q = a²/b² 이면 배율 a²+b² 를 곱한 정수 (b²-a², 2ab) 를 준다.
    """
    if exact:
        root = rational_sqrt(q_s)
        a, b = root.numerator, root.denominator
        return b * b - a * a, 2 * a * b, a * a + b * b
    q = float(q_s)
    return (1 - q) / (1 + q), 2 * sqrt(q) / (1 + q), 1


def _identity(basis: BallBasis, exact: bool) -> Matrix:
    return sparse.identity(basis.dimension, dtype=np.int64 if exact else float, format="csc")


def _check_exact(q: DeformationParameter, exact: bool) -> None:
    if exact and not supports_exact_mode(q):
        raise DomainError("정확 모드는 모든 q_s 가 유리수의 제곱일 때만 가능합니다")


def _magnitude(operator: TruncatedOperator) -> int:
    """정수 행렬의 행·열 절댓값 합 최댓값과 배율 중 큰 값

    A·B, Aᵀ·B 의 모든 성분 (누적 중간값 포함) 은 magnitude(A)·magnitude(B) 이하이다.
    """
    entries = abs(operator.matrix)
    peak = max(int(entries.sum(axis=0).max()), int(entries.sum(axis=1).max()))
    return max(peak, operator.scale)


def _require_int64(bound: int, context: str) -> None:
    """정확 모드 정수 연산이 int64 안에 머무는지 미리 확인"""
    if bound > INT64_MAX:
        raise CapacityError(
            f"정확 모드 성분 상한 {bound} 가 int64 범위를 넘습니다 ({context})",
            limit=INT64_MAX,
            requested=bound,
            details={"context": context},
        )


def _left_action(basis: BallBasis, s: str) -> Tuple[np.ndarray, np.ndarray]:
    """각 기저 단어 w 에 대해 (sw 의 기저 번호, 공 밖이면 -1) 와 |sw| - |w|

    q 와 무관하므로 기저마다 한 번만 계산해 basis.action 에 보관한다.
    """
    cached = basis.action.get(s)
    if cached is None:
        targets = np.empty(basis.dimension, dtype=np.int64)
        deltas = np.empty(basis.dimension, dtype=np.int64)
        for col, word in enumerate(basis.words):
            product, deltas[col] = mult_gen(word, s, basis.graph)
            targets[col] = basis.index.get(product, -1)
        cached = basis.action[s] = (targets, deltas)
    return cached


def build_lambda(
    graph: Graph,
    q: DeformationParameter,
    s: str,
    radius: int,
    exact: bool = False,
    basis: Optional[BallBasis] = None,
) -> TruncatedOperator:
    """절단된 λ_q(s) (각 열에 0이 아닌 성분 최대 2개)"""
    if radius < 1:
        raise DomainError(f"반지름 L = {radius} 는 1 이상이어야 합니다", details={"radius": radius})
    q.covers(graph)
    _check_exact(q, exact)
    basis = basis or build_basis(graph, radius)
    diagonal, off_diagonal, scale = _coefficients(q[s], exact)
    if exact:
        _require_int64(2 * scale, f"λ({s})")
    dtype = np.int64 if exact else float

    targets, deltas = _left_action(basis, s)
    columns = np.arange(basis.dimension)
    inside = targets >= 0
    rows = [targets[inside]]
    cols = [columns[inside]]
    data = [np.full(int(inside.sum()), off_diagonal, dtype=dtype)]
    if diagonal != 0:
        rows.append(columns)
        cols.append(columns)
        data.append((deltas * diagonal).astype(dtype))

    matrix = sparse.csc_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(basis.dimension, basis.dimension),
        dtype=dtype,
    )
    return TruncatedOperator(matrix, basis, exact, scale)


def _max_abs(matrix: Matrix, columns: np.ndarray, scale: int = 1) -> float:
    """선택한 열들에서 성분 절댓값의 최댓값 (정확 모드는 배율로 나눈 유리수)"""
    if len(columns) == 0:
        return 0.0
    block = matrix.tocsc()[:, columns]
    if not block.nnz:
        return 0.0
    peak = abs(block).max()
    if scale != 1:
        return float(Fraction(int(peak), scale))
    return float(peak)


def check_relations(
    graph: Graph,
    q: DeformationParameter,
    radius: int,
    tolerance: Optional[float] = None,
    exact: bool = False,
    basis: Optional[BallBasis] = None,
) -> RelationReport:
    """s² = e, 자기수반, 변 (s,t) 의 st = ts, 유니타리성 잔차"""
    if radius < 2:
        raise DomainError(f"관계 검사는 L ≥ 2 가 필요합니다 (L = {radius})", details={"radius": radius})
    tolerance = tolerance or get_settings().residual_tolerance
    basis = basis or build_basis(graph, radius)
    identity = _identity(basis, exact)
    interior = basis.interior(1)
    deep_interior = basis.interior(2)

    operators = {s: build_lambda(graph, q, s, radius, exact, basis) for s in graph.vertices}

    involution = symmetry = commutation = unitarity = 0.0
    if exact:
        magnitudes = {s: _magnitude(op) for s, op in operators.items()}
        for s, bound in magnitudes.items():
            _require_int64(bound * bound, f"λ({s})²")
        for u, v in graph.sorted_edges():
            _require_int64(magnitudes[u] * magnitudes[v], f"λ({u})λ({v})")

    for op in operators.values():
        m, d = op.matrix, op.scale
        involution = max(involution, _max_abs(m @ m - d * d * identity, interior, d * d))
        symmetry = max(symmetry, _max_abs(m - m.T, interior, d))
        unitarity = max(unitarity, _max_abs(m.T @ m - d * d * identity, interior, d * d))
    for u, v in graph.sorted_edges():
        a, b = operators[u], operators[v]
        commutation = max(
            commutation,
            _max_abs(a.matrix @ b.matrix - b.matrix @ a.matrix, deep_interior, a.scale * b.scale),
        )

    report = RelationReport(
        radius=radius,
        exact=exact,
        involution=involution,
        symmetry=symmetry,
        commutation=commutation,
        unitarity=unitarity,
        tolerance=tolerance,
    )
    logger.debug("check_relations", radius=radius, dimension=basis.dimension, exact=exact, passed=report.passed)
    return report


def projection(
    graph: Graph,
    q: DeformationParameter,
    s: str,
    radius: int,
    exact: bool = False,
    basis: Optional[BallBasis] = None,
) -> TruncatedOperator:
    """스펙트럼 사영 p_s = (1 + λ_q(s))/2"""
    generator = build_lambda(graph, q, s, radius, exact, basis)
    identity = _identity(generator.basis, exact)
    if exact:
        # (d·1 + d·λ) / 2d
        matrix = (generator.scale * identity + generator.matrix).tocsc()
        return TruncatedOperator(matrix, generator.basis, True, 2 * generator.scale)
    return TruncatedOperator(((identity + generator.matrix) * 0.5).tocsc(), generator.basis)


def _clique_product(
    factors: Dict[str, TruncatedOperator],
    clique: Clique,
    basis: BallBasis,
    exact: bool,
) -> TruncatedOperator:
    matrix, scale, bound = _identity(basis, exact), 1, 1
    for s in clique:
        if exact:
            bound *= _magnitude(factors[s])
            _require_int64(bound, f"p_{clique.label()}")
        matrix = (matrix @ factors[s].matrix).tocsc()
        scale *= factors[s].scale
    return TruncatedOperator(matrix, basis, exact, scale)


def clique_projection(
    graph: Graph,
    q: DeformationParameter,
    clique: Clique,
    radius: int,
    exact: bool = False,
    basis: Optional[BallBasis] = None,
) -> TruncatedOperator:
    """p_C = ∏_{s∈C} p_s (꼭짓점 순서), p_∅ = 1"""
    clique = Clique.of(graph, clique.vertices)
    _check_exact(q, exact)
    basis = basis or build_basis(graph, radius)
    factors = {s: projection(graph, q, s, radius, exact, basis) for s in clique}
    return _clique_product(factors, clique, basis, exact)


def exact_trace_of(operator: TruncatedOperator) -> Fraction:
    """정확 모드의 τ(x)"""
    return Fraction(int(operator.matrix[0, 0]), operator.scale)


def trace_of(operator: TruncatedOperator) -> float:
    """τ(x) = <x δ_e, δ_e> (δ_e 는 기저 번호 0)"""
    if operator.exact:
        return float(exact_trace_of(operator))
    return float(operator.matrix[0, 0])


def clique_trace_reports(
    graph: Graph,
    q: DeformationParameter,
    radius: int,
    exact: bool = False,
) -> List[TraceReport]:
    """모든 클리크에 대해 τ(p_C) 와 ∏ 1/(1+q_s) 비교"""
    _check_exact(q, exact)
    basis = build_basis(graph, radius)
    pairing = trace_pairing(graph, q)
    factors = {s: projection(graph, q, s, radius, exact, basis) for s in graph.vertices}
    reports = []
    for clique, target in zip(pairing.basis, pairing.values):
        computed = trace_of(_clique_product(factors, clique, basis, exact))
        reports.append(TraceReport(label=clique.label(), computed=computed, target=target, radius=radius))
    return reports


def complementary_trace_reports(
    graph: Graph,
    q: DeformationParameter,
    radius: int,
) -> List[TraceReport]:
    """τ((1 - λ_q(s))/2) 와 q_s/(1+q_s) 비교"""
    basis = build_basis(graph, radius)
    identity = _identity(basis, False)
    reports = []
    for s in graph.vertices:
        generator = build_lambda(graph, q, s, radius, False, basis)
        complement = TruncatedOperator((identity - generator.matrix) * 0.5, basis)
        reports.append(
            TraceReport(
                label=s,
                computed=trace_of(complement),
                target=complementary_value(q[s]),
                radius=radius,
            )
        )
    return reports


def eta_vector(basis: BallBasis, q: DeformationParameter) -> np.ndarray:
    """η_w = ∏_{글자 s} q_s^{1/2} (균일 q 이면 q^{|w|/2})"""
    roots = [sqrt(float(q[v])) for v in basis.graph.vertices]
    return np.array([prod((roots[i] for i in w.letters), start=1.0) for w in basis.words])


def eta_fixed_residual(
    graph: Graph,
    q: DeformationParameter,
    radius: int,
    tolerance: Optional[float] = None,
) -> EigenvectorReport:
    """내부 좌표에서 λ_q(s)η = η 확인 (η 는 모든 p_s 의 상에 있음)"""
    tolerance = tolerance or get_settings().residual_tolerance
    basis = build_basis(graph, radius)
    eta = eta_vector(basis, q)
    interior = basis.interior(1)
    worst, worst_generator = 0.0, None
    for s in graph.vertices:
        image = build_lambda(graph, q, s, radius, False, basis).matrix @ eta
        residual = float(np.max(np.abs(image[interior] - eta[interior]))) if len(interior) else 0.0
        if worst_generator is None or residual > worst:
            worst, worst_generator = residual, s
    return EigenvectorReport(radius=radius, residual=worst, tolerance=tolerance, worst_generator=worst_generator)


def eta_norm_partial(n: int, q: Fraction, radius: int) -> EtaSeries:
    """Σ_{k≤L} s_k q^k 와 꼬리 한계 n(n-1)^L q^{L+1}/(1-(n-1)q)"""
    q = Fraction(q)
    if n < 2:
        raise DomainError(f"n = {n}: 생성원이 2개 이상이어야 합니다", details={"n": n})
    if not 0 < q <= 1:
        raise DomainError(f"q = {q} 는 (0, 1] 범위 밖입니다", details={"q": str(q)})
    ratio = (n - 1) * q
    if ratio >= 1:
        raise DivergenceError(
            f"(n-1)q = {ratio} ≥ 1 이므로 ‖η‖² 급수가 발산합니다",
            details={"n": n, "q": str(q)},
        )
    growth = free_product_growth(n, radius)
    partial = sum((s_k * q ** k for k, s_k in enumerate(growth)), start=Fraction(0))
    tail = n * (n - 1) ** radius * q ** (radius + 1) / (1 - ratio)
    return EtaSeries(
        n=n,
        q=q,
        radius=radius,
        partial_sum=partial,
        tail_bound=tail,
        closed_form=(1 + q) / (1 - ratio),
    )


def free_product_trace_checks(n: int, q: Fraction, radius: int) -> FreeProductTraceReport:
    """부분합으로 t̂ 와 φ̂(p_i) 를 추정하고 꼬리 한계에서 유도한 허용오차로 비교"""
    data = free_product_trace_data(n, q)
    series = eta_norm_partial(n, q, radius)

    partial = float(series.partial_sum)
    t_hat = 1.0 / partial
    # 1/P - 1/(P+T) ≤ T/P²
    t_tolerance = float(series.tail_bound) / partial ** 2 + 1e-15
    a = float(generator_value(data.q))
    phi_hat = (a - t_hat) / (1.0 - t_hat)
    # dφ/dt = (a-1)/(1-t)², t ≤ t̂
    phi_tolerance = (1.0 - a) * t_tolerance / (1.0 - t_hat) ** 2 + 1e-15

    report = FreeProductTraceReport(
        series=series,
        t_estimate=t_hat,
        t_target=data.t,
        t_tolerance=t_tolerance,
        phi_estimate=phi_hat,
        phi_target=data.phi_value,
        phi_tolerance=phi_tolerance,
    )
    logger.debug("free_product_trace_checks", n=n, q=str(q), radius=radius, passed=report.passed)
    return report
