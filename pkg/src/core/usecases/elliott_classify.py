"""단일 매개변수 자유곱 Z/2Z^{*n}: 영역 판정, 비순서 Elliott 불변량, 분류 판정 절차

매개변수는 정확한 유리수로만 받는다. 무리수 q 에 대한 분기 (q1 = q2 로
귀결) 는 유리수 입력으로는 도달할 수 없으므로 부호화하지 않는다.
"""
from fractions import Fraction
from itertools import product
from math import gcd
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from src.core.entities.elliott import (
    AffineWitness,
    Classification,
    ClassificationVerdict,
    FreeProductTraceData,
    Regime,
    TraceSimplex,
    UnorderedElliottInvariant,
)
from src.core.exceptions import CapacityError, DomainError, UnsupportedRegimeError
from src.core.usecases.k_invariants import generator_value
from src.shared.config import get_settings
from src.shared.logging import get_logger

logger = get_logger(__name__)


def _require_rank(n: int) -> int:
    if n < 3:
        raise DomainError(f"n = {n}: 생성원이 3개 이상이어야 합니다", details={"n": n})
    return n


def _require_parameter(q: Fraction) -> Fraction:
    q = Fraction(q)
    if not 0 < q <= 1:
        raise DomainError(f"q = {q} 는 (0, 1] 범위 밖입니다", details={"q": str(q)})
    return q


def regime(n: int, q: Fraction) -> Regime:
    """q 와 1/(n-1) 의 정확한 비교"""
    _require_rank(n)
    q = _require_parameter(q)
    threshold = Fraction(1, n - 1)
    if q > threshold:
        return Regime.SIMPLE
    if q == threshold:
        return Regime.BOUNDARY
    return Regime.NON_SIMPLE


def free_product_trace_data(n: int, q: Fraction) -> FreeProductTraceData:
    """t = (1-(n-1)q)/(1+q), ‖η‖² = (1+q)/(1-(n-1)q), φ(p_i) = (n-1)/n"""
    if regime(n, q) is not Regime.NON_SIMPLE:
        raise DomainError(
            f"q = {q} 는 NonSimple 영역 (q < 1/{n - 1}) 이 아닙니다",
            details={"n": n, "q": str(q)},
        )
    q = Fraction(q)
    return FreeProductTraceData(
        n=n,
        q=q,
        t=(1 - (n - 1) * q) / (1 + q),
        eta_norm_sq=(1 + q) / (1 - (n - 1) * q),
        phi_value=Fraction(n - 1, n),
    )


def free_product_invariant(n: int, q: Fraction) -> UnorderedElliottInvariant:
    """비순서 Elliott 불변량 (경계 영역은 지원하지 않음)"""
    current = regime(n, q)
    q = Fraction(q)
    if current is Regime.SIMPLE:
        pairings = ((Fraction(1),) + (generator_value(q),) * n,)
        simplex = TraceSimplex.POINT
    elif current is Regime.NON_SIMPLE:
        phi = free_product_trace_data(n, q).phi_value
        pairings = (
            (Fraction(1),) * (n + 1),
            (Fraction(1),) + (phi,) * n,
        )
        simplex = TraceSimplex.INTERVAL
    else:
        raise UnsupportedRegimeError(
            f"경계 영역 q = 1/{n - 1} 의 불변량은 계산하지 않습니다",
            details={"n": n, "q": str(q)},
        )
    return UnorderedElliottInvariant(
        n=n,
        q=q,
        regime=current,
        trace_simplex=simplex,
        extremal_pairings=pairings,
    )


def order_in_Q_mod_Z(x: Fraction) -> int:
    """Q/Z 에서의 위수 = 기약분모"""
    return Fraction(x).denominator


def subgroup_equal(x: Fraction, y: Fraction) -> bool:
    """Z + xZ = Z + yZ (유리수에서는 기약분모가 같을 때)"""
    return order_in_Q_mod_Z(x) == order_in_Q_mod_Z(y)


def affine_orbit_same(x: Fraction, y: Fraction, n: int) -> bool:
    """x·1 과 y·1 이 GL_n(Z) ⋉ Z^n 의 같은 궤도인지 (x = y 또는 같은 위수)"""
    _require_rank(n)
    x, y = Fraction(x), Fraction(y)
    return x == y or order_in_Q_mod_Z(x) == order_in_Q_mod_Z(y)


def _det(rows: Sequence[Sequence[int]]) -> int:
    """ZZ 위의 정수 행렬식"""
    size = len(rows)
    matrix = DomainMatrix([[ZZ(e) for e in row] for row in rows], (size, size), ZZ)
    return int(matrix.det())


def _cofactors(rows: Sequence[Sequence[int]], n: int) -> List[int]:
    """n-1 개 행에 마지막 행을 붙였을 때의 여인수 벡터 (det = 마지막 행 · 여인수)"""
    sign = (-1) ** (n - 1)
    return [
        sign * (-1) ** j * _det([row[:j] + row[j + 1:] for row in rows])
        for j in range(n)
    ]


def affine_orbit_witness_search(
    x: Fraction,
    y: Fraction,
    n: int,
    entry_bound: int,
    candidate_cap: Optional[int] = None,
) -> Optional[AffineWitness]:
    """|성분| ≤ entry_bound 인 B (det = ±1) 와 정수 C 로 x·1 = C + B·(y·1) 을 찾는 전수 탐색

    찾지 못해도 존재하지 않는다는 증명은 아니다. B = I, B = -I 를 먼저 시도하고,
    그다음 행 단위로 열거한다. 각 행의 합 r 은 x - r·y ∈ Z 를 만족해야 하고,
    n-1 개 행이 정해지면 여인수 벡터가 원시적이어야 (gcd 1) 확장 가능하다.
    """
    _require_rank(n)
    x, y = Fraction(x), Fraction(y)
    cap = candidate_cap or get_settings().witness_candidate_cap

    identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for sign in ((1, -1) if entry_bound >= 1 else ()):
        shift = x - sign * y
        if shift.denominator == 1:
            matrix = tuple(tuple(sign * e for e in row) for row in identity)
            return AffineWitness(matrix=matrix, offset=(int(shift),) * n)

    entries = range(-entry_bound, entry_bound + 1)
    rows = [row for row in product(entries, repeat=n) if (x - sum(row) * y).denominator == 1]
    search_space = len(rows) ** n
    if search_space > cap:
        raise CapacityError(
            f"탐색 공간 {search_space} 이 한도 {cap} 를 넘습니다",
            limit=cap,
            requested=search_space,
        )

    examined = 0
    for head in product(rows, repeat=n - 1):
        examined += 1
        cofactors = _cofactors([list(r) for r in head], n)
        if gcd(*cofactors) != 1:
            continue
        for last in rows:
            examined += 1
            if abs(sum(a * b for a, b in zip(last, cofactors))) == 1:
                matrix = tuple(head) + (last,)
                offset = tuple(int(x - sum(row) * y) for row in matrix)
                logger.debug("witness_found", x=str(x), y=str(y), examined=examined)
                return AffineWitness(matrix=matrix, offset=offset)

    logger.debug("witness_not_found", x=str(x), y=str(y), entry_bound=entry_bound, examined=examined)
    return None


def classify_pair(n: int, q1: Fraction, q2: Fraction) -> Classification:
    """두 Hecke C*-대수의 K-이론적 분류 판정"""
    r1, r2 = regime(n, q1), regime(n, q2)
    q1, q2 = Fraction(q1), Fraction(q2)
    order1 = order_in_Q_mod_Z(generator_value(q1))
    order2 = order_in_Q_mod_Z(generator_value(q2))

    if r1 is not r2:
        verdict = ClassificationVerdict.REGIME_MISMATCH
    elif r1 is Regime.SIMPLE and order1 != order2:
        verdict = ClassificationVerdict.INVARIANT_MISMATCH
    else:
        # Simple 에서 위수 일치, NonSimple 은 q 와 무관, Boundary 는 q1 = q2 뿐
        verdict = ClassificationVerdict.INVARIANT_ISOMORPHIC

    logger.info("classify_pair", n=n, q1=str(q1), q2=str(q2), verdict=verdict.value)
    return Classification(
        n=n,
        q1=q1,
        q2=q2,
        regime1=r1,
        regime2=r2,
        order1=order1,
        order2=order2,
        verdict=verdict,
    )


def building_thickness_order(n: int, d: int) -> int:
    """q = 1/d 일 때 1/(1+q) = d/(d+1) 의 Q/Z 위수 (= d + 1)"""
    if d < 2:
        raise DomainError(f"두께 d = {d} 는 2 이상이어야 합니다", details={"d": d, "n": n})
    return order_in_Q_mod_Z(generator_value(Fraction(1, d)))


def recognised_thickness(n: int) -> List[Tuple[int, int]]:
    """d = 2..n-1 과 각 위수 (서로 모두 다름)"""
    _require_rank(n)
    return [(d, building_thickness_order(n, d)) for d in range(2, n)]
