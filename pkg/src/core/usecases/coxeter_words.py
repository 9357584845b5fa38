"""직각 Coxeter 군의 단어 문제: ShortLex 정규형, 생성원 곱셈, 공 열거, 성장 수열"""
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.core.entities.graph import Graph
from src.core.entities.word import IDENTITY, Word
from src.core.exceptions import CapacityError, DomainError
from src.shared.config import get_settings
from src.shared.logging import get_logger

logger = get_logger(__name__)

Letters = Tuple[int, ...]


@lru_cache(maxsize=128)
def _commuting(graph: Graph) -> Tuple[FrozenSet[int], ...]:
    """번호 기준 교환 관계 (자기 자신은 포함하지 않음)"""
    return tuple(
        frozenset(graph.index(w) for w in graph.neighbors(v))
        for v in graph.vertices
    )


def _cancel_or_prepend(commuting: Tuple[FrozenSet[int], ...], letters: Letters, s: int) -> Tuple[Letters, int]:
    """기약 단어 w 에 대해 s·w 의 기약 단어와 길이 변화

    앞쪽 글자들이 모두 s 와 교환하는 s 가 있으면 그 s 를 지우고 (길이 -1),
    아니면 s 를 앞에 붙인다 (길이 +1).
    """
    for i, x in enumerate(letters):
        if x == s:
            return letters[:i] + letters[i + 1:], -1
        if x not in commuting[s]:
            break
    return (s,) + letters, +1


def _lex_least(commuting: Tuple[FrozenSet[int], ...], letters: Letters) -> Letters:
    """기약 단어의 교환 동치류에서 사전순 최소 대표원"""
    remaining = list(letters)
    result = []
    while remaining:
        best_pos = None
        for i, x in enumerate(remaining):
            if all(y in commuting[x] for y in remaining[:i]):
                if best_pos is None or x < remaining[best_pos]:
                    best_pos = i
        result.append(remaining.pop(best_pos))
    return tuple(result)


def normal_form(letters: Iterable[str], graph: Graph) -> Word:
    """생성원 이름 열의 ShortLex 정규형"""
    commuting = _commuting(graph)
    indices = [graph.index(label) for label in letters]
    reduced: Letters = ()
    for s in reversed(indices):
        reduced, _ = _cancel_or_prepend(commuting, reduced, s)
    return Word(_lex_least(commuting, reduced))


def mult_gen(word: Word, s: str, graph: Graph) -> Tuple[Word, int]:
    """s·w 의 정규형과 |sw| - |w| (항상 ±1)"""
    commuting = _commuting(graph)
    letters, delta = _cancel_or_prepend(commuting, word.letters, graph.index(s))
    return Word(_lex_least(commuting, letters)), delta


def _free_product_ball_size(n: int, radius: int, cap: int) -> int:
    """변이 없는 그래프의 |B(L)| = 1 + Σ n(n-1)^{k-1} (한도를 넘으면 그 시점의 값)"""
    total, layer = 1, n
    for k in range(1, radius + 1):
        if k > 1:
            layer *= n - 1
        total += layer
        if total > cap or layer == 0:
            break
    return total


def _projected_total(total: int, layer: int, previous: int, remaining: int, cap: int) -> int:
    """마지막 두 층의 비율로 남은 층들을 외삽한 크기 (한도를 넘는 순간 멈춤)"""
    if remaining <= 0 or layer <= previous:
        return total
    ratio = layer / previous
    projected, size = total, float(layer)
    for _ in range(remaining):
        size *= ratio
        projected += int(size)
        if projected > cap:
            break
    return projected


def _refuse(radius: int, cap: int, projected: int) -> CapacityError:
    return CapacityError(
        f"반지름 {radius} 의 공 크기 추정치 {projected} 가 한도 {cap} 를 넘습니다",
        limit=cap,
        requested=projected,
    )


def ball(graph: Graph, radius: int, element_cap: Optional[int] = None) -> List[Word]:
    """길이 ≤ L 인 모든 원소 (길이 우선, 같은 길이에서는 사전순)

    목록의 위치가 곧 절단 연산자의 기저 번호이다. 유한 군이면 빈 층에서 멈춘다.
    변이 없는 그래프는 닫힌 형태의 크기로 미리 거절하고, 그 밖의 그래프는
    실제 원소 수가 한도를 넘을 때 외삽한 크기와 함께 거절한다.
    """
    if radius < 0:
        raise DomainError(f"반지름 L = {radius} 는 0 이상이어야 합니다", details={"radius": radius})
    cap = element_cap or get_settings().element_cap
    commuting = _commuting(graph)
    n = len(graph.vertices)

    if n and not graph.edges:
        size = _free_product_ball_size(n, radius, cap)
        if size > cap:
            raise _refuse(radius, cap, size)

    words: List[Word] = [IDENTITY]
    layer: List[Letters] = [()]
    for k in range(radius):
        next_layer = set()
        for letters in layer:
            for s in range(n):
                product, delta = _cancel_or_prepend(commuting, letters, s)
                if delta > 0:
                    next_layer.add(_lex_least(commuting, product))
        if not next_layer:
            logger.debug("ball_saturated", radius=radius, saturated_at=k, elements=len(words))
            break
        total = len(words) + len(next_layer)
        if total > cap:
            raise _refuse(radius, cap, _projected_total(total, len(next_layer), len(layer), radius - k - 1, cap))
        layer = sorted(next_layer)
        words.extend(Word(letters) for letters in layer)

    logger.debug("ball_enumerated", radius=radius, elements=len(words))
    return words


def growth_sequence(graph: Graph, radius: int, element_cap: Optional[int] = None) -> List[int]:
    """[s_0, ..., s_L]: 길이가 정확히 k 인 원소 수"""
    counts = [0] * (radius + 1)
    for word in ball(graph, radius, element_cap):
        counts[word.length] += 1
    return counts


def free_product_growth(n: int, radius: int) -> List[int]:
    """Z/2Z^{*n} 의 성장 수열을 마지막 글자별 기약 단어 수로 계산 (공 열거 없음)"""
    if n < 1:
        raise DomainError(f"생성원 수 n = {n} 는 1 이상이어야 합니다", details={"n": n})
    counts = [1]
    ending = [1] * n if radius >= 1 else []
    for k in range(1, radius + 1):
        if k > 1:
            total = sum(ending)
            ending = [total - e for e in ending]
        counts.append(sum(ending))
    return counts
