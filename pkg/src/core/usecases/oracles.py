"""독립 전수 탐색 오라클 (재현 스위트와 테스트의 교차 검증용)

빠른 알고리즘과 공유하는 코드가 없도록 정의 그대로 계산한다.
"""
from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, Set, Tuple

from src.core.entities.graph import Graph
from src.core.entities.word import Word


def brute_force_clique_count(graph: Graph) -> int:
    """모든 부분집합 중 완전 부분그래프의 수 (공집합 포함)"""
    count = 0
    for size in range(len(graph) + 1):
        for subset in combinations(graph.vertices, size):
            if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                count += 1
    return count


def rewriting_closure(letters: Tuple[int, ...], graph: Graph) -> Set[Tuple[int, ...]]:
    """인접 교환 (st -> ts, 변이 있을 때) 과 ss -> e 삭제로 도달 가능한 모든 단어"""
    seen = {letters}
    queue = deque([letters])
    while queue:
        word = queue.popleft()
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                successor = word[:i] + word[i + 2:]
            elif graph.has_edge(graph.vertices[a], graph.vertices[b]):
                successor = word[:i] + (b, a) + word[i + 2:]
            else:
                continue
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return seen


def rewriting_normal_form(labels: Iterable[str], graph: Graph) -> Word:
    """폐포에서 ShortLex 최소 단어 (교환과 삭제만으로 기약 단어에 도달한다)"""
    letters = tuple(graph.index(label) for label in labels)
    return Word(min(rewriting_closure(letters, graph), key=lambda w: (len(w), w)))


@lru_cache(maxsize=4096)
def _multiples_mod_one(y: Fraction, bound: int) -> FrozenSet[Fraction]:
    return frozenset((m * y) % 1 for m in range(-bound, bound + 1))


def lattice_contains(x: Fraction, y: Fraction, bound: int) -> bool:
    """x ∈ Z + yZ 를 |m| ≤ bound 인 정수 m 탐색으로 확인"""
    return Fraction(x) % 1 in _multiples_mod_one(Fraction(y), bound)


def lattice_subgroup_equal(x: Fraction, y: Fraction, bound: int) -> bool:
    """Z + xZ = Z + yZ 를 두 방향 포함으로 확인"""
    return lattice_contains(x, y, bound) and lattice_contains(y, x, bound)
