"""그래프 연산: 유도 부분그래프, Link/Star, 클리크 열거와 클리크 수 점화식"""
from collections import Counter
from typing import Callable, Dict, Iterable, List, Optional

import networkx as nx

from src.core.entities.graph import Clique, Graph
from src.core.exceptions import DomainError
from src.shared.logging import get_logger

logger = get_logger(__name__)

PivotRule = Callable[[Graph], str]


def induced_subgraph(graph: Graph, keep: Iterable[str]) -> Graph:
    """부분집합 위의 유도 부분그래프 (꼭짓점 순서 유지)"""
    keep = set(keep)
    for v in keep:
        graph.index(v)
    vertices = tuple(v for v in graph.vertices if v in keep)
    edges = frozenset(e for e in graph.edges if e <= keep)
    return Graph(vertices, edges)


def link(graph: Graph, vertex: str) -> Graph:
    """Link(v): 이웃들 위의 유도 부분그래프"""
    return induced_subgraph(graph, graph.neighbors(vertex))


def star(graph: Graph, vertex: str) -> Graph:
    """Star(v): 이웃들과 v 위의 유도 부분그래프"""
    return induced_subgraph(graph, graph.neighbors(vertex) + (vertex,))


def delete_vertex(graph: Graph, vertex: str) -> Graph:
    """Γ \\ v"""
    graph.index(vertex)
    return induced_subgraph(graph, (v for v in graph.vertices if v != vertex))


def enumerate_cliques(graph: Graph) -> List[Clique]:
    """공집합을 포함한 모든 클리크를 (크기, 사전순)으로 열거"""
    n = len(graph.vertices)
    adjacency = [
        frozenset(j for j in range(n) if graph.has_edge(graph.vertices[i], graph.vertices[j]))
        for i in range(n)
    ]

    found: List[tuple] = []

    def extend(current: tuple, candidates: frozenset) -> None:
        found.append(current)
        for i in sorted(candidates):
            extend(current + (i,), frozenset(j for j in candidates if j > i) & adjacency[i])

    extend((), frozenset(range(n)))
    found.sort(key=lambda c: (len(c), c))
    return [Clique(tuple(graph.vertices[i] for i in c)) for c in found]


def first_non_central_vertex(graph: Graph) -> str:
    """Star(v) ≠ Γ 인 첫 번째 꼭짓점"""
    for v in graph.vertices:
        if len(graph.neighbors(v)) + 1 < len(graph.vertices):
            return v
    raise DomainError("완전 그래프에는 피벗이 없습니다")


def clique_count_recursive(graph: Graph, pivot: Optional[PivotRule] = None) -> int:
    """N(Γ) = N(Link(v)) + N(Γ \\ v) 점화식으로 클리크 수 계산

    기본 규칙은 Star(v) ≠ Γ 인 첫 꼭짓점을 고르고, 완전 그래프는 2^|V| 로
    바로 끝낸다. ``pivot`` 을 주면 임의의 꼭짓점 선택 규칙을 쓸 수 있다
    (완전 그래프 단축 없이도 점화식은 성립한다).
    """
    memo: Dict[Graph, int] = {}

    def count(g: Graph) -> int:
        if g in memo:
            return memo[g]
        if g.is_empty():
            result = 1
        elif len(g) == 1:
            result = 2
        elif pivot is None and g.is_complete():
            result = 2 ** len(g)
        else:
            v = pivot(g) if pivot is not None else first_non_central_vertex(g)
            result = count(link(g, v)) + count(delete_vertex(g, v))
        memo[g] = result
        return result

    total = count(graph)
    logger.debug("clique_count_recursive", vertices=len(graph), count=total, subproblems=len(memo))
    return total


def max_clique_size(graph: Graph) -> int:
    """최대 클리크 크기"""
    return max(len(c) for c in enumerate_cliques(graph))


def clique_counts_by_size(graph: Graph) -> List[int]:
    """크기별 클리크 수 [c_0, c_1, ..., c_max]"""
    counts = Counter(len(c) for c in enumerate_cliques(graph))
    return [counts[k] for k in range(max(counts) + 1)]


def is_irreducible(graph: Graph) -> bool:
    """여그래프가 연결이면 기약 (W = <S1> ⊕ <S2> 분해 불가)"""
    graph.require_nonempty()
    return nx.is_connected(nx.complement(graph.to_networkx()))
