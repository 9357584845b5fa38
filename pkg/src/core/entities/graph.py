"""교환 그래프 도메인 엔티티"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from src.core.exceptions import DomainError

Edge = FrozenSet[str]


@dataclass(frozen=True)
class Graph:
    """유한 단순 그래프 (꼭짓점 순서 = 입력 순서 = 생성원 순서)"""
    vertices: Tuple[str, ...]
    edges: FrozenSet[Edge] = frozenset()
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("꼭짓점이 중복되었습니다", details={"vertices": list(vertices)})

        index = {v: i for i, v in enumerate(vertices)}
        edges = set()
        for edge in self.edges:
            pair = frozenset(edge)
            if len(pair) != 2:
                raise DomainError("자기 루프는 허용되지 않습니다", details={"edge": sorted(pair)})
            unknown = [v for v in pair if v not in index]
            if unknown:
                raise DomainError(f"알 수 없는 꼭짓점: {unknown[0]}", details={"vertex": unknown[0]})
            edges.add(pair)

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_pairs(cls, vertices: Iterable[str], pairs: Iterable[Tuple[str, str]] = ()) -> "Graph":
        """꼭짓점 목록과 변 쌍으로 생성"""
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def __len__(self) -> int:
        return len(self.vertices)

    def is_empty(self) -> bool:
        return not self.vertices

    def index(self, vertex: str) -> int:
        """꼭짓점의 전역 순서 번호"""
        try:
            return self._index[vertex]
        except KeyError:
            raise DomainError(f"알 수 없는 꼭짓점: {vertex}", details={"vertex": vertex}) from None

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, vertex: str) -> Tuple[str, ...]:
        """이웃 꼭짓점 (전역 순서)"""
        self.index(vertex)
        return tuple(w for w in self.vertices if w != vertex and self.has_edge(vertex, w))

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def sorted_edges(self) -> Tuple[Tuple[str, str], ...]:
        """결정적 순서의 변 목록"""
        pairs = [tuple(sorted(e, key=self.index)) for e in self.edges]
        return tuple(sorted(pairs, key=lambda p: (self.index(p[0]), self.index(p[1]))))

    def require_nonempty(self) -> "Graph":
        """교환 그래프로 쓰일 때는 꼭짓점이 하나 이상이어야 함"""
        if self.is_empty():
            raise DomainError("교환 그래프는 비어 있을 수 없습니다")
        return self

    def to_networkx(self) -> nx.Graph:
        """networkx 그래프로 변환"""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.sorted_edges())
        return g


@dataclass(frozen=True)
class Clique:
    """클리크 (공집합 포함, 전역 꼭짓점 순서로 저장)"""
    vertices: Tuple[str, ...] = ()

    @classmethod
    def of(cls, graph: Graph, members: Iterable[str]) -> "Clique":
        """그래프 순서로 정렬한 클리크 생성 (클리크 조건 검사)"""
        ordered = tuple(sorted(set(members), key=graph.index))
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if not graph.has_edge(u, v):
                    raise DomainError(
                        f"클리크가 아닙니다: {u}-{v} 변이 없습니다",
                        details={"members": list(ordered)},
                    )
        return cls(ordered)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def is_empty(self) -> bool:
        return not self.vertices

    def sort_key(self, graph: Graph) -> Tuple[int, Tuple[int, ...]]:
        """(크기, 사전순) 정렬 키"""
        return len(self.vertices), tuple(graph.index(v) for v in self.vertices)

    def label(self) -> str:
        return "{" + ",".join(self.vertices) + "}"
