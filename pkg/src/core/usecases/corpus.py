"""검증용 그래프 모음: 무변 그래프, 경로, 순환, 완전 그래프, 같은 K-이론을 갖는 예제, 난수 그래프"""
import random
from itertools import combinations
from typing import Dict, List, Optional

from src.core.entities.graph import Graph


def _labels(n: int) -> List[str]:
    return [f"s{i}" for i in range(1, n + 1)]


def edgeless(n: int) -> Graph:
    """Z/2Z^{*n} (자유곱)"""
    return Graph.from_pairs(_labels(n))


def path(n: int) -> Graph:
    labels = _labels(n)
    return Graph.from_pairs(labels, zip(labels, labels[1:]))


def cycle(n: int) -> Graph:
    labels = _labels(n)
    return Graph.from_pairs(labels, zip(labels, labels[1:] + labels[:1]))


def complete(n: int) -> Graph:
    """(Z/2Z)^n"""
    labels = _labels(n)
    return Graph.from_pairs(labels, combinations(labels, 2))


def path_plus_isolated() -> Graph:
    """a–b–c 와 고립점 d: ((Z/2Z * Z/2Z) ⊕ Z/2Z) * Z/2Z"""
    return Graph.from_pairs("abcd", [("a", "b"), ("b", "c")])


def two_disjoint_edges() -> Graph:
    """a–b, c–d: (Z/2Z)² * (Z/2Z)²"""
    return Graph.from_pairs("abcd", [("a", "b"), ("c", "d")])


def random_graph(n: int, rng: random.Random, density: Optional[float] = None) -> Graph:
    """각 변을 확률 density 로 고른 난수 그래프"""
    density = rng.random() if density is None else density
    labels = _labels(n)
    return Graph.from_pairs(labels, [pair for pair in combinations(labels, 2) if rng.random() < density])


def random_graphs(count: int, seed: int, max_vertices: int = 12) -> List[Graph]:
    """시드 고정 난수 그래프 목록 (꼭짓점 1..max_vertices)"""
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_vertices), rng) for _ in range(count)]


def named_corpus() -> Dict[str, Graph]:
    """이름 붙은 고정 그래프 모음"""
    corpus: Dict[str, Graph] = {}
    for n in range(1, 7):
        corpus[f"edgeless{n}"] = edgeless(n)
    for n in range(2, 7):
        corpus[f"path{n}"] = path(n)
    for n in range(3, 7):
        corpus[f"cycle{n}"] = cycle(n)
    for n in range(1, 6):
        corpus[f"complete{n}"] = complete(n)
    corpus["path3_plus_isolated"] = path_plus_isolated()
    corpus["two_disjoint_edges"] = two_disjoint_edges()
    return corpus
