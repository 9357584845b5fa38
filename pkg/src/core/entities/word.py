"""Coxeter 군 원소 (ShortLex 정규형 단어)"""
from dataclasses import dataclass
from typing import Tuple

from src.core.entities.graph import Graph


@dataclass(frozen=True, order=True)
class Word:
    """ShortLex 정규형으로 저장된 군 원소 (글자 = 꼭짓점 번호)"""
    letters: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        """단어 길이 |w|"""
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def shortlex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return len(self.letters), self.letters

    def labels(self, graph: Graph) -> Tuple[str, ...]:
        """꼭짓점 이름으로 표시"""
        return tuple(graph.vertices[i] for i in self.letters)

    def render(self, graph: Graph) -> str:
        return " ".join(self.labels(graph)) if self.letters else "e"


IDENTITY = Word()
