"""그래프 입력 포트 (인터페이스)"""
from abc import ABC, abstractmethod

from src.core.entities.graph import Graph


class GraphSourcePort(ABC):
    """교환 그래프 입력 인터페이스"""

    @abstractmethod
    def load(self, source: str) -> Graph:
        """source 로부터 그래프 읽기"""
        pass
