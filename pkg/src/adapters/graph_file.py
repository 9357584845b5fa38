"""그래프 파일 어댑터

형식 (UTF-8):

    # 주석
    vertices a b c
    edge a b
    edge b c
"""
from pathlib import Path
from typing import List, Set, Tuple

from src.core.entities.graph import Graph
from src.core.exceptions import GraphParseError
from src.core.ports.graph_source_port import GraphSourcePort
from src.shared.logging import LoggerMixin


def parse_graph(text: str) -> Graph:
    """그래프 파일 내용을 Graph 로 변환 (꼭짓점은 파일 순서, 변은 중복 제거)"""
    vertices: List[str] = []
    declared: Set[str] = set()
    edges: List[Tuple[str, str]] = []
    seen_vertices_line = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *tokens = line.split()

        if keyword == "vertices":
            if not tokens:
                raise GraphParseError("vertices 줄에 꼭짓점이 없습니다", line=number)
            for label in tokens:
                if label in declared:
                    raise GraphParseError(f"꼭짓점 {label} 가 중복 선언되었습니다", line=number)
                declared.add(label)
                vertices.append(label)
            seen_vertices_line = True
        elif keyword == "edge":
            if not seen_vertices_line:
                raise GraphParseError("edge 줄이 vertices 줄보다 앞에 있습니다", line=number)
            if len(tokens) != 2:
                raise GraphParseError(f"edge 줄에는 꼭짓점 두 개가 필요합니다: {line!r}", line=number)
            u, v = tokens
            for label in (u, v):
                if label not in declared:
                    raise GraphParseError(f"알 수 없는 꼭짓점: {label}", line=number)
            if u == v:
                raise GraphParseError(f"자기 루프 {u}-{v} 는 허용되지 않습니다", line=number)
            edges.append((u, v))
        else:
            raise GraphParseError(f"알 수 없는 지시어: {keyword}", line=number)

    if not vertices:
        raise GraphParseError("vertices 줄이 없습니다")
    return Graph.from_pairs(vertices, edges)


class GraphFileAdapter(GraphSourcePort, LoggerMixin):
    """파일 경로에서 그래프를 읽는 어댑터"""

    def load(self, source: str) -> Graph:
        """UTF-8 파일 읽기"""
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise GraphParseError(f"그래프 파일을 읽을 수 없습니다: {source} ({e.strerror})") from e
        except UnicodeDecodeError as e:
            raise GraphParseError(f"그래프 파일이 UTF-8 이 아닙니다: {source} (바이트 {e.start})") from e
        graph = parse_graph(text)
        self.logger.debug("graph_loaded", path=str(path), vertices=len(graph), edges=len(graph.edges))
        return graph
