"""그래프 파일 파서 단위 테스트"""
import pytest

from src.adapters.graph_file import GraphFileAdapter, parse_graph
from src.core.entities.graph import Graph
from src.core.exceptions import GraphParseError


class TestParseGraph:
    """parse_graph"""

    def test_path(self, path3):
        assert parse_graph("vertices a b c\nedge a b\nedge b c") == path3

    def test_edgeless(self):
        graph = parse_graph("vertices a b c")
        assert graph.vertices == ("a", "b", "c")
        assert not graph.edges

    def test_comments_and_blank_lines(self, path3):
        text = "# path\n\nvertices a b c  # three\nedge a b\n\nedge b c\n"
        assert parse_graph(text) == path3

    def test_duplicate_edges_collapse(self):
        graph = parse_graph("vertices a b\nedge a b\nedge b a")
        assert len(graph.edges) == 1

    @pytest.mark.parametrize(
        "text, line",
        [
            ("vertices a\nedge a a", 2),
            ("vertices a b\nedge a z", 2),
            ("vertices a b a", 1),
            ("edge a b\nvertices a b", 1),
            ("vertices a b\nedge a", 2),
            ("vertices a\nloop a", 2),
            ("vertices", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(GraphParseError) as exc_info:
            parse_graph(text)
        assert exc_info.value.line == line
        assert exc_info.value.message.startswith(f"{line}번째 줄")

    def test_no_vertices(self):
        with pytest.raises(GraphParseError):
            parse_graph("# nothing here\n")


class TestGraphFileAdapter:
    """파일 어댑터"""

    def test_load(self, graph_file, path3):
        path = graph_file("path3.graph", "vertices a b c\nedge a b\nedge b c\n")
        assert GraphFileAdapter().load(path) == path3

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphParseError):
            GraphFileAdapter().load(str(tmp_path / "missing.graph"))

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "binary.graph"
        path.write_bytes(b"\xff\xfevertices a b\n")
        with pytest.raises(GraphParseError) as exc_info:
            GraphFileAdapter().load(str(path))
        assert "UTF-8" in exc_info.value.message

    def test_returns_graph_entity(self, graph_file):
        assert isinstance(GraphFileAdapter().load(graph_file("g.graph", "vertices x")), Graph)
