"""공용 테스트 픽스처"""
from pathlib import Path
from typing import Callable

import pytest

from src.core.entities.graph import Graph
from src.core.usecases import corpus
from src.shared.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """테스트마다 환경 변수 기반 설정을 새로 읽기"""
    for name in ("HECKE_ELEMENT_CAP", "HECKE_LOG_LEVEL", "HECKE_LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def path3() -> Graph:
    """a–b–c"""
    return Graph.from_pairs("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_pairs("abc", [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def edgeless3() -> Graph:
    return corpus.edgeless(3)


@pytest.fixture
def path_plus_isolated() -> Graph:
    return corpus.path_plus_isolated()


@pytest.fixture
def two_disjoint_edges() -> Graph:
    return corpus.two_disjoint_edges()


@pytest.fixture
def graph_file(tmp_path) -> Callable[[str, str], str]:
    """그래프 파일을 임시 디렉터리에 쓰고 경로를 반환"""
    def write(name: str, text: str) -> str:
        path = Path(tmp_path) / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
