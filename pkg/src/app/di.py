"""의존성 주입 설정"""
from dataclasses import dataclass
from typing import Optional

from src.adapters.graph_file import GraphFileAdapter
from src.core.ports.graph_source_port import GraphSourcePort
from src.services.invariant_service import InvariantService
from src.services.reproduce_service import ReproduceService
from src.shared.config import Settings, get_settings
from src.shared.logging import get_logger

logger = get_logger(__name__)


@dataclass
class Container:
    """명령 실행에 필요한 구성 요소 묶음"""
    settings: Settings
    graph_source: GraphSourcePort
    invariant_service: InvariantService
    reproduce_service: ReproduceService


def get_graph_source() -> GraphSourcePort:
    """그래프 입력 포트 구현체"""
    return GraphFileAdapter()


def build_container(element_cap: Optional[int] = None) -> Container:
    """설정과 서비스 조립 (--element-cap 이 환경 변수보다 우선)"""
    settings = get_settings()
    if element_cap is not None:
        # 캐시된 설정을 갱신해야 유스케이스 내부의 get_settings() 에도 반영된다
        settings.element_cap = element_cap
        logger.debug("element_cap_override", element_cap=element_cap)
    graph_source = get_graph_source()
    return Container(
        settings=settings,
        graph_source=graph_source,
        invariant_service=InvariantService(graph_source, settings),
        reproduce_service=ReproduceService(settings),
    )
