"""구조화된 로깅 유틸리티"""
import logging
import sys
from typing import Optional

import structlog
from structlog.typing import FilteringBoundLogger

from src.shared.config import get_settings

_configured = False


def configure_logging(level: Optional[str] = None, log_format: Optional[str] = None) -> None:
    """structlog 설정 (표준 에러로 출력, 표준 출력은 보고서 전용)"""
    global _configured

    settings = get_settings()
    level_name = (level or settings.log_level).upper()
    renderer_name = log_format or settings.log_format

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if renderer_name == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, level_name, logging.WARNING)
        ),
        # 호출 시점의 sys.stderr 를 사용 (테스트 캡처와 호환)
        logger_factory=lambda *args: structlog.PrintLogger(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str) -> FilteringBoundLogger:
    """로거 인스턴스 반환"""
    if not _configured:
        configure_logging()
    return structlog.get_logger(name)


class LoggerMixin:
    """로거 믹스인 클래스"""

    @property
    def logger(self) -> FilteringBoundLogger:
        """인스턴스 로거 반환"""
        if not hasattr(self, "_logger"):
            self._logger = get_logger(self.__class__.__name__)
        return self._logger
