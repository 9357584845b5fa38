"""도메인 예외 계층"""
from typing import Any, Dict, Optional


class HeckeError(Exception):
    """헤케 불변량 계산 기본 예외"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class GraphParseError(HeckeError):
    """그래프 파일 파싱 에러"""

    def __init__(self, message: str, line: Optional[int] = None, details: Optional[Dict[str, Any]] = None):
        if line is not None:
            message = f"{line}번째 줄: {message}"
        super().__init__(message, details)
        self.line = line


class DomainError(HeckeError):
    """전제 조건 위반 (알 수 없는 꼭짓점, 범위 밖의 q 등)"""
    pass


class UnsupportedRegimeError(DomainError):
    """경계 영역 (q = 1/(n-1)) 불변량 요청"""
    pass


class DivergenceError(DomainError):
    """NonSimple 영역 밖에서 η 급수 요청"""
    pass


class CapacityError(HeckeError):
    """원소 수 / 탐색 공간 한도 초과"""

    def __init__(self, message: str, limit: int, requested: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, {"limit": limit, "requested": requested, **(details or {})})
        self.limit = limit
        self.requested = requested


class UsageError(HeckeError):
    """명령행 인자 오류"""
    pass


EXIT_SUCCESS = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def exit_code_for(error: HeckeError) -> int:
    """예외 타입을 종료 코드로 변환"""

    # 에러 타입별 종료 코드 매핑
    error_type_mapping = {
        GraphParseError: EXIT_USAGE_ERROR,
        UsageError: EXIT_USAGE_ERROR,
    }

    for error_type, code in error_type_mapping.items():
        if isinstance(error, error_type):
            return code
    return EXIT_DOMAIN_ERROR
