"""서비스 계층의 Result 타입 (Success | Failure)

서비스는 HeckeError를 던지는 대신 Failure에 담아 돌려주고,
CLI는 Failure.exit_code로 종료 상태를 결정한다.
"""
from dataclasses import dataclass
from typing import Callable, Generic, TypeVar, Union

from src.core.exceptions import HeckeError, exit_code_for

T = TypeVar('T')


@dataclass(frozen=True)
class Success(Generic[T]):
    value: T

    def is_success(self) -> bool:
        return True

    def is_failure(self) -> bool:
        return False

    def get_value(self) -> T:
        return self.value

    def get_error(self) -> None:
        return None


@dataclass(frozen=True)
class Failure(Generic[T]):
    error: HeckeError

    def is_success(self) -> bool:
        return False

    def is_failure(self) -> bool:
        return True

    def get_value(self) -> None:
        return None

    def get_error(self) -> HeckeError:
        return self.error

    @property
    def exit_code(self) -> int:
        return exit_code_for(self.error)


Result = Union[Success[T], Failure[T]]


def try_catch(fn: Callable[[], T]) -> Result[T]:
    """도메인 예외(HeckeError)만 Failure로 감싼다; 그 외 예외는 그대로 전파"""
    try:
        return Success(fn())
    except HeckeError as e:
        return Failure(e)
