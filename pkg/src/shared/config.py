"""애플리케이션 설정"""
import os
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """애플리케이션 설정"""

    model_config = SettingsConfigDict(
        env_prefix="HECKE_",
        # .env 파일이 있는 경우에만 읽기
        env_file=".env" if os.path.exists(".env") else None,
        case_sensitive=False,
        extra="ignore",
    )

    # 탐색 한도
    element_cap: int = Field(default=2_000_000, gt=0)
    witness_candidate_cap: int = Field(default=10_000_000, gt=0)

    # 수치 검증
    residual_tolerance: float = Field(default=1e-12, gt=0)
    default_radius: int = Field(default=4, ge=1)
    series_radius: int = Field(default=30, ge=0)

    # 재현 스위트
    random_graph_count: int = Field(default=200, ge=0)
    random_seed: int = Field(default=20201)

    # 로깅
    log_level: str = Field(default="WARNING")
    log_format: str = Field(default="console", pattern="^(console|json)$")


@lru_cache()
def get_settings() -> Settings:
    """설정 인스턴스를 반환 (싱글톤)"""
    return Settings()
