"""
실행 설정 모듈
.env 파일과 환경 변수에서 스레드 수, 디버그 검증, 완전 탐색 한도를 읽습니다.
"""

import logging
import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from models.errors import ConfigError

logger = logging.getLogger(__name__)

# .env 파일 후보 위치 (앞에서부터 검색)
_current_file = Path(__file__).resolve()
_possible_paths = [
    _current_file.parent.parent.parent / ".env",  # 저장소 루트
    _current_file.parent.parent / ".env",          # lecture_hall/.env
    Path.cwd() / ".env",                           # 현재 작업 디렉토리
]

# 설정 필드 -> 환경 변수 이름
ENV_VARS: Dict[str, str] = {
    "threads": "LHK_THREADS",
    "debug_invariants": "LHK_DEBUG",
    "brute_max_cells": "LHK_BRUTE_MAX_CELLS",
    "brute_max_states": "LHK_BRUTE_MAX_STATES",
    "log_level": "LHK_LOG_LEVEL",
}

_LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


def _default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))


class Settings(BaseModel):
    """실행 설정"""
    model_config = ConfigDict(frozen=True)

    threads: int = Field(default_factory=_default_threads, ge=1)
    debug_invariants: bool = False
    brute_max_cells: int = Field(default=8, ge=0)
    brute_max_states: int = Field(default=1_000_000, ge=1)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.strip().upper()
        if value not in _LOG_LEVELS:
            raise ValueError(f"로그 레벨은 {', '.join(_LOG_LEVELS)} 중 하나여야 합니다.")
        return value


# 설정 초기화 플래그
_settings_initialized = False
_settings: Optional[Settings] = None


def _load_env_file() -> None:
    for env_path in _possible_paths:
        if env_path.exists():
            load_dotenv(env_path)
            logger.debug(".env 로드: %s", env_path)
            break
    else:
        load_dotenv()  # 기본 동작


def init_settings() -> Settings:
    """환경 변수에서 설정 초기화"""
    global _settings_initialized, _settings

    if _settings_initialized:
        return _settings

    _load_env_file()
    raw = {
        field: os.environ[env_name]
        for field, env_name in ENV_VARS.items()
        if os.environ.get(env_name, "").strip()
    }
    try:
        _settings = Settings(**raw)
    except ValidationError as exc:
        field = exc.errors()[0]["loc"][0]
        raise ConfigError(
            f"환경 변수 {ENV_VARS.get(field, field)} 값이 올바르지 않습니다: {exc.errors()[0]['msg']}"
        ) from exc

    _settings_initialized = True
    logger.debug("설정 초기화 완료: %s", _settings)
    return _settings


def get_settings() -> Settings:
    """설정 인스턴스 반환"""
    if not _settings_initialized:
        init_settings()
    return _settings


def reset_settings() -> None:
    """다음 get_settings() 호출 때 환경 변수를 다시 읽도록 초기화 (테스트용)"""
    global _settings_initialized, _settings
    _settings_initialized = False
    _settings = None
