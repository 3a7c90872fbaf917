"""
도메인 예외 정의
"""

from typing import Any, Optional


class LectureHallError(ValueError):
    """라이브러리에서 발생하는 모든 오류의 기반 클래스"""


class ShapeError(LectureHallError):
    """분할 또는 스큐 모양이 잘못된 경우"""


class ParameterError(LectureHallError):
    """n, m, 절단 변수 개수 등 매개변수가 허용 범위를 벗어난 경우"""


class InvalidTableauError(LectureHallError):
    """타블로가 요구된 클래스의 조건을 만족하지 않는 경우"""

    def __init__(self, message: str, verdict: Optional[Any] = None):
        super().__init__(message)
        self.verdict = verdict


class PathSystemError(LectureHallError):
    """경로 시스템의 끝점이 모양과 맞지 않거나 경로가 교차하는 경우"""


class IdentityError(LectureHallError):
    """정확한 계산 결과가 기대한 형태가 아닌 경우 (구현 오류 신호)"""


class ConfigError(LectureHallError):
    """환경 변수 값이 잘못된 경우"""
