"""
공통 테스트 설정
lecture_hall 디렉토리를 import 경로에 추가하고, 고정 데이터 로더와 설정 초기화를 제공합니다.
"""

import json
import sys
from pathlib import Path

import pytest
import sympy
from hypothesis import HealthCheck, settings

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "lecture_hall"))

from models.settings import ENV_VARS, reset_settings  # noqa: E402
from models.sparse_poly import SparsePoly  # noqa: E402

FIXTURES = Path(__file__).resolve().parent / "fixtures"

# 모든 테스트에 설정 초기화 fixture가 자동 적용되므로 해당 health check는 끔
settings.register_profile(
    "lecture_hall",
    suppress_health_check=[HealthCheck.function_scoped_fixture],
    deadline=None,
)
settings.load_profile("lecture_hall")


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """테스트마다 LHK_* 환경 변수를 비우고 설정을 다시 읽게 함"""
    for env_name in ENV_VARS.values():
        monkeypatch.delenv(env_name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def fixture_path():
    def _path(name: str) -> Path:
        return FIXTURES / name
    return _path


@pytest.fixture
def load_fixture():
    def _load(name: str) -> dict:
        return json.loads((FIXTURES / name).read_text(encoding="utf-8"))
    return _load


def to_sympy(poly: SparsePoly, xs, ys):
    """SparsePoly를 sympy 식으로 (xs, ys는 sympy 기호 목록)"""
    total = sympy.Integer(0)
    for (xexp, yexp), coeff in poly.terms():
        term = sympy.Integer(coeff)
        for i, e in enumerate(xexp):
            term *= xs[i] ** e
        for j, e in enumerate(yexp):
            term *= ys[j] ** e
        total += term
    return sympy.expand(total)


@pytest.fixture(scope="session")
def symbols():
    """(x_0..x_9, y_0..y_19) sympy 기호와 변환 함수"""
    xs = sympy.symbols("x0:10")
    ys = sympy.symbols("y0:20")
    return xs, ys, lambda poly: to_sympy(poly, xs, ys)
