"""
명령 공통 인자와 입출력
"""

import argparse
import json
import sys
from typing import Union

from pydantic import ValidationError

from models.errors import LectureHallError, ParameterError, ShapeError
from models.shapes import Partition, SkewShape
from models.tableau import MarkedTableau, Tableau

# 종료 코드
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


def add_shape_arguments(parser: argparse.ArgumentParser, skew: bool = True) -> None:
    parser.add_argument("--outer", required=True, help="바깥 분할 λ (예: 6,6,4,3)")
    if skew:
        parser.add_argument("--inner", default="0", help="안쪽 분할 μ (기본값: 빈 분할 0)")


def add_format_argument(parser: argparse.ArgumentParser, choices=("json", "text"), default: str = "json") -> None:
    parser.add_argument("--format", choices=choices, default=default, help=f"출력 형식 (기본값: {default})")


def shape_from_args(args: argparse.Namespace) -> SkewShape:
    return SkewShape.of(Partition.parse(args.outer), Partition.parse(getattr(args, "inner", "0")))


def non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수가 아닙니다: '{text}'")
    if value < 0:
        raise argparse.ArgumentTypeError(f"0 이상이어야 합니다: {value}")
    return value


def positive(text: str) -> int:
    value = non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("1 이상이어야 합니다: 0")
    return value


def read_json(path: str):
    """파일 (또는 '-'이면 표준 입력)에서 JSON 읽기"""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ParameterError(f"입력 파일을 읽을 수 없습니다: {e}") from e
    except json.JSONDecodeError as e:
        raise ParameterError(f"JSON 형식 오류: {e}") from e


def _is_marked(rows) -> bool:
    return any(not isinstance(entry, int) for row in rows for entry in row)


def load_tableau(path: str) -> Union[Tableau, MarkedTableau]:
    """{"shape": {...}, "rows": [...]} 형식의 타블로. 칸이 정수면 Tableau, {"a","r"}면 MarkedTableau"""
    data = read_json(path)
    if not isinstance(data, dict) or "shape" not in data or "rows" not in data:
        raise ParameterError('타블로 JSON에는 "shape"와 "rows"가 있어야 합니다.')
    model = MarkedTableau if _is_marked(data["rows"]) else Tableau
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ShapeError(e.errors()[0]["msg"].removeprefix("Value error, ")) from e


def dump_json(data) -> str:
    return json.dumps(data, ensure_ascii=False)


def tableau_text(tableau: Union[Tableau, MarkedTableau]) -> str:
    if isinstance(tableau, MarkedTableau):
        return tableau.to_text()
    lines = []
    for i, row in enumerate(tableau.rows, 1):
        pad = ["."] * tableau.shape.inner.part(i)
        lines.append(" ".join(pad + [str(value) for value in row]))
    return "\n".join(lines)


def report_error(e: LectureHallError) -> int:
    print(f"오류: {e}", file=sys.stderr)
    return EXIT_USAGE
