"""
sort 명령: 확장 LHT와 표시 SSCT 사이의 값 정렬 / 표시 정렬
"""

import argparse
import logging

from commands.common import EXIT_OK, add_format_argument, dump_json, load_tableau, positive
from jdt import TraceStep, msort, vsort
from models.errors import ParameterError
from models.tableau import MarkedTableau, to_marked

trace_logger = logging.getLogger("lecture_hall.trace")


def register(subparsers) -> None:
    parser = subparsers.add_parser("sort", help="vsort / msort 적용")
    parser.add_argument("direction", choices=("vsort", "msort"), help="정렬 방향")
    parser.add_argument("tableau", help="타블로 JSON 파일 경로 ('-'이면 표준 입력)")
    parser.add_argument("--n", type=positive, required=True, help="매개변수 n")
    parser.add_argument("--trace", action="store_true", help="jdt 이동을 표준 오류로 출력")
    parser.add_argument("--debug", action="store_true", help="라운드마다 중간 불변식 검사 (LHK_DEBUG와 같음)")
    add_format_argument(parser)
    parser.set_defaults(func=handle)


def _trace(step: TraceStep) -> None:
    trace_logger.info(step.describe())


def handle(args: argparse.Namespace) -> int:
    tableau = load_tableau(args.tableau)
    if not isinstance(tableau, MarkedTableau):
        if args.direction == "msort":
            raise ParameterError("msort에는 표시 타블로(표시 SSCT)가 필요합니다.")
        # 일반 LHT는 a_r 표시로 바꿔서 정렬
        tableau = to_marked(tableau, args.n)
    run = vsort if args.direction == "vsort" else msort
    result = run(tableau, args.n, debug=args.debug or None, trace=_trace if args.trace else None)
    if args.format == "json":
        print(dump_json(result.model_dump()))
    else:
        print(result.to_text())
    return EXIT_OK
