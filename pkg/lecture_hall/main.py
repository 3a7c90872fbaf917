"""
강의실 타블로 도구 CLI 메인 파일
개수 세기, 나열, 항등식 검증, 정렬, 경로 내보내기, 전개, 표본 추출 명령을 등록합니다.
"""

import argparse
import logging
import sys
from typing import List, Optional

from commands import count, enumerate as enumerate_command, expand, paths, sample, sort, verify
from commands.common import EXIT_USAGE, report_error
from models.errors import LectureHallError
from models.settings import get_settings

logger = logging.getLogger(__name__)

COMMANDS = (count, enumerate_command, verify, sort, paths, expand, sample)


class CliParser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 1로 보고하는 파서"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: 오류: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="lecture-hall", description="강의실 타블로 계산 및 검증 도구")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="로그 상세도 (-v: INFO, -vv: DEBUG)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(verbose: int, trace: bool = False) -> None:
    """로그는 표준 오류로만 보냄 (표준 출력은 결과 전용)"""
    level = get_settings().log_level
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    if trace:
        logging.getLogger("lecture_hall.trace").setLevel(logging.INFO)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configure_logging(args.verbose, getattr(args, "trace", False))
        return args.func(args)
    except LectureHallError as e:
        logger.debug("명령 실패", exc_info=True)
        return report_error(e)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
