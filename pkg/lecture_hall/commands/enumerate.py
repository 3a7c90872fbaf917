"""
enumerate 명령: 주어진 클래스의 타블로 나열
"""

import argparse
import itertools
import logging

from commands.common import (
    EXIT_OK,
    add_format_argument,
    add_shape_arguments,
    dump_json,
    non_negative,
    positive,
    shape_from_args,
    tableau_text,
)
from enumeration import (
    default_marks,
    iter_ct,
    iter_extended_lht,
    iter_lht,
    iter_marked_ssct,
    iter_ssct,
    iter_ssyt,
    iter_st,
    iter_syt,
)
from models.errors import ParameterError
from models.settings import get_settings
from models.tableau import TableauClass

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="타블로 나열")
    parser.add_argument("--class", dest="cls", choices=[c.value for c in TableauClass],
                        default=TableauClass.LHT.value, help="타블로 클래스 (기본값: lht)")
    add_shape_arguments(parser)
    parser.add_argument("--n", type=positive, help="매개변수 n (syt, st 외에는 필수)")
    parser.add_argument("--m", type=non_negative, default=1, help="lht의 ⌊L⌋ < m 상한 (기본값: 1)")
    parser.add_argument("--marks", type=non_negative, default=2,
                        help="표시 클래스의 유한 표시 개수 p, 표시는 {0..p-1, ∞} (기본값: 2)")
    parser.add_argument("--limit", type=non_negative, help="출력할 최대 개수")
    add_format_argument(parser)
    parser.set_defaults(func=handle)


def _tableaux(cls: TableauClass, shape, n, args):
    if cls is TableauClass.LHT:
        return iter_lht(shape, n, args.m)
    if cls is TableauClass.SSCT:
        return iter_ssct(shape, n)
    if cls is TableauClass.SSYT:
        return iter_ssyt(shape, n)
    if cls is TableauClass.CT:
        return iter_ct(shape, n)
    if cls is TableauClass.SYT:
        return iter_syt(shape)
    if cls is TableauClass.ST:
        return iter_st(shape)
    if cls is TableauClass.EXTENDED_LHT:
        return iter_extended_lht(shape, n, default_marks(args.marks))
    return iter_marked_ssct(shape, n, default_marks(args.marks))


def handle(args: argparse.Namespace) -> int:
    shape = shape_from_args(args)
    cls = TableauClass(args.cls)
    if cls.needs_n and args.n is None:
        raise ParameterError(f"{cls.value} 클래스에는 --n이 필요합니다.")
    limit = get_settings().brute_max_cells
    if args.limit is None and shape.size > limit:
        raise ParameterError(
            f"|λ/μ|={shape.size}이(가) 완전 탐색 한도 {limit}칸을 넘습니다. --limit을 지정하세요."
        )

    tableaux = list(itertools.islice(_tableaux(cls, shape, args.n, args), args.limit))
    logger.info("%s %s: %d개", cls.value, shape, len(tableaux))
    if args.format == "json":
        print(dump_json([t.model_dump() for t in tableaux]))
    else:
        for index, tableau in enumerate(tableaux):
            if index:
                print()
            print(tableau_text(tableau))
        print(f"# {len(tableaux)}개")
    return EXIT_OK
