"""
paths 명령: 타블로를 비교차 경로 시스템으로 내보내기
"""

import argparse

from commands.common import EXIT_OK, add_format_argument, load_tableau, positive
from lattice_paths import export_paths, lht_to_paths, pair_to_omega_paths, ssct_to_content_paths
from models.errors import ParameterError
from models.tableau import MarkedTableau, Tableau, split_extended


def register(subparsers) -> None:
    parser = subparsers.add_parser("paths", help="경로 시스템 내보내기 (JSON / DOT)")
    parser.add_argument("kind", choices=("lht", "ssct", "omega"),
                        help="lht: 강의실 그래프, ssct: 내용 그래프, omega: 확장 LHT의 ω-경로")
    parser.add_argument("tableau", help="타블로 JSON 파일 경로 ('-'이면 표준 입력)")
    parser.add_argument("--n", type=positive, required=True, help="매개변수 n")
    add_format_argument(parser, choices=("json", "dot"))
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    tableau = load_tableau(args.tableau)
    if args.kind == "omega":
        if not isinstance(tableau, MarkedTableau):
            raise ParameterError("omega 경로에는 표시 타블로(확장 LHT)가 필요합니다.")
        _, lht, ssct = split_extended(tableau, args.n)
        system = pair_to_omega_paths(lht, ssct, args.n)
    else:
        if not isinstance(tableau, Tableau):
            raise ParameterError(f"{args.kind} 경로에는 일반 타블로가 필요합니다.")
        build = lht_to_paths if args.kind == "lht" else ssct_to_content_paths
        system = build(tableau, args.n)
    print(export_paths(system, args.format))
    return EXIT_OK
