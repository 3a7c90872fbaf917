"""
sample 명령: LHT_{n,m}(λ/μ)에서 균등 표본 추출
"""

import argparse
import random

from commands.common import EXIT_OK, add_format_argument, add_shape_arguments, dump_json, non_negative, positive, shape_from_args, tableau_text
from jdt import sample_lht


def register(subparsers) -> None:
    parser = subparsers.add_parser("sample", help="균등한 무작위 LHT 추출")
    add_shape_arguments(parser)
    parser.add_argument("--n", type=positive, required=True, help="매개변수 n")
    parser.add_argument("--m", type=positive, default=1, help="⌊L⌋ < m 상한 (기본값: 1)")
    parser.add_argument("--count", type=non_negative, default=1, help="표본 개수 (기본값: 1)")
    parser.add_argument("--seed", type=int, help="난수 시드")
    add_format_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    shape = shape_from_args(args)
    rng = random.Random(args.seed)
    samples = [sample_lht(shape, args.n, args.m, rng) for _ in range(args.count)]
    if args.format == "json":
        print(dump_json([t.model_dump() for t in samples]))
    else:
        print("\n\n".join(tableau_text(t) for t in samples))
    return EXIT_OK
