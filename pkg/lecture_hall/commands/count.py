"""
count 명령: |LHT_{n,m}(λ/μ)|를 여러 방법으로 세어 비교
"""

import argparse

from commands.common import EXIT_FAILED, EXIT_OK, add_format_argument, add_shape_arguments, non_negative, positive, shape_from_args
from enumeration import count_report


def register(subparsers) -> None:
    parser = subparsers.add_parser("count", help="여러 공식과 완전 탐색으로 개수 비교")
    add_shape_arguments(parser)
    parser.add_argument("--n", type=positive, required=True, help="매개변수 n (ℓ(λ) ≤ n)")
    parser.add_argument("--m", type=non_negative, default=1, help="⌊L⌋ < m 상한 (기본값: 1)")
    add_format_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    report = count_report(shape_from_args(args), args.n, args.m)
    if args.format == "json":
        print(report.model_dump_json())
    else:
        print(f"shape {report.shape}  n={report.n}  m={report.m}")
        width = max(len(method) for method in report.counts)
        for method, value in report.counts.items():
            print(f"  {method:<{width}}  {value}")
        for method, reason in report.skipped.items():
            print(f"  {method:<{width}}  건너뜀 ({reason})")
        print(f"agreement: {'yes' if report.agreement else 'no'}")
    return EXIT_OK if report.agreement else EXIT_FAILED
