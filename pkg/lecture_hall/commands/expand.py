"""
expand 명령: 생성함수와 이동된 Schur 함수의 전개
"""

import argparse

from commands.common import EXIT_OK, add_format_argument, add_shape_arguments, dump_json, non_negative, positive, shape_from_args
from models.errors import ParameterError
from models.sparse_poly import VarTruncation
from polynomials import L_poly, S_poly, jacobi_trudi_L, jacobi_trudi_S, schur_expand_shifted


def register(subparsers) -> None:
    parser = subparsers.add_parser("expand", help="다항식 전개 (schur-shift, L, S, jt-L, jt-S)")
    parser.add_argument("what", nargs="?", default="schur-shift",
                        choices=("schur-shift", "L", "S", "jt-L", "jt-S"), help="전개 대상 (기본값: schur-shift)")
    add_shape_arguments(parser)
    parser.add_argument("--n", type=positive, required=True, help="매개변수 n")
    parser.add_argument("--m", type=non_negative, default=1, help="schur-shift의 이동량 m (기본값: 1)")
    parser.add_argument("--trunc-x", type=non_negative, default=1, help="x 절단 p (기본값: 1)")
    parser.add_argument("--trunc-y", type=non_negative, help="y 절단 q (기본값: 절단 없음)")
    add_format_argument(parser)
    parser.set_defaults(func=handle)


def handle(args: argparse.Namespace) -> int:
    shape = shape_from_args(args)
    if args.what == "schur-shift":
        if not shape.is_straight:
            raise ParameterError("schur-shift는 곧은 모양 λ에만 정의됩니다.")
        coefficients = schur_expand_shifted(shape.outer, args.n, args.m)
        if args.format == "json":
            print(dump_json([{"mu": list(mu.parts), "coeff": str(c)} for mu, c in coefficients.items()]))
        else:
            for mu, c in coefficients.items():
                print(f"s_({mu})  {c}")
        return EXIT_OK

    trunc = VarTruncation(p=args.trunc_x, q=args.trunc_y)
    if args.what == "L":
        poly = L_poly(shape, args.n, trunc)
    elif args.what == "jt-L":
        poly = jacobi_trudi_L(shape, args.n, trunc)
    elif args.what == "S":
        poly = S_poly(shape, args.n, trunc)
    else:
        poly = jacobi_trudi_S(shape, args.n).truncate(trunc)
    print(dump_json(poly.to_json()) if args.format == "json" else poly.to_text())
    return EXIT_OK
