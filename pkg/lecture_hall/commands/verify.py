"""
verify 명령: 항등식 일괄 검증
모양 λ/μ (|λ| ≤ --max-size), n (ℓ(λ) ≤ n ≤ --max-n) 등의 모든 조합을 사례로 만들어
SweepManager로 실행하고, 사례마다 한 줄씩 결과를 출력합니다.
"""

import argparse
import random
from typing import Callable, Iterator, List, Optional, Tuple

from commands.common import EXIT_FAILED, EXIT_OK, add_format_argument, non_negative, positive
from enumeration import count_report, default_marks, enumerate_extended_lht, enumerate_lht, enumerate_marked_ssct, enumerate_ssct, verify_probability
from jdt import msort, vsort
from lattice_paths import (
    content_paths_to_ssct,
    lht_to_paths,
    omega_paths_to_pair,
    pair_to_omega_paths,
    paths_to_lht,
    ssct_to_content_paths,
)
from models.report import CaseResult
from models.shapes import SkewShape, iter_partitions, iter_skew_shapes, iter_subpartitions
from models.sparse_poly import SparsePoly, VarTruncation
from models.tableau import floor_tableau, plain_weight, weight
from polynomials import L_poly, S_poly, jacobi_trudi_L, jacobi_trudi_S, main_identity_sides, verify_schur_shift
from sweep_runner import Case, SweepManager

IDENTITIES = ("main", "jacobi-trudi", "probability", "schur-shift", "bijection", "paths", "counts")

Outcome = Tuple[bool, Optional[str]]


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="항등식 일괄 검증")
    parser.add_argument("identity", choices=IDENTITIES, help="검증할 항등식")
    parser.add_argument("--max-size", type=non_negative, default=3, help="|λ| 상한 (기본값: 3)")
    parser.add_argument("--max-n", type=positive, default=1, help="n 상한 (기본값: 1)")
    parser.add_argument("--trunc-x", type=positive, default=1, help="x 절단 p를 1..P로 순회 (기본값: 1)")
    parser.add_argument("--max-m", type=positive, default=2, help="m을 순회할 상한 (기본값: 2)")
    parser.add_argument("--seed", type=int, default=0, help="무작위 대입 검사의 시드 (기본값: 0)")
    parser.add_argument("--threads", type=positive, help="작업 스레드 수 (기본값: LHK_THREADS)")
    add_format_argument(parser, default="text")
    parser.set_defaults(func=handle)


def _params(**values) -> Tuple[Tuple[str, str], ...]:
    return tuple((name, str(value)) for name, value in values.items())


def _shapes_with_n(max_size: int, max_n: int) -> Iterator[Tuple[SkewShape, int]]:
    """모든 λ/μ (|λ| ≤ max_size)와 max(ℓ(λ), 1) ≤ n ≤ max_n"""
    for shape in iter_skew_shapes(max_size, max_length=max_n):
        for n in range(max(shape.length, 1), max_n + 1):
            yield shape, n


def _difference(lhs: SparsePoly, rhs: SparsePoly) -> Outcome:
    diff = lhs - rhs
    if diff.is_zero():
        return True, None
    (xexp, yexp), coeff = diff.terms()[0]
    return False, f"{SparsePoly.monomial(xexp, yexp).to_text()} 계수 차이 {coeff}"


# 사례별 검사

def _check_main(shape: SkewShape, n: int, trunc: VarTruncation, seed: int) -> Outcome:
    lhs, rhs = main_identity_sides(shape, n, trunc)
    ok, witness = _difference(lhs, rhs)
    if not ok:
        return ok, witness
    # 작은 정수 대입으로 한 번 더 확인
    rng = random.Random(seed)
    xs = [rng.randint(-3, 3) for _ in range(trunc.p)]
    ys = [rng.randint(-3, 3) for _ in range(n + shape.outer.part(1))]
    left, right = lhs.evaluate(xs, ys), rhs.evaluate(xs, ys)
    if left != right:
        return False, f"x={xs}, y={ys}에서 {left} != {right}"
    return True, None


def _check_jacobi_trudi(shape: SkewShape, n: int, trunc: VarTruncation) -> Outcome:
    ok, witness = _difference(jacobi_trudi_L(shape, n, trunc), L_poly(shape, n, trunc))
    if not ok:
        return False, f"L: {witness}"
    ok, witness = _difference(jacobi_trudi_S(shape, n), S_poly(shape, n))
    return ok, None if ok else f"S: {witness}"


def _check_probability(shape: SkewShape, n: int) -> Outcome:
    check = verify_probability(shape, n)
    return check.equal, None if check.equal else f"{check.lhs} != {check.rhs}"


def _check_bijection(shape: SkewShape, n: int) -> Outcome:
    marks = default_marks(2)
    for lht in enumerate_extended_lht(shape, n, marks):
        sorted_tableau = vsort(lht, n)
        if weight(sorted_tableau) != weight(lht):
            return False, f"vsort가 무게를 바꿈: {lht.to_text()!r}"
        if msort(sorted_tableau, n) != lht:
            return False, f"msort(vsort(L)) != L: {lht.to_text()!r}"
    for ssct in enumerate_marked_ssct(shape, n, marks):
        if vsort(msort(ssct, n), n) != ssct:
            return False, f"vsort(msort(S)) != S: {ssct.to_text()!r}"
    return True, None


def _check_paths(shape: SkewShape, n: int) -> Outcome:
    for lht in enumerate_lht(shape, n, 2):
        system = lht_to_paths(lht, n)
        if paths_to_lht(system, n, shape) != lht:
            return False, f"LHT 경로 왕복 실패: {lht.rows}"
        if system.weight() != plain_weight(floor_tableau(lht, n), "x"):
            return False, f"LHT 경로 무게 불일치: {lht.rows}"
    for ssct in enumerate_ssct(shape, n):
        system = ssct_to_content_paths(ssct, n)
        if content_paths_to_ssct(system, n, shape) != ssct:
            return False, f"SSCT 경로 왕복 실패: {ssct.rows}"
        if system.weight() != plain_weight(ssct, "y"):
            return False, f"SSCT 경로 무게 불일치: {ssct.rows}"
    for nu in iter_subpartitions(shape.outer, shape.inner):
        lower, upper = SkewShape(outer=shape.outer, inner=nu), SkewShape(outer=nu, inner=shape.inner)
        for lht in enumerate_lht(lower, n, 2):
            for ssct in enumerate_ssct(upper, n):
                system = pair_to_omega_paths(lht, ssct, n)
                if omega_paths_to_pair(system, n, shape) != (nu, lht, ssct):
                    return False, f"ω-경로 왕복 실패: ν={nu}, L={lht.rows}, S={ssct.rows}"
                expected = plain_weight(floor_tableau(lht, n), "x") * plain_weight(ssct, "y")
                if system.weight() != expected:
                    return False, f"ω-경로 무게 불일치: ν={nu}"
    return True, None


def _check_counts(shape: SkewShape, n: int, m: int) -> Outcome:
    report = count_report(shape, n, m)
    return report.agreement, None if report.agreement else str(report.counts)


# 사례 생성

def build_cases(args: argparse.Namespace) -> List[Case]:
    cases: List[Case] = []

    def add(params, check: Callable[[], Outcome]) -> None:
        cases.append((args.identity, params, check))

    if args.identity == "schur-shift":
        for size in range(args.max_size + 1):
            for lam in iter_partitions(size, max_length=args.max_n):
                for n in range(max(lam.length, 1), args.max_n + 1):
                    for m in range(1, args.max_m + 1):
                        add(_params(lam=lam, n=n, m=m),
                            lambda lam=lam, n=n, m=m: _outcome(verify_schur_shift(lam, n, m)))
        return cases

    for shape, n in _shapes_with_n(args.max_size, args.max_n):
        if args.identity in ("main", "jacobi-trudi"):
            for p in range(1, args.trunc_x + 1):
                trunc = VarTruncation(p=p)
                if args.identity == "main":
                    seed = args.seed + len(cases)
                    add(_params(shape=shape, n=n, p=p),
                        lambda shape=shape, n=n, trunc=trunc, seed=seed: _check_main(shape, n, trunc, seed))
                else:
                    add(_params(shape=shape, n=n, p=p),
                        lambda shape=shape, n=n, trunc=trunc: _check_jacobi_trudi(shape, n, trunc))
        elif args.identity == "probability":
            add(_params(shape=shape, n=n), lambda shape=shape, n=n: _check_probability(shape, n))
        elif args.identity == "bijection":
            add(_params(shape=shape, n=n), lambda shape=shape, n=n: _check_bijection(shape, n))
        elif args.identity == "paths":
            add(_params(shape=shape, n=n), lambda shape=shape, n=n: _check_paths(shape, n))
        else:
            for m in range(args.max_m + 1):
                add(_params(shape=shape, n=n, m=m), lambda shape=shape, n=n, m=m: _check_counts(shape, n, m))
    return cases


def _outcome(check) -> Outcome:
    return check.ok, check.witness


def handle(args: argparse.Namespace) -> int:
    cases = build_cases(args)

    def _print(result: CaseResult) -> None:
        if args.format == "json":
            print(result.model_dump_json(), flush=True)
        else:
            print(result.describe(), flush=True)

    manager = SweepManager(args.threads)
    results = manager.run_sync(cases, _print)
    failures = len(manager.failures)
    if args.format == "text":
        print(f"# {args.identity}: 사례 {len(results)}개, 실패 {failures}개")
    return EXIT_OK if failures == 0 else EXIT_FAILED
