"""
생성함수와 항등식 검증
L^n_{λ/μ}(x), S^n_{λ/μ}(y), Jacobi-Trudi 행렬식, 주 항등식과 Schur 전개를 정확한 정수 계수로 다룹니다.

x는 무한 변수열이므로 x_i (i ≥ p)를 0으로 두는 절단(VarTruncation) 위에서 비교합니다.
"""

import logging
import math
from typing import Dict, Optional, Sequence, Tuple, Union

from enumeration import count_lht, count_ssct, default_marks, enumerate_extended_lht, enumerate_marked_ssct, iter_lht, iter_ssct
from models.errors import IdentityError, ParameterError
from models.report import IdentityCheck
from models.shapes import Partition, SkewShape, iter_subpartitions
from models.sparse_poly import SparsePoly, VarTruncation, poly_sum
from models.tableau import floor_tableau, plain_weight, weight

logger = logging.getLogger(__name__)

Variable = Union[int, SparsePoly]


def _require_n(shape: SkewShape, n: int) -> None:
    if n < 1 or shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}, n={n}: 1 ≤ ℓ(λ) ≤ n 이어야 합니다.")


def _max_bound(shape: SkewShape, n: int) -> int:
    """이 모양의 SSCT 값이 가질 수 있는 상한 (y 변수 개수)"""
    return n + shape.outer.part(1) - 1 if shape.outer.length else 0


def h_poly(k: int, variables: Sequence[Variable]) -> SparsePoly:
    """완전 동차 다항식 h_k. 정수 변수는 y_j를 뜻함. k < 0이면 0"""
    if k < 0:
        return SparsePoly()
    table = [SparsePoly.constant(1)] + [SparsePoly()] * k
    for variable in variables:
        v = SparsePoly.y(variable) if isinstance(variable, int) else variable
        for t in range(1, k + 1):
            table[t] = table[t] + v * table[t - 1]
    return table[k]


def L_poly(shape: SkewShape, n: int, trunc: VarTruncation) -> SparsePoly:
    """Σ_{L ∈ LHT_n(λ/μ)} x^{⌊L⌋}, ⌊L⌋ < p인 항만 (완전 탐색)"""
    _require_n(shape, n)
    return poly_sum(plain_weight(floor_tableau(lht, n), "x") for lht in iter_lht(shape, n, trunc.p))


def S_poly(shape: SkewShape, n: int, trunc: Optional[VarTruncation] = None) -> SparsePoly:
    """Σ_{S ∈ SSCT_n(λ/μ)} y^S (완전 탐색)"""
    _require_n(shape, n)
    total = poly_sum(plain_weight(ssct, "y") for ssct in iter_ssct(shape, n))
    return total.truncate(trunc) if trunc is not None else total


def single_row_L(N: int, k: int, trunc: VarTruncation) -> SparsePoly:
    """한 행 닫힌 꼴 L^N_{(k)}(x) = |x|^k · C(N+k-1, k)"""
    if k < 0:
        return SparsePoly()
    return SparsePoly.x_sum(trunc.p) ** k * math.comb(N + k - 1, k)


def poly_det(matrix: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """다항식 행렬식 (첫 행부터 소행렬 전개, 남은 열 집합으로 메모이즈)"""
    size = len(matrix)
    memo: Dict[Tuple[int, ...], SparsePoly] = {}

    def _minor(row: int, columns: Tuple[int, ...]) -> SparsePoly:
        if row == size:
            return SparsePoly.constant(1)
        if columns in memo:
            return memo[columns]
        total = SparsePoly()
        for pos, col in enumerate(columns):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            term = entry * _minor(row + 1, columns[:pos] + columns[pos + 1:])
            total = total + term if pos % 2 == 0 else total - term
        memo[columns] = total
        return total

    return _minor(0, tuple(range(size)))


def jacobi_trudi_L(shape: SkewShape, n: int, trunc: VarTruncation) -> SparsePoly:
    """det(L^{μ_j+n-j+1}_{(λ_i-μ_j-i+j)}(x))"""
    _require_n(shape, n)
    lam, mu = shape.outer, shape.inner
    size = lam.length
    return poly_det([
        [single_row_L(mu.part(j) + n - j + 1, lam.part(i) - mu.part(j) - i + j, trunc) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ])


def jacobi_trudi_S(shape: SkewShape, n: int) -> SparsePoly:
    """det(h_{λ_i-μ_j-i+j}(y_0, ..., y_{μ_j+n-j}))"""
    _require_n(shape, n)
    lam, mu = shape.outer, shape.inner
    size = lam.length
    return poly_det([
        [
            h_poly(lam.part(i) - mu.part(j) - i + j, range(mu.part(j) + n - j + 1))
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ])


def _compare(lhs: SparsePoly, rhs: SparsePoly) -> IdentityCheck:
    diff = lhs - rhs
    if diff.is_zero():
        return IdentityCheck(ok=True)
    (xexp, yexp), coeff = diff.terms()[0]
    monomial = SparsePoly.monomial(xexp, yexp)
    return IdentityCheck(
        ok=False,
        witness=f"{monomial.to_text()}: 좌변 {lhs.coefficient(xexp, yexp)}, 우변 {rhs.coefficient(xexp, yexp)}",
    )


def shifted_y(bound: int, shift: SparsePoly) -> Dict[int, SparsePoly]:
    """y_j -> y_j + shift (j < bound) 대입표"""
    return {j: SparsePoly.y(j) + shift for j in range(bound)}


def main_identity_sides(shape: SkewShape, n: int, trunc: VarTruncation) -> Tuple[SparsePoly, SparsePoly]:
    """(S^n_{λ/μ}(|x|+y), Σ_ν L^n_{λ/ν}(x)·S^n_{ν/μ}(y))"""
    _require_n(shape, n)
    lhs = S_poly(shape, n).substitute(y=shifted_y(_max_bound(shape, n), SparsePoly.x_sum(trunc.p)))
    rhs = poly_sum(
        L_poly(SkewShape(outer=shape.outer, inner=nu), n, trunc) * S_poly(SkewShape(outer=nu, inner=shape.inner), n)
        for nu in iter_subpartitions(shape.outer, shape.inner)
    )
    if trunc.q is not None:
        lhs, rhs = lhs.truncate(trunc), rhs.truncate(trunc)
    return lhs, rhs


def verify_main_identity(shape: SkewShape, n: int, trunc: VarTruncation) -> IdentityCheck:
    """S^n_{λ/μ}(|x|+y) = Σ_{μ⊆ν⊆λ} L^n_{λ/ν}(x) S^n_{ν/μ}(y) 을 절단 위에서 비교"""
    lhs, rhs = main_identity_sides(shape, n, trunc)
    check = _compare(lhs, rhs)
    if not check:
        logger.warning("주 항등식 실패: %s n=%d p=%d (%s)", shape, n, trunc.p, check.witness)
    return check


def verify_entry_identity(i: int, j: int, shape: SkewShape, n: int, trunc: VarTruncation) -> IdentityCheck:
    """행렬 성분 항등식 h_t(y+|x|) = Σ_k h_k(y)·|x|^{t-k}·C(a+t, t-k)

    a = μ_j+n-j, t = λ_i-μ_j-i+j, 변수는 y_0..y_a.
    """
    _require_n(shape, n)
    size = shape.length
    if not (1 <= i <= size and 1 <= j <= size):
        raise ParameterError(f"성분 ({i}, {j})이(가) {size}×{size} 범위를 벗어납니다.")
    a = shape.inner.part(j) + n - j
    t = shape.outer.part(i) - shape.inner.part(j) - i + j
    width = SparsePoly.x_sum(trunc.p)
    variables = list(range(a + 1))
    lhs = h_poly(t, [SparsePoly.y(v) + width for v in variables])
    rhs = poly_sum(h_poly(k, variables) * width ** (t - k) * math.comb(a + t, t - k) for k in range(t + 1))
    return _compare(lhs, rhs)


def verify_single_row_split(N: int, k: int, trunc: VarTruncation) -> IdentityCheck:
    """L^N_{(k)}(x_0, x_1, ...) = Σ_j L^{N+j}_{(k-j)}(x_0) · L^N_{(j)}(x_1, x_2, ...)

    세 생성함수 모두 완전 탐색으로 구하고, 마지막 인자는 x 번호를 1씩 밀어 얻습니다.
    """
    if trunc.p < 1 or N < 1 or k < 0:
        raise ParameterError(f"N ≥ 1, k ≥ 0, p ≥ 1 이어야 합니다: N={N}, k={k}, p={trunc.p}")
    lhs = L_poly(SkewShape.of([k]), N, trunc)
    first = VarTruncation(p=1)
    rest = VarTruncation(p=trunc.p - 1)
    shift = {i: SparsePoly.x(i + 1) for i in range(trunc.p - 1)}
    rhs = poly_sum(
        L_poly(SkewShape.of([k - j]), N + j, first) * L_poly(SkewShape.of([j]), N, rest).substitute(x=shift)
        for j in range(k + 1)
    )
    return _compare(lhs, rhs)


def verify_factorization(shape: SkewShape, n: int, trunc: VarTruncation) -> IdentityCheck:
    """L^n_{λ/μ}(x) = |x|^{|λ/μ|} · |SSCT_n(λ/μ)|"""
    lhs = L_poly(shape, n, trunc)
    return _compare(lhs, SparsePoly.x_sum(trunc.p) ** shape.size * count_ssct(shape, n))


def verify_straight_corollary(lam: Partition, n: int, trunc: VarTruncation) -> IdentityCheck:
    """곧은 모양: L^n_λ(x) = |x|^{|λ|} · s_λ(1^n)"""
    shape = SkewShape(outer=lam)
    ones = (1,) * _max_bound(shape, n)
    schur_at_ones = S_poly(shape, n).evaluate(y=ones)
    return _compare(L_poly(shape, n, trunc), SparsePoly.x_sum(trunc.p) ** lam.size * schur_at_ones)


def extended_weight_sums(shape: SkewShape, n: int, p: int) -> Tuple[SparsePoly, SparsePoly]:
    """표시 {0..p-1, ∞} 안에서 (Σ_{LHT*} wt*, Σ_{SSCT*} wt*)"""
    marks = default_marks(p)
    return (
        poly_sum(weight(t) for t in enumerate_extended_lht(shape, n, marks)),
        poly_sum(weight(t) for t in enumerate_marked_ssct(shape, n, marks)),
    )


def verify_extended_weights(shape: SkewShape, n: int, p: int) -> IdentityCheck:
    return _compare(*extended_weight_sums(shape, n, p))


def _leading(poly: SparsePoly, n: int) -> Tuple[Tuple[int, ...], int]:
    """y 지수를 n자리로 채운 사전식 최대 단항식과 그 계수"""
    best = None
    for (xexp, yexp), coeff in poly.terms():
        if xexp or len(yexp) > n:
            raise IdentityError(f"y_0..y_{n - 1} 밖의 변수가 남았습니다: {poly.to_text()}")
        padded = tuple(yexp) + (0,) * (n - len(yexp))
        if best is None or padded > best[0]:
            best = (padded, coeff)
    return best


def schur_expand_shifted(lam: Partition, n: int, m: int) -> Dict[Partition, int]:
    """s_λ(m+y_0, ..., m+y_{n-1})를 Schur 기저로 전개

    사전식 최대 단항식 y^α를 골라 계수·s_α를 빼는 과정을 나머지가 0이 될 때까지 반복합니다.
    α가 분할이 아니면 대칭이 아닌 나머지이므로 IdentityError.
    """
    shape = SkewShape(outer=lam)
    _require_n(shape, n)
    if m < 0:
        raise ParameterError(f"m은 0 이상이어야 합니다: {m}")
    remainder = S_poly(shape, n).substitute(y=shifted_y(n, SparsePoly.constant(m)))
    schur_cache: Dict[Partition, SparsePoly] = {}
    coefficients: Dict[Partition, int] = {}
    while not remainder.is_zero():
        exps, coeff = _leading(remainder, n)
        if any(exps[k] < exps[k + 1] for k in range(n - 1)):
            raise IdentityError(f"나머지가 대칭이 아닙니다: 최고 단항식 지수 {exps}")
        alpha = Partition.of(exps)
        if alpha not in schur_cache:
            schur_cache[alpha] = S_poly(SkewShape(outer=alpha), n)
        remainder = remainder - schur_cache[alpha] * coeff
        coefficients[alpha] = coefficients.get(alpha, 0) + coeff
    return dict(sorted(coefficients.items(), key=lambda item: (-item[0].size, item[0].parts)))


def verify_schur_shift(lam: Partition, n: int, m: int) -> IdentityCheck:
    """Schur 전개 계수가 모든 μ ⊆ λ에 대해 |LHT_{n,m}(λ/μ)|와 같은지"""
    coefficients = schur_expand_shifted(lam, n, m)
    expected = {
        mu: count_lht(SkewShape(outer=lam, inner=mu), n, m)
        for mu in iter_subpartitions(lam)
    }
    expected = {mu: value for mu, value in expected.items() if value}
    if coefficients == expected:
        return IdentityCheck(ok=True)
    for mu in sorted(set(coefficients) | set(expected), key=lambda p: p.parts):
        if coefficients.get(mu, 0) != expected.get(mu, 0):
            return IdentityCheck(
                ok=False,
                witness=f"s_({mu}) 계수 {coefficients.get(mu, 0)}, 기대값 {expected.get(mu, 0)}",
            )
    return IdentityCheck(ok=False)
