"""
완전 탐색과 공식 기반 개수 세기
강의실 타블로 집합을 직접 나열하고, 행렬식 / 갈고리-내용 / SYT / 들뜬 도형 공식과 교차 검증합니다.
"""

import itertools
import logging
import math
import random
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from models.errors import IdentityError, ParameterError
from models.report import CountReport, ProbabilityCheck
from models.settings import Settings, get_settings
from models.shapes import Cell, Partition, SkewShape, cells, excited_diagrams, hook
from models.tableau import INF, Mark, MarkedTableau, Tableau, TableauClass, rules_for

logger = logging.getLogger(__name__)

Candidates = Callable[[Cell, Dict[Cell, object]], Iterable]


def _require_n(shape: SkewShape, n: int) -> None:
    if n < 1:
        raise ParameterError(f"n은 양의 정수여야 합니다: {n}")
    if shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}이(가) n={n}보다 큽니다.")


def _require_m(m: int) -> None:
    if m < 0:
        raise ParameterError(f"m은 0 이상이어야 합니다: {m}")


# 백트래킹

def _backtrack(shape: SkewShape, candidates: Candidates) -> Iterator[Dict[Cell, object]]:
    """행 우선 순서로 칸을 채우는 깊이 우선 탐색"""
    order = cells(shape)
    entries: Dict[Cell, object] = {}

    def _walk(k: int):
        if k == len(order):
            yield dict(entries)
            return
        cell = order[k]
        for value in candidates(cell, entries):
            entries[cell] = value
            yield from _walk(k + 1)
        entries.pop(cell, None)

    yield from _walk(0)


def _count_leaves(shape: SkewShape, candidates: Candidates) -> int:
    order = cells(shape)
    entries: Dict[Cell, object] = {}

    def _walk(k: int) -> int:
        if k == len(order):
            return 1
        cell = order[k]
        total = 0
        for value in candidates(cell, entries):
            entries[cell] = value
            total += _walk(k + 1)
        entries.pop(cell, None)
        return total

    return _walk(0)


def _lht_candidates(n: int, m: int) -> Candidates:
    """LHT_{n,m} 후보값: 표시 상한과 왼쪽 / 위 이웃의 교차 곱셈 상한"""
    def candidates(cell: Cell, entries: Dict[Cell, object]) -> range:
        bound = n + cell.content
        top = m * bound - 1
        left = entries.get(Cell(cell.row, cell.col - 1))
        if left is not None:
            top = min(top, left * bound // (bound - 1))
        up = entries.get(Cell(cell.row - 1, cell.col))
        if up is not None:
            top = min(top, (up * bound - 1) // (bound + 1))
        return range(top + 1)
    return candidates


def _semistandard_candidates(cap: Callable[[Cell], int]) -> Candidates:
    """행은 약감소, 열은 강감소, 칸마다 0 ≤ T < cap(cell)"""
    def candidates(cell: Cell, entries: Dict[Cell, object]) -> range:
        top = cap(cell) - 1
        left = entries.get(Cell(cell.row, cell.col - 1))
        if left is not None:
            top = min(top, left)
        up = entries.get(Cell(cell.row - 1, cell.col))
        if up is not None:
            top = min(top, up - 1)
        return range(top + 1)
    return candidates


def _filtered_candidates(cls: TableauClass, n: int, pool: Callable[[Cell], Iterable]) -> Candidates:
    """클래스 규칙으로 후보 풀을 거르는 일반 형태 (표시 타블로용)"""
    cell_ok, row_ok, col_ok = rules_for(cls, n, None)

    def candidates(cell: Cell, entries: Dict[Cell, object]) -> Iterator:
        left, up = Cell(cell.row, cell.col - 1), Cell(cell.row - 1, cell.col)
        for value in pool(cell):
            if not cell_ok(cell, value):
                continue
            if left in entries and not row_ok(left, entries[left], value):
                continue
            if up in entries and not col_ok(up, entries[up], value):
                continue
            yield value
    return candidates


def iter_lht(shape: SkewShape, n: int, m: int) -> Iterator[Tableau]:
    _require_n(shape, n)
    _require_m(m)
    for entries in _backtrack(shape, _lht_candidates(n, m)):
        yield Tableau.from_entries(shape, entries)


def enumerate_lht(shape: SkewShape, n: int, m: int) -> List[Tableau]:
    """LHT_{n,m}(λ/μ) 전체 (행 우선 사전식 순서)"""
    return list(iter_lht(shape, n, m))


def count_lht_brute(shape: SkewShape, n: int, m: int) -> int:
    """타블로를 만들지 않고 탐색 트리의 잎만 셈"""
    _require_n(shape, n)
    _require_m(m)
    return _count_leaves(shape, _lht_candidates(n, m))


def iter_ssct(shape: SkewShape, n: int) -> Iterator[Tableau]:
    _require_n(shape, n)
    candidates = _semistandard_candidates(lambda cell: n + cell.content)
    for entries in _backtrack(shape, candidates):
        yield Tableau.from_entries(shape, entries)


def enumerate_ssct(shape: SkewShape, n: int, method: str = "direct") -> List[Tableau]:
    """SSCT_n(λ/μ) 전체

    method="direct"는 칸 상한 0 ≤ T < n+c로 직접 탐색하고,
    method="lht"는 LHT_{n,1}로 얻습니다. 두 구현은 서로의 검증 기준입니다.
    """
    if method == "lht":
        return enumerate_lht(shape, n, 1)
    if method != "direct":
        raise ParameterError(f"알 수 없는 방법입니다: {method}")
    return list(iter_ssct(shape, n))


def iter_ssyt(shape: SkewShape, n: int) -> Iterator[Tableau]:
    _require_n(shape, n)
    candidates = _semistandard_candidates(lambda cell: n)
    for entries in _backtrack(shape, candidates):
        yield Tableau.from_entries(shape, entries)


def enumerate_ssyt(shape: SkewShape, n: int) -> List[Tableau]:
    return list(iter_ssyt(shape, n))


def iter_ct(shape: SkewShape, n: int) -> Iterator[Tableau]:
    """CT_n(λ/μ): 0 ≤ T(i,j) < n+c인 모든 채우기"""
    _require_n(shape, n)
    candidates: Candidates = lambda cell, entries: range(n + cell.content)
    for entries in _backtrack(shape, candidates):
        yield Tableau.from_entries(shape, entries)


def enumerate_ct(shape: SkewShape, n: int) -> List[Tableau]:
    return list(iter_ct(shape, n))


def iter_syt(shape: SkewShape) -> Iterator[Tableau]:
    """감소 규약의 SYT: N, N-1, ..., 1을 차례로 μ에서 자라는 분할의 바깥 모서리에 놓음"""
    total = shape.size
    lam = shape.outer
    rows = [shape.inner.part(i) for i in range(1, lam.length + 1)]
    entries: Dict[Cell, int] = {}

    def _walk(value: int):
        if value == 0:
            yield Tableau.from_entries(shape, entries)
            return
        for i in range(1, lam.length + 1):
            col = rows[i - 1] + 1
            if col > lam.part(i) or (i > 1 and rows[i - 2] < col):
                continue
            rows[i - 1] = col
            entries[Cell(i, col)] = value
            yield from _walk(value - 1)
            del entries[Cell(i, col)]
            rows[i - 1] = col - 1

    yield from _walk(total)


def enumerate_syt(shape: SkewShape) -> List[Tableau]:
    return list(iter_syt(shape))


def iter_st(shape: SkewShape) -> Iterator[Tableau]:
    """ST(λ/μ): 1..|λ/μ|를 한 번씩 쓰는 모든 채우기 (순서 조건 없음)"""
    order = cells(shape)
    for perm in itertools.permutations(range(1, len(order) + 1)):
        yield Tableau.from_entries(shape, dict(zip(order, perm)))


def enumerate_st(shape: SkewShape) -> List[Tableau]:
    return list(iter_st(shape))


def _mark_pool(n: int, marks: Sequence[Mark]) -> Callable[[Cell], List[Tuple[int, Mark]]]:
    return lambda cell: [(a, r) for r in marks for a in range(n + cell.content)]


def default_marks(p: int) -> Tuple[Mark, ...]:
    """유한 표시 알파벳 {0, ..., p-1, ∞}"""
    return tuple(range(p)) + (INF,)


def iter_extended_lht(shape: SkewShape, n: int, marks: Sequence[Mark] = default_marks(2)) -> Iterator[MarkedTableau]:
    """주어진 표시 알파벳 안의 LHT*_n(λ/μ)"""
    _require_n(shape, n)
    candidates = _filtered_candidates(TableauClass.EXTENDED_LHT, n, _mark_pool(n, marks))
    for entries in _backtrack(shape, candidates):
        yield MarkedTableau.from_entries(shape, entries)


def enumerate_extended_lht(shape: SkewShape, n: int, marks: Sequence[Mark] = default_marks(2)) -> List[MarkedTableau]:
    return list(iter_extended_lht(shape, n, marks))


def iter_marked_ssct(shape: SkewShape, n: int, marks: Sequence[Mark] = default_marks(2)) -> Iterator[MarkedTableau]:
    """주어진 표시 알파벳 안의 SSCT*_n(λ/μ)"""
    _require_n(shape, n)
    candidates = _filtered_candidates(TableauClass.MARKED_SSCT, n, _mark_pool(n, marks))
    for entries in _backtrack(shape, candidates):
        yield MarkedTableau.from_entries(shape, entries)


def enumerate_marked_ssct(shape: SkewShape, n: int, marks: Sequence[Mark] = default_marks(2)) -> List[MarkedTableau]:
    return list(iter_marked_ssct(shape, n, marks))


# 행 단위 전이 DP

class SSCTCounter:
    """|SSCT_n(λ/μ)|를 행 단위 전이로 세고 균등 표본을 뽑음

    상태는 (행 번호, 바로 위 행의 채우기)이며 결과는 메모이즈됩니다.
    """

    def __init__(self, shape: SkewShape, n: int):
        _require_n(shape, n)
        self.shape = shape
        self.n = n
        self._fillings: Dict[Tuple[int, Tuple[int, ...]], List[Tuple[int, ...]]] = {}
        self._counts: Dict[Tuple[int, Tuple[int, ...]], int] = {}

    def _row_fillings(self, i: int, above: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        key = (i, above)
        if key in self._fillings:
            return self._fillings[key]
        columns = list(self.shape.row_range(i))
        above_start = self.shape.inner.part(i - 1)
        results: List[Tuple[int, ...]] = []

        def _build(k: int, prefix: Tuple[int, ...]):
            if k == len(columns):
                results.append(prefix)
                return
            j = columns[k]
            top = self.n + j - i - 1
            if prefix:
                top = min(top, prefix[-1])
            if i > 1 and j > above_start:
                top = min(top, above[j - above_start - 1] - 1)
            for value in range(top, -1, -1):
                _build(k + 1, prefix + (value,))

        _build(0, ())
        self._fillings[key] = results
        return results

    def count(self, i: int = 1, above: Tuple[int, ...] = ()) -> int:
        if i > self.shape.length:
            return 1
        key = (i, above)
        if key not in self._counts:
            self._counts[key] = sum(self.count(i + 1, row) for row in self._row_fillings(i, above))
        return self._counts[key]

    def sample(self, rng: random.Random) -> Tableau:
        """SSCT_n(λ/μ)에서 균등하게 하나"""
        if self.count() == 0:
            raise ParameterError(f"모양 {self.shape}, n={self.n}에는 SSCT가 없습니다.")
        rows: List[Tuple[int, ...]] = []
        above: Tuple[int, ...] = ()
        for i in range(1, self.shape.length + 1):
            pick = rng.randrange(self.count(i, above))
            for row in self._row_fillings(i, above):
                weight = self.count(i + 1, row)
                if pick < weight:
                    break
                pick -= weight
            rows.append(row)
            above = row
        return Tableau.of(self.shape, rows)


def count_ssct(shape: SkewShape, n: int) -> int:
    return SSCTCounter(shape, n).count()


# 공식

def _bareiss(matrix: List[List[int]]) -> int:
    """정수 행렬식 (Bareiss 무분수 소거)"""
    size = len(matrix)
    if size == 0:
        return 1
    m = [list(row) for row in matrix]
    sign, previous = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[size - 1][size - 1]


def binomial_matrix(shape: SkewShape, n: int) -> List[List[int]]:
    """(C(λ_i+n-i, μ_j+n-j))_{i,j ≤ ℓ(λ)}"""
    lam, mu = shape.outer, shape.inner
    size = lam.length
    return [
        [math.comb(lam.part(i) + n - i, mu.part(j) + n - j) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]


def count_det(shape: SkewShape, n: int) -> int:
    """|LHT_{n,1}(λ/μ)| = det(C(λ_i+n-i, μ_j+n-j))"""
    _require_n(shape, n)
    return _bareiss(binomial_matrix(shape, n))


def count_lht(shape: SkewShape, n: int, m: int) -> int:
    _require_m(m)
    return m ** shape.size * count_det(shape, n)


def _content_product(shape: SkewShape, n: int) -> int:
    return math.prod(n + cell.content for cell in cells(shape))


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IdentityError(f"{what} 값이 정수가 아닙니다: {numerator}/{denominator}")
    return quotient


def count_hook_content(lam: Partition, n: int) -> int:
    """|SSCT_n(λ)| = Π (n+c) / h (곧은 모양)"""
    shape = SkewShape(outer=lam)
    _require_n(shape, n)
    numerator = _content_product(shape, n)
    denominator = math.prod(hook(lam, cell) for cell in cells(shape))
    return _exact_div(numerator, denominator, "갈고리-내용 공식")


def count_straight_lht(lam: Partition, n: int, m: int) -> int:
    """곧은 모양: |LHT_{n,m}(λ)| = m^{|λ|} · 갈고리-내용 값"""
    _require_m(m)
    return m ** lam.size * count_hook_content(lam, n)


def count_syt(shape: SkewShape) -> int:
    """|SYT(λ/μ)|: 곧은 모양은 갈고리 길이 공식, 스큐 모양은 Aitken 행렬식

    Aitken 행렬식은 i행에 (λ_i+ℓ-i)!을 곱해 정수 행렬로 만든 뒤 마지막에 나눕니다.
    """
    total = shape.size
    lam, mu = shape.outer, shape.inner
    if shape.is_straight:
        hooks = math.prod(hook(lam, cell) for cell in cells(shape))
        return _exact_div(math.factorial(total), hooks, "갈고리 길이 공식")
    size = lam.length
    tops = [lam.part(i) + size - i for i in range(1, size + 1)]
    bottoms = [mu.part(j) + size - j for j in range(1, size + 1)]
    matrix = [
        [math.perm(a, b) if a >= b else 0 for b in bottoms]
        for a in tops
    ]
    numerator = math.factorial(total) * _bareiss(matrix)
    return _exact_div(numerator, math.prod(math.factorial(a) for a in tops), "Aitken 행렬식")


def count_naruse(shape: SkewShape, n: int, m: int) -> int:
    """m^{|λ/μ|} Π(n+c) Σ_D Π_{x ∈ λ∖D} 1/h(x)"""
    _require_n(shape, n)
    _require_m(m)
    lam = shape.outer
    all_cells = cells(SkewShape(outer=lam))
    hooks = {cell: hook(lam, cell) for cell in all_cells}
    total = Fraction(0)
    for diagram in excited_diagrams(lam, shape.inner):
        total += Fraction(1, math.prod(hooks[cell] for cell in all_cells if cell not in diagram.cells))
    value = total * m ** shape.size * _content_product(shape, n)
    if value.denominator != 1:
        raise IdentityError(f"들뜬 도형 합이 정수가 아닙니다: {value}")
    return value.numerator


def count_report(shape: SkewShape, n: int, m: int, settings: Optional[Settings] = None) -> CountReport:
    """적용 가능한 모든 방법으로 |LHT_{n,m}(λ/μ)|를 세어 비교

    완전 탐색은 예상 잎 수 m^{|λ/μ|}·det가 brute_max_states 이하일 때만 수행합니다.
    """
    _require_n(shape, n)
    _require_m(m)
    settings = settings or get_settings()
    counts: Dict[str, int] = {}
    skipped: Dict[str, str] = {}

    det = count_det(shape, n)
    counts["determinant"] = m ** shape.size * det
    predicted = counts["determinant"]
    if predicted <= settings.brute_max_states:
        counts["brute_force"] = count_lht_brute(shape, n, m)
    else:
        skipped["brute_force"] = f"예상 상태 수 {predicted} > {settings.brute_max_states}"
    if shape.is_straight:
        counts["hook_content"] = count_straight_lht(shape.outer, n, m)
    else:
        skipped["hook_content"] = "μ ≠ ∅"
    counts["syt_formula"] = _exact_div(
        m ** shape.size * _content_product(shape, n) * count_syt(shape),
        math.factorial(shape.size),
        "SYT 공식",
    )
    counts["naruse"] = count_naruse(shape, n, m)

    report = CountReport(shape=shape, n=n, m=m, counts=counts, skipped=skipped)
    if not report.agreement:
        logger.warning("개수 불일치: %s n=%d m=%d %s", shape, n, m, counts)
    return report


def verify_probability(shape: SkewShape, n: int) -> ProbabilityCheck:
    """무작위 CT가 SSCT일 확률과 무작위 ST가 SYT일 확률 비교"""
    _require_n(shape, n)
    lhs = Fraction(count_ssct(shape, n), _content_product(shape, n))
    rhs = Fraction(count_syt(shape), math.factorial(shape.size))
    return ProbabilityCheck(lhs=lhs, rhs=rhs)
