"""
값 정렬 / 표시 정렬 jeu de taquin
확장 LHT와 표시 SSCT 사이의 무게 보존 전단사 vsort, msort와 그 국소 이동 vjdt, mjdt.
"""

import logging
import random
from typing import Callable, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from enumeration import SSCTCounter
from models.errors import IdentityError, ParameterError, ShapeError
from models.settings import get_settings
from models.shapes import Cell, Partition, SkewShape
from models.tableau import (
    INF,
    MarkedEntry,
    MarkedTableau,
    Tableau,
    TableauClass,
    format_entry,
    from_marked,
    marks_of,
    pack,
    require_valid,
    restrict,
    validate,
    values_of,
)

logger = logging.getLogger(__name__)

# vjdt 경계값 (-1)_0, mjdt 경계값 ∞_∞. 타블로에 저장되지 않음
VALUE_SENTINEL: MarkedEntry = (-1, 0)
MARK_SENTINEL: MarkedEntry = (INF, INF)


class TraceStep(BaseModel):
    """vjdt / mjdt의 한 번 이동"""
    model_config = ConfigDict(frozen=True)

    round: int
    direction: Literal["right", "down", "up", "left"]
    before: Cell
    after: Cell
    entry: str  # 움직인 칸의 값_표시

    def describe(self) -> str:
        return (
            f"round {self.round}: {tuple(self.before)} -> {tuple(self.after)} "
            f"({self.direction}) {self.entry}"
        )


Trace = Optional[Callable[[TraceStep], None]]


def _require_cell(tableau: MarkedTableau, cell: Cell) -> None:
    if not tableau.shape.has_cell(cell):
        raise ShapeError(f"칸 {tuple(cell)}이(가) 모양 {tableau.shape} 밖에 있습니다.")


def _neighbour(entries: Dict[Cell, MarkedEntry], cell: Cell, sentinel: MarkedEntry) -> MarkedEntry:
    return entries.get(cell, sentinel)


def vjdt(P: MarkedTableau, u: Cell, trace: Trace = None, round_index: int = 0) -> Tuple[MarkedTableau, Cell]:
    """값 jdt: 활성 칸 u의 a_r을 오른쪽 / 아래로 밀어 멈춘 칸 v를 반환"""
    u = Cell(*u)
    _require_cell(P, u)
    entries = P.entries()
    cell = u
    while True:
        a, r = entries[cell]
        right, down = Cell(cell.row, cell.col + 1), Cell(cell.row + 1, cell.col)
        b, s = _neighbour(entries, right, VALUE_SENTINEL)
        c, t = _neighbour(entries, down, VALUE_SENTINEL)
        if a >= b and a > c:
            break
        if b - 1 > c:
            entries[cell], entries[right] = (b - 1, s), (a, r)
            target, direction = right, "right"
        else:
            entries[cell], entries[down] = (c + 1, t), (a, r)
            target, direction = down, "down"
        if trace is not None:
            trace(TraceStep(round=round_index, direction=direction, before=cell, after=target, entry=format_entry((a, r))))
        cell = target
    return MarkedTableau.from_entries(P.shape, entries), cell


def mjdt(Q: MarkedTableau, v: Cell, trace: Trace = None, round_index: int = 0) -> Tuple[MarkedTableau, Cell]:
    """표시 jdt: 활성 칸 v의 a_r을 위 / 왼쪽으로 밀어 멈춘 칸 u를 반환 (vjdt의 역)"""
    v = Cell(*v)
    _require_cell(Q, v)
    entries = Q.entries()
    cell = v
    while True:
        a, r = entries[cell]
        left, up = Cell(cell.row, cell.col - 1), Cell(cell.row - 1, cell.col)
        b, s = _neighbour(entries, left, MARK_SENTINEL)
        c, t = _neighbour(entries, up, MARK_SENTINEL)
        if r <= s and r <= t:
            break
        if t < r <= s or (s < r and t < r and b >= c - 1):
            entries[cell], entries[up] = (c - 1, t), (a, r)
            target, direction = up, "up"
        else:
            entries[cell], entries[left] = (b + 1, s), (a, r)
            target, direction = left, "left"
        if trace is not None:
            trace(TraceStep(round=round_index, direction=direction, before=cell, after=target, entry=format_entry((a, r))))
        cell = target
    return MarkedTableau.from_entries(Q.shape, entries), cell


def _extremal_cell(tableau: MarkedTableau, target: MarkedEntry, rightmost: bool) -> Cell:
    holders = [cell for cell, entry in tableau.entries().items() if entry == target]
    col = max(c.col for c in holders) if rightmost else min(c.col for c in holders)
    extremal = [cell for cell in holders if cell.col == col]
    if len(extremal) != 1:
        raise IdentityError(f"{format_entry(target)}을(를) 가진 칸이 열 {col}에 {len(extremal)}개 있습니다.")
    return extremal[0]


def tail(L: MarkedTableau) -> Cell:
    """가장 작은 표시 r, 그중 가장 작은 값 a를 가진 칸 중 가장 오른쪽"""
    entries = L.entries()
    if not entries:
        raise ShapeError("빈 영역에는 꼬리가 없습니다.")
    r = min(mark for _, mark in entries.values())
    a = min(value for value, mark in entries.values() if mark == r)
    return _extremal_cell(L, (a, r), rightmost=True)


def head(S: MarkedTableau) -> Cell:
    """가장 큰 표시 r, 그중 가장 큰 값 a를 가진 칸 중 가장 왼쪽"""
    entries = S.entries()
    if not entries:
        raise ShapeError("빈 영역에는 머리가 없습니다.")
    r = max(mark for _, mark in entries.values())
    a = max(value for value, mark in entries.values() if mark == r)
    return _extremal_cell(S, (a, r), rightmost=False)


def _region(outer: List[int], inner: Partition) -> SkewShape:
    try:
        return SkewShape.of(outer, inner)
    except ShapeError as exc:
        raise IdentityError(f"정렬 중 영역이 스큐 모양이 아닙니다: {outer}/{inner}") from exc


def _check_round(T: MarkedTableau, alpha: SkewShape, beta: SkewShape, n: int, expected: Cell, side: str) -> None:
    """정렬 중간 불변식: T|α ∈ LHT*, T|β ∈ SSCT*, 그리고 β의 머리(또는 α의 꼬리)가 활성 칸"""
    for region, cls in ((alpha, TableauClass.EXTENDED_LHT), (beta, TableauClass.MARKED_SSCT)):
        verdict = validate(restrict(T, region), cls, n)
        if not verdict:
            raise IdentityError(f"중간 단계 {region}이(가) {cls.value}가 아닙니다: {verdict.reason}")
    region = beta if side == "head" else alpha
    if region.size:
        found = head(restrict(T, region)) if side == "head" else tail(restrict(T, region))
        if found != expected:
            raise IdentityError(f"{side} {tuple(found)}이(가) 활성 칸 {tuple(expected)}과 다릅니다.")


def _debug(flag: Optional[bool]) -> bool:
    return get_settings().debug_invariants if flag is None else flag


def vsort(L: MarkedTableau, n: int, debug: Optional[bool] = None, trace: Trace = None) -> MarkedTableau:
    """값 정렬: LHT*_n(λ/μ) -> SSCT*_n(λ/μ)

    α = λ^(i)/μ의 꼬리에 vjdt를 적용하고 그 칸을 α에서 떼어 내는 과정을 |λ/μ|번 반복합니다.
    """
    require_valid(L, TableauClass.EXTENDED_LHT, n)
    checking = _debug(debug)
    shape = L.shape
    outer = list(shape.outer.parts)
    T = L
    for round_index in range(1, shape.size + 1):
        alpha = _region(outer, shape.inner)
        u = tail(restrict(T, alpha))
        T, v = vjdt(T, u, trace, round_index)
        if u.col != outer[u.row - 1]:
            raise IdentityError(f"꼬리 {tuple(u)}이(가) α의 남동 모서리가 아닙니다.")
        outer[u.row - 1] -= 1
        if checking:
            remaining = _region(outer, shape.inner)
            _check_round(T, remaining, SkewShape.of(shape.outer, remaining.outer), n, v, "head")
    if checking:
        require_valid(T, TableauClass.MARKED_SSCT, n)
    logger.debug("vsort 완료: %s, %d 라운드", shape, shape.size)
    return T


def msort(S: MarkedTableau, n: int, debug: Optional[bool] = None, trace: Trace = None) -> MarkedTableau:
    """표시 정렬: SSCT*_n(λ/μ) -> LHT*_n(λ/μ), vsort의 역"""
    require_valid(S, TableauClass.MARKED_SSCT, n)
    checking = _debug(debug)
    shape = S.shape
    outer = [shape.inner.part(i) for i in range(1, shape.length + 1)]
    T = S
    for round_index in range(shape.size, 0, -1):
        beta = SkewShape.of(shape.outer, _region(outer, shape.inner).outer)
        v = head(restrict(T, beta))
        T, u = mjdt(T, v, trace, round_index)
        outer[u.row - 1] += 1
        if u.col != outer[u.row - 1]:
            raise IdentityError(f"활성 칸 {tuple(u)}이(가) α의 바깥 모서리가 아닙니다.")
        alpha = _region(outer, shape.inner)
        if checking:
            _check_round(T, alpha, SkewShape.of(shape.outer, alpha.outer), n, u, "tail")
    if checking:
        require_valid(T, TableauClass.EXTENDED_LHT, n)
    logger.debug("msort 완료: %s, %d 라운드", shape, shape.size)
    return T


def induced_map(A: Tableau, B: Tableau, n: int, debug: Optional[bool] = None) -> Tuple[Tableau, Tableau]:
    """CT_n(λ/μ) × SYT(λ/μ) -> SSCT_n(λ/μ) × ST(λ/μ)

    값 A, 표시 B로 묶은 표시 타블로에 vsort를 적용하고 다시 나눕니다.
    """
    require_valid(A, TableauClass.CT, n)
    require_valid(B, TableauClass.SYT)
    if A.shape != B.shape:
        raise ShapeError(f"두 타블로의 모양이 다릅니다: {A.shape}, {B.shape}")
    sorted_tableau = vsort(pack(A, B), n, debug)
    return values_of(sorted_tableau), marks_of(sorted_tableau)


def sample_lht(shape: SkewShape, n: int, m: int, rng: Optional[random.Random] = None) -> Tableau:
    """LHT_{n,m}(λ/μ)에서 균등하게 하나

    균등한 SSCT와 {0..m-1}의 균등한 표시를 뽑아 msort로 보냅니다.
    """
    if m < 1 and shape.size:
        raise ParameterError(f"m={m}이면 LHT_{{n,m}}({shape})이(가) 비어 있습니다.")
    rng = rng or random.Random()
    values = SSCTCounter(shape, n).sample(rng)
    marks = Tableau.of(shape, [[rng.randrange(m) for _ in row] for row in values.rows])
    return from_marked(msort(pack(values, marks), n), n)
