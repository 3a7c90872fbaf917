"""
타블로 모델과 클래스 판정
일반 타블로(칸 -> 자연수)와 표시 타블로(칸 -> 값_표시)를 다룹니다.
비율 비교는 모두 정수 교차 곱셈으로 수행합니다.
"""

import math
from enum import Enum
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_serializer, model_validator

from models.errors import InvalidTableauError, ParameterError, ShapeError
from models.shapes import Cell, Partition, SkewShape, cells
from models.sparse_poly import SparsePoly

INF = math.inf

Mark = Union[int, float]
MarkedEntry = Tuple[int, Mark]


def mark_to_json(mark: Mark):
    return "inf" if mark == INF else int(mark)


def mark_from_json(raw) -> Mark:
    if isinstance(raw, str):
        if raw.strip().lower() in ("inf", "∞"):
            return INF
        return int(raw)
    if isinstance(raw, float) and math.isinf(raw):
        return INF
    return int(raw)


def format_entry(entry: MarkedEntry) -> str:
    a, r = entry
    return f"{a}_{'∞' if r == INF else r}"


class TableauClass(str, Enum):
    """타블로 클래스"""
    LHT = "lht"
    SSCT = "ssct"
    SSYT = "ssyt"
    SYT = "syt"
    ST = "st"
    CT = "ct"
    EXTENDED_LHT = "lht*"
    MARKED_SSCT = "ssct*"

    @property
    def is_marked(self) -> bool:
        return self in (TableauClass.EXTENDED_LHT, TableauClass.MARKED_SSCT)

    @property
    def needs_n(self) -> bool:
        return self not in (TableauClass.SYT, TableauClass.ST)


class Verdict(BaseModel):
    """판정 결과. 실패 시 처음 위반한 칸(들)과 이유를 담음"""
    model_config = ConfigDict(frozen=True)

    ok: bool
    reason: str = ""
    cells: Tuple[Cell, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _check_rows(shape: SkewShape, rows) -> None:
    if len(rows) != shape.length:
        raise ValueError(f"행 개수 {len(rows)}이(가) 모양 {shape}의 행 수 {shape.length}와 다릅니다.")
    for i, row in enumerate(rows, 1):
        expected = len(shape.row_range(i))
        if len(row) != expected:
            raise ValueError(f"{i}행의 칸 수 {len(row)}이(가) {expected}와 다릅니다.")


class Tableau(BaseModel):
    """타블로 T: λ/μ -> ℕ

    rows[i-1]은 i행에서 λ/μ에 속한 칸을 왼쪽부터 나열합니다.
    """
    model_config = ConfigDict(frozen=True)

    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self):
        _check_rows(self.shape, self.rows)
        for row in self.rows:
            for value in row:
                if value < 0:
                    raise ValueError(f"타블로 값은 음수가 될 수 없습니다: {value}")
        return self

    @classmethod
    def of(cls, shape: SkewShape, rows) -> "Tableau":
        try:
            return cls(shape=shape, rows=tuple(tuple(row) for row in rows))
        except ValidationError as exc:
            raise ShapeError(exc.errors()[0]["msg"].removeprefix("Value error, ")) from exc

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: Mapping[Cell, int]) -> "Tableau":
        return cls.of(shape, [
            [entries[Cell(i, j)] for j in shape.row_range(i)]
            for i in range(1, shape.length + 1)
        ])

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        i, j = cell
        if not self.shape.has_cell(Cell(i, j)):
            raise ShapeError(f"칸 {(i, j)}이(가) 모양 {self.shape} 밖에 있습니다.")
        return self.rows[i - 1][j - self.shape.inner.part(i) - 1]

    def entries(self) -> Dict[Cell, int]:
        return {cell: self[cell] for cell in cells(self.shape)}


class MarkedTableau(BaseModel):
    """표시 타블로 T: λ/μ -> ℕ × (ℕ ∪ {∞})

    JSON에서 각 칸은 {"a": 값, "r": 표시}이며 ∞ 표시는 문자열 "inf"입니다.
    """
    model_config = ConfigDict(frozen=True)

    shape: SkewShape
    rows: Tuple[Tuple[Tuple[int, Mark], ...], ...]

    @model_validator(mode="before")
    @classmethod
    def _decode_entries(cls, data):
        if isinstance(data, dict) and "rows" in data:
            rows = []
            for row in data["rows"]:
                decoded = []
                for entry in row:
                    if isinstance(entry, Mapping):
                        a, r = entry["a"], entry["r"]
                    else:
                        a, r = entry
                    decoded.append((int(a), mark_from_json(r)))
                rows.append(tuple(decoded))
            data = {**data, "rows": tuple(rows)}
        return data

    @model_validator(mode="after")
    def _check_shape(self):
        _check_rows(self.shape, self.rows)
        for row in self.rows:
            for a, r in row:
                if a < 0 or r < 0:
                    raise ValueError(f"값과 표시는 음수가 될 수 없습니다: {format_entry((a, r))}")
        return self

    @model_serializer
    def _dump(self) -> dict:
        return {
            "shape": self.shape.model_dump(),
            "rows": [[{"a": a, "r": mark_to_json(r)} for a, r in row] for row in self.rows],
        }

    @classmethod
    def of(cls, shape: SkewShape, rows) -> "MarkedTableau":
        try:
            return cls(shape=shape, rows=rows)
        except ValidationError as exc:
            raise ShapeError(exc.errors()[0]["msg"].removeprefix("Value error, ")) from exc

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: Mapping[Cell, MarkedEntry]) -> "MarkedTableau":
        return cls.of(shape, [
            [entries[Cell(i, j)] for j in shape.row_range(i)]
            for i in range(1, shape.length + 1)
        ])

    def __getitem__(self, cell: Tuple[int, int]) -> MarkedEntry:
        i, j = cell
        if not self.shape.has_cell(Cell(i, j)):
            raise ShapeError(f"칸 {(i, j)}이(가) 모양 {self.shape} 밖에 있습니다.")
        return self.rows[i - 1][j - self.shape.inner.part(i) - 1]

    def entries(self) -> Dict[Cell, MarkedEntry]:
        return {cell: self[cell] for cell in cells(self.shape)}

    def to_text(self) -> str:
        """행마다 한 줄, μ 자리는 '.'으로 채운 사람이 읽는 형식"""
        lines = []
        for i, row in enumerate(self.rows, 1):
            pad = ["."] * self.shape.inner.part(i)
            lines.append(" ".join(pad + [format_entry(entry) for entry in row]))
        return "\n".join(lines)


# 클래스별 조건 (칸 조건, 행 이웃 조건, 열 이웃 조건)

Check = Callable[..., bool]


def rules_for(cls: TableauClass, n: Optional[int], m: Optional[int]) -> Tuple[Check, Check, Check]:
    def bound(cell: Cell) -> int:
        return n + cell.content

    if cls is TableauClass.LHT:
        return (
            lambda c, v: v >= 0 and (m is None or v < m * bound(c)),
            lambda c, v, w: v * (bound(c) + 1) >= w * bound(c),
            lambda c, v, w: v * (bound(c) - 1) > w * bound(c),
        )
    if cls is TableauClass.SSCT:
        return (lambda c, v: 0 <= v < bound(c), lambda c, v, w: v >= w, lambda c, v, w: v > w)
    if cls is TableauClass.SSYT:
        return (lambda c, v: 0 <= v < n, lambda c, v, w: v >= w, lambda c, v, w: v > w)
    if cls is TableauClass.CT:
        return (lambda c, v: 0 <= v < bound(c), lambda c, v, w: True, lambda c, v, w: True)
    if cls is TableauClass.SYT:
        return (lambda c, v: True, lambda c, v, w: v > w, lambda c, v, w: v > w)
    if cls is TableauClass.ST:
        return (lambda c, v: True, lambda c, v, w: True, lambda c, v, w: True)
    if cls is TableauClass.EXTENDED_LHT:
        return (
            lambda c, e: 0 <= e[0] < bound(c),
            lambda c, e, f: e[1] > f[1] or (e[1] == f[1] and e[0] >= f[0]),
            lambda c, e, f: e[1] > f[1] or (e[1] == f[1] and e[0] > f[0]),
        )
    # MARKED_SSCT
    return (
        lambda c, e: 0 <= e[0] < bound(c),
        lambda c, e, f: e[0] >= f[0],
        lambda c, e, f: e[0] > f[0],
    )


def _describe(value) -> str:
    return format_entry(value) if isinstance(value, tuple) else str(value)


def check_entries(
    shape: SkewShape,
    entries: Mapping[Cell, object],
    cls: TableauClass,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> Verdict:
    """칸 -> 값 사전에 대한 판정 (validate의 내부 형태)"""
    cell_ok, row_ok, col_ok = rules_for(cls, n, m)
    if cls in (TableauClass.SYT, TableauClass.ST):
        values = sorted(entries.values())
        if values != list(range(1, len(values) + 1)):
            return Verdict(ok=False, reason="1부터 |λ/μ|까지의 수가 정확히 한 번씩 나타나야 합니다.")
    for cell, value in sorted(entries.items()):
        if not cell_ok(cell, value):
            return Verdict(ok=False, reason=f"칸 {tuple(cell)}의 값 {_describe(value)}이(가) 범위를 벗어납니다.", cells=(cell,))
        right = Cell(cell.row, cell.col + 1)
        if right in entries and not row_ok(cell, value, entries[right]):
            return Verdict(
                ok=False,
                reason=f"행 조건 위반: {tuple(cell)}={_describe(value)}, {tuple(right)}={_describe(entries[right])}",
                cells=(cell, right),
            )
        down = Cell(cell.row + 1, cell.col)
        if down in entries and not col_ok(cell, value, entries[down]):
            return Verdict(
                ok=False,
                reason=f"열 조건 위반: {tuple(cell)}={_describe(value)}, {tuple(down)}={_describe(entries[down])}",
                cells=(cell, down),
            )
    return Verdict(ok=True)


def _check_parameters(shape: SkewShape, cls: TableauClass, n: Optional[int]) -> None:
    if not cls.needs_n:
        return
    if n is None or n < 1:
        raise ParameterError(f"{cls.value} 클래스에는 양의 정수 n이 필요합니다.")
    if shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}이(가) n={n}보다 큽니다.")


def validate(
    tableau: Union[Tableau, MarkedTableau],
    cls: TableauClass,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> Verdict:
    """tableau가 주어진 클래스에 속하는지 판정

    m을 주면 LHT 판정에 ⌊L⌋ < m 조건을 추가합니다.
    """
    if cls.is_marked != isinstance(tableau, MarkedTableau):
        raise ParameterError(f"{cls.value} 클래스에 맞지 않는 타블로 종류입니다.")
    _check_parameters(tableau.shape, cls, n)
    return check_entries(tableau.shape, tableau.entries(), cls, n, m)


def require_valid(
    tableau: Union[Tableau, MarkedTableau],
    cls: TableauClass,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> None:
    verdict = validate(tableau, cls, n, m)
    if not verdict:
        raise InvalidTableauError(f"{cls.value} 조건을 만족하지 않습니다. {verdict.reason}", verdict)


def floor_tableau(lht: Tableau, n: int) -> Tableau:
    """⌊L⌋: 각 칸을 n + c로 나눈 몫"""
    require_valid(lht, TableauClass.LHT, n)
    return Tableau.from_entries(lht.shape, {
        cell: value // (n + cell.content) for cell, value in lht.entries().items()
    })


def to_marked(lht: Tableau, n: int) -> MarkedTableau:
    """L(i,j) = r·(n+c) + a 를 a_r로 표시"""
    require_valid(lht, TableauClass.LHT, n)
    return MarkedTableau.from_entries(lht.shape, {
        cell: (value % (n + cell.content), value // (n + cell.content))
        for cell, value in lht.entries().items()
    })


def from_marked(tableau: MarkedTableau, n: int) -> Tableau:
    """to_marked의 역. 모든 표시가 유한해야 함"""
    entries = tableau.entries()
    for cell, (a, r) in entries.items():
        if r == INF:
            raise InvalidTableauError(f"칸 {tuple(cell)}의 표시가 ∞라서 LHT로 되돌릴 수 없습니다.")
        if not 0 <= a < n + cell.content:
            raise InvalidTableauError(f"칸 {tuple(cell)}의 값 {a}이(가) 0 이상 {n + cell.content} 미만이 아닙니다.")
    return Tableau.from_entries(tableau.shape, {
        cell: int(r) * (n + cell.content) + a for cell, (a, r) in entries.items()
    })


def weight(tableau: MarkedTableau) -> SparsePoly:
    """wt*: 유한 표시 b는 x_b, ∞ 표시 값 a는 y_a"""
    xexp: Dict[int, int] = {}
    yexp: Dict[int, int] = {}
    for a, r in tableau.entries().values():
        if r == INF:
            yexp[a] = yexp.get(a, 0) + 1
        else:
            xexp[int(r)] = xexp.get(int(r), 0) + 1
    return SparsePoly.monomial(
        xexp=[xexp.get(i, 0) for i in range(max(xexp, default=-1) + 1)],
        yexp=[yexp.get(j, 0) for j in range(max(yexp, default=-1) + 1)],
    )


def plain_weight(tableau: Tableau, family: str = "y") -> SparsePoly:
    """x^T 또는 y^T"""
    counts: Dict[int, int] = {}
    for value in tableau.entries().values():
        counts[value] = counts.get(value, 0) + 1
    exps = [counts.get(k, 0) for k in range(max(counts, default=-1) + 1)]
    return SparsePoly.monomial(xexp=exps) if family == "x" else SparsePoly.monomial(yexp=exps)


def restrict(tableau: MarkedTableau, region: SkewShape) -> MarkedTableau:
    """T|_α: 부분 스큐 모양 α로의 제한"""
    entries = tableau.entries()
    region_cells = cells(region)
    missing = [cell for cell in region_cells if cell not in entries]
    if missing:
        raise ShapeError(f"영역 {region}의 칸 {tuple(missing[0])}이(가) 모양 {tableau.shape}에 없습니다.")
    return MarkedTableau.from_entries(region, {cell: entries[cell] for cell in region_cells})


def split_extended(tableau: MarkedTableau, n: int) -> Tuple[Partition, Tableau, Tableau]:
    """확장 LHT를 (ν, λ/ν 위의 LHT, ν/μ 위의 SSCT)로 분해

    ∞ 표시 칸은 각 행의 왼쪽에 모여 ν/μ를 이룹니다.
    """
    require_valid(tableau, TableauClass.EXTENDED_LHT, n)
    shape = tableau.shape
    nu = Partition.of([
        shape.inner.part(i) + sum(1 for _, r in row if r == INF)
        for i, row in enumerate(tableau.rows, 1)
    ])
    entries = tableau.entries()
    lower = SkewShape.of(shape.outer, nu)
    upper = SkewShape.of(nu, shape.inner)
    lht = Tableau.from_entries(lower, {
        cell: int(entries[cell][1]) * (n + cell.content) + entries[cell][0] for cell in cells(lower)
    })
    ssct = Tableau.from_entries(upper, {cell: entries[cell][0] for cell in cells(upper)})
    return nu, lht, ssct


def join_extended(lht: Tableau, ssct: Tableau, n: int) -> MarkedTableau:
    """split_extended의 역: L ∈ LHT_n(λ/ν), S ∈ SSCT_n(ν/μ)를 하나의 확장 LHT로"""
    if lht.shape.inner != ssct.shape.outer:
        raise ShapeError(f"모양이 이어지지 않습니다: {lht.shape}, {ssct.shape}")
    require_valid(lht, TableauClass.LHT, n)
    require_valid(ssct, TableauClass.SSCT, n)
    shape = SkewShape.of(lht.shape.outer, ssct.shape.inner)
    entries: Dict[Cell, MarkedEntry] = {cell: (value, INF) for cell, value in ssct.entries().items()}
    entries.update(to_marked(lht, n).entries())
    return MarkedTableau.from_entries(shape, entries)


def values_of(tableau: MarkedTableau) -> Tableau:
    return Tableau.from_entries(tableau.shape, {cell: a for cell, (a, _) in tableau.entries().items()})


def marks_of(tableau: MarkedTableau) -> Tableau:
    """표시 타블로 (모든 표시가 유한해야 함)"""
    entries = tableau.entries()
    if any(r == INF for _, r in entries.values()):
        raise InvalidTableauError("∞ 표시가 있어 표시 타블로를 만들 수 없습니다.")
    return Tableau.from_entries(tableau.shape, {cell: int(r) for cell, (_, r) in entries.items()})


def pack(values: Tableau, marks: Tableau) -> MarkedTableau:
    """(값 타블로, 표시 타블로) -> 표시 타블로"""
    if values.shape != marks.shape:
        raise ShapeError(f"두 타블로의 모양이 다릅니다: {values.shape}, {marks.shape}")
    mark_entries = marks.entries()
    return MarkedTableau.from_entries(values.shape, {
        cell: (a, mark_entries[cell]) for cell, a in values.entries().items()
    })
