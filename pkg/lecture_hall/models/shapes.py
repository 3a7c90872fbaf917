"""
분할, 스큐 모양, 칸 기하 모델
칸 좌표는 (행, 열)이며 1부터 시작합니다. 1행이 맨 위입니다.
"""

from collections import deque
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_serializer, model_validator

from models.errors import ShapeError


class Cell(NamedTuple):
    """칸 (i, j)"""
    row: int
    col: int

    @property
    def content(self) -> int:
        """내용 c(i, j) = j - i"""
        return self.col - self.row


class Partition(BaseModel):
    """분할 (약하게 감소하는 양의 정수열)

    JSON에서는 정수 배열로 직렬화됩니다. 끝의 0은 입력 시 제거됩니다.
    """
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data):
        if isinstance(data, (list, tuple)):
            data = {"parts": data}
        if isinstance(data, dict) and "parts" in data:
            parts = [int(p) for p in data["parts"]]
            while parts and parts[-1] == 0:
                parts.pop()
            data = {**data, "parts": tuple(parts)}
        return data

    @model_validator(mode="after")
    def _check_parts(self):
        for i, part in enumerate(self.parts):
            if part < 1:
                raise ValueError(f"분할의 성분은 양의 정수여야 합니다: {self.parts}")
            if i and part > self.parts[i - 1]:
                raise ValueError(f"분할은 약하게 감소해야 합니다: {self.parts}")
        return self

    @model_serializer
    def _dump(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def of(cls, parts: Union["Partition", Sequence[int]] = ()) -> "Partition":
        """정수열에서 분할 생성 (잘못된 입력은 ShapeError)"""
        if isinstance(parts, Partition):
            return parts
        try:
            return cls(parts=tuple(parts))
        except ValidationError as exc:
            raise ShapeError(exc.errors()[0]["msg"].removeprefix("Value error, ")) from exc

    @classmethod
    def parse(cls, text: Optional[str]) -> "Partition":
        """"6,6,4,3" 형식의 문자열 파싱. 빈 문자열과 "0"은 빈 분할"""
        text = (text or "").strip()
        if text in ("", "0"):
            return cls()
        try:
            parts = [int(token) for token in text.split(",")]
        except ValueError as exc:
            raise ShapeError(f"분할은 쉼표로 구분된 정수여야 합니다: '{text}'") from exc
        return cls.of(parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """i번째 성분 (1부터), 길이를 넘으면 0"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(parts=tuple(
            sum(1 for part in self.parts if part >= j) for j in range(1, self.parts[0] + 1)
        ))

    def contains(self, other: "Partition") -> bool:
        """other ⊆ self (칸 단위)"""
        return other.length <= self.length and all(
            other.part(i) <= self.part(i) for i in range(1, other.length + 1)
        )

    def has_cell(self, cell: Cell) -> bool:
        return cell.row >= 1 and 1 <= cell.col <= self.part(cell.row)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"


class SkewShape(BaseModel):
    """스큐 모양 λ/μ"""
    model_config = ConfigDict(frozen=True)

    outer: Partition
    inner: Partition = Partition()

    @model_validator(mode="after")
    def _check_containment(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"안쪽 분할 {self.inner}이(가) 바깥 분할 {self.outer}에 포함되지 않습니다.")
        return self

    @classmethod
    def of(
        cls,
        outer: Union[Partition, Sequence[int]],
        inner: Union[Partition, Sequence[int]] = (),
    ) -> "SkewShape":
        """분할 또는 정수열에서 스큐 모양 생성 (잘못된 입력은 ShapeError)"""
        outer, inner = Partition.of(outer), Partition.of(inner)
        if not outer.contains(inner):
            raise ShapeError(f"안쪽 분할 {inner}이(가) 바깥 분할 {outer}에 포함되지 않습니다.")
        return cls(outer=outer, inner=inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def length(self) -> int:
        """ℓ(λ)"""
        return self.outer.length

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    def row_range(self, i: int) -> range:
        """i행에 속한 열 번호 범위"""
        return range(self.inner.part(i) + 1, self.outer.part(i) + 1)

    def has_cell(self, cell: Cell) -> bool:
        return self.outer.has_cell(cell) and not self.inner.has_cell(cell)

    def __str__(self) -> str:
        if self.is_straight:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


class ExcitedDiagram(BaseModel):
    """λ 안에서 μ로부터 들뜬 이동으로 얻은 도형"""
    model_config = ConfigDict(frozen=True)

    cells: FrozenSet[Cell]

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells)


def cells(shape: SkewShape) -> List[Cell]:
    """λ/μ의 칸 목록 (행 우선 순서)"""
    return [
        Cell(i, j)
        for i in range(1, shape.length + 1)
        for j in shape.row_range(i)
    ]


def _require_cell(lam: Partition, cell: Cell) -> None:
    if not lam.has_cell(cell):
        raise ShapeError(f"칸 {tuple(cell)}이(가) 분할 {lam} 밖에 있습니다.")


def arm(lam: Partition, cell: Cell) -> int:
    _require_cell(lam, cell)
    return lam.part(cell.row) - cell.col


def leg(lam: Partition, cell: Cell) -> int:
    _require_cell(lam, cell)
    return lam.conjugate().part(cell.col) - cell.row


def hook(lam: Partition, cell: Cell) -> int:
    """갈고리 길이 h(i,j) = λ_i + λ'_j - i - j + 1"""
    return arm(lam, cell) + leg(lam, cell) + 1


def corners(shape: SkewShape) -> Tuple[List[Cell], List[Cell]]:
    """(북서 모서리, 남동 모서리)

    북서 모서리는 λ/μ 안에 있는 μ의 바깥 모서리,
    남동 모서리는 λ/μ 안에 있는 λ의 안쪽 모서리입니다.
    """
    lam, mu = shape.outer, shape.inner
    northwest = []
    for i in range(1, lam.length + 1):
        cell = Cell(i, mu.part(i) + 1)
        if (i == 1 or mu.part(i - 1) > mu.part(i)) and shape.has_cell(cell):
            northwest.append(cell)
    southeast = []
    for i in range(1, lam.length + 1):
        cell = Cell(i, lam.part(i))
        if lam.part(i + 1) < lam.part(i) and shape.has_cell(cell):
            southeast.append(cell)
    return northwest, southeast


def _excited_moves(lam: Partition, diagram: FrozenSet[Cell]) -> Iterator[FrozenSet[Cell]]:
    for cell in diagram:
        right, down, diag = Cell(cell.row, cell.col + 1), Cell(cell.row + 1, cell.col), Cell(cell.row + 1, cell.col + 1)
        if all(lam.has_cell(c) and c not in diagram for c in (right, down, diag)):
            yield (diagram - {cell}) | {diag}


def excited_diagrams(lam: Partition, mu: Partition) -> List[ExcitedDiagram]:
    """μ의 영 도형에서 들뜬 이동으로 도달 가능한 모든 도형 (BFS)"""
    if not lam.contains(mu):
        raise ShapeError(f"분할 {mu}이(가) {lam}에 포함되지 않습니다.")
    start = frozenset(Cell(i, j) for i in range(1, mu.length + 1) for j in range(1, mu.part(i) + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        diagram = queue.popleft()
        for moved in _excited_moves(lam, diagram):
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)
    return [ExcitedDiagram(cells=d) for d in sorted(seen, key=sorted)]


def iter_partitions(size: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """크기 size인 분할을 사전식 역순으로 생성"""
    max_part = size if max_part is None else min(max_part, size)

    def _build(remaining: int, cap: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from _build(remaining - part, part, prefix + (part,))

    for parts in _build(size, max_part, ()):
        yield Partition(parts=parts)


def iter_subpartitions(lam: Partition, mu: Optional[Partition] = None) -> Iterator[Partition]:
    """μ ⊆ ν ⊆ λ인 모든 ν"""
    mu = mu or Partition()

    def _build(i: int, prefix: Tuple[int, ...]):
        if i > lam.length:
            yield prefix
            return
        cap = lam.part(i) if i == 1 else min(lam.part(i), prefix[-1])
        for part in range(cap, mu.part(i) - 1, -1):
            yield from _build(i + 1, prefix + (part,))

    for parts in _build(1, ()):
        yield Partition(parts=parts)


def iter_skew_shapes(max_size: int, max_length: Optional[int] = None) -> Iterator[SkewShape]:
    """|λ| ≤ max_size인 모든 λ/μ (μ ⊆ λ)"""
    for size in range(max_size + 1):
        for lam in iter_partitions(size, max_length):
            for mu in iter_subpartitions(lam):
                yield SkewShape(outer=lam, inner=mu)
