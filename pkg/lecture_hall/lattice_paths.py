"""
격자 경로 인코딩
강의실 그래프 / 내용 그래프 / 확장 그래프 위의 비교차 경로 시스템과
타블로 사이의 전단사, 그리고 DOT / JSON 내보내기.

정수 좌표 규약:
  강의실 그래프의 열 a 위 꼭짓점 번호 t는 높이 t/(a+1)을 뜻합니다 (t = k(a+1) + r).
  내용 그래프의 열 a 위 번호 r은 높이 ω + r/(a+1)이며 r = a+1이 시작점 ω+1입니다.
"""

import json
import logging
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from models.errors import ParameterError, PathSystemError, ShapeError
from models.shapes import Partition, SkewShape
from models.sparse_poly import SparsePoly, poly_product
from models.tableau import Tableau, TableauClass, require_valid

logger = logging.getLogger(__name__)

Vertex = Tuple[int, Fraction]


class PathStep(BaseModel):
    """경로의 한 걸음

    H: (col, k + r/(col+1)) -> (col+1, k + r/(col+2))
    V: (col, k + (r+1)/(col+1)) -> (col, k + r/(col+1)), 즉 (k, r)은 아래 끝점
    내용 그래프에서는 k = 0이고 r이 꼭짓점 번호입니다.
    """
    model_config = ConfigDict(frozen=True)

    t: Literal["H", "V"]
    col: int = Field(ge=0)
    k: int = Field(default=0, ge=0)
    r: int = Field(ge=0)

    @property
    def index(self) -> int:
        return self.k * (self.col + 1) + self.r


class LHGraphPath(BaseModel):
    """강의실 그래프 경로 (start, ∞) -> (끝 열, 0). 맨 위 무한 꼬리는 저장하지 않음"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["lecture_hall"] = "lecture_hall"
    row: int = Field(ge=1)
    start: int = Field(ge=0)
    steps: Tuple[PathStep, ...] = ()

    @property
    def end(self) -> int:
        return self.start + sum(1 for step in self.steps if step.t == "H")

    def weight(self) -> SparsePoly:
        return poly_product(SparsePoly.x(step.k) for step in self.steps if step.t == "H")


class ContentPath(BaseModel):
    """내용 그래프 경로 (start, ω+1) -> (끝 열, ω)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["content"] = "content"
    row: int = Field(ge=1)
    start: int = Field(ge=0)
    steps: Tuple[PathStep, ...] = ()

    @property
    def end(self) -> int:
        return self.start + sum(1 for step in self.steps if step.t == "H")

    def weight(self) -> SparsePoly:
        return poly_product(SparsePoly.y(step.r) for step in self.steps if step.t == "H")


class OmegaPath(BaseModel):
    """ω-경로: 내용 그래프 부분 (a, ω+1) -> (b, ω)과 강의실 그래프 부분 (b, ∞) -> (c, 0)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["omega"] = "omega"
    row: int = Field(ge=1)
    upper: ContentPath
    lower: LHGraphPath

    @property
    def start(self) -> int:
        return self.upper.start

    @property
    def junction(self) -> int:
        return self.lower.start

    @property
    def end(self) -> int:
        return self.lower.end

    def weight(self) -> SparsePoly:
        return self.upper.weight() * self.lower.weight()


AnyPath = Union[LHGraphPath, ContentPath, OmegaPath]


class PathSystem(BaseModel):
    """행마다 하나씩인 경로들의 순서쌍"""
    model_config = ConfigDict(frozen=True)

    paths: Tuple[AnyPath, ...] = ()

    def weight(self) -> SparsePoly:
        return poly_product(path.weight() for path in self.paths)


# 경로 생성

def _index_step(t: str, col: int, index: int) -> PathStep:
    return PathStep(t=t, col=col, k=index // (col + 1), r=index % (col + 1))


def _build_lh_path(row: int, start: int, entries: Sequence[int]) -> LHGraphPath:
    steps: List[PathStep] = []
    col, arrival = start, None
    for entry in entries:
        if arrival is not None:
            steps.extend(_index_step("V", col, t) for t in range(arrival - 1, entry - 1, -1))
        step = _index_step("H", col, entry)
        steps.append(step)
        arrival = step.k * (col + 2) + step.r
        col += 1
    if arrival is not None:
        steps.extend(_index_step("V", col, t) for t in range(arrival - 1, -1, -1))
    return LHGraphPath(row=row, start=start, steps=tuple(steps))


def _build_content_path(row: int, start: int, entries: Sequence[int]) -> ContentPath:
    steps: List[PathStep] = []
    col, level = start, start + 1
    for entry in entries:
        steps.extend(PathStep(t="V", col=col, r=r) for r in range(level - 1, entry - 1, -1))
        steps.append(PathStep(t="H", col=col, r=entry))
        col, level = col + 1, entry
    steps.extend(PathStep(t="V", col=col, r=r) for r in range(level - 1, -1, -1))
    return ContentPath(row=row, start=start, steps=tuple(steps))


def _row_entries(tableau: Tableau) -> List[List[int]]:
    return [list(row) for row in tableau.rows]


def lht_to_paths(lht: Tableau, n: int) -> PathSystem:
    """LHT를 강의실 그래프의 비교차 경로 시스템으로

    i번째 경로의 (j - μ_i)번째 수평 걸음 아래 영역 수가 L(i, j)입니다.
    """
    require_valid(lht, TableauClass.LHT, n)
    shape = lht.shape
    return PathSystem(paths=tuple(
        _build_lh_path(i, shape.inner.part(i) + n - i, row)
        for i, row in enumerate(_row_entries(lht), 1)
    ))


def ssct_to_content_paths(ssct: Tableau, n: int) -> PathSystem:
    """SSCT를 내용 그래프의 비교차 경로 시스템으로"""
    require_valid(ssct, TableauClass.SSCT, n)
    shape = ssct.shape
    return PathSystem(paths=tuple(
        _build_content_path(i, shape.inner.part(i) + n - i, row)
        for i, row in enumerate(_row_entries(ssct), 1)
    ))


def pair_to_omega_paths(lht: Tableau, ssct: Tableau, n: int) -> PathSystem:
    """(L ∈ LHT_n(λ/ν), S ∈ SSCT_n(ν/μ))를 ω-경로 시스템으로"""
    if lht.shape.inner != ssct.shape.outer:
        raise ShapeError(f"모양이 이어지지 않습니다: L은 {lht.shape}, S는 {ssct.shape}")
    upper = ssct_to_content_paths(ssct, n).paths
    lower = lht_to_paths(lht, n).paths
    lam, nu, mu = lht.shape.outer, lht.shape.inner, ssct.shape.inner
    paths = []
    for i in range(1, lam.length + 1):
        top = upper[i - 1] if i <= len(upper) else _build_content_path(i, mu.part(i) + n - i, [])
        paths.append(OmegaPath(row=i, upper=top, lower=lower[i - 1]))
    logger.debug("ω-경로 %d개 생성 (ν=%s)", len(paths), nu)
    return PathSystem(paths=tuple(paths))


# 경로 해석

def _read_lh_path(path: LHGraphPath) -> Tuple[List[int], int]:
    """(수평 걸음 아래 영역 수 목록, 끝 열). 연결이 맞지 않으면 PathSystemError"""
    col, index = path.start, None
    entries: List[int] = []
    for step in path.steps:
        if step.col != col:
            raise PathSystemError(f"{path.row}행 경로: 열 {col}에서 열 {step.col}의 걸음으로 이어질 수 없습니다.")
        if step.r > col:
            raise PathSystemError(f"{path.row}행 경로: 열 {col}에서 r={step.r}은(는) 허용되지 않습니다.")
        if step.t == "H":
            if index is not None and step.index != index:
                raise PathSystemError(f"{path.row}행 경로: 수평 걸음이 꼭짓점 {index}에서 시작하지 않습니다.")
            entries.append(step.index)
            index = step.k * (col + 2) + step.r
            col += 1
        else:
            if index is None or step.index != index - 1:
                raise PathSystemError(f"{path.row}행 경로: 수직 걸음이 이어지지 않습니다 (열 {col}).")
            index -= 1
    if index not in (None, 0):
        raise PathSystemError(f"{path.row}행 경로가 높이 0에서 끝나지 않습니다.")
    return entries, col


def _read_content_path(path: ContentPath) -> Tuple[List[int], int]:
    col, level = path.start, path.start + 1
    entries: List[int] = []
    for step in path.steps:
        if step.col != col or step.k != 0:
            raise PathSystemError(f"{path.row}행 내용 경로: 걸음이 열 {col}에 있지 않습니다.")
        if step.t == "H":
            if step.r != level or step.r > col:
                raise PathSystemError(f"{path.row}행 내용 경로: 수평 걸음의 높이가 맞지 않습니다 (열 {col}).")
            entries.append(step.r)
            col += 1
        else:
            if step.r != level - 1 or step.r > col:
                raise PathSystemError(f"{path.row}행 내용 경로: 수직 걸음이 이어지지 않습니다 (열 {col}).")
            level -= 1
    if level != 0:
        raise PathSystemError(f"{path.row}행 내용 경로가 ω에서 끝나지 않습니다.")
    return entries, col


def _check_endpoints(path, row: int, start: int, end: int) -> None:
    if path.row != row or path.start != start or path.end != end:
        raise PathSystemError(
            f"{row}행 경로의 끝점 ({path.start} -> {path.end})이(가) 기대값 ({start} -> {end})과 다릅니다."
        )


def paths_to_lht(system: PathSystem, n: int, shape: SkewShape) -> Tableau:
    """lht_to_paths의 역"""
    if shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}이(가) n={n}보다 큽니다.")
    if len(system.paths) != shape.length:
        raise PathSystemError(f"경로 수 {len(system.paths)}이(가) ℓ(λ)={shape.length}와 다릅니다.")
    rows = []
    for i, path in enumerate(system.paths, 1):
        if not isinstance(path, LHGraphPath):
            raise PathSystemError(f"{i}행 경로가 강의실 그래프 경로가 아닙니다.")
        entries, _ = _read_lh_path(path)
        _check_endpoints(path, i, shape.inner.part(i) + n - i, shape.outer.part(i) + n - i)
        rows.append(entries)
    require_non_intersecting(system)
    return Tableau.of(shape, rows)


def content_paths_to_ssct(system: PathSystem, n: int, shape: SkewShape) -> Tableau:
    """ssct_to_content_paths의 역"""
    if shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}이(가) n={n}보다 큽니다.")
    if len(system.paths) != shape.length:
        raise PathSystemError(f"경로 수 {len(system.paths)}이(가) ℓ(λ)={shape.length}와 다릅니다.")
    rows = []
    for i, path in enumerate(system.paths, 1):
        if not isinstance(path, ContentPath):
            raise PathSystemError(f"{i}행 경로가 내용 그래프 경로가 아닙니다.")
        entries, _ = _read_content_path(path)
        _check_endpoints(path, i, shape.inner.part(i) + n - i, shape.outer.part(i) + n - i)
        rows.append(entries)
    require_non_intersecting(system)
    return Tableau.of(shape, rows)


def omega_paths_to_pair(system: PathSystem, n: int, shape: SkewShape) -> Tuple[Partition, Tableau, Tableau]:
    """pair_to_omega_paths의 역: 이음 열 b에서 ν를 복원"""
    if shape.length > n:
        raise ParameterError(f"ℓ(λ)={shape.length}이(가) n={n}보다 큽니다.")
    if len(system.paths) != shape.length:
        raise PathSystemError(f"경로 수 {len(system.paths)}이(가) ℓ(λ)={shape.length}와 다릅니다.")
    for path in system.paths:
        if not isinstance(path, OmegaPath):
            raise PathSystemError(f"{path.row}행 경로가 ω-경로가 아닙니다.")
        if path.upper.end != path.lower.start:
            raise PathSystemError(f"{path.row}행 ω-경로의 두 부분이 같은 열에서 이어지지 않습니다.")
    try:
        nu = Partition.of([path.junction - n + i for i, path in enumerate(system.paths, 1)])
    except ShapeError as exc:
        raise PathSystemError(f"이음 열에서 얻은 ν가 분할이 아닙니다: {exc}") from exc
    upper = PathSystem(paths=tuple(path.upper for path in system.paths))
    lower = PathSystem(paths=tuple(path.lower for path in system.paths))
    try:
        lower_shape = SkewShape.of(shape.outer, nu)
        upper_shape = SkewShape.of(nu, shape.inner)
    except ShapeError as exc:
        raise PathSystemError(f"ν={nu}이(가) μ ⊆ ν ⊆ λ를 만족하지 않습니다.") from exc
    lht = paths_to_lht(lower, n, lower_shape)
    ssct = content_paths_to_ssct(
        PathSystem(paths=upper.paths[:upper_shape.length]), n, upper_shape
    )
    for path in upper.paths[upper_shape.length:]:
        if any(step.t == "H" for step in path.steps):
            raise PathSystemError(f"{path.row}행 내용 경로에 수평 걸음이 있으면 안 됩니다.")
    return nu, lht, ssct


# 비교차 검사

def _lh_vertices(path: LHGraphPath) -> Tuple[Vertex, Set[Vertex]]:
    """(꼬리: (열, 최저 높이), 명시된 꼭짓점 집합)"""
    first = next((step.index for step in path.steps if step.t == "H"), 0)
    tail = (path.start, Fraction(first, path.start + 1))
    vertices: Set[Vertex] = set()
    col = path.start
    for step in path.steps:
        if step.t == "H":
            vertices.add((col, Fraction(step.index, col + 1)))
            col += 1
            vertices.add((col, Fraction(step.k * (col + 1) + step.r, col + 1)))
        else:
            vertices.add((col, Fraction(step.index + 1, col + 1)))
            vertices.add((col, Fraction(step.index, col + 1)))
    return tail, vertices


def _content_vertices(path: ContentPath) -> Set[Vertex]:
    vertices: Set[Vertex] = {(path.start, Fraction(1))}
    col = path.start
    for step in path.steps:
        if step.t == "H":
            vertices.add((col, Fraction(step.r, col + 1)))
            col += 1
            vertices.add((col, Fraction(step.r, col + 1)))
        else:
            vertices.add((col, Fraction(step.r, col + 1)))
    return vertices


def _lh_band_clear(paths: Sequence[LHGraphPath]) -> Optional[Tuple[int, int]]:
    data = [_lh_vertices(path) for path in paths]
    for a in range(len(data)):
        for b in range(a + 1, len(data)):
            (tail_a, verts_a), (tail_b, verts_b) = data[a], data[b]
            if tail_a[0] == tail_b[0] or verts_a & verts_b:
                return paths[a].row, paths[b].row
            for (col, low), verts in ((tail_a, verts_b), (tail_b, verts_a)):
                if any(c == col and h >= low for c, h in verts):
                    return paths[a].row, paths[b].row
    return None


def _content_band_clear(paths: Sequence[ContentPath]) -> Optional[Tuple[int, int]]:
    data = [_content_vertices(path) for path in paths]
    for a in range(len(data)):
        for b in range(a + 1, len(data)):
            if data[a] & data[b]:
                return paths[a].row, paths[b].row
    return None


def find_intersection(system: PathSystem) -> Optional[Tuple[int, int]]:
    """꼭짓점을 공유하는 첫 경로 쌍의 행 번호, 없으면 None"""
    lh = [p for p in system.paths if isinstance(p, LHGraphPath)]
    content = [p for p in system.paths if isinstance(p, ContentPath)]
    for path in system.paths:
        if isinstance(path, OmegaPath):
            content.append(path.upper)
            lh.append(path.lower)
    return _content_band_clear(content) or _lh_band_clear(lh)


def check_non_intersecting(system: PathSystem) -> bool:
    return find_intersection(system) is None


def require_non_intersecting(system: PathSystem) -> None:
    clash = find_intersection(system)
    if clash is not None:
        raise PathSystemError(f"{clash[0]}행 경로와 {clash[1]}행 경로가 꼭짓점을 공유합니다.")


# 내보내기

def _path_record(path: Union[LHGraphPath, ContentPath]) -> dict:
    return {
        "row": path.row,
        "start": path.start,
        "steps": [step.model_dump() for step in path.steps],
    }


def _json_records(system: PathSystem) -> List[dict]:
    records = []
    for path in system.paths:
        if isinstance(path, OmegaPath):
            record = _path_record(path.lower)
            record.update({
                "start": path.start,
                "junction": path.junction,
                "upper": [step.model_dump() for step in path.upper.steps],
            })
        else:
            record = _path_record(path)
            if isinstance(path, ContentPath):
                record["band"] = "omega"
        records.append(record)
    return records


def _node(prefix: str, col: int, height: Fraction) -> str:
    return f'"{prefix}{col}:{height}"'


def _dot_lines(path: Union[LHGraphPath, ContentPath], prefix: str) -> List[str]:
    lines = []
    col = path.start
    if isinstance(path, LHGraphPath):
        tail, _ = _lh_vertices(path)
        lines.append(f'"{prefix}{col}:inf" -> {_node(prefix, col, tail[1])} [style=dashed];')
    for step in path.steps:
        if step.t == "H":
            level = step.index if isinstance(path, LHGraphPath) else step.r
            arrival = step.k * (col + 2) + step.r if isinstance(path, LHGraphPath) else step.r
            label = f"x{step.k}" if isinstance(path, LHGraphPath) else f"y{step.r}"
            lines.append(
                f"{_node(prefix, col, Fraction(level, col + 1))} -> "
                f'{_node(prefix, col + 1, Fraction(arrival, col + 2))} [label="{label}"];'
            )
            col += 1
        else:
            low = step.index if isinstance(path, LHGraphPath) else step.r
            lines.append(
                f"{_node(prefix, col, Fraction(low + 1, col + 1))} -> {_node(prefix, col, Fraction(low, col + 1))};"
            )
    return lines


def export_paths(system: PathSystem, fmt: str = "json") -> str:
    """경로 시스템을 JSON 또는 DOT 텍스트로"""
    if fmt == "json":
        return json.dumps(_json_records(system))
    if fmt != "dot":
        raise ParameterError(f"지원하지 않는 형식입니다: {fmt} (json, dot 중 하나)")
    lines = ["digraph paths {", "  rankdir=LR;"]
    for path in system.paths:
        lines.append(f"  subgraph cluster_row{path.row} {{")
        lines.append(f'    label="row {path.row}";')
        parts = [(path.upper, "w"), (path.lower, "")] if isinstance(path, OmegaPath) else [
            (path, "w" if isinstance(path, ContentPath) else "")
        ]
        for part, prefix in parts:
            lines.extend(f"    {line}" for line in _dot_lines(part, prefix))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)
