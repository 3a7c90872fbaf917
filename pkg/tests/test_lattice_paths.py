"""격자 경로 인코딩 테스트"""

import json

import pytest

from enumeration import enumerate_lht, enumerate_ssct
from lattice_paths import (
    LHGraphPath,
    PathStep,
    PathSystem,
    check_non_intersecting,
    content_paths_to_ssct,
    export_paths,
    find_intersection,
    lht_to_paths,
    omega_paths_to_pair,
    pair_to_omega_paths,
    paths_to_lht,
    ssct_to_content_paths,
)
from models.errors import InvalidTableauError, ParameterError, PathSystemError, ShapeError
from models.shapes import Partition, SkewShape, iter_skew_shapes, iter_subpartitions
from models.sparse_poly import SparsePoly
from models.tableau import MarkedTableau, Tableau, floor_tableau, plain_weight, weight

REFERENCE = SkewShape.of([6, 6, 4, 3], [3, 1])


def _steps(path):
    return [(step.t, step.col, step.k, step.r) for step in path.steps]


@pytest.fixture
def reference_lht(load_fixture):
    data = load_fixture("reference_lht.json")
    return Tableau.model_validate(data["tableau"]), data


@pytest.fixture
def reference_ssct(load_fixture):
    data = load_fixture("reference_ssct.json")
    return Tableau.model_validate(data["tableau"]), data


class TestLectureHallPaths:
    def test_reference_weight(self, reference_lht):
        lht, data = reference_lht
        system = lht_to_paths(lht, 5)
        assert len(system.paths) == 4
        assert system.weight() == SparsePoly.from_json(data["weight"])
        assert [sum(1 for s in p.steps if s.t == "H") for p in system.paths] == data["horizontal_steps"]

    def test_reference_rows(self, reference_lht):
        lht, _ = reference_lht
        first, _, _, last = lht_to_paths(lht, 5).paths
        assert (first.start, first.end) == (7, 10)
        assert _steps(first)[:5] == [("H", 7, 3, 1), ("V", 8, 3, 0), ("V", 8, 2, 8), ("V", 8, 2, 7), ("H", 8, 2, 7)]
        assert (last.start, last.end) == (1, 4)
        assert _steps(last) == [
            ("H", 1, 2, 0),
            ("V", 2, 1, 2),
            ("V", 2, 1, 1),
            ("H", 2, 1, 1),
            ("V", 3, 1, 0),
            ("V", 3, 0, 3),
            ("V", 3, 0, 2),
            ("V", 3, 0, 1),
            ("V", 3, 0, 0),
            ("H", 3, 0, 0),
        ]

    def test_reference_roundtrip(self, reference_lht):
        lht, _ = reference_lht
        system = lht_to_paths(lht, 5)
        assert check_non_intersecting(system)
        assert paths_to_lht(system, 5, REFERENCE) == lht

    def test_single_cell(self):
        system = lht_to_paths(Tableau.of(SkewShape.of([1]), [[0]]), 1)
        (path,) = system.paths
        assert _steps(path) == [("H", 0, 0, 0)]
        assert system.weight() == SparsePoly.x(0)

    def test_empty(self):
        empty = Tableau.of(SkewShape.of([]), [])
        system = lht_to_paths(empty, 2)
        assert system.paths == ()
        assert paths_to_lht(system, 2, SkewShape.of([])) == empty

    def test_intersecting_system_rejected(self):
        # 두 경로가 (열 1, 높이 0)을 공유: 열 조건 0 > 0 위반에 해당
        system = PathSystem(paths=(
            LHGraphPath(row=1, start=1, steps=(PathStep(t="H", col=1, r=0),)),
            LHGraphPath(row=2, start=0, steps=(PathStep(t="H", col=0, r=0),)),
        ))
        assert find_intersection(system) == (1, 2)
        with pytest.raises(PathSystemError):
            paths_to_lht(system, 2, SkewShape.of([1, 1]))

    def test_broken_path_rejected(self):
        system = PathSystem(paths=(
            LHGraphPath(row=1, start=0, steps=(PathStep(t="H", col=0, r=0), PathStep(t="V", col=1, r=1))),
        ))
        with pytest.raises(PathSystemError):
            paths_to_lht(system, 1, SkewShape.of([1]))

    def test_wrong_path_count(self, reference_lht):
        lht, _ = reference_lht
        system = lht_to_paths(lht, 5)
        with pytest.raises(PathSystemError):
            paths_to_lht(PathSystem(paths=system.paths[:3]), 5, REFERENCE)

    def test_wrong_endpoints(self, reference_lht):
        lht, _ = reference_lht
        with pytest.raises(PathSystemError):
            paths_to_lht(lht_to_paths(lht, 5), 5, SkewShape.of([6, 6, 4, 3], [2, 1]))


class TestContentPaths:
    def test_reference_weight(self, reference_ssct):
        ssct, data = reference_ssct
        system = ssct_to_content_paths(ssct, data["n"])
        assert system.weight() == SparsePoly.from_json(data["weight"])
        assert system.weight() == plain_weight(ssct, "y")

    def test_reference_first_row(self, reference_ssct):
        ssct, data = reference_ssct
        first = ssct_to_content_paths(ssct, data["n"]).paths[0]
        assert (first.start, first.end) == (4, 9)
        assert _steps(first) == [
            ("V", 4, 0, 4),
            ("H", 4, 0, 4),
            ("V", 5, 0, 3),
            ("H", 5, 0, 3),
            ("H", 6, 0, 3),
            ("V", 7, 0, 2),
            ("V", 7, 0, 1),
            ("V", 7, 0, 0),
            ("H", 7, 0, 0),
            ("H", 8, 0, 0),
        ]

    def test_reference_roundtrip(self, reference_ssct):
        ssct, data = reference_ssct
        n = data["n"]
        system = ssct_to_content_paths(ssct, n)
        assert content_paths_to_ssct(system, n, ssct.shape) == ssct

    def test_invalid_tableau(self):
        with pytest.raises(InvalidTableauError):
            ssct_to_content_paths(Tableau.of(SkewShape.of([1]), [[1]]), 1)


class TestOmegaPaths:
    def test_reference_pair(self, load_fixture):
        data = load_fixture("extended_lht.json")
        lht = Tableau.model_validate(data["lht_part"])
        ssct = Tableau.model_validate(data["ssct_part"])
        system = pair_to_omega_paths(lht, ssct, 5)
        assert [path.junction for path in system.paths] == [8, 6, 2, 1]
        assert omega_paths_to_pair(system, 5, REFERENCE) == (Partition.of(data["nu"]), lht, ssct)
        assert system.weight() == weight(MarkedTableau.model_validate(data["tableau"]))

    def test_upper_only(self):
        shape = SkewShape.of([2, 1], [1])
        ssct = enumerate_ssct(shape, 2)[0]
        empty = Tableau.of(SkewShape.of([2, 1], [2, 1]), [[], []])
        system = pair_to_omega_paths(empty, ssct, 2)
        assert all(path.lower.steps == () for path in system.paths)
        assert omega_paths_to_pair(system, 2, shape) == (Partition.of([2, 1]), empty, ssct)

    def test_shapes_must_compose(self):
        lht = Tableau.of(SkewShape.of([2], [1]), [[0]])
        ssct = Tableau.of(SkewShape.of([2], [1]), [[0]])
        with pytest.raises(ShapeError):
            pair_to_omega_paths(lht, ssct, 1)


def _roundtrip_all(max_size: int, max_n: int) -> None:
    for shape in iter_skew_shapes(max_size, max_length=max_n):
        for n in range(max(shape.length, 1), max_n + 1):
            for lht in enumerate_lht(shape, n, 2):
                system = lht_to_paths(lht, n)
                assert paths_to_lht(system, n, shape) == lht
                assert system.weight() == plain_weight(floor_tableau(lht, n), "x")
            for ssct in enumerate_ssct(shape, n):
                assert content_paths_to_ssct(ssct_to_content_paths(ssct, n), n, shape) == ssct
            for nu in iter_subpartitions(shape.outer, shape.inner):
                for lht in enumerate_lht(SkewShape(outer=shape.outer, inner=nu), n, 1):
                    for ssct in enumerate_ssct(SkewShape(outer=nu, inner=shape.inner), n):
                        system = pair_to_omega_paths(lht, ssct, n)
                        assert omega_paths_to_pair(system, n, shape) == (nu, lht, ssct)


def test_roundtrip_small():
    _roundtrip_all(3, 2)


@pytest.mark.slow
def test_roundtrip_sweep():
    _roundtrip_all(4, 3)


class TestExport:
    def test_empty_json(self):
        assert export_paths(PathSystem()) == "[]"

    def test_reference_json(self, reference_lht):
        lht, _ = reference_lht
        records = json.loads(export_paths(lht_to_paths(lht, 5), "json"))
        assert [record["row"] for record in records] == [1, 2, 3, 4]
        assert [sum(1 for s in r["steps"] if s["t"] == "H") for r in records] == [3, 5, 4, 3]
        assert set(records[0]["steps"][0]) == {"t", "col", "k", "r"}

    def test_omega_json(self, load_fixture):
        data = load_fixture("extended_lht.json")
        system = pair_to_omega_paths(
            Tableau.model_validate(data["lht_part"]), Tableau.model_validate(data["ssct_part"]), 5
        )
        records = json.loads(export_paths(system))
        assert [record["junction"] for record in records] == [8, 6, 2, 1]
        assert all("upper" in record for record in records)

    def test_single_path_dot(self):
        text = export_paths(lht_to_paths(Tableau.of(SkewShape.of([2]), [[1, 0]]), 1), "dot")
        assert text.startswith("digraph paths {")
        assert text.count("subgraph") == 1
        assert '[label="x1"]' in text
        assert "style=dashed" in text

    def test_content_dot_labels(self, reference_ssct):
        ssct, data = reference_ssct
        text = export_paths(ssct_to_content_paths(ssct, data["n"]), "dot")
        assert '[label="y4"]' in text
        assert text.count("subgraph") == 3

    def test_unknown_format(self):
        with pytest.raises(ParameterError):
            export_paths(PathSystem(), "svg")
