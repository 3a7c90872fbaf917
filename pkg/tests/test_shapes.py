"""분할, 스큐 모양, 칸 기하 테스트"""

import pytest
from hypothesis import given, strategies as st

from models.errors import ShapeError
from models.shapes import (
    Cell,
    Partition,
    SkewShape,
    arm,
    cells,
    corners,
    excited_diagrams,
    hook,
    iter_partitions,
    iter_skew_shapes,
    iter_subpartitions,
    leg,
)

partitions = st.lists(st.integers(min_value=1, max_value=5), max_size=4).map(
    lambda parts: Partition.of(sorted(parts, reverse=True))
)


class TestPartition:
    def test_parse(self):
        assert Partition.parse("6,6,4,3").parts == (6, 6, 4, 3)
        assert Partition.parse("0").parts == ()
        assert Partition.parse("").parts == ()
        assert Partition.parse(" 2,1,0 ").parts == (2, 1)

    @pytest.mark.parametrize("text", ["1,2", "a,b", "2,-1", "2,,1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ShapeError):
            Partition.parse(text)

    def test_json_form(self):
        assert Partition.of([3, 1]).model_dump() == [3, 1]
        assert Partition.model_validate([2, 2, 0]).parts == (2, 2)

    def test_conjugate(self):
        assert Partition.of([6, 6, 4, 3]).conjugate().parts == (4, 4, 4, 3, 2, 2)
        assert Partition().conjugate() == Partition()

    @given(partitions)
    def test_conjugate_is_involution(self, lam):
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().size == lam.size


class TestSkewShape:
    def test_cells(self):
        assert cells(SkewShape.of([2, 1])) == [(1, 1), (1, 2), (2, 1)]
        assert cells(SkewShape.of([2, 1], [1])) == [(1, 2), (2, 1)]
        assert len(cells(SkewShape.of([6, 6, 4, 3], [3, 1]))) == 15

    def test_not_contained(self):
        with pytest.raises(ShapeError):
            SkewShape.of([2, 1], [3])
        with pytest.raises(ShapeError):
            SkewShape.of([2], [1, 1])

    def test_str(self):
        assert str(SkewShape.of([6, 6, 4, 3], [3, 1])) == "6,6,4,3/3,1"
        assert str(SkewShape.of([2, 1])) == "2,1"
        assert str(SkewShape.of([])) == "0"

    def test_content(self):
        assert Cell(1, 4).content == 3
        assert Cell(4, 1).content == -3


class TestHook:
    @pytest.mark.parametrize("lam, cell, expected", [
        ([2, 1], (1, 1), 3),
        ([2, 1], (1, 2), 1),
        ([3, 2], (1, 2), 3),
    ])
    def test_values(self, lam, cell, expected):
        assert hook(Partition.of(lam), Cell(*cell)) == expected

    def test_outside(self):
        with pytest.raises(ShapeError):
            hook(Partition.of([2, 1]), Cell(2, 2))

    @given(partitions)
    def test_arm_leg(self, lam):
        for cell in cells(SkewShape(outer=lam)):
            assert hook(lam, cell) == arm(lam, cell) + leg(lam, cell) + 1


class TestCorners:
    def test_reference_shape(self):
        northwest, southeast = corners(SkewShape.of([6, 6, 4, 3], [3, 1]))
        assert northwest == [(1, 4), (2, 2), (3, 1)]
        assert southeast == [(2, 6), (3, 4), (4, 3)]

    def test_corner_drawing_shape(self):
        northwest, southeast = corners(SkewShape.of([6, 6, 4, 4], [3, 1]))
        assert northwest == [(1, 4), (2, 2), (3, 1)]
        assert southeast == [(2, 6), (4, 4)]

    def test_small(self):
        assert corners(SkewShape.of([1])) == ([(1, 1)], [(1, 1)])
        assert corners(SkewShape.of([2, 2], [1])) == ([(1, 2), (2, 1)], [(2, 2)])


class TestExcitedDiagrams:
    def test_empty_inner(self):
        diagrams = excited_diagrams(Partition.of([3, 2]), Partition())
        assert len(diagrams) == 1
        assert diagrams[0].cells == frozenset()

    def test_single_move(self):
        diagrams = excited_diagrams(Partition.of([2, 2]), Partition.of([1]))
        assert [d.sorted_cells() for d in diagrams] == [[(1, 1)], [(2, 2)]]

    def test_closure(self):
        assert len(excited_diagrams(Partition.of([3, 3, 3]), Partition.of([2]))) == 3

    def test_not_contained(self):
        with pytest.raises(ShapeError):
            excited_diagrams(Partition.of([1]), Partition.of([2]))


class TestIterators:
    def test_partitions_of_four(self):
        assert [p.parts for p in iter_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_partition_bounds(self):
        assert [p.parts for p in iter_partitions(4, max_length=2, max_part=3)] == [(3, 1), (2, 2)]

    def test_subpartitions(self):
        found = {p.parts for p in iter_subpartitions(Partition.of([2, 1]), Partition.of([1]))}
        assert found == {(2, 1), (2,), (1, 1), (1,)}

    def test_skew_shape_count(self):
        # |λ| ≤ 2: ∅, (1), (1)/(1), (2)과 부분 3개, (1,1)과 부분 3개
        assert len(list(iter_skew_shapes(2))) == 1 + 2 + 3 + 3
