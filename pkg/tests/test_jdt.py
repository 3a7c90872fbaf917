"""jeu de taquin 이동과 값 정렬 / 표시 정렬 테스트"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from enumeration import (
    count_lht,
    default_marks,
    enumerate_ct,
    enumerate_extended_lht,
    enumerate_lht,
    enumerate_marked_ssct,
    enumerate_ssct,
    enumerate_syt,
)
from jdt import head, induced_map, msort, mjdt, sample_lht, tail, vjdt, vsort
from models.errors import InvalidTableauError, ParameterError, ShapeError
from models.shapes import Cell, SkewShape, iter_skew_shapes
from models.tableau import MarkedTableau, Tableau, TableauClass, pack, validate, weight
from models.settings import reset_settings


def _shapes(max_size, max_n):
    for shape in iter_skew_shapes(max_size, max_length=max_n):
        for n in range(max(shape.length, 1), max_n + 1):
            yield shape, n


extended_cases = st.sampled_from([
    (lht, n)
    for shape, n in _shapes(3, 2)
    for lht in enumerate_extended_lht(shape, n, default_marks(2))
])


@pytest.fixture
def jdt_pair(load_fixture):
    data = load_fixture("jdt_pair.json")
    return (
        MarkedTableau.model_validate(data["before"]),
        MarkedTableau.model_validate(data["after"]),
        Cell(*data["start"]),
        Cell(*data["end"]),
    )


@pytest.fixture
def vsort_example(load_fixture):
    data = load_fixture("vsort_example.json")
    return data["n"], MarkedTableau.model_validate(data["input"]), MarkedTableau.model_validate(data["output"]), data


class TestLocalMoves:
    def test_vjdt_pair(self, jdt_pair):
        before, after, start, end = jdt_pair
        assert vjdt(before, start) == (after, end)

    def test_mjdt_pair(self, jdt_pair):
        before, after, start, end = jdt_pair
        assert mjdt(after, end) == (before, start)

    def test_vjdt_trace(self, jdt_pair):
        before, _, start, _ = jdt_pair
        steps = []
        vjdt(before, start, trace=steps.append)
        assert [step.direction for step in steps] == ["down", "down", "right", "right", "down"]
        assert steps[0].before == (2, 3) and steps[-1].after == (5, 5)
        assert all(step.entry == "1_2" for step in steps)
        assert steps[0].describe() == "round 0: (2, 3) -> (3, 3) (down) 1_2"

    def test_vjdt_single_row(self):
        shape = SkewShape.of([2])
        P = MarkedTableau.of(shape, [[(0, 0), (5, 1)]])
        Q, v = vjdt(P, Cell(1, 1))
        assert Q == MarkedTableau.of(shape, [[(4, 1), (0, 0)]])
        assert v == (1, 2)

    def test_immediate_stop(self, jdt_pair):
        before, _, _, _ = jdt_pair
        assert vjdt(before, Cell(1, 7)) == (before, (1, 7))
        assert mjdt(before, Cell(1, 3)) == (before, (1, 3))

    def test_outside_shape(self, jdt_pair):
        before, _, _, _ = jdt_pair
        with pytest.raises(ShapeError):
            vjdt(before, Cell(1, 1))
        with pytest.raises(ShapeError):
            mjdt(before, Cell(6, 1))


class TestTailHead:
    def test_fixtures(self, load_fixture):
        extended = load_fixture("extended_lht.json")
        marked = load_fixture("marked_ssct.json")
        assert tail(MarkedTableau.model_validate(extended["tableau"])) == tuple(extended["tail"])
        assert head(MarkedTableau.model_validate(marked["tableau"])) == tuple(marked["head"])

    def test_sort_example(self, vsort_example):
        _, L, S, data = vsort_example
        assert tail(L) == tuple(data["input_tail"])
        assert head(S) == tuple(data["output_head"])

    def test_single_cell(self):
        tableau = MarkedTableau.of(SkewShape.of([2], [1]), [[(0, 3)]])
        assert tail(tableau) == head(tableau) == (1, 2)

    def test_empty_region(self):
        empty = MarkedTableau.of(SkewShape.of([1], [1]), [[]])
        with pytest.raises(ShapeError):
            tail(empty)
        with pytest.raises(ShapeError):
            head(empty)


class TestSorting:
    def test_vsort_example(self, vsort_example):
        n, L, S, _ = vsort_example
        assert vsort(L, n) == S
        assert vsort(L, n, debug=True) == S

    def test_msort_example(self, vsort_example):
        n, L, S, _ = vsort_example
        assert msort(S, n) == L
        assert msort(S, n, debug=True) == L

    def test_vsort_trace(self, vsort_example):
        n, L, _, _ = vsort_example
        steps = []
        vsort(L, n, trace=steps.append)
        assert [(step.round, step.direction) for step in steps] == [
            (5, "right"), (6, "down"), (7, "down"), (7, "right"),
        ]

    def test_debug_from_environment(self, monkeypatch, vsort_example):
        monkeypatch.setenv("LHK_DEBUG", "1")
        reset_settings()
        n, L, S, _ = vsort_example
        assert vsort(L, n) == S

    def test_reference_extended(self, load_fixture):
        data = load_fixture("extended_lht.json")
        L = MarkedTableau.model_validate(data["tableau"])
        S = vsort(L, data["n"], debug=True)
        assert validate(S, TableauClass.MARKED_SSCT, data["n"])
        assert weight(S) == weight(L)
        assert msort(S, data["n"], debug=True) == L

    def test_sorted_input_unchanged(self, load_fixture):
        data = load_fixture("reference_ssct.json")
        values = Tableau.model_validate(data["tableau"])
        marks = Tableau.of(values.shape, [[0] * len(row) for row in values.rows])
        T = pack(values, marks)
        assert vsort(T, data["n"]) == T
        assert msort(T, data["n"]) == T

    def test_wrong_input_class(self, load_fixture):
        data = load_fixture("marked_ssct.json")
        with pytest.raises(InvalidTableauError):
            vsort(MarkedTableau.model_validate(data["tableau"]), data["n"])

    @settings(max_examples=60)
    @given(extended_cases)
    def test_roundtrip_with_invariants(self, case):
        L, n = case
        S = vsort(L, n, debug=True)
        assert weight(S) == weight(L)
        assert msort(S, n, debug=True) == L

    def test_roundtrip_small(self):
        for shape, n in _shapes(3, 2):
            for L in enumerate_extended_lht(shape, n):
                assert msort(vsort(L, n), n) == L
            for S in enumerate_marked_ssct(shape, n):
                assert vsort(msort(S, n), n) == S

    @pytest.mark.slow
    def test_roundtrip_sweep(self):
        for shape, n in _shapes(4, 3):
            for L in enumerate_extended_lht(shape, n, default_marks(2)):
                S = vsort(L, n)
                assert weight(S) == weight(L)
                assert msort(S, n) == L
            for S in enumerate_marked_ssct(shape, n, default_marks(2)):
                assert vsort(msort(S, n), n) == S


class TestInducedMap:
    def test_semistandard_is_fixed(self):
        shape = SkewShape.of([2, 1])
        for A in enumerate_ssct(shape, 2):
            for B in enumerate_syt(shape):
                assert induced_map(A, B, 2) == (A, B)

    @staticmethod
    def _check_bijection(shape, n):
        ssct = set(enumerate_ssct(shape, n))
        images = set()
        fixed = 0
        for A in enumerate_ct(shape, n):
            for B in enumerate_syt(shape):
                A2, B2 = induced_map(A, B, n)
                assert A2 in ssct
                assert validate(B2, TableauClass.ST)
                images.add((A2, B2))
                if (A2, B2) == (A, B):
                    fixed += 1
                    assert A in ssct
        assert len(images) == len(enumerate_ct(shape, n)) * len(enumerate_syt(shape))
        assert fixed == len(ssct) * len(enumerate_syt(shape))

    @pytest.mark.parametrize("outer, inner, n", [([2, 1], [], 2), ([2, 2], [1], 2), ([3, 1], [], 2), ([2, 1], [], 3)])
    def test_bijection_onto_product(self, outer, inner, n):
        self._check_bijection(SkewShape.of(outer, inner), n)

    @pytest.mark.slow
    def test_bijection_sweep(self):
        for shape, n in _shapes(4, 3):
            self._check_bijection(shape, n)

    def test_class_violations(self):
        shape = SkewShape.of([2])
        with pytest.raises(InvalidTableauError):
            induced_map(Tableau.of(shape, [[0, 0]]), Tableau.of(shape, [[1, 2]]), 1)


class TestSampling:
    def test_samples_are_valid(self):
        shape = SkewShape.of([3, 2], [1])
        rng = random.Random(3)
        for _ in range(10):
            assert validate(sample_lht(shape, 3, 2, rng), TableauClass.LHT, 3, 2)

    def test_covers_support(self):
        shape = SkewShape.of([2])
        rng = random.Random(11)
        seen = {sample_lht(shape, 1, 2, rng) for _ in range(300)}
        assert seen == set(enumerate_lht(shape, 1, 2))
        assert len(seen) == count_lht(shape, 1, 2)

    def test_empty_family(self):
        with pytest.raises(ParameterError):
            sample_lht(SkewShape.of([1]), 1, 0)

