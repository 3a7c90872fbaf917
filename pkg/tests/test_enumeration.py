"""나열과 개수 세기 테스트"""

import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from enumeration import (
    SSCTCounter,
    binomial_matrix,
    count_det,
    count_hook_content,
    count_lht,
    count_lht_brute,
    count_naruse,
    count_report,
    count_ssct,
    count_straight_lht,
    count_syt,
    enumerate_ct,
    enumerate_lht,
    enumerate_ssct,
    enumerate_ssyt,
    enumerate_st,
    enumerate_syt,
    verify_probability,
)
from models.errors import ParameterError
from models.settings import Settings
from models.shapes import Partition, SkewShape, iter_skew_shapes
from models.tableau import TableauClass, validate

REFERENCE = SkewShape.of([6, 6, 4, 3], [3, 1])

small_shapes = st.sampled_from([
    (shape, n)
    for shape in iter_skew_shapes(4, max_length=3)
    for n in range(max(shape.length, 1), 4)
])


class TestBruteForce:
    def test_single_row(self):
        rows = [lht.rows[0] for lht in enumerate_lht(SkewShape.of([2]), 1, 2)]
        assert rows == [(0, 0), (1, 0), (1, 1), (1, 2)]

    def test_all_valid_and_distinct(self):
        shape = SkewShape.of([2, 2], [1])
        found = enumerate_lht(shape, 3, 2)
        assert len(set(found)) == len(found)
        assert all(validate(lht, TableauClass.LHT, 3, 2) for lht in found)

    def test_m_zero(self):
        assert enumerate_lht(SkewShape.of([1]), 1, 0) == []
        assert len(enumerate_lht(SkewShape.of([]), 1, 0)) == 1

    def test_ssct_two_ways(self):
        for shape in iter_skew_shapes(4, max_length=3):
            for n in range(max(shape.length, 1), 4):
                assert enumerate_ssct(shape, n) == enumerate_ssct(shape, n, method="lht")

    def test_unknown_ssct_method(self):
        with pytest.raises(ParameterError):
            enumerate_ssct(SkewShape.of([1]), 1, method="magic")

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            enumerate_lht(SkewShape.of([1, 1]), 1, 1)
        with pytest.raises(ParameterError):
            enumerate_lht(SkewShape.of([1]), 0, 1)
        with pytest.raises(ParameterError):
            count_lht(SkewShape.of([1]), 1, -1)

    def test_other_classes(self):
        shape = SkewShape.of([2, 1])
        assert len(enumerate_ssyt(shape, 2)) == 2
        assert len(enumerate_ct(shape, 2)) == 2 * 3 * 1
        assert len(enumerate_syt(shape)) == 2
        assert len(enumerate_st(shape)) == 6
        for syt in enumerate_syt(SkewShape.of([3, 2], [1])):
            assert validate(syt, TableauClass.SYT)


class TestFormulas:
    def test_reference_matrix(self):
        assert binomial_matrix(REFERENCE, 5) == [
            [120, 210, 45, 10],
            [36, 126, 36, 9],
            [0, 15, 15, 6],
            [0, 1, 6, 4],
        ]

    def test_reference_det(self):
        assert count_det(REFERENCE, 5) == 89640
        assert count_ssct(REFERENCE, 5) == 89640

    def test_det_matches_sympy(self):
        for shape in iter_skew_shapes(5, max_length=4):
            if shape.length:
                expected = sympy.Matrix(binomial_matrix(shape, 4)).det(method="bareiss")
                assert count_det(shape, 4) == expected

    @pytest.mark.parametrize("outer, inner, n, expected", [
        ([2, 1], [], 2, 2),
        ([2, 1], [1], 2, 3),
        ([], [], 1, 1),
    ])
    def test_small_det(self, outer, inner, n, expected):
        assert count_det(SkewShape.of(outer, inner), n) == expected

    def test_hook_content(self):
        assert count_hook_content(Partition.of([2]), 2) == 3
        assert count_hook_content(Partition.of([2, 1]), 2) == 2
        assert count_straight_lht(Partition.of([2, 1]), 2, 3) == 27 * 2

    def test_syt(self):
        assert count_syt(SkewShape.of([2, 2], [1])) == 2
        assert count_syt(SkewShape.of([3, 2])) == 5
        assert count_syt(SkewShape.of([])) == 1
        # det · |λ/μ|! = |SYT| · Π(n+c)
        content_product = 94058496000
        assert count_syt(REFERENCE) * content_product == 89640 * math.factorial(15)

    def test_syt_matches_enumeration(self):
        for shape in iter_skew_shapes(5):
            assert count_syt(shape) == len(enumerate_syt(shape))

    @pytest.mark.slow
    def test_syt_matches_enumeration_sweep(self):
        for shape in iter_skew_shapes(7):
            assert count_syt(shape) == len(enumerate_syt(shape)), str(shape)

    def test_naruse(self):
        assert count_naruse(REFERENCE, 5, 1) == 89640
        assert count_naruse(REFERENCE, 5, 2) == 2 ** 15 * 89640
        assert count_naruse(SkewShape.of([2, 2], [1]), 2, 1) == count_det(SkewShape.of([2, 2], [1]), 2)


class TestCountReport:
    def test_small(self):
        report = count_report(SkewShape.of([2, 1]), 2, 1)
        assert report.agreement
        assert set(report.counts) == {"determinant", "brute_force", "hook_content", "syt_formula", "naruse"}
        assert set(report.counts.values()) == {2}

    def test_empty_shape(self):
        report = count_report(SkewShape.of([]), 1, 1)
        assert set(report.counts.values()) == {1}

    def test_reference_shape_brute_force_under_limit(self):
        report = count_report(REFERENCE, 5, 1)
        assert report.counts["brute_force"] == 89640
        assert report.agreement
        assert "hook_content" in report.skipped

    def test_reference_shape_brute_force_skipped(self):
        report = count_report(REFERENCE, 5, 2)
        assert "brute_force" in report.skipped

    def test_cell_limit_does_not_apply(self):
        report = count_report(SkewShape.of([2, 1]), 2, 1, Settings(brute_max_cells=1))
        assert report.counts["brute_force"] == 2
        assert "brute_force" not in report.skipped
        assert report.counts["determinant"] == 2 ** 15 * 89640
        assert report.agreement

    def test_state_limit_from_settings(self):
        report = count_report(SkewShape.of([2, 1]), 2, 1, Settings(brute_max_states=1))
        assert "brute_force" in report.skipped

    def test_json_counts_are_strings(self):
        dumped = count_report(SkewShape.of([1]), 1, 3).model_dump(mode="json")
        assert dumped["counts"]["determinant"] == "3"
        assert dumped["agreement"] is True


class TestSSCTCounter:
    def test_counts_match_enumeration(self):
        for shape in iter_skew_shapes(4, max_length=3):
            for n in range(max(shape.length, 1), 4):
                assert count_ssct(shape, n) == len(enumerate_ssct(shape, n))

    def test_sample_is_valid(self):
        counter = SSCTCounter(SkewShape.of([3, 2], [1]), 3)
        rng = random.Random(7)
        for _ in range(20):
            assert validate(counter.sample(rng), TableauClass.SSCT, 3)

    def test_sample_covers_support(self):
        shape = SkewShape.of([2, 1])
        counter = SSCTCounter(shape, 2)
        rng = random.Random(1)
        seen = {counter.sample(rng) for _ in range(200)}
        assert seen == set(enumerate_ssct(shape, 2))


class TestProbability:
    def test_examples(self):
        check = verify_probability(SkewShape.of([1]), 1)
        assert check.lhs == check.rhs == Fraction(1)
        check = verify_probability(SkewShape.of([2, 1]), 2)
        assert check.equal and check.lhs == Fraction(2, 6)
        assert check.model_dump(mode="json")["lhs"] == "1/3"

    @pytest.mark.slow
    def test_sweep(self):
        for shape in iter_skew_shapes(5, max_length=4):
            for n in range(max(shape.length, 1), 5):
                check = verify_probability(shape, n)
                assert check.equal, (str(shape), n, check.lhs, check.rhs)


@settings(max_examples=40)
@given(small_shapes, st.integers(min_value=0, max_value=2))
def test_brute_force_matches_determinant(case, m):
    shape, n = case
    assert count_lht_brute(shape, n, m) == m ** shape.size * count_det(shape, n)
    assert count_naruse(shape, n, m) == count_lht(shape, n, m)


@pytest.mark.slow
def test_count_sweep():
    for shape in iter_skew_shapes(6, max_length=4):
        for n in range(max(shape.length, 1), 5):
            for m in range(4):
                report = count_report(shape, n, m)
                assert report.agreement, (str(shape), n, m, report.counts)
