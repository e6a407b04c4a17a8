import pytest
from hypothesis import given
from hypothesis import strategies as st

from minmatrix import (
    ExactMatrix,
    build_c_matrix,
    build_delta_matrix,
    build_min_matrix,
    build_theta_matrix,
    det_bareiss,
    prefix_sums,
)

increments = st.lists(st.integers(-50, 50), min_size=1, max_size=10)


class TestPrefixSums:
    def test_unit_increments(self):
        assert prefix_sums([1, 1, 1]) == [1, 2, 3]

    def test_hand_summation(self):
        assert prefix_sums([2, 3, 4]) == [2, 5, 9]

    def test_single_element(self):
        assert prefix_sums([5]) == [5]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            prefix_sums([])


class TestMinMatrix:
    def test_smallest(self):
        assert build_min_matrix(1).to_lists() == [[1]]

    def test_displayed_3x3(self):
        assert build_min_matrix(3).to_lists() == [[1, 1, 1], [1, 2, 2], [1, 2, 3]]

    def test_entry_is_min(self):
        assert build_min_matrix(5).entry(2, 4) == 2

    def test_zero_dim_rejected(self):
        with pytest.raises(ValueError):
            build_min_matrix(0)

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_entries_nondecreasing_along_rows_and_columns(self, n):
        m = build_min_matrix(n)
        for r in range(1, n + 1):
            for c in range(1, n):
                assert m.entry(r, c) <= m.entry(r, c + 1)
                assert m.entry(c, r) <= m.entry(c + 1, r)


class TestCMatrix:
    def test_displayed_instance(self):
        assert build_c_matrix(4, 2).to_lists() == [[2, 2, 2], [2, 3, 3], [2, 3, 4]]

    def test_small_instance(self):
        assert build_c_matrix(3, 2).to_lists() == [[2, 2], [2, 3]]

    @pytest.mark.parametrize("n,k", [(4, 4), (4, 1), (4, 5), (3, 3)])
    def test_out_of_range_shift_rejected(self, n, k):
        with pytest.raises(ValueError):
            build_c_matrix(n, k)


class TestDeltaMatrix:
    @pytest.mark.parametrize("n", range(1, 31))
    def test_unit_increments_give_min_matrix(self, n):
        assert build_delta_matrix([1] * n) == build_min_matrix(n)

    def test_prefix_sum_construction(self):
        assert build_delta_matrix([2, 3, 4]).to_lists() == [
            [2, 2, 2],
            [2, 5, 5],
            [2, 5, 9],
        ]

    @pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (9, 8)])
    def test_shift_increments_give_c_matrix(self, n, k):
        inc = [k] + [1] * (n - k)
        assert build_delta_matrix(inc) == build_c_matrix(n, k)

    @given(increments)
    def test_always_symmetric(self, inc):
        assert build_delta_matrix(inc).is_symmetric()

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
    def test_positive_mode_leading_minors_are_increment_products(self, inc):
        # leading-minor criterion for positive definiteness
        matrix = build_delta_matrix(inc)
        product = 1
        for m in range(1, len(inc) + 1):
            product *= inc[m - 1]
            leading = matrix.submatrix(range(1, m + 1))
            assert det_bareiss(leading) == product
            assert product > 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_delta_matrix([])


class TestThetaMatrix:
    def test_base_case_display(self):
        assert build_theta_matrix([2, 3, 5]).to_lists() == [[2, 5], [2, 10]]

    def test_unit_increments_2x2(self):
        assert build_theta_matrix([1, 1, 1]).to_lists() == [[1, 2], [1, 3]]

    def test_unit_increments_3x3(self):
        assert build_theta_matrix([1, 1, 1, 1]).to_lists() == [
            [1, 2, 2],
            [1, 3, 3],
            [1, 3, 4],
        ]

    @pytest.mark.parametrize("inc", [[], [1], [1, 2]])
    def test_too_short_rejected(self, inc):
        with pytest.raises(ValueError):
            build_theta_matrix(inc)


class TestExactMatrix:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2], [3, 4], [5, 6]])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ExactMatrix([])

    def test_entry_bounds(self):
        m = ExactMatrix([[1, 2], [3, 4]])
        with pytest.raises(IndexError):
            m.entry(0, 1)
        with pytest.raises(IndexError):
            m.entry(1, 3)

    def test_immutable(self):
        m = ExactMatrix([[1]])
        with pytest.raises(AttributeError):
            m.dim = 2

    def test_to_lists_is_a_copy(self):
        m = ExactMatrix([[1, 2], [3, 4]])
        rows = m.to_lists()
        rows[0][0] = 99
        assert m.entry(1, 1) == 1

    def test_submatrix(self):
        m = build_min_matrix(4)
        assert m.submatrix([2, 4]).to_lists() == [[2, 2], [2, 4]]
