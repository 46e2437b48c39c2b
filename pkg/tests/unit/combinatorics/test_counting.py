"""
Unit tests for the counting module.

Golden values are the published tables for n, r <= 6.
"""
import pytest

from app.combinatorics.counting import (
    NetworkCounter, count, count_all, count_connected, count_disconnected,
    count_minimal, euler_totient, multiset_coefficient,
)
from app.utils.validation import ValidationError, InternalConsistencyError
from tests.fixtures.tables import cells, published


@pytest.fixture
def counter():
    """Fresh counter with its own memo."""
    return NetworkCounter()


class TestHelpers:
    """Test cases for the small number-theoretic helpers."""

    @pytest.mark.parametrize("K,a,expected", [(3, 0, 1), (0, 0, 1), (0, 2, 0), (3, 2, 6), (5, 3, 35)])
    def test_multiset_coefficient(self, K, a, expected):
        assert multiset_coefficient(K, a) == expected

    @pytest.mark.parametrize("r,expected", [(1, 1), (2, 1), (6, 2), (7, 6), (12, 4), (100, 40)])
    def test_euler_totient(self, r, expected):
        assert euler_totient(r) == expected


class TestPublishedTables:
    """Every published value is reproduced exactly."""

    @pytest.mark.parametrize("n,r,value", cells('H'))
    def test_count_all(self, n, r, value):
        assert count_all(n, r) == value

    @pytest.mark.parametrize("n,r,value", cells('K'))
    def test_count_connected(self, n, r, value):
        assert count_connected(n, r) == value

    @pytest.mark.parametrize("n,r,value", cells('M'))
    def test_count_minimal(self, n, r, value):
        assert count_minimal(n, r) == value

    def test_largest_entries(self):
        assert count('H', 6, 6) == 13508534834704
        assert count('K', 5, 3) == 436277
        assert count('M', 6, 6) == 13149391543076


class TestNetworkCounter:
    """Test cases for the memoized evaluator."""

    def test_memo_does_not_change_results(self, counter):
        plain = NetworkCounter(use_memo=False)
        for n in range(1, 5):
            for r in range(1, 5):
                assert counter.count_minimal(n, r) == plain.count_minimal(n, r)

    def test_memo_is_filled_and_cleared(self, counter):
        counter.count_minimal(3, 3)
        assert ('M', 3, 3) in counter._memo
        assert ('K', 3, 1) in counter._memo
        counter.clear()
        assert counter._memo == {}

    def test_disconnected_is_h_minus_k(self, counter):
        for n in range(1, 7):
            for r in range(1, 7):
                assert counter.count_disconnected(n, r) == published('H', n, r) - published('K', n, r)

    def test_single_cell(self, counter):
        assert counter.count_all(1, 9) == 1
        assert counter.count_connected(1, 9) == 1
        assert counter.count_minimal(1, 9) == 0
        assert counter.count_disconnected(1, 9) == 0

    def test_ordering(self, counter):
        for n in range(2, 7):
            for r in range(1, 7):
                assert counter.count_all(n, r) >= counter.count_connected(n, r) >= counter.count_minimal(n, r) >= 0

    def test_invalid_family(self, counter):
        with pytest.raises(ValidationError):
            counter.count('X', 2, 2)

    @pytest.mark.parametrize("n,r", [(0, 1), (1, 0), (-2, 3)])
    def test_invalid_arguments(self, counter, n, r):
        with pytest.raises(ValidationError):
            counter.count_all(n, r)

    def test_negative_minimal_count_is_reported(self, counter, mocker):
        counter._store('M', 3, 1, 4)
        mocker.patch.object(counter, 'count_connected', return_value=0)
        with pytest.raises(InternalConsistencyError):
            counter.count_minimal(3, 2)


class TestTotientLaw:
    """Two-cell minimal networks are counted by Euler's totient."""

    @pytest.mark.parametrize("r", range(2, 101))
    def test_two_cell_minimal_count(self, r):
        assert count_minimal(2, r) == euler_totient(r)


class TestTwoCellClosedForm:
    """Two-cell networks of degree r form (r+1)(r+2)/2 isomorphism classes."""

    @pytest.mark.parametrize("r", range(1, 101))
    def test_two_cell_count(self, r):
        assert count_all(2, r) == (r + 1) * (r + 2) // 2


if __name__ == '__main__':
    pytest.main(['-v', __file__])
