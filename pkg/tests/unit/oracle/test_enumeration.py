"""
Unit tests for Omega enumeration and vectorised canonical keys.
"""
import math

import numpy as np
import pytest

from app.network.canonical import canonical_form
from app.oracle.enumeration import (
    canonical_keys, check_budget, chunk_keys, compositions, decode_chunk,
    decode_key, enumerate_omega, keys_fit, omega_size,
)
from app.utils.validation import BudgetExceededError, ValidationError


class TestCompositions:
    """Test cases for row compositions."""

    def test_lexicographic(self):
        assert compositions(2, 2) == ((0, 2), (1, 1), (2, 0))

    @pytest.mark.parametrize("n,r", [(1, 4), (3, 2), (4, 3)])
    def test_count(self, n, r):
        result = compositions(n, r)
        assert len(result) == math.comb(n + r - 1, r)
        assert len(set(result)) == len(result)
        assert all(sum(c) == r for c in result)
        assert list(result) == sorted(result)


class TestOmega:
    """Test cases for enumerate_omega."""

    def test_single_cell(self):
        assert [G.adj for G in enumerate_omega(1, 2)] == [((2,),)]

    def test_two_cells_degree_one(self):
        assert [G.adj for G in enumerate_omega(2, 1)] == [
            ((0, 1), (0, 1)),
            ((0, 1), (1, 0)),
            ((1, 0), (0, 1)),
            ((1, 0), (1, 0)),
        ]

    @pytest.mark.parametrize("n,r", [(3, 2), (2, 4), (4, 1)])
    def test_size_order_and_uniqueness(self, n, r):
        matrices = [G.adj for G in enumerate_omega(n, r)]
        assert len(matrices) == omega_size(n, r)
        assert len(set(matrices)) == len(matrices)
        assert matrices == sorted(matrices)

    def test_three_cells_degree_two(self):
        assert omega_size(3, 2) == 216

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            enumerate_omega(6, 6)
        assert info.value.size == omega_size(6, 6)
        assert info.value.budget == 100000000
        assert str(info.value.size) in str(info.value)

    def test_explicit_budget(self):
        assert check_budget(2, 2, budget=9) == 9
        with pytest.raises(BudgetExceededError):
            check_budget(2, 2, budget=8)

    def test_invalid_degree(self):
        with pytest.raises(ValidationError):
            omega_size(2, 0)


class TestChunks:
    """Test cases for index decoding and canonical keys."""

    def test_decode_chunk_matches_enumeration(self):
        expected = [G.adj for G in enumerate_omega(3, 2)]
        decoded = decode_chunk(3, 2, 0, 216)
        assert decoded.shape == (216, 3, 3)
        assert [tuple(map(tuple, m.tolist())) for m in decoded] == expected

    def test_decode_partial_chunk(self):
        expected = [G.adj for G in enumerate_omega(3, 2)][100:130]
        assert [tuple(map(tuple, m.tolist())) for m in decode_chunk(3, 2, 100, 130)] == expected

    @pytest.mark.parametrize("n,r", [(2, 3), (3, 2), (4, 1)])
    def test_keys_decode_to_canonical_form(self, n, r):
        networks = list(enumerate_omega(n, r))
        keys = canonical_keys(decode_chunk(n, r, 0, len(networks)), n, r)
        for G, key in zip(networks, keys):
            assert decode_key(key, n, r) == canonical_form(G)

    def test_chunking_does_not_change_keys(self):
        size = omega_size(3, 2)
        assert chunk_keys(3, 2, 0, size, 7) == chunk_keys(3, 2, 0, size, 1000)
        assert len(chunk_keys(3, 2, 0, size, 7)) == 44

    def test_keys_fit(self):
        assert keys_fit(4, 3)
        assert keys_fit(5, 2)
        assert not keys_fit(6, 6)

    def test_keys_overflow(self):
        with pytest.raises(ValueError):
            canonical_keys(np.zeros((1, 8, 8), dtype=np.int64), 8, 4)


if __name__ == '__main__':
    pytest.main(['-v', __file__])
