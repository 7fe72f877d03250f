"""Exact kernels, ranks, solves, and the sparse integer echelon."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parmoduli.linalg import IntRowEchelon, RationalMatrix, solve_exact


class TestKernel:
    def test_single_row(self):
        # A_0 + A_1 = 0: kernel is the line through (1, -1)
        basis = RationalMatrix([[1, 1]]).kernel()
        assert len(basis) == 1
        (v,) = basis
        assert v[0] + v[1] == 0 and v != (0, 0)

    def test_identity_has_trivial_kernel(self):
        eye = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert eye.kernel() == []
        assert eye.rank() == 3

    def test_euler_moment_rows(self):
        # rows (c_0 c_2 c_4; c_2 c_4 c_6) of the |E| sequence; eliminating
        # by hand: row2 - row1 gives 4y + 56z = 0, so y = -14z and then
        # x = -y - 5z = 9z, i.e. the kernel is the line through (9, -14, 1)
        m = RationalMatrix([[1, 1, 5], [1, 5, 61]])
        basis = m.kernel()
        assert len(basis) == 1
        assert basis[0] == (Fraction(9), Fraction(-14), Fraction(1))
        assert m.mul_vector(basis[0]) == (0, 0)

    def test_zero_row_matrix(self):
        basis = RationalMatrix([], cols=2).kernel()
        assert len(basis) == 2

    def test_normalization_last_entry_one(self):
        for v in RationalMatrix([[2, 4, 6]]).kernel():
            last = max(i for i, x in enumerate(v) if x)
            assert v[last] == 1

    @given(
        st.lists(
            st.lists(st.integers(-4, 4), min_size=3, max_size=3),
            min_size=1,
            max_size=4,
        )
    )
    @settings(max_examples=200)
    def test_rank_nullity_and_exactness(self, rows):
        m = RationalMatrix(rows)
        basis = m.kernel()
        assert m.rank() + len(basis) == m.cols
        for v in basis:
            assert m.mul_vector(v) == (0,) * m.rows


class TestSolveExact:
    def test_consistent(self):
        cols = [[1, 0], [1, 1]]
        x = solve_exact(cols, [3, 2])
        assert x == [1, 2]

    def test_inconsistent(self):
        assert solve_exact([[1, 2]], [1, 1]) is None

    def test_underdetermined_picks_a_solution(self):
        cols = [[1], [1]]
        x = solve_exact(cols, [5])
        assert x is not None and x[0] + x[1] == 5


class TestIntRowEchelon:
    def test_rank_counts_independent_rows(self):
        ech = IntRowEchelon()
        assert ech.insert({0: 1, 1: 1})
        assert ech.insert({1: 1})
        assert not ech.insert({0: 2, 1: 5})  # 2*(e0+e1) + 3*e1
        assert ech.rank == 2

    def test_contains(self):
        ech = IntRowEchelon()
        ech.insert({0: 2, 2: 4})
        assert ech.contains({0: 1, 2: 2})
        assert not ech.contains({0: 1})

    @given(
        st.lists(
            st.lists(st.integers(-3, 3), min_size=4, max_size=4),
            min_size=0,
            max_size=8,
        )
    )
    @settings(max_examples=150)
    def test_agrees_with_dense_rank(self, rows):
        ech = IntRowEchelon()
        for row in rows:
            ech.insert({i: v for i, v in enumerate(row) if v})
        dense = RationalMatrix(rows, cols=4) if rows else RationalMatrix([], cols=4)
        assert ech.rank == dense.rank()

    @given(
        st.lists(
            st.lists(st.integers(-3, 3), min_size=4, max_size=4),
            min_size=1,
            max_size=8,
        ),
        st.randoms(),
    )
    @settings(max_examples=100)
    def test_rank_is_order_independent(self, rows, rng):
        ech1, ech2 = IntRowEchelon(), IntRowEchelon()
        shuffled = list(rows)
        rng.shuffle(shuffled)
        for row in rows:
            ech1.insert({i: v for i, v in enumerate(row) if v})
        for row in shuffled:
            ech2.insert({i: v for i, v in enumerate(row) if v})
        assert ech1.rank == ech2.rank
