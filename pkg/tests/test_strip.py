"""Strip enumeration, determinant recurrences, and the Cramer route."""

import pytest
from hypothesis import given, settings, strategies as st

from deutsch_paths.series import ZSeries
from deutsch_paths.strip import (
    Direction,
    bounded_f,
    bounded_g,
    delta,
    det_d,
    det_direct,
    dp_counts,
    seq_a,
    seq_b,
    solve_system,
    stabilized,
)


def zs(*coeffs):
    return ZSeries(tuple(coeffs))


class TestDpCounts:
    def test_lr_unbounded_row4(self):
        t = dp_counts(Direction.LR, 4)
        assert (t.count(4, 0), t.count(4, 2), t.count(4, 4)) == (3, 3, 1)

    def test_rl_unbounded_overshoot(self):
        # the two paths +1+1 and +3-1 both end at level 2
        assert dp_counts(Direction.RL, 2).count(2, 2) == 2

    def test_lr_closed_form_spot(self):
        assert dp_counts(Direction.LR, 9).count(9, 1) == 143

    def test_lr_barrier_one(self):
        t = dp_counts(Direction.LR, 12, height=1)
        assert all(t.count(2 * n, 0) == 1 for n in range(7))

    def test_lr_parity(self):
        t = dp_counts(Direction.LR, 12)
        assert all(
            t.count(n, k) == 0
            for n in range(13)
            for k in range(n + 1)
            if (n - k) % 2 == 1
        )

    def test_row_zero(self):
        assert dp_counts(Direction.RL, 5).rows[0] == (1,)


class TestSequences:
    def test_a3(self):
        assert seq_a(3, 4) == zs(1, 0, -1, 0, 0)

    def test_b3_b5(self):
        assert seq_b(3, 4) == zs(0, 1, 0, 0, 0)
        assert seq_b(5, 4) == zs(0, 2, 0, 0, 0)

    def test_negative_index_zero(self):
        assert seq_a(-1, 3).is_zero()
        assert seq_b(-3, 3).is_zero()

    def test_d_equals_shifted_a(self):
        assert all(det_d(m, 12) == seq_a(m + 1, 12) for m in range(31))

    @given(st.integers(3, 25), st.integers(4, 16))
    def test_a_recurrence(self, n, order):
        lhs = seq_a(n, order)
        rhs = seq_a(n - 1, order) - seq_a(n - 3, order).shift(2)
        assert lhs == rhs

    @given(st.integers(3, 25), st.integers(4, 16))
    def test_b_recurrence(self, n, order):
        assert seq_b(n, order) == seq_b(n - 2, order) + seq_b(n - 3, order).shift(1)


class TestDeterminants:
    def test_d_small(self):
        assert det_d(2, 4) == zs(1, 0, -1, 0, 0)
        assert det_d(3, 4) == zs(1, 0, -2, 0, 0)
        assert det_d(4, 4) == zs(1, 0, -3, 0, 0)

    def test_delta_first_column(self):
        assert all(delta(m, 1, 10) == det_d(m - 1, 10) for m in range(1, 11))

    def test_delta_spot_values(self):
        assert delta(3, 2, 4) == zs(0, 1, 0, 0, 0)
        assert delta(3, 3, 4) == zs(0, 0, 1, 0, 0)

    def test_delta_range_check(self):
        with pytest.raises(ValueError):
            delta(3, 0, 4)
        with pytest.raises(ValueError):
            delta(3, 4, 4)

    def test_det_direct_identity(self):
        assert det_direct(1, 3) == ZSeries.one(3)

    def test_direct_matches_recurrence(self):
        assert all(det_d(m, 16) == det_direct(m, 16) for m in range(13))

    def test_direct_matches_delta(self):
        assert all(
            delta(m, q, 16) == det_direct(m, 16, q=q)
            for m in range(1, 13)
            for q in range(1, m + 1)
        )


class TestCramer:
    def test_bounded_f_barrier_one(self):
        assert bounded_f(0, 1, 8) == zs(1, 0, 1, 0, 1, 0, 1, 0, 1)

    def test_bounded_g_barrier_one(self):
        assert bounded_g(0, 1, 8) == zs(1, 0, 1, 0, 1, 0, 1, 0, 1)

    def test_bounded_f_stabilized_coefficient(self):
        assert bounded_f(2, 7, 8)[8] == 55

    def test_level_beyond_barrier(self):
        with pytest.raises(ValueError):
            bounded_f(3, 2, 5)
        with pytest.raises(ValueError):
            bounded_g(3, 2, 5)

    @settings(deadline=None)
    @given(
        st.sampled_from(list(Direction)),
        st.integers(0, 6),
        st.integers(0, 14),
    )
    def test_three_way_equality(self, direction, h, order):
        table = dp_counts(direction, order, height=h)
        sol = solve_system(direction, h, order)
        quot = bounded_f if direction is Direction.LR else bounded_g
        for level in range(h + 1):
            series = quot(level, h, order)
            assert series == sol[level]
            assert series.coeffs == tuple(
                table.count(n, level) for n in range(order + 1)
            )


class TestStabilized:
    def test_lr_level0(self):
        s = stabilized(Direction.LR, 0, 10)
        assert s == zs(1, 0, 1, 0, 3, 0, 12, 0, 55, 0, 273)

    def test_lr_level1(self):
        assert stabilized(Direction.LR, 1, 7) == zs(0, 1, 0, 2, 0, 7, 0, 30)

    def test_rl_level1(self):
        s = stabilized(Direction.RL, 1, 9)
        assert s == zs(0, 1, 0, 3, 0, 12, 0, 55, 0, 273)

    def test_monotone_in_barrier(self):
        for level in (0, 1, 3):
            limit = stabilized(Direction.LR, level, 10)
            prev = None
            for h in range(level, 15):
                cur = bounded_f(level, h, 10).coeffs
                assert all(c <= l for c, l in zip(cur, limit.coeffs))
                if prev is not None:
                    assert all(a <= b for a, b in zip(prev, cur))
                prev = cur


class TestSolveSystem:
    def test_lr_h1(self):
        sol = solve_system(Direction.LR, 1, 8)
        assert sol[0] == zs(1, 0, 1, 0, 1, 0, 1, 0, 1)
        assert sol[1] == zs(0, 1, 0, 1, 0, 1, 0, 1, 0)

    def test_rl_h2_component1(self):
        # Delta_{3,2}/d_3 = z/(1-2z^2)
        sol = solve_system(Direction.RL, 2, 6)
        assert sol[1] == zs(0, 1, 0, 2, 0, 4, 0)

    def test_lr_h7_matches_dp(self):
        table = dp_counts(Direction.LR, 8, height=7)
        sol = solve_system(Direction.LR, 7, 8)
        assert sol[0].coeffs == tuple(table.count(n, 0) for n in range(9))
