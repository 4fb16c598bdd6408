"""Closed forms: binomial counts, Catalan identity, g rationalization, area."""

import pytest
from hypothesis import given, strategies as st

from deutsch_paths.closed import (
    area_coeff,
    area_convolution,
    area_gf,
    binom,
    cat3,
    count_lr_closed,
    count_rl_closed,
    f_closed,
    g_closed,
)
from deutsch_paths.series import coeff_x, zseries_of
from deutsch_paths.strip import Direction, dp_counts, stabilized


class TestBinom:
    def test_values(self):
        assert binom(5, 2) == 10
        assert binom(14, 4) == 1001

    def test_out_of_range_zero(self):
        assert binom(3, -1) == 0
        assert binom(3, 4) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 0)


class TestCountLrClosed:
    @pytest.mark.parametrize(
        "n,k,expected", [(4, 2, 3), (5, 1, 7), (9, 3, 88), (9, 1, 143), (0, 0, 1)]
    )
    def test_spot_values(self, n, k, expected):
        assert count_lr_closed(n, k) == expected

    def test_parity_zero(self):
        assert count_lr_closed(5, 2) == 0
        assert count_lr_closed(4, 3) == 0

    def test_matches_dp(self):
        table = dp_counts(Direction.LR, 40)
        for n in range(41):
            for k in range(n + 1):
                assert count_lr_closed(n, k) == table.count(n, k)


class TestCat3:
    @pytest.mark.parametrize("n,expected", [(0, 1), (2, 3), (5, 273), (6, 1428)])
    def test_values(self, n, expected):
        assert cat3(n) == expected

    def test_equals_closed_count(self):
        assert all(cat3(n) == count_lr_closed(2 * n, 0) for n in range(41))


class TestFClosed:
    def test_k0(self):
        assert zseries_of(f_closed(0), 6).coeffs == (1, 0, 1, 0, 3, 0, 12)

    def test_k2(self):
        assert zseries_of(f_closed(2), 6).coeffs == (0, 0, 1, 0, 3, 0, 12)

    def test_k1_z7(self):
        assert zseries_of(f_closed(1), 7)[7] == 30

    def test_structure(self):
        f = f_closed(3)
        assert (f.zshift, f.pow1t, f.pow13t) == (3, 4, 0)


class TestGClosed:
    def test_g1_is_single_piece(self):
        g = g_closed(1)
        assert g.to_series(9).coeffs == (0, 1, 0, 3, 0, 12, 0, 55, 0, 273)

    def test_g2_split(self):
        g = g_closed(2)
        assert g.coefficient(8) == 218
        # the two pieces are z^2/(1-t)^5 and t/(1-t)^2
        shifts = sorted(s for s, _ in g.summands)
        assert shifts == [0, 2]

    def test_g3_z11(self):
        assert g_closed(3).coefficient(11) == 4896

    def test_g0_equals_f0(self):
        assert g_closed(0).to_series(20) == zseries_of(f_closed(0), 20)

    @pytest.mark.parametrize("i", range(9))
    def test_matches_stabilized(self, i):
        order = 14
        assert g_closed(i).to_series(order) == stabilized(Direction.RL, i, order)


class TestCountRlClosed:
    @pytest.mark.parametrize(
        "n,i,expected", [(3, 1, 3), (2, 2, 2), (11, 3, 4896), (0, 0, 1)]
    )
    def test_spot_values(self, n, i, expected):
        assert count_rl_closed(n, i) == expected

    def test_parity_zero(self):
        assert count_rl_closed(3, 2) == 0

    def test_matches_dp(self):
        table = dp_counts(Direction.RL, 30)
        for n in range(31):
            for i in range(min(n, 12) + 1):
                assert count_rl_closed(n, i) == table.count(n, i)

    @given(st.integers(0, 24), st.integers(0, 10))
    def test_parity_vanishing(self, n, i):
        if (n - i) % 2 == 1:
            assert count_rl_closed(n, i) == 0


class TestArea:
    def test_gf_structure(self):
        gf = area_gf()
        assert gf.numer.coeffs == (0, 1, 3)
        assert (gf.pow1t, gf.pow13t, gf.zshift) == (1, 2, 0)

    def test_gf_extraction(self):
        assert [coeff_x(area_gf(), n) for n in range(4)] == [0, 1, 12, 102]

    @pytest.mark.parametrize("n,expected", [(0, 0), (1, 1), (2, 12), (3, 102)])
    def test_coeff_values(self, n, expected):
        assert area_coeff(n) == expected

    def test_three_routes_agree(self):
        gf = area_gf()
        conv = area_convolution(60)
        for n in range(31):
            assert area_coeff(n) == coeff_x(gf, n) == conv[2 * n]

    def test_convolution_small(self):
        assert area_convolution(4).coeffs == (0, 0, 1, 0, 12)
        assert area_convolution(0).is_zero()
