from fractions import Fraction as F
from math import comb

import numpy as np
import pytest

from heckesectors.moments import (
    FourierCosPoly,
    moment_bounds,
    moment_poly,
    q6_upper,
    q8_table_value,
    q8_uniform,
    q8_upper,
    q8_with_resolved,
)

from oracles import a_table_printed


def brute_moment_leading(k, r, phi):
    """Average of Re(e^{i phi} z)^k over z = alpha + beta, with the series orders from the oracle tables."""
    from heckesectors.poles import Hypotheses, moment_pole_order

    h = Hypotheses(r)
    total = 0j
    for n in range(k + 1):
        total += comb(k, n) * moment_pole_order(k, n, h).lo * np.exp(1j * (k - 2 * n) * phi)
    return total / 2**k


class TestFourierCosPoly:
    def test_evaluation(self):
        p = FourierCosPoly({0: F(3, 4), 4: F(1, 4)})
        assert p(0.0) == pytest.approx(1.0)
        assert p(np.pi / 4) == pytest.approx(0.5)
        np.testing.assert_allclose(p(np.array([0.0, np.pi / 4])), [1.0, 0.5])

    def test_helpers(self):
        p = FourierCosPoly({0: F(25, 16), 6: F(5, 32)})
        assert p.at_zero() == F(55, 32)
        assert p.abs_sum() == F(55, 32)
        assert p.minimum() == F(45, 32)
        assert not p.is_constant
        assert p[3] == 0

    def test_rejects_negative_harmonic(self):
        with pytest.raises(ValueError):
            FourierCosPoly({-1: F(1)})


class TestMomentPoly:
    def test_fourth_r2(self):
        assert moment_poly(4, 2).coeffs == {0: F(3, 4), 4: F(1, 4)}

    @pytest.mark.parametrize("r", range(3, 40))
    def test_fourth_generic(self, r):
        assert moment_poly(4, r).coeffs == {0: F(3, 4)}

    def test_sixth_r3(self):
        assert moment_poly(6, 3).coeffs == {0: F(50, 32), 6: F(5, 32)}

    def test_sixth_r2(self):
        assert moment_poly(6, 2).coeffs == {0: F(25, 16), 4: F(15, 16)}

    @pytest.mark.parametrize("r", range(2, 30))
    def test_third_vanishes(self, r):
        assert moment_poly(3, r).coeffs == {}

    @pytest.mark.parametrize("k", [4, 6])
    @pytest.mark.parametrize("r", [2, 3, 4, 7])
    def test_against_complex_sum(self, k, r):
        phis = np.linspace(0, 2 * np.pi, 37)
        p = moment_poly(k, r)
        for phi in phis:
            z = brute_moment_leading(k, r, phi)
            assert abs(z.imag) < 1e-12
            assert p(phi) == pytest.approx(z.real, abs=1e-12)

    def test_unsupported(self):
        with pytest.raises(ValueError):
            moment_poly(8, 3)


class TestUpperBounds:
    def test_q6(self):
        assert q6_upper(2) == F(5, 2)
        assert q6_upper(3) == F(55, 32)
        assert q6_upper(7) == F(25, 16)

    @pytest.mark.parametrize("r", range(2, 30))
    def test_q6_is_max(self, r):
        phis = np.linspace(0, 2 * np.pi, 2001)
        assert np.max(moment_poly(6, r)(phis)) == pytest.approx(float(q6_upper(r)), abs=1e-12)

    @pytest.mark.parametrize(
        "r, value",
        [(2, 1792), (3, 1204), (4, 1008), (5, 1166), (10, 1038), (15, 996), (20, 982), (7, 980), (9, 980)],
    )
    def test_q8_table(self, r, value):
        assert q8_table_value(r) == value

    @pytest.mark.parametrize("r", range(2, 61))
    def test_q8_against_printed_table(self, r):
        assert q8_table_value(r) == sum(comb(8, n) * a_table_printed(n, r)[1] for n in range(9))

    def test_q8_fractions(self):
        assert q8_upper(2) == 7
        assert q8_upper(5) == F(583, 128)
        assert q8_upper(9) == F(245, 64)

    def test_uniform_over_large_r(self):
        assert q8_uniform(6) == F(519, 128)
        assert q8_uniform(6) == q8_upper(10)
        assert max(q8_upper(r) for r in range(6, 200)) == q8_uniform(6)

    def test_resolving_uncertainty_only_lowers(self):
        base = q8_upper(5)
        for n in (0, 1, 2, 3):
            assert q8_with_resolved(5, {n: 0}) < base
            assert q8_with_resolved(5, {n: 1}) == base
        with pytest.raises(ValueError):
            q8_with_resolved(5, {4: 0})


class TestMomentBounds:
    def test_r4(self):
        mb = moment_bounds(4)
        assert mb.q4.coeffs == {0: F(3, 4)}
        assert mb.q6_upper == F(25, 16)
        assert mb.q8_upper == F(504, 128)

    def test_r3(self):
        mb = moment_bounds(3)
        assert (mb.q6_upper, mb.q8_upper) == (F(55, 32), F(602, 128))

    def test_r2(self):
        mb = moment_bounds(2)
        assert mb.q4_at(0) == pytest.approx(1.0)
        assert mb.q4_min == F(1, 2)
        assert (mb.q6_upper, mb.q8_upper) == (F(5, 2), 7)
        assert mb.q3 == 0

    def test_uncertain_entries(self):
        assert moment_bounds(5).uncertain_a == (0, 1, 2, 3, 5, 6, 7, 8)
        assert moment_bounds(7).uncertain_a == ()
