import pytest

from heckesectors.poles import (
    CuspTwist,
    Factorization,
    GL1,
    Hypotheses,
    InconsistentPolesError,
    PoleInterval,
    RankinSelberg,
    a_table,
    a_table_label,
    k4_factorization,
    k6_factorization_sym3,
    k6_factorization_sym4,
    k8_factorization,
    moment_pole_order,
    pole_order_factor,
    pole_order_product,
    reconcile,
)

from oracles import a_table_printed, pole_k6_from_statement


class TestHypotheses:
    def test_refuses_other_configurations(self):
        with pytest.raises(ValueError):
            Hypotheses(1)
        with pytest.raises(ValueError):
            Hypotheses(5, non_self_dual=False)
        with pytest.raises(ValueError):
            Hypotheses(5, not_solvable_polyhedral=False)


class TestPoleInterval:
    def test_arithmetic(self):
        assert PoleInterval(0, 1) + PoleInterval(2, 2) == PoleInterval(2, 3)
        assert PoleInterval(0, 1).scale(3) == PoleInterval(0, 3)
        assert PoleInterval(0, 3).intersect(PoleInterval(2, 5)) == PoleInterval(2, 3)

    def test_empty_intersection(self):
        with pytest.raises(InconsistentPolesError):
            PoleInterval(0, 0).intersect(PoleInterval(5, 5))

    def test_order(self):
        with pytest.raises(ValueError):
            PoleInterval(2, 1)


class TestFactorValidation:
    def test_cusp_twist_range(self):
        with pytest.raises(ValueError):
            CuspTwist(5, 0)
        with pytest.raises(ValueError):
            CuspTwist(0, 0)

    def test_rankin_selberg_order(self):
        with pytest.raises(ValueError):
            RankinSelberg(2, 3, 0)

    def test_character_of_gl1(self):
        assert GL1(2).character().coeffs == {(2, 2): 1}


class TestPoleOrderFactor:
    def test_sym2_pair_at_r3(self):
        h = Hypotheses(3)
        poles = [n for n in range(9) if pole_order_factor(RankinSelberg(2, 2, 2 - n), h).lo]
        assert poles == [1, 4, 7]

    def test_sym4_pair_at_r5_is_uncertain(self):
        h = Hypotheses(5)
        for n in range(9):
            if n != 4:
                assert pole_order_factor(RankinSelberg(4, 4, -n), h) == PoleInterval(0, 1)
        assert pole_order_factor(RankinSelberg(4, 4, -4), h) == PoleInterval(1, 1)

    def test_gl1_at_r4(self):
        h = Hypotheses(4)
        assert [n for n in range(9) if pole_order_factor(GL1(4 - n), h).lo] == [0, 4, 8]

    def test_cusp_twists_never_pole(self):
        for r in range(2, 12):
            for a in (1, 2, 3, 4):
                for j in range(-8, 9):
                    assert pole_order_factor(CuspTwist(a, j), Hypotheses(r)) == PoleInterval(0, 0)

    def test_distinct_rankin_selberg_never_pole(self):
        for r in range(2, 12):
            for j in range(-8, 9):
                assert pole_order_factor(RankinSelberg(4, 2, j), Hypotheses(r)) == PoleInterval(0, 0)

    def test_multiplicity_scales(self):
        assert pole_order_factor(GL1(0, 4), Hypotheses(7)) == PoleInterval(4, 4)


class TestProducts:
    def test_sym3_form_at_r3(self):
        assert pole_order_product(k6_factorization_sym3(3), Hypotheses(3)) == PoleInterval(5, 5)

    def test_eighth_at_centre(self):
        for r in range(2, 30):
            assert pole_order_product(k8_factorization(4), Hypotheses(r)) == PoleInterval(14, 14)

    def test_eighth_generic(self):
        assert pole_order_product(k8_factorization(0), Hypotheses(7)) == PoleInterval(0, 0)


class TestReconcile:
    def test_fourth_moment_r2(self):
        assert moment_pole_order(4, 0, Hypotheses(2)) == PoleInterval(2, 2)

    def test_third_moment_vanishes(self):
        for r in range(2, 20):
            assert moment_pole_order(3, 1, Hypotheses(r)) == PoleInterval(0, 0)

    @pytest.mark.parametrize("r", range(2, 61))
    def test_sixth_dichotomy(self, r):
        h = Hypotheses(r)
        for n in range(7):
            p = moment_pole_order(6, n, h)
            assert p.is_exact
            assert p.lo == pole_k6_from_statement(n, r)
            # each form alone already pins the value down here
            assert pole_order_product(k6_factorization_sym3(n), h) == p

    @pytest.mark.parametrize("r", range(2, 13))
    def test_both_forms_agree(self, r):
        h = Hypotheses(r)
        for n in range(7):
            assert pole_order_product(k6_factorization_sym4(n), h) == pole_order_product(
                k6_factorization_sym3(n), h)

    def test_reconcile_two_forms(self):
        h = Hypotheses(3)
        both = reconcile([k6_factorization_sym3(3), k6_factorization_sym4(3)], 3, 3, h)
        assert both == PoleInterval(5, 5)

    def test_mismatched_factorization_rejected(self):
        with pytest.raises(ValueError):
            reconcile([k4_factorization(1)], 4, 0, Hypotheses(3))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            moment_pole_order(6, 7, Hypotheses(3))
        with pytest.raises(ValueError):
            moment_pole_order(5, 1, Hypotheses(3))


class TestATable:
    @pytest.mark.parametrize("r", range(2, 61))
    def test_matches_printed_table(self, r):
        for n in range(9):
            p = a_table(n, r)
            assert (p.lo, p.hi) == a_table_printed(n, r)

    def test_examples(self):
        assert a_table(0, 4) == PoleInterval(14, 14)
        assert a_table(3, 5) == PoleInterval(0, 1)
        assert a_table(2, 10) == PoleInterval(0, 1)

    def test_labels(self):
        assert a_table_label(PoleInterval(14, 14)) == "14"
        assert a_table_label(PoleInterval(0, 1)) == "≤1"
        assert a_table_label(PoleInterval(0, 0)) == "0"

    def test_bad_n(self):
        with pytest.raises(ValueError):
            a_table(9, 3)
