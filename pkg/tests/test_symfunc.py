"""Symmetric polynomials, the depth-graded monomial sums, and the numeric
specialization x_j -> 1/(2j-1)**2."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsums.formulas import T_from_euler, depth_sum_identity, t_all_twos
from tsums.oracle import pi_power_eval
from tsums.symfunc import (
    GenExpr,
    SymPoly,
    check_bivariate_factorization,
    check_monomial_expansion,
    complete,
    elementary,
    monomial_depth_expr,
    monomial_depth_sum,
    power_sum,
    specialize_odd_squares,
)

ONE = Fraction(1)


class TestGenerators:
    def test_elementary(self):
        assert elementary(2, 3).terms == {
            (1, 1, 0): ONE,
            (1, 0, 1): ONE,
            (0, 1, 1): ONE,
        }
        assert elementary(4, 3).is_zero()
        assert elementary(0, 2) == SymPoly.constant(1, 2)

    def test_complete(self):
        assert complete(2, 2).terms == {(2, 0): ONE, (1, 1): ONE, (0, 2): ONE}

    def test_power_sum(self):
        assert power_sum(3, 2).terms == {(3, 0): ONE, (0, 3): ONE}

    def test_degree_one_coincidence(self):
        assert elementary(1, 4) == complete(1, 4) == power_sum(1, 4)

    def test_newton_consistency(self):
        # E(-u) H(u) = 1, coefficient by coefficient, degrees <= 8.
        m = 8
        for n in range(1, 9):
            acc = SymPoly(m)
            for j in range(n + 1):
                acc = acc + (-1) ** j * (elementary(j, m) * complete(n - j, m))
            assert acc.is_zero(), n


class TestMonomialDepthSums:
    def test_examples(self):
        assert monomial_depth_sum(2, 1, 3) == power_sum(2, 3)
        assert monomial_depth_sum(2, 2, 3) == elementary(2, 3)
        want = {}
        for i in range(3):
            for j in range(3):
                if i != j:
                    e = [0, 0, 0]
                    e[i], e[j] = 2, 1
                    want[tuple(e)] = ONE
        assert monomial_depth_sum(3, 2, 3).terms == want

    def test_no_partitions_gives_zero(self):
        assert monomial_depth_sum(2, 3, 4).is_zero()

    def test_symmetry(self):
        for n in range(1, 7):
            for d in range(1, n + 1):
                assert monomial_depth_sum(n, d, 6).is_symmetric(), (n, d)

    def test_full_depth_is_elementary(self):
        for n in range(1, 6):
            assert monomial_depth_sum(n, n, 6) == elementary(n, 6)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=n))
    )
)
def test_monomial_depth_sum_symmetric_property(nd):
    n, d = nd
    assert monomial_depth_sum(n, d, 6).is_symmetric()


class TestIdentities:
    def test_factorization_small(self):
        assert check_bivariate_factorization(1, 1)
        assert check_bivariate_factorization(4, 4)

    def test_expansion_examples(self):
        assert check_monomial_expansion(2, 1, 2)
        assert check_monomial_expansion(6, 3, 6)
        for n in range(1, 7):
            assert check_monomial_expansion(n, n, 6)

    def test_expansion_two_variable_hand_case(self):
        # N_{2,1} = -2 e_2 + h_1 e_1 = p_2 in two variables.
        m = 2
        rhs = -2 * elementary(2, m) + complete(1, m) * elementary(1, m)
        assert rhs == power_sum(2, m)
        assert monomial_depth_sum(2, 1, m) == power_sum(2, m)

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            check_bivariate_factorization(5, 4)
        with pytest.raises(ValueError):
            check_monomial_expansion(3, 4, 8)


class TestSpecialization:
    M = 10_000
    DPS = 25

    def test_power_sum_hits_t(self):
        got = specialize_odd_squares(GenExpr.power(1), self.M, self.DPS)
        want = pi_power_eval(t_all_twos(1), self.DPS)
        assert abs(got.value - want.value) <= got.err

    def test_elementary_hits_all_twos(self):
        for n in (1, 2, 3, 4):
            got = specialize_odd_squares(GenExpr.elem(n), self.M, self.DPS)
            want = pi_power_eval(t_all_twos(n), self.DPS)
            assert abs(got.value - want.value) <= got.err, n

    def test_complete_hits_depth_sum(self):
        for n in (1, 2, 3, 4):
            got = specialize_odd_squares(GenExpr.homog(n), self.M, self.DPS)
            want = pi_power_eval(depth_sum_identity(n).rhs, self.DPS)
            assert abs(got.value - want.value) <= got.err, n

    def test_degree_one_images_identical(self):
        a = specialize_odd_squares(GenExpr.power(1), self.M, self.DPS)
        b = specialize_odd_squares(GenExpr.elem(1), self.M, self.DPS)
        c = specialize_odd_squares(GenExpr.homog(1), self.M, self.DPS)
        assert a.value == b.value == c.value

    def test_monomial_depth_expr_hits_T(self):
        for n, d in ((2, 1), (2, 2), (3, 2), (3, 3)):
            got = specialize_odd_squares(monomial_depth_expr(n, d), self.M, self.DPS)
            want = pi_power_eval(T_from_euler(n, d), self.DPS)
            assert abs(got.value - want.value) <= got.err, (n, d)

    def test_expression_arithmetic(self):
        e = (GenExpr.elem(1) + GenExpr.homog(1)) * Fraction(1, 2)
        got = specialize_odd_squares(e, self.M, self.DPS)
        want = specialize_odd_squares(GenExpr.power(1), self.M, self.DPS)
        assert abs(got.value - want.value) <= got.err + want.err
