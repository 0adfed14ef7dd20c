from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compositae import (
    InsufficientOrder,
    PowerSeries,
    ZeroConstantTerm,
    arcsin_composita,
    catalog_series,
    compose_series,
    composita_from_series,
    left_composita,
    make_spec,
    radical_composita,
    right_composita,
    series_div,
    solve_functional_equation,
    solve_required_order,
)
from compositae.combinatorics import binomial
from helpers import catalan, gb, series_strategy


def xg_table(coeffs, order):
    """Triangle of x*G(x) for G given by plain coefficients."""
    g = PowerSeries.of(list(coeffs), order=order - 1)
    return composita_from_series(g.times_x(), order)


class TestRightComposita:
    def test_identity_for_constant_one(self):
        t = right_composita(xg_table([1], 9))
        for n, k, value in t.entries():
            assert value == (1 if n == k else 0)

    def test_pascal_from_one_plus_x(self):
        # A = 1 + x*A solves to 1/(1-x); its x*A triangle is Pascal.
        t = right_composita(xg_table([1, 1], 11))
        for n, k, value in t.entries():
            assert value == binomial(n - 1, k - 1)

    def test_tree_function_from_x_exp(self):
        # A = exp(x*A), so x*A is the tree function: entry (n,1) = n^(n-1)/n!.
        g = PowerSeries(tuple(Fraction(1, math.factorial(n)) for n in range(13)))
        t = right_composita(composita_from_series(g.times_x(), 13))
        for n in range(1, 8):
            assert t[n, 1] == Fraction(n ** (n - 1), math.factorial(n))

    def test_requires_double_order(self):
        with pytest.raises(InsufficientOrder):
            right_composita(xg_table([1, 1], 5), order=4)

    def test_explicit_order(self):
        t = right_composita(xg_table([1, 1], 9), order=5)
        assert t.order == 5


class TestLeftComposita:
    def test_identity_for_constant_one(self):
        t = left_composita(xg_table([1], 8))
        for n, k, value in t.entries():
            assert value == (1 if n == k else 0)

    def test_one_plus_x_closed_form(self):
        # A = 1 + x/A: entries (k/(2k-n)) C(2k-n, n-k) where defined.
        t = left_composita(xg_table([1, 1], 8))
        for n, k, value in t.entries():
            if 2 * k - n >= 1:
                assert value == Fraction(k, 2 * k - n) * binomial(2 * k - n, n - k)
            else:
                assert value == 0

    @given(g=series_strategy(min_order=9, max_order=9))
    def test_right_after_left_restores(self, g):
        coeffs = list(g.coeffs)
        coeffs[0] = coeffs[0] or Fraction(1)
        table = xg_table(coeffs, 9)
        assert right_composita(left_composita(table), order=5) == table.truncated(5)

    @given(g=series_strategy(min_order=9, max_order=9))
    def test_left_after_right_restores_where_defined(self, g):
        coeffs = list(g.coeffs)
        coeffs[0] = coeffs[0] or Fraction(1)
        table = xg_table(coeffs, 9)
        round_tripped = left_composita(right_composita(table))
        for n, k, value in round_tripped.entries():
            if 2 * k - n >= 1:
                assert value == table[n, k]
            else:
                assert value == 0


class TestSolver:
    def test_rejects_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            solve_functional_equation(PowerSeries.of([0, 1], order=8), 2, 2)

    def test_rejects_short_series(self):
        with pytest.raises(InsufficientOrder):
            solve_functional_equation(PowerSeries.of([1, 1], order=5), 2, 4)

    def test_required_order(self):
        assert solve_required_order(0, 7) == 7
        assert solve_required_order(2, 6) == 18
        assert solve_required_order(-2, 6) == 18

    def test_m_zero_returns_g(self):
        g = PowerSeries.of([1, 1, Fraction(1, 2)], order=6)
        sol = solve_functional_equation(g, 0, 6)
        assert sol.a_series == g

    def test_catalan_solution(self):
        sol = solve_functional_equation(PowerSeries.of([1, 1], order=24), 2, 8)
        assert list(sol.a_series.coeffs) == [catalan(n) for n in range(9)]

    def test_negative_one_alternating_catalan(self):
        sol = solve_functional_equation(PowerSeries.of([1, 1], order=16), -1, 8)
        expected = [Fraction(1), Fraction(1)] + [
            (-1) ** (n - 1) * catalan(n - 1) for n in range(2, 9)
        ]
        assert list(sol.a_series.coeffs) == expected

    def test_negative_table_has_entries_the_formula_misses(self):
        # At 2k-n = 0 the m=-1 closed form degenerates, but the triangle
        # itself is perfectly finite there.
        sol = solve_functional_equation(PowerSeries.of([1, 1], order=16), -1, 7)
        assert sol.a_table[2, 1] == 1

    @given(
        g=series_strategy(min_order=16, max_order=16),
        m=st.integers(min_value=-2, max_value=3),
    )
    def test_fixed_point_property(self, g, m):
        order = 4
        coeffs = list(g.coeffs)
        coeffs[0] = coeffs[0] or Fraction(1)
        g = PowerSeries(tuple(coeffs))
        sol = solve_functional_equation(g, m, order)
        a = sol.a_series
        if m >= 0:
            a_pow = a**m
        else:
            a_pow = series_div(PowerSeries.one(order), a ** (-m))
        inner = PowerSeries.of([0, 1], order=order) * a_pow
        evaluated = compose_series(g.truncate(order), composita_from_series(inner, order))
        assert evaluated == a

    @given(
        g=series_strategy(min_order=16, max_order=16),
        m=st.integers(min_value=-2, max_value=3),
    )
    def test_diagonal_is_preserved(self, g, m):
        coeffs = list(g.coeffs)
        coeffs[0] = coeffs[0] or Fraction(1)
        g = PowerSeries(tuple(coeffs))
        sol = solve_functional_equation(g, m, 4)
        for n in range(1, sol.a_table.order + 1):
            assert sol.a_table[n, n] == sol.g_table[n, n]

    @given(g=series_strategy(min_order=11, max_order=11))
    def test_lagrange_classical_relation(self, g):
        # For A = G(xA): n*[x^n](xA)^k = k*[x^(n-k)] G^n.
        order = 5
        coeffs = list(g.coeffs)
        coeffs[0] = coeffs[0] or Fraction(1)
        g = PowerSeries(tuple(coeffs))
        sol = solve_functional_equation(g, 1, order)
        for n in range(1, order + 1):
            g_pow_n = g.truncate(order) ** n
            for k in range(1, n + 1):
                assert n * sol.a_table[n, k] == k * g_pow_n[n - k]

    def test_integer_family_stays_integer(self):
        for m in (0, 1, 2, 3):
            sol = solve_functional_equation(PowerSeries.of([1, 1], order=4 * 8), m, 8)
            for _, _, value in sol.a_table.entries():
                assert value.denominator == 1


class TestRadical:
    def test_cube_root_matches_binomial_expansion(self):
        t = radical_composita(3, 10)
        for n in range(1, 11):
            assert t[n, 1] == -((-1) ** n) * gb(Fraction(1, 3), n)

    def test_square_root_column(self):
        t = radical_composita(2, 6)
        assert [t[n, 1] for n in range(1, 4)] == [
            Fraction(1, 2),
            Fraction(1, 8),
            Fraction(1, 16),
        ]

    def test_diagonal_is_inverse_root(self):
        t = radical_composita(3, 8)
        for n in range(1, 9):
            assert t[n, n] == Fraction(1, 3) ** n

    def test_full_table_is_the_composita_of_the_series(self):
        order = 9
        for m in (2, 3, 4):
            series = PowerSeries(
                (Fraction(0),)
                + tuple(-((-1) ** n) * gb(Fraction(1, m), n) for n in range(1, order + 1))
            )
            assert radical_composita(m, order) == composita_from_series(series, order)

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            radical_composita(0, 5)


class TestArcsin:
    @staticmethod
    def arcsin_coeff(n: int) -> Fraction:
        # Integrate (1-x^2)^(-1/2) term by term.
        if n % 2 == 0:
            return Fraction(0)
        j = (n - 1) // 2
        return Fraction(binomial(2 * j, j), 4**j * (2 * j + 1))

    def test_column_is_the_arcsin_series(self):
        t = arcsin_composita(9)
        for n in range(1, 10):
            assert t[n, 1] == self.arcsin_coeff(n)

    def test_odd_cells_vanish(self):
        t = arcsin_composita(8)
        for n, k, value in t.entries():
            if (n - k) % 2 == 1:
                assert value == 0

    def test_diagonal_is_one(self):
        t = arcsin_composita(8)
        for n in range(1, 9):
            assert t[n, n] == 1

    def test_full_table_is_the_composita_of_the_series(self):
        order = 8
        series = PowerSeries(tuple(self.arcsin_coeff(n) for n in range(order + 1)))
        assert arcsin_composita(order) == composita_from_series(series, order)
