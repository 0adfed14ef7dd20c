"""Independent oracles and hypothesis strategies shared by the tests.

Everything in this module is deliberately computed without the package
under test: plain list convolutions, math.comb, and textbook recurrences.
When a test compares a package result against a helper, the two sides
share no code.
"""
from __future__ import annotations

import math
from fractions import Fraction

from hypothesis import strategies as st

from compositae import PowerSeries


def gb(alpha: Fraction, n: int) -> Fraction:
    """Generalized binomial coefficient: alpha over n for rational alpha."""
    out = Fraction(1)
    for i in range(n):
        out *= alpha - i
    return out / math.factorial(n)


def convolve(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def power_coeffs(coeffs: list[Fraction], k: int, order: int) -> list[Fraction]:
    """Coefficients of (sum coeffs[n] x^n)^k by repeated convolution."""
    out = [Fraction(1)] + [Fraction(0)] * order
    base = [Fraction(c) for c in coeffs[: order + 1]]
    base += [Fraction(0)] * (order + 1 - len(base))
    for _ in range(k):
        out = convolve(out, base, order)
    return out


def catalan(n: int) -> Fraction:
    return Fraction(math.comb(2 * n, n), n + 1)


def bernoulli_list(count: int) -> list[Fraction]:
    """B_0..B_{count-1} from the defining recurrence sum C(n+1,j) B_j = 0."""
    values: list[Fraction] = []
    for n in range(count):
        if n == 0:
            values.append(Fraction(1))
            continue
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * values[j]
        values.append(-acc / (n + 1))
    return values


def fibonacci_list(count: int) -> list[int]:
    out = [1, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def exp_coeffs(order: int) -> list[Fraction]:
    return [Fraction(1, math.factorial(n)) for n in range(order + 1)]


small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=4)

small_int_fraction = st.integers(min_value=-2, max_value=2).map(Fraction)


def series_strategy(
    min_order: int = 2,
    max_order: int = 8,
    zero_constant: bool = False,
    unit_linear: bool = False,
    coeffs=small_int_fraction,
):
    """Random PowerSeries; optionally force f(0)=0 and/or f(1)!=0."""

    def build(draw_result):
        order, values = draw_result
        values = list(values[: order + 1])
        values += [Fraction(0)] * (order + 1 - len(values))
        if zero_constant:
            values[0] = Fraction(0)
        if unit_linear and values[1] == 0:
            values[1] = Fraction(1)
        return PowerSeries(tuple(values))

    return st.tuples(
        st.integers(min_value=min_order, max_value=max_order),
        st.lists(coeffs, min_size=max_order + 1, max_size=max_order + 1),
    ).map(build)
