"""Solving A(x) = G(x A(x)^m) through triangle transforms.

The workhorse is the index map (n, k) -> ((m+1)n - mk, mn - (m-1)k) on the
triangle of x*G(x), which hands back the triangle of x*A(x) directly.  The
m = 1 case is classical Lagrange inversion, exposed separately as
``right_composita``; ``left_composita`` is its partial inverse.  Negative m
is routed through reciprocals: solve F = R(xF^w) with w = -m and
R = 1/G, then flip the answer back with the reciprocal-triangle transform.

Two applications with non-obvious setups live here as well: triangles for
1 - (1-x)^(1/m) and for arcsin(x), both obtained by feeding a rational or
reciprocal helper triangle to ``right_composita``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import reciprocal_composita
from .catalog import make_spec
from .combinatorics import binomial
from .errors import InsufficientOrder, ZeroConstantTerm
from .series import PowerSeries
from .triangle import CompositaTable, composita_from_series


def right_composita(g: CompositaTable, order: int | None = None) -> CompositaTable:
    """Triangle of x*A(x) for the solution of A(x) = G(x A(x)), taking the
    triangle of x*G(x).

    Entry (n, k) is (k/n) * g(2n - k, n), so producing rows 1..order
    consumes rows of g up to 2*order - 1.
    """
    if order is None:
        order = (g.order + 1) // 2
    if order < 1:
        raise ValueError("a composita table needs order >= 1")
    if 2 * order - 1 > g.order:
        raise InsufficientOrder(
            f"input triangle is needed to order {2 * order - 1}, got {g.order}"
        )
    rows = []
    for n in range(1, order + 1):
        row = []
        for k in range(1, n + 1):
            row.append(Fraction(k, n) * g[2 * n - k, n])
        rows.append(tuple(row))
    return CompositaTable(tuple(rows))


def left_composita(g: CompositaTable, order: int | None = None) -> CompositaTable:
    """Partial inverse of ``right_composita``: entry (n, k) is
    (k/(2k - n)) * g(k, 2k - n) when 2k - n >= 1 and 0 otherwise.

    The zero convention matters: right_composita(left_composita(t))
    reproduces t everywhere, but left_composita(right_composita(t)) only
    agrees with t on entries with 2k - n >= 1.
    """
    if order is None:
        order = g.order
    if order < 1:
        raise ValueError("a composita table needs order >= 1")
    if order > g.order:
        raise InsufficientOrder(
            f"input triangle is needed to order {order}, got {g.order}"
        )
    rows = []
    for n in range(1, order + 1):
        row = []
        for k in range(1, n + 1):
            j = 2 * k - n
            row.append(Fraction(k, j) * g[k, j] if j >= 1 else Fraction(0))
        rows.append(tuple(row))
    return CompositaTable(tuple(rows))


def solve_required_order(m: int, order: int) -> int:
    """Truncation order of G needed to solve A = G(xA^m) to ``order``."""
    return (abs(m) + 1) * order


@dataclass(frozen=True)
class FuncEqSolution:
    """Solution bundle for A(x) = G(x A(x)^m)."""

    m: int
    g_table: CompositaTable  # triangle of x*G(x)
    a_table: CompositaTable  # triangle of x*A(x)
    a_series: PowerSeries  # coefficients a(0)..a(order)


def solve_functional_equation(g: PowerSeries, m: int, order: int) -> FuncEqSolution:
    """Solve A(x) = G(x A(x)^m) for any integer m, exactly.

    ``g`` holds the coefficients of G with g(0) != 0, truncated to at
    least ``solve_required_order(m, order)``; the returned series carries
    a(0)..a(order).  For m >= 0 the triangle of x*A(x) is read off the
    triangle of x*G(x) at remapped indices; for m < 0 the reciprocal
    equation F = R(xF^w) with w = -m, R = 1/G is solved first and the
    answer flipped back, mirroring how the negative case is reduced to
    the positive one.
    """
    if g.coeffs[0] == 0:
        raise ZeroConstantTerm("G must have a nonzero constant term")
    if order < 1:
        raise ValueError("order must be >= 1")
    required = solve_required_order(m, order)
    if g.order < required:
        raise InsufficientOrder(f"g is needed to order {required}, got {g.order}")

    table_order = order + 1  # triangle of x*A(x); column 1 holds a(0)..a(order)
    if m >= 0:
        big_order = (m + 1) * order + 1
        g_big = composita_from_series(
            g.truncate(big_order - 1).times_x(), big_order, source="xG"
        )
        rows = []
        for n in range(1, table_order + 1):
            row = []
            for k in range(1, n + 1):
                im = (m + 1) * n - m * k
                im1 = m * n - (m - 1) * k
                row.append(Fraction(k, im1) * g_big[im, im1])
            rows.append(tuple(row))
        a_table = CompositaTable(tuple(rows))
        g_table = g_big.truncated(table_order)
    else:
        w = -m
        r = PowerSeries.one(g.order) / g
        inner = solve_functional_equation(r, w, order)
        a_table = reciprocal_composita(inner.a_series, table_order)
        g_table = composita_from_series(
            g.truncate(table_order - 1).times_x(), table_order, source="xG"
        )

    a_series = PowerSeries(tuple(a_table[n, 1] for n in range(1, table_order + 1)))
    return FuncEqSolution(m=m, g_table=g_table, a_table=a_table, a_series=a_series)


def radical_composita(m: int, order: int) -> CompositaTable:
    """Triangle of 1 - (1-x)^(1/m) for integer m >= 1.

    Column 1 of the result holds the series coefficients; the route is
    the backward reading of A = G(xA): the wanted triangle is the right
    composita of the triangle of x^2/(1 - (1-x)^m).
    """
    if m < 1:
        raise ValueError("radical index m must be >= 1")
    if order < 1:
        raise ValueError("a composita table needs order >= 1")
    inner_order = 2 * order - 1
    # (1 - (1-x)^m)/x = sum_{j=1}^{m} C(m, j) (-1)^(j+1) x^(j-1)
    denom = PowerSeries.of(
        [Fraction((-1 if j % 2 == 0 else 1) * binomial(m, j)) for j in range(1, m + 1)],
        order=inner_order - 1,
    )
    helper = PowerSeries.one(inner_order - 1) / denom
    helper_table = composita_from_series(helper.times_x(), inner_order)
    return right_composita(helper_table, order)


def arcsin_composita(order: int) -> CompositaTable:
    """Triangle of arcsin(x): the right composita of the triangle of
    x^2/sin(x), the latter coming from the reciprocal-triangle transform
    applied to sin(x)/x."""
    if order < 1:
        raise ValueError("a composita table needs order >= 1")
    inner_order = 2 * order - 1
    b = make_spec("sin_over_x").series_generator(inner_order - 1)
    csc_table = reciprocal_composita(b, inner_order)
    return right_composita(csc_table, order)
