"""Composita triangles of generating functions that vanish at the origin.

For F(x) = f(1)x + f(2)x^2 + ... the composita value at (n, k) is the sum,
over all compositions of n into exactly k positive parts, of the products
f(part_1) * ... * f(part_k).  Equivalently it is the coefficient of x^n in
F(x)^k, so the triangle rows 1 <= k <= n <= N collect the coefficients of
all truncated powers of F at once.

Three independent construction routes are provided:

* ``composita_oracle``     - literal enumeration of compositions (slow,
                             exponential; meant as a ground truth for tests
                             up to roughly n = 14),
* ``composita_from_series``- the triangle recurrence
                             T(n, 1) = f(n),
                             T(n, k) = sum_{i=1}^{n-k+1} f(i) T(n-i, k-1),
* ``composita_from_powers``- direct coefficient extraction from F^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InsufficientOrder, NonzeroConstantTerm
from .series import PowerSeries, as_rational


@dataclass(frozen=True)
class CompositaTable:
    """Triangle of composita values, rows n = 1..order, columns k = 1..n."""

    rows: tuple[tuple[Fraction, ...], ...]
    source: str = field(default="", compare=False)

    BASE_INDEX = 1

    def __post_init__(self) -> None:
        normalized = []
        for offset, row in enumerate(self.rows):
            if len(row) != offset + 1:
                raise ValueError(f"row {offset + 1} must carry exactly {offset + 1} entries")
            normalized.append(tuple(as_rational(v) for v in row))
        if not normalized:
            raise ValueError("a composita table needs at least one row")
        object.__setattr__(self, "rows", tuple(normalized))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        n, k = index
        if not 1 <= n <= self.order:
            raise IndexError(f"row {n} outside table of order {self.order}")
        if k < 1 or k > n:
            return Fraction(0)
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[Fraction, ...]:
        if not 1 <= n <= self.order:
            raise IndexError(f"row {n} outside table of order {self.order}")
        return self.rows[n - 1]

    def column(self, k: int) -> tuple[Fraction, ...]:
        """Entries (n, k) for n = k..order."""
        if not 1 <= k <= self.order:
            raise IndexError(f"column {k} outside table of order {self.order}")
        return tuple(self.rows[n - 1][k - 1] for n in range(k, self.order + 1))

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for offset, row in enumerate(self.rows):
            n = offset + 1
            for j, value in enumerate(row):
                yield n, j + 1, value

    def truncated(self, order: int) -> CompositaTable:
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} table to order {order}")
        return CompositaTable(self.rows[:order], source=self.source)

    def with_entry(self, n: int, k: int, value: Fraction) -> CompositaTable:
        """Copy of the table with one entry replaced (used for fault injection)."""
        if not 1 <= k <= n <= self.order:
            raise IndexError(f"entry ({n}, {k}) outside table of order {self.order}")
        rows = [list(row) for row in self.rows]
        rows[n - 1][k - 1] = as_rational(value)
        return CompositaTable(tuple(tuple(row) for row in rows), source=self.source)


def _require_composable(f: PowerSeries) -> None:
    if f.coeffs[0] != 0:
        raise NonzeroConstantTerm(
            "compositae are defined only for series with zero constant term"
        )


def composita_oracle(f: PowerSeries, n: int, k: int) -> Fraction:
    """Sum of coefficient products over all k-part compositions of n.

    Exponential-time reference implementation; use it to cross-check the
    fast routes on small inputs only.
    """
    _require_composable(f)
    if n > f.order:
        raise InsufficientOrder(f"series only known to order {f.order}, asked about n={n}")
    if not 1 <= k <= n:
        raise ValueError("the part count k must satisfy 1 <= k <= n")
    coeffs = f.coeffs
    total = Fraction(0)

    def extend(remaining: int, parts: int, acc: Fraction) -> None:
        nonlocal total
        if parts == 1:
            total += acc * coeffs[remaining]
            return
        # each of the remaining parts needs at least 1
        for part in range(1, remaining - parts + 2):
            c = coeffs[part]
            if c:
                extend(remaining - part, parts - 1, acc * c)

    extend(n, k, Fraction(1))
    return total


def composita_from_series(
    f: PowerSeries, order: int | None = None, source: str = ""
) -> CompositaTable:
    """Build the triangle by the composita recurrence."""
    _require_composable(f)
    n_max = f.order if order is None else order
    if n_max < 1:
        raise ValueError("a composita table needs order >= 1")
    if n_max > f.order:
        raise InsufficientOrder(
            f"series only known to order {f.order}, table of order {n_max} requested"
        )
    coeffs = f.coeffs
    rows: list[tuple[Fraction, ...]] = []
    for n in range(1, n_max + 1):
        row = [coeffs[n]]
        for k in range(2, n + 1):
            acc = Fraction(0)
            for i in range(1, n - k + 2):
                c = coeffs[i]
                if c:
                    acc += c * rows[n - i - 1][k - 2]
            row.append(acc)
        rows.append(tuple(row))
    return CompositaTable(tuple(rows), source=source)


def composita_from_powers(
    f: PowerSeries, order: int | None = None, source: str = ""
) -> CompositaTable:
    """Build the triangle by reading coefficients off the powers F^k."""
    _require_composable(f)
    n_max = f.order if order is None else order
    if n_max < 1:
        raise ValueError("a composita table needs order >= 1")
    if n_max > f.order:
        raise InsufficientOrder(
            f"series only known to order {f.order}, table of order {n_max} requested"
        )
    base = f if f.order == n_max else f.truncate(n_max)
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max)]
    power = base
    for k in range(1, n_max + 1):
        for n in range(k, n_max + 1):
            rows[n - 1][k - 1] = power.coeffs[n]
        if k < n_max:
            power = power * base
    return CompositaTable(tuple(tuple(row) for row in rows), source=source)


def series_from_composita(table: CompositaTable) -> PowerSeries:
    """Recover the source series from the first column (constant term 0)."""
    coeffs = [Fraction(0)]
    coeffs.extend(table[n, 1] for n in range(1, table.order + 1))
    return PowerSeries(tuple(coeffs))
