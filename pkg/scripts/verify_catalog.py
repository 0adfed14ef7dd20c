"""Sweep every closed-form catalog entry against the triangle recurrence.

Usage:
    python3 scripts/verify_catalog.py [--poly-order 10] [--trig-order 8]

Prints one line per entry and exits 1 if any closed form disagrees with
the recurrence anywhere in the swept triangle.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from compositae import NoClosedForm, catalog_verify, default_instances

TRIG = {"sin", "x_cos", "tan", "arctan", "sinh", "x_cosh"}


@dataclass(frozen=True)
class SweepConfig:
    poly_order: int = 10
    trig_order: int = 8

    def order_for(self, name: str) -> int:
        return self.trig_order if name in TRIG else self.poly_order


def run(config: SweepConfig) -> int:
    failures = 0
    for spec in default_instances():
        order = config.order_for(spec.name)
        try:
            result = catalog_verify(spec, order)
        except NoClosedForm:
            print(f"{spec.label():<16} N={order:<3} skipped (no closed form)")
            continue
        if result.matched:
            print(f"{spec.label():<16} N={order:<3} ok")
        else:
            failures += 1
            n, k, claimed, truth = result.first_mismatch
            print(
                f"{spec.label():<16} N={order:<3} MISMATCH at ({n},{k}): "
                f"closed form {claimed}, recurrence {truth}"
            )
    print(f"{failures} mismatching entr{'y' if failures == 1 else 'ies'}")
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--poly-order", type=int, default=10)
    parser.add_argument("--trig-order", type=int, default=8)
    args = parser.parse_args(argv)
    return run(SweepConfig(poly_order=args.poly_order, trig_order=args.trig_order))


if __name__ == "__main__":
    sys.exit(main())
