#!/usr/bin/env python3
"""Print per-level tables for the cusp x^2 + y^3.

Columns: level n, n-th zeta coefficient, n-th volume Poincare coefficient
(Gelfand-Leray gauge), each rendered canonically.  A quick way to eyeball the
period-6 structure of the cusp's combinatorics.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from motzeta import integral_at_level, zeta_at_level  # noqa: E402
from motzeta.examples import cusp  # noqa: E402
from motzeta.resolution import GELFAND_LERAY  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--levels", type=int, default=18)
    args = parser.parse_args()

    data = cusp().data
    for n in range(1, args.levels + 1):
        z = zeta_at_level(data, n).render()
        p = integral_at_level(data, n, GELFAND_LERAY).render()
        print(f"n={n:3d}  Z_n = {z}")
        print(f"       P_n = {p}")


if __name__ == "__main__":
    main()
