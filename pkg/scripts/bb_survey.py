#!/usr/bin/env python3
"""Survey the experimental (b,B)-bicomplex identities over unital algebras.

For each unital algebra this checks B^2 = 0 and bB + Bb = 0 at the chain
level, and, when both hold, compares the (b,B) total homology against the
cyclic bicomplex.  The identities are known to hold when the twist is the
identity; whether they survive a genuine twist is exactly what this
script records.
"""

import argparse
import sys

from homcyc.algebra import find_unit
from homcyc.corpus import (dual_numbers, ground_field, k2, k_times_k,
                           matrix_2x2, truncated_polynomials, two_dim_unital)
from homcyc.cyclic import connes_bB_report


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=3, help="maximum degree")
    args = ap.parse_args(argv)
    algebras = [ground_field(), k2(), k_times_k(), dual_numbers(),
                truncated_polynomials(), two_dim_unital(), matrix_2x2()]
    hdr = (f"{'algebra':<18} {'B^2=0':>6} {'bB+Bb=0':>8} "
           f"{'total betti':<16} {'matches cyclic':>15}")
    print(hdr)
    print("-" * len(hdr))
    for A in algebras:
        if find_unit(A) is None:
            print(f"{A.name:<18} {'skipped: no unit':<30}")
            continue
        n_max = args.max if A.dim <= 2 else min(args.max, 2)
        rep = connes_bB_report(A, n_max)
        betti = [rep.betti.get(n, "-") for n in rep.degrees] \
            if rep.identities_hold else "-"
        print(f"{A.name:<18} {str(rep.b_squared_zero):>6} "
              f"{str(rep.bB_anticommute):>8} {str(betti):<16} "
              f"{str(rep.matches_cyclic):>15}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
