#!/usr/bin/env python3
"""Print the H3 growth table for torus models with 1..n slope fillings."""
import argparse
import time

from coxcert.models import farey_slopes, farrell_quotient, SlopeSet
from coxcert.homology import homology


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=5, help="number of slopes")
    args = parser.parse_args()
    slopes = farey_slopes(args.n).slopes
    print(f"{'k':>3} {'slope':>8} {'H1':>12} {'H3 rank':>8} {'cells':>8} {'sec':>6}")
    for k in range(1, args.n + 1):
        start = time.monotonic()
        x = farrell_quotient(SlopeSet(slopes[:k]))
        h = homology(x)
        h1 = "Z^%d" % h.betti(1) + (
            " + " + "+".join(f"Z/{t}" for t in h.torsion(1)) if h.torsion(1) else ""
        )
        print(
            f"{k:>3} {str(slopes[k-1]):>8} {h1:>12} {h.betti(3):>8} "
            f"{sum(x.counts()):>8} {time.monotonic() - start:>6.1f}"
        )


if __name__ == "__main__":
    main()
