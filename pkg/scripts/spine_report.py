#!/usr/bin/env python3
"""Build the spine example and print its certification data."""
import time

from coxcert.coxeter import racg_from_flag, hyperbolicity
from coxcert.davis import davis_ball
from coxcert.homology import homology
from coxcert.models import dihedral_pairs, main_theorem_report
from coxcert.presentations import spine_certificate, spine_complex
from coxcert.simplicial import square_report


def main() -> None:
    start = time.monotonic()
    l = spine_complex()
    print(f"spine complex: {l.counts()}  ({time.monotonic() - start:.1f}s)")
    print(f"reduced homology: {homology(l, reduced=True)}")
    sq = square_report(l)
    print(f"flag: {sq.is_flag}, empty squares: {len(sq.empty_squares)}")
    cert = spine_certificate()
    print(f"certificate: degree {cert.degree}, images {cert.images}, order {cert.subgroup_order()}")
    sys_ = racg_from_flag(l)
    print(f"hyperbolic: {hyperbolicity(sys_).hyperbolic}")
    print(f"dihedral pairs: {len(dihedral_pairs(sys_))}")
    ball = davis_ball(sys_, 1)
    print(f"davis ball r=1: {len(ball.cosets)} cosets, "
          f"dim {ball.realization_dim()}, singular dim {ball.singular_dim()}")
    report = main_theorem_report(l, cert)
    print(f"predicted (cd, gd) = ({report.predicted_cd}, {report.predicted_gd})")
    print(f"total {time.monotonic() - start:.1f}s")


if __name__ == "__main__":
    main()
