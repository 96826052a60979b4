"""Wedge models, dihedral pair census, Farrell fillings, main report."""
import pytest

from coxcert.coxeter import racg_from_flag
from coxcert.homology import homology
from coxcert.models import (
    SlopeSet,
    canonical_slope,
    dihedral_pairs,
    farey_slopes,
    farrell_h3_growth,
    farrell_quotient,
    main_theorem_report,
    poset_mapping_cylinder,
    slope_set,
    wedge_model,
    _grid_torus,
)
from coxcert.presentations import (
    Presentation,
    pi1_certificate,
    presentation_complex,
    spine_certificate,
)
from coxcert.simplicial import faces_closure, wedge
from coxcert.subdivide import barycentric_subdivision

from helpers import cycle_complex, full_triangle, two_points


def test_dihedral_pairs_examples():
    assert len(dihedral_pairs(racg_from_flag(two_points()))) == 1
    assert len(dihedral_pairs(racg_from_flag(cycle_complex(5)))) == 5
    assert len(dihedral_pairs(racg_from_flag(full_triangle()))) == 0


def test_dihedral_pairs_count_non_edges():
    l = cycle_complex(6)
    sys = racg_from_flag(l)
    n = len(l.vertices)
    n_edges = len(l.k_simplices(1))
    assert len(dihedral_pairs(sys)) == n * (n - 1) // 2 - n_edges


def test_wedge_model_homology():
    acyclic = full_triangle()
    for k in (0, 1, 5):
        w = wedge_model(acyclic, k)
        h = homology(w, reduced=True)
        assert h.betti(1) == k
        assert h.betti(2) == 0
        assert not h.torsion(1)
    assert wedge_model(acyclic, 0) == acyclic


def test_wedge_model_matches_manual_wedge():
    l = cycle_complex(5)
    model = wedge_model(l, 2)
    manual_circles = [cycle_complex(3, f"z{i}") for i in range(2)]
    manual = wedge([l] + manual_circles, ["c0", "z00", "z10"])
    assert homology(model) == homology(manual)


def test_wedge_model_torsion_unchanged():
    from helpers import projective_plane

    l = projective_plane()
    w = wedge_model(l, 3)
    h = homology(w)
    assert h.torsion(1) == (2,)
    assert h.betti(1) == 3


# -- slopes and fillings -------------------------------------------------------


def test_canonical_slope():
    assert canonical_slope(-1, 2) == (1, -2)
    assert canonical_slope(0, -1) == (0, 1)
    with pytest.raises(ValueError):
        canonical_slope(2, 4)
    with pytest.raises(ValueError):
        slope_set([(1, 0), (-1, 0)])


def test_farey_enumeration():
    assert farey_slopes(5).slopes == ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2))
    assert len(farey_slopes(9)) == 9


def test_mapping_cylinder_identity_and_collapse():
    edge = faces_closure([("a", "b")])
    assert homology(
        poset_mapping_cylinder(edge, {"a": "a", "b": "b"}, edge), reduced=True
    ).is_trivial()
    pt = faces_closure([("w",)])
    assert homology(
        poset_mapping_cylinder(edge, {"a": "w", "b": "w"}, pt), reduced=True
    ).is_trivial()


def test_mapping_cylinder_torus_identity():
    b = _grid_torus(3)
    cyl = poset_mapping_cylinder(b, {v: v for v in b.vertices}, b)
    h = homology(cyl)
    assert (h.betti(0), h.betti(1), h.betti(2)) == (1, 2, 1)


def test_mapping_cylinder_rejects_non_simplicial():
    b = _grid_torus(3)
    square = faces_closure([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    bad = dict.fromkeys(b.vertices, "a")
    bad[b.vertices[1]] = "c"  # a,c not adjacent in the square
    with pytest.raises(ValueError):
        poset_mapping_cylinder(b, bad, square)


def test_farrell_bare_torus():
    x = farrell_quotient([])
    h = homology(x)
    assert (h.betti(1), h.betti(2), h.betti(3)) == (2, 1, 0)


def test_farrell_single_filling_is_solid_torus():
    h = homology(farrell_quotient([(1, 0)]))
    assert (h.betti(1), h.betti(2), h.betti(3)) == (1, 0, 0)


def test_farrell_two_fillings_close_a_three_cycle():
    h = homology(farrell_quotient([(1, 0), (0, 1)]))
    assert h.betti(3) == 1
    assert h.betti(1) == 0 and h.betti(2) == 0


def test_farrell_lens_like_torsion():
    h = homology(farrell_quotient([(1, 0), (1, 2)]))
    assert h.betti(3) == 1
    assert h.torsion(1) == (2,)


def test_farrell_h1_is_cokernel_of_slope_matrix():
    slopes = [(1, 1), (2, 1)]
    h = homology(farrell_quotient(slopes))
    # coker [[1,1],[2,1]] has order |det| = 1
    assert h.betti(1) == 0 and h.torsion(1) == ()


def test_farrell_growth_small():
    assert farrell_h3_growth(3) == [0, 1, 2]


def test_farrell_rejects_bad_slopes():
    with pytest.raises(ValueError):
        farrell_quotient([(2, 2)])
    with pytest.raises(ValueError):
        farrell_quotient([(1, 0), (1, 0)])


# -- the main report -----------------------------------------------------------


def _tiny_acyclic_flag_complex():
    """A 2-dimensional contractible flag-no-square complex (a coned path)."""
    from coxcert.subdivide import no_square_subdivision

    disk = faces_closure([("a", "b", "c")])
    return no_square_subdivision(disk)


def test_main_theorem_report_hyperbolic_branch():
    l = _tiny_acyclic_flag_complex()
    cert = spine_certificate()
    report = main_theorem_report(l, cert)
    assert report.ok
    assert report.hyperbolic is True
    assert (report.predicted_cd, report.predicted_gd) == (2, 3)
    assert report.dimension_accounting["ball_dim"] == 3
    assert report.certificate_order == 60


def test_main_theorem_report_non_hyperbolic_branch():
    from coxcert.presentations import presentation_complex, spine_presentation

    l = barycentric_subdivision(presentation_complex(spine_presentation()))
    cert = spine_certificate()
    report = main_theorem_report(l, cert)
    assert report.ok
    assert report.hyperbolic is False
    assert report.predicted_cd == report.predicted_gd == ">=3"
    assert report.empty_square_count > 0


def test_main_theorem_report_guard_case():
    cert = spine_certificate()
    report = main_theorem_report(cycle_complex(4), cert)
    assert not report.ok
    assert "dimension" in report.hypothesis_failures
    assert "acyclicity" in report.hypothesis_failures
    assert report.predicted_cd is None


def test_main_theorem_report_invalid_certificate():
    l = _tiny_acyclic_flag_complex()
    p = Presentation(("x",), ("xx",))
    bad = pi1_certificate(p, 3, [(0, 1, 2)])  # identity image: not nontrivial
    report = main_theorem_report(l, bad)
    assert "certificate" in report.hypothesis_failures


def test_report_branch_mirrors_square_test():
    from coxcert.simplicial import square_report

    cert = spine_certificate()
    for l in (_tiny_acyclic_flag_complex(),):
        report = main_theorem_report(l, cert)
        assert report.hyperbolic == (not square_report(l).empty_squares)
