"""Presentation complexes, certificates, and the spine pipeline pieces."""
import pytest

from coxcert.homology import homology, snf_divisors
from coxcert.presentations import (
    Presentation,
    abelianized_divisors,
    certificate_from_json,
    find_pi1_certificate,
    free_reduce,
    pi1_certificate,
    presentation_complex,
    spine_certificate,
    spine_presentation,
)
from coxcert.simplicial import square_report


def test_free_reduce():
    assert free_reduce("xX") == ""
    assert free_reduce("xyYX") == ""
    assert free_reduce("yyyYXYX") == "yyXYX"
    assert free_reduce("xxX") == "x"


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("x",), ("xX",))  # freely trivial
    with pytest.raises(ValueError):
        Presentation(("x",), ("xz",))
    with pytest.raises(ValueError):
        Presentation(("X",), ("x",))
    p = Presentation(("x", "y"), ("yyyYXYX",))
    assert p.relators == ("yyXYX",)


def test_presentation_complex_disk():
    k = presentation_complex(Presentation(("x",), ("x",)))
    assert homology(k, reduced=True).is_trivial()
    assert k.euler_characteristic() == 1


def test_presentation_complex_projective_plane():
    k = presentation_complex(Presentation(("x",), ("xx",)))
    h = homology(k)
    assert h.torsion(1) == (2,)
    assert h.betti(1) == 0 and h.betti(2) == 0


def test_presentation_complex_torus_like():
    # <x, y | xyXY>: the torus relator; H1 = Z^2, H2 = Z
    k = presentation_complex(Presentation(("x", "y"), ("xyXY",)))
    h = homology(k)
    assert h.betti(1) == 2 and h.betti(2) == 1


def test_presentation_complex_euler_characteristic():
    for gens, rels in ((("x",), ("xx",)), (("x", "y"), ("xyXY",)), (("a", "b"), ("ab", "abab"))):
        p = Presentation(gens, rels)
        k = presentation_complex(p)
        assert k.euler_characteristic() == 1 - len(gens) + len(rels)


def test_presentation_h1_matches_abelianization():
    cases = [
        Presentation(("x",), ("xx",)),
        Presentation(("x", "y"), ("xyXY",)),
        spine_presentation(),
        Presentation(("a", "b"), ("aabb", "abab")),
    ]
    for p in cases:
        k = presentation_complex(p)
        h = homology(k)
        rows = p.abelianized_matrix()
        cols = [
            {r: rows[r][c] for r in range(len(rows)) if rows[r][c]}
            for c in range(len(p.generators))
        ]
        divisors = snf_divisors(cols)
        rank = len(divisors)
        assert h.betti(1) == len(p.generators) - rank
        assert h.torsion(1) == tuple(sorted(d for d in divisors if d > 1))
        # H2 of a presentation complex is the kernel of the relator matrix
        assert h.betti(2) == len(p.relators) - rank


def test_spine_presentation_data():
    p = spine_presentation()
    assert p.abelianized_matrix() == [[3, -2], [-2, 1]]
    assert abelianized_divisors(p) == [1, 1]  # determinant is a unit
    x = presentation_complex(p)
    assert homology(x, reduced=True).is_trivial()


def test_certificate_search_finds_alt5():
    cert = spine_certificate()
    assert cert.valid
    assert cert.subgroup_order() == 60
    assert cert.relators_killed()


def test_certificate_invalid_not_exception():
    p = Presentation(("x",), ("x",))
    cert = pi1_certificate(p, 3, [(1, 2, 0)])
    assert not cert.relators_killed()
    assert not cert.valid
    identity_cert = pi1_certificate(p, 3, [(0, 1, 2)])
    assert identity_cert.relators_killed()
    assert not identity_cert.valid  # trivial image


def test_certificate_arity_and_degree_errors():
    p = spine_presentation()
    with pytest.raises(ValueError):
        pi1_certificate(p, 5, [(0, 1, 2, 3, 4)])  # one image missing
    with pytest.raises(ValueError):
        pi1_certificate(p, 5, [(0, 0, 1, 2, 3), (0, 1, 2, 3, 4)])


def test_certificate_json_round_trip():
    cert = spine_certificate()
    again = certificate_from_json(cert.to_json())
    assert again.valid
    assert again.images == cert.images
    assert again.subgroup_order() == 60


def test_no_certificate_for_trivial_group():
    p = Presentation(("x",), ("x",))
    assert find_pi1_certificate(p, 3) is None
