"""Wedge and Farrell classifying-space models and the main dimension report."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .coxeter import INF, CoxeterSystem, hyperbolicity, racg_from_flag
from .homology import HomologyResult, homology
from .presentations import Pi1Certificate
from .simplicial import SimplicialComplex, dim_of, faces_closure, square_report, wedge
from .subdivide import barycentric_subdivision, _chain_id


# -- dihedral pair bookkeeping ------------------------------------------------


@dataclass(frozen=True)
class DihedralPairSet:
    """Generator pairs with infinite order product: infinite dihedral subgroups.

    A lower-bound proxy for the index set of maximal infinite virtually cyclic
    subgroups containing two non-commuting fundamental generators.
    """

    pairs: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.pairs)


def dihedral_pairs(sys: CoxeterSystem) -> DihedralPairSet:
    if not sys.right_angled:
        raise ValueError("dihedral pair census requires a right-angled system")
    gens = sys.generators
    pairs = [
        (gens[i], gens[j])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
        if sys.matrix.order(i, j) == INF
    ]
    return DihedralPairSet(tuple(pairs))


# -- wedge model ---------------------------------------------------------------


def wedge_model(l: SimplicialComplex, k: int) -> SimplicialComplex:
    """L wedge k triangulated circles at the first vertex of L."""
    if not l.vertices:
        raise ValueError("wedge model needs a non-empty complex")
    if k < 0:
        raise ValueError("circle count must be >= 0")
    if k == 0:
        return l
    complexes = [l]
    basepoints = [l.vertices[0]]
    for i in range(k):
        verts = [f"s1_{i}_{j}" for j in range(3)]
        circle = faces_closure(
            [(verts[0], verts[1]), (verts[1], verts[2]), (verts[2], verts[0])],
            vertices=verts,
        )
        complexes.append(circle)
        basepoints.append(verts[0])
    return wedge(complexes, basepoints)


# -- main theorem report --------------------------------------------------------


@dataclass(frozen=True)
class MainTheoremReport:
    """Dimension predictions for the virtually-cyclic classifying space.

    Hyperbolic branch: cohomological dimension 2 and geometric dimension 3,
    with the upper bound coming from dim(ball) = dim(nerve) + 1 = 3 and
    cell attachments in dimension at most 2.  Non-hyperbolic branch: both
    dimensions agree and are at least 3.
    """

    nerve_dim: int
    nerve_acyclic: bool
    flag: bool
    empty_square_count: int
    hyperbolic: Optional[bool]
    certificate_order: Optional[int]
    dihedral_pair_count: int
    hypothesis_failures: tuple[str, ...]
    predicted_cd: Optional[object]  # int or ">=3"
    predicted_gd: Optional[object]
    dimension_accounting: Optional[dict]

    @property
    def ok(self) -> bool:
        return not self.hypothesis_failures

    def to_json(self) -> dict:
        return {
            "nerve": {
                "dim": self.nerve_dim,
                "acyclic": self.nerve_acyclic,
                "flag": self.flag,
                "empty_squares": self.empty_square_count,
            },
            "hyperbolic": self.hyperbolic,
            "certificate_order": self.certificate_order,
            "dihedral_pairs": self.dihedral_pair_count,
            "hypothesis_failures": list(self.hypothesis_failures),
            "predicted_cd": self.predicted_cd,
            "predicted_gd": self.predicted_gd,
            "dimension_accounting": self.dimension_accounting,
        }


def main_theorem_report(l: SimplicialComplex, cert: Pi1Certificate) -> MainTheoremReport:
    """Check the hypothesis bundle on L and emit the dimension predictions.

    The branch decision mirrors the flag-no-squares hyperbolicity test
    exactly; no independent judgement is applied.
    """
    failures = []
    sq = square_report(l)
    if not sq.is_flag:
        failures.append("flag")
    if dim_of(l) != 2:
        failures.append("dimension")
    reduced = homology(l, reduced=True)
    if not reduced.is_trivial():
        failures.append("acyclicity")
    cert_order = None
    if not cert.valid:
        failures.append("certificate")
    else:
        cert_order = cert.subgroup_order()
    if failures:
        return MainTheoremReport(
            nerve_dim=dim_of(l),
            nerve_acyclic=reduced.is_trivial(),
            flag=sq.is_flag,
            empty_square_count=len(sq.empty_squares),
            hyperbolic=None,
            certificate_order=cert_order,
            dihedral_pair_count=0,
            hypothesis_failures=tuple(failures),
            predicted_cd=None,
            predicted_gd=None,
            dimension_accounting=None,
        )
    sys = racg_from_flag(l)
    hyp = hyperbolicity(sys)
    pairs = dihedral_pairs(sys)
    if hyp.hyperbolic:
        accounting = {
            "nerve_dim": dim_of(l),
            "ball_dim": dim_of(l) + 1,
            "vc_attachment_max_dim": 2,
            "gd_upper": max(dim_of(l) + 1, 2 + 1),
        }
        cd, gd = 2, 3
    else:
        accounting = None
        cd = gd = ">=3"
    return MainTheoremReport(
        nerve_dim=dim_of(l),
        nerve_acyclic=True,
        flag=True,
        empty_square_count=len(sq.empty_squares),
        hyperbolic=hyp.hyperbolic,
        certificate_order=cert_order,
        dihedral_pair_count=len(pairs),
        hypothesis_failures=(),
        predicted_cd=cd,
        predicted_gd=gd,
        dimension_accounting=accounting,
    )


# -- slopes ---------------------------------------------------------------------


@dataclass(frozen=True)
class SlopeSet:
    """Primitive integer directions in Z^2, identified up to sign."""

    slopes: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.slopes)


def canonical_slope(p: int, q: int) -> tuple[int, int]:
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a slope")
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"slope ({p}, {q}) is not primitive")
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return (p, q)


def slope_set(slopes: Iterable[Sequence[int]]) -> SlopeSet:
    canon = []
    for p, q in slopes:
        c = canonical_slope(int(p), int(q))
        if c in canon:
            raise ValueError(f"parallel slopes: {c} repeated")
        canon.append(c)
    return SlopeSet(tuple(canon))


def farey_slopes(n: int) -> SlopeSet:
    """First n primitive slopes: (1,0), (0,1), then mediant levels p+q = 2, 3, ...

    Within a level, smaller q first.  Only non-negative directions appear;
    slopes are identified up to sign so this ordering is a canonical
    enumeration of distinct directions.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    found = [(1, 0), (0, 1)]
    s = 2
    while len(found) < n:
        for q in range(1, s):
            p = s - q
            if gcd(p, q) == 1:
                found.append((p, q))
        s += 1
    return SlopeSet(tuple(found[:n]))


# -- torus with slope fillings ----------------------------------------------


def _grid_torus(n: int) -> SimplicialComplex:
    verts = [f"t{x}_{y}" for x in range(n) for y in range(n)]

    def v(x: int, y: int) -> str:
        return f"t{x % n}_{y % n}"

    faces = []
    for x in range(n):
        for y in range(n):
            faces.append((v(x, y), v(x + 1, y), v(x + 1, y + 1)))
            faces.append((v(x, y), v(x, y + 1), v(x + 1, y + 1)))
    return faces_closure(faces, vertices=verts)


def poset_mapping_cylinder(
    source: SimplicialComplex,
    vertex_map: Mapping[str, str],
    target: SimplicialComplex,
) -> SimplicialComplex:
    """Order complex of the mapping-cylinder poset of a simplicial map.

    Elements are the faces of source and target ordered by inclusion, with a
    target face below a source face whenever it is a face of its image.  The
    result contains the barycentric subdivisions of both ends and carries the
    homotopy type of the topological mapping cylinder.
    """
    for s in source.simplices:
        image = {vertex_map[v] for v in s}
        if not target.has(image):
            raise ValueError(f"vertex map is not simplicial on {s}")

    # source faces keep barycentric naming (so cylinders over a common source
    # share that end); target faces get their own namespace
    def kid(s: tuple[str, ...]) -> str:
        return _chain_id(s)

    def tid(s: tuple[str, ...]) -> str:
        return "~" + _chain_id(s)

    k_supersets: dict[tuple[str, ...], list[tuple[str, ...]]] = {
        s: [] for s in source.simplices
    }
    for s in source.simplices:
        for r in range(1, len(s)):
            for face in combinations(s, r):
                k_supersets[face].append(s)
    l_supersets: dict[tuple[str, ...], list[tuple[str, ...]]] = {
        s: [] for s in target.simplices
    }
    for s in target.simplices:
        for r in range(1, len(s)):
            for face in combinations(s, r):
                l_supersets[face].append(s)

    # all ascending chains in the target face poset, grouped by top element
    l_chains_by_top: dict[tuple[str, ...], list[tuple[str, ...]]] = {}
    frontier = [(s,) for s in target.simplices]
    while frontier:
        nxt = []
        for chain in frontier:
            top = chain[-1]
            l_chains_by_top.setdefault(top, []).append(
                tuple(tid(c) for c in chain)
            )
            for s in l_supersets[top]:
                nxt.append(chain + (s,))
        frontier = nxt

    simplices: set[tuple[str, ...]] = set()
    verts: list[str] = [tid(s) for s in _sorted_faces(target)]
    verts += [kid(s) for s in _sorted_faces(source)]
    for chains in l_chains_by_top.values():
        simplices.update(chains)

    # K-chains with every compatible L-prefix below their bottom face
    k_frontier = [(s,) for s in source.simplices]
    while k_frontier:
        nxt = []
        for chain in k_frontier:
            named = tuple(kid(c) for c in chain)
            simplices.add(named)
            bottom = chain[0]
            image = target.sort_simplex({vertex_map[v] for v in bottom})
            for r in range(1, len(image) + 1):
                for face in combinations(image, r):
                    for prefix in l_chains_by_top.get(face, ()):
                        simplices.add(prefix + named)
            for s in k_supersets[chain[-1]]:
                nxt.append(chain + (s,))
        k_frontier = nxt
    return SimplicialComplex(verts, simplices, _validate=False)


def _sorted_faces(k: SimplicialComplex) -> list[tuple[str, ...]]:
    return sorted(k.simplices, key=lambda s: (len(s), tuple(k._pos[v] for v in s)))


def _circle(tag: str, m: int) -> SimplicialComplex:
    verts = [f"{tag}v{j}" for j in range(m)]
    edges = [(verts[j], verts[(j + 1) % m]) for j in range(m)]
    return faces_closure(edges, vertices=verts)


def farrell_quotient(slopes: Iterable[Sequence[int]] | SlopeSet) -> SimplicialComplex:
    """Torus with one solid-torus filling per slope, as a simplicial complex.

    Each filling is the mapping cylinder of a degree-(-q, p) circle-valued
    simplicial map on a common grid torus: collapsing in the (p, q) direction
    kills that curve class in the filling, exactly as gluing a solid torus
    along its boundary with meridian (p, q).  The shared end of all cylinders
    is the barycentric subdivision of the grid torus.
    """
    sset = slopes if isinstance(slopes, SlopeSet) else slope_set(slopes)
    spans = [max(abs(p), abs(q), abs(p - q)) for p, q in sset.slopes]
    n = 3 * max(spans, default=1)
    base = _grid_torus(n)
    if not sset.slopes:
        return barycentric_subdivision(base)
    m = 3  # target circle size; edge spans stay within one third of the grid

    pieces = []
    for i, (p, q) in enumerate(sset.slopes):
        circle = _circle(f"c{i}", m)

        def level(x: int, y: int) -> int:
            return ((p * y - q * x) % n) * m // n

        vmap = {
            f"t{x}_{y}": f"c{i}v{level(x, y)}" for x in range(n) for y in range(n)
        }
        pieces.append(poset_mapping_cylinder(base, vmap, circle))
    verts: list[str] = []
    seen = set()
    simplices: set[tuple[str, ...]] = set()
    for piece in pieces:
        for v in piece.vertices:
            if v not in seen:
                seen.add(v)
                verts.append(v)
        simplices |= piece.simplices
    return SimplicialComplex(verts, simplices, _validate=False)


def farrell_h3_growth(n: int) -> list[int]:
    """Rank of H3 after filling the first k Farey slopes, for k = 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    all_slopes = farey_slopes(n).slopes
    for k in range(1, n + 1):
        x = farrell_quotient(SlopeSet(all_slopes[:k]))
        out.append(homology(x).betti(3))
    return out
