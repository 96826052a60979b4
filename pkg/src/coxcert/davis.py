"""Finite-radius Davis-complex balls as posets of spherical cosets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .coxeter import (
    CoxeterSystem,
    Word,
    _check_ra,
    _is_spherical_idx,
    ball,
    in_special_subgroup,
    min_coset_rep,
    nerve,
    reduce,
)
from .homology import MatrixSizeError
from .simplicial import SimplicialComplex, cone, dim_of, square_report
from .subdivide import barycentric_subdivision

Subset = tuple[int, ...]  # sorted generator indices


@dataclass(frozen=True)
class SphericalCoset:
    """A coset w*W_T named by its minimal representative and type T."""

    rep: Word
    gens: Subset

    def sort_key(self):
        return (len(self.rep), self.rep, len(self.gens), self.gens)


class DavisBall:
    """All spherical cosets whose minimal representative has length <= radius.

    The order relation is containment of cosets; its order complex is the
    radius-r piece of the Davis complex.  Truncation keeps exactly the cosets
    with short minimal representatives and never completes boundary chambers.
    """

    def __init__(self, system: CoxeterSystem, radius: int):
        _check_ra(system)
        if radius < 0:
            raise ValueError("radius must be >= 0")
        self.system = system
        self.radius = radius
        self.nerve = nerve(system)
        gens = system.generators
        lookup = {g: i for i, g in enumerate(gens)}
        self._sphericals: list[Subset] = [()]
        self._sphericals += sorted(
            tuple(sorted(lookup[v] for v in s)) for s in self.nerve.simplices
        )
        spherical_set = set(self._sphericals)
        # strict superset lists drive chain enumeration and height DP
        self._supersets: dict[Subset, list[Subset]] = {t: [] for t in self._sphericals}
        for t in self._sphericals:
            if t:
                self._supersets[()].append(t)
                for r in range(1, len(t)):
                    for sub in _subsets(t, r):
                        self._supersets[sub].append(t)
        cosets = set()
        for w in ball(system, radius):
            for t in self._sphericals:
                cosets.add(SphericalCoset(self._normalize(w, t), t))
        self.cosets: tuple[SphericalCoset, ...] = tuple(
            sorted(cosets, key=SphericalCoset.sort_key)
        )
        self._coset_index = {(c.rep, c.gens): i for i, c in enumerate(self.cosets)}
        self._height: dict[Subset, int] = {}
        self._realization: Optional[SimplicialComplex] = None

    # -- coset arithmetic --------------------------------------------------

    def _normalize(self, w: Word, t: Subset) -> Word:
        if not t:
            return w
        if not w:
            return ()
        if len(w) == 1:
            return () if w[0] in t else w
        labels = [self.system.generators[i] for i in t]
        return min_coset_rep(self.system, w, labels)

    def leq(self, a: SphericalCoset, b: SphericalCoset) -> bool:
        """Coset containment: types nest and a's representative lies in b."""
        if not set(a.gens) <= set(b.gens):
            return False
        return self._normalize(a.rep, b.gens) == b.rep

    def coset_id(self, c: SphericalCoset) -> str:
        gens = self.system.generators
        rep = ".".join(gens[i] for i in c.rep) or "e"
        t = ",".join(gens[i] for i in c.gens) or "-"
        return f"{rep}|{t}"

    def chambers(self) -> list[SphericalCoset]:
        return [c for c in self.cosets if not c.gens]

    # -- order complex -----------------------------------------------------

    def _chains(self, keep) -> list[tuple[int, ...]]:
        """All chains of the coset poset restricted to `keep` (a predicate)."""
        out: list[tuple[int, ...]] = []
        idx = self._coset_index
        for i, c in enumerate(self.cosets):
            if not keep(c):
                continue
            stack: list[tuple[tuple[int, ...], Subset]] = [((i,), c.gens)]
            while stack:
                chain, t = stack.pop()
                out.append(chain)
                for t2 in self._supersets[t]:
                    j = idx[(self._normalize(c.rep, t2), t2)]
                    if keep(self.cosets[j]):
                        stack.append((chain + (j,), t2))
        return out

    def _order_complex(self, keep, max_cells: Optional[int] = None) -> SimplicialComplex:
        kept = [i for i, c in enumerate(self.cosets) if keep(c)]
        if max_cells is not None and len(kept) > max_cells:
            raise MatrixSizeError(f"{len(kept)} cosets exceed the materialization cap")
        ids = {i: self.coset_id(self.cosets[i]) for i in kept}
        chains = self._chains(lambda c: keep(c))
        if max_cells is not None and len(chains) > max_cells:
            raise MatrixSizeError(f"{len(chains)} chains exceed the materialization cap")
        return SimplicialComplex(
            [ids[i] for i in kept],
            [tuple(ids[j] for j in chain) for chain in chains],
            _validate=False,
        )

    def realization(self, max_cells: Optional[int] = None) -> SimplicialComplex:
        if self._realization is None:
            self._realization = self._order_complex(lambda c: True, max_cells)
        return self._realization

    # -- poset heights (dimensions without materializing chains) -----------

    def _type_height(self, t: Subset) -> int:
        cached = self._height.get(t)
        if cached is not None:
            return cached
        best = 1
        for t2 in self._supersets[t]:
            h = 1 + self._type_height(t2)
            if h > best:
                best = h
        self._height[t] = best
        return best

    def realization_dim(self) -> int:
        """Dimension of the order complex: longest coset chain minus one."""
        if not self.cosets:
            return -1
        return max(self._type_height(c.gens) for c in self.cosets) - 1

    def singular_dim(self) -> int:
        """Dimension of the singular subcomplex (chains of non-chamber cosets)."""
        heights = [self._type_height(c.gens) for c in self.cosets if c.gens]
        return max(heights, default=0) - 1

    def to_json(self) -> dict:
        gens = self.system.generators
        return {
            "radius": self.radius,
            "cosets": [
                {
                    "rep": "".join(gens[i] for i in c.rep),
                    "T": [gens[i] for i in c.gens],
                }
                for c in self.cosets
            ],
            "order": [
                [i, j]
                for i, a in enumerate(self.cosets)
                for j, b in enumerate(self.cosets)
                if i != j and self.leq(a, b)
            ],
        }


def davis_ball(sys: CoxeterSystem, radius: int) -> DavisBall:
    return DavisBall(sys, radius)


# -- distinguished subcomplexes ---------------------------------------------


def _fixed_cosets(ball_: DavisBall, g: Word) -> set[SphericalCoset]:
    """Cosets w*W_T with g . w*W_T = w*W_T, i.e. w^-1 g w in W_T."""
    sys = ball_.system
    gens = sys.generators
    fixed = set()
    for c in ball_.cosets:
        conj = tuple(reversed(c.rep)) + g + c.rep
        if in_special_subgroup(sys, conj, [gens[i] for i in c.gens]):
            fixed.add(c)
    return fixed


def fixed_subcomplex(ball_: DavisBall, g: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex of the realization on the cosets fixed by g."""
    word = reduce(ball_.system, tuple(g))
    if not word:
        raise ValueError("fixed_subcomplex requires a non-identity element")
    fixed = _fixed_cosets(ball_, word)
    return ball_._order_complex(lambda c: c in fixed)


def hash_union_sharp(ball_: DavisBall) -> SimplicialComplex:
    """Union over the fundamental generators of their fixed subcomplexes."""
    sys = ball_.system
    verts: list[str] = []
    seen_verts = set()
    simplices: set[tuple[str, ...]] = set()
    for s in range(sys.matrix.rank):
        part = fixed_subcomplex(ball_, (s,))
        for v in part.vertices:
            if v not in seen_verts:
                seen_verts.add(v)
                verts.append(v)
        simplices |= part.simplices
    order = {ball_.coset_id(c): i for i, c in enumerate(ball_.cosets)}
    verts.sort(key=order.__getitem__)
    return SimplicialComplex(verts, simplices, _validate=False)


def singular_subcomplex(ball_: DavisBall, max_cells: Optional[int] = None) -> SimplicialComplex:
    """Full subcomplex on the cosets with non-trivial type (stabilised points)."""
    return ball_._order_complex(lambda c: bool(c.gens), max_cells)


# -- the fundamental chamber -------------------------------------------------


@dataclass(frozen=True)
class Chamber:
    """Cone on the barycentric subdivision of the nerve, with its mirrors."""

    complex: SimplicialComplex
    apex: str
    boundary: SimplicialComplex
    mirrors: dict[str, SimplicialComplex]

    def mirror_union(self) -> SimplicialComplex:
        verts = []
        seen = set()
        simplices: set[tuple[str, ...]] = set()
        for m in self.mirrors.values():
            for v in m.vertices:
                if v not in seen:
                    seen.add(v)
                    verts.append(v)
            simplices |= m.simplices
        order = {v: i for i, v in enumerate(self.boundary.vertices)}
        verts.sort(key=order.__getitem__)
        return SimplicialComplex(verts, simplices, _validate=False)


def chamber(l: SimplicialComplex) -> Chamber:
    """Fundamental chamber of the right-angled system with nerve L."""
    report = square_report(l)
    if not report.is_flag:
        raise ValueError(f"nerve must be flag; witness {report.flag_witness}")
    bary = barycentric_subdivision(l)
    apex = "*cone*"
    k = cone(bary, apex)
    mirrors = {}
    for v in l.vertices:
        star_center = f"({v})"
        containing = [s for s in bary.simplices if star_center in s]
        verts = []
        seen = set()
        simplices: set[tuple[str, ...]] = set()
        for s in containing:
            simplices.add(s)
            for r in range(1, len(s)):
                for face in combinations(s, r):
                    simplices.add(face)
            for u in s:
                if u not in seen:
                    seen.add(u)
                    verts.append(u)
        order = {u: i for i, u in enumerate(bary.vertices)}
        verts.sort(key=order.__getitem__)
        mirrors[v] = SimplicialComplex(verts, simplices, _validate=False)
    return Chamber(complex=k, apex=apex, boundary=bary, mirrors=mirrors)


def _subsets(t: Subset, r: int):
    return combinations(t, r)
