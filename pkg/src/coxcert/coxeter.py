"""Coxeter matrices, nerves, finiteness classification and the RA word problem."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .simplicial import SimplicialComplex, SquareReport, square_report

INF = 0  # Coxeter matrix entries use 0 to encode infinity (as in the JSON format)

Word = tuple[int, ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of relation orders; diagonal 1, off-diagonal >= 2 or 0(=inf)."""

    generators: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError("duplicate generator labels")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("matrix shape does not match generators")
        for i in range(n):
            if self.entries[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(i + 1, n):
                m = self.entries[i][j]
                if m != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")
                if m != INF and m < 2:
                    raise ValueError("off-diagonal entries must be >= 2 or infinity")

    def order(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class CoxeterSystem:
    """A Coxeter matrix together with the right-angled flag it determines."""

    matrix: CoxeterMatrix
    right_angled: bool = field(init=False)
    flag_complex: Optional[SimplicialComplex] = None

    def __post_init__(self):
        ra = all(
            m in (2, INF)
            for i, row in enumerate(self.matrix.entries)
            for j, m in enumerate(row)
            if i != j
        )
        object.__setattr__(self, "right_angled", ra)

    @property
    def generators(self) -> tuple[str, ...]:
        return self.matrix.generators

    def index_of(self, label: str) -> int:
        return self.matrix.generators.index(label)

    def commutes(self, i: int, j: int) -> bool:
        return self.matrix.order(i, j) == 2

    def word(self, labels: Iterable[str]) -> Word:
        lookup = {g: i for i, g in enumerate(self.generators)}
        return tuple(lookup[x] for x in labels)

    def label_word(self, w: Word) -> str:
        return "".join(self.generators[i] for i in w)


def system_from_matrix(generators: Sequence[str], entries: Sequence[Sequence[int]]) -> CoxeterSystem:
    return CoxeterSystem(CoxeterMatrix(tuple(generators), tuple(tuple(r) for r in entries)))


def racg_from_flag(l: SimplicialComplex) -> CoxeterSystem:
    """Right-angled system on the vertices of a flag complex L.

    m_st = 2 for edges of L and infinity for non-edges; rejects non-flag
    input, reporting the minimal witness clique.
    """
    report = square_report(l)
    if not report.is_flag:
        raise ValueError(f"input is not flag; witness clique {report.flag_witness}")
    gens = tuple(l.vertices)
    n = len(gens)
    adj = l.adjacency()
    entries = [
        [
            1 if i == j else (2 if gens[j] in adj[gens[i]] else INF)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return CoxeterSystem(
        CoxeterMatrix(gens, tuple(tuple(r) for r in entries)),
        flag_complex=l,
    )


# -- finiteness classification ----------------------------------------------


def _is_finite_component(vertices: list[int], edges: dict[tuple[int, int], int]) -> bool:
    """Match one connected Coxeter diagram against the finite catalogue.

    Diagram edges are the pairs with order >= 3 (order 2 means no edge);
    entry 0 encodes infinity.  Components not isomorphic to one of
    A_n, B_n, D_n, E6-E8, F4, H3, H4 or I2(m) are infinite.
    """
    n = len(vertices)
    if n == 1:
        return True
    if any(m == INF for m in edges.values()):
        return False
    if len(edges) != n - 1:
        return False  # a connected diagram with a cycle is never finite
    if n == 2:
        return True  # I2(m), any finite m
    deg: dict[int, int] = {v: 0 for v in vertices}
    for u, w in edges:
        deg[u] += 1
        deg[w] += 1
    labels = sorted(edges.values())
    heavy = [m for m in labels if m >= 4]
    branch = [v for v in vertices if deg[v] >= 3]
    if any(deg[v] >= 4 for v in vertices) or len(branch) > 1:
        return False
    if not branch:
        # a path; read the edge labels along it
        ends = [v for v in vertices if deg[v] == 1]
        order = [ends[0]]
        prev = None
        while len(order) < n:
            nxt = next(
                w
                for (u, w), _ in _path_steps(edges, order[-1])
                if w != prev
            )
            prev = order[-1]
            order.append(nxt)
        path_labels = [
            edges.get((min(a, b), max(a, b))) for a, b in zip(order, order[1:])
        ]
        if all(m == 3 for m in path_labels):
            return True  # A_n
        if len(heavy) != 1:
            return False
        m = heavy[0]
        pos = path_labels.index(m)
        at_end = pos in (0, len(path_labels) - 1)
        if m == 4:
            return at_end or (n == 4 and pos == 1)  # B_n or F4
        if m == 5:
            return at_end and n in (3, 4)  # H3, H4
        return False
    # exactly one degree-3 branch vertex: D_n or E6/E7/E8, all labels 3
    if heavy:
        return False
    b = branch[0]
    legs = []
    for (u, w) in edges:
        start = w if u == b else (u if w == b else None)
        if start is None:
            continue
        length = 1
        prev, cur = b, start
        while deg[cur] == 2:
            nxt = next(
                x
                for (p, q) in edges
                if (p == cur or q == cur)
                for x in (p, q)
                if x != cur and x != prev
            )
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    legs.sort()
    if len(legs) != 3:
        return False
    if legs[0] == legs[1] == 1:
        return True  # D_n
    return legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4)  # E6, E7, E8


def _path_steps(edges: dict[tuple[int, int], int], v: int):
    for (u, w), m in edges.items():
        if u == v:
            yield (u, w), m
        elif w == v:
            yield (w, u), m


def is_spherical(sys: CoxeterSystem, subset: Iterable[str]) -> bool:
    """True iff the special subgroup on the given generators is finite."""
    gens = sys.generators
    lookup = {g: i for i, g in enumerate(gens)}
    try:
        idx = sorted({lookup[g] for g in subset})
    except KeyError as exc:
        raise ValueError(f"unknown generator {exc.args[0]!r}") from exc
    return _is_spherical_idx(sys, tuple(idx))


def _is_spherical_idx(sys: CoxeterSystem, idx: tuple[int, ...]) -> bool:
    if not idx:
        return True
    if sys.right_angled:
        return all(sys.commutes(a, b) for i, a in enumerate(idx) for b in idx[i + 1 :])
    present = set(idx)
    seen: set[int] = set()
    for start in idx:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        comp_edges: dict[tuple[int, int], int] = {}
        while stack:
            u = stack.pop()
            for w in present:
                if w == u:
                    continue
                m = sys.matrix.order(u, w)
                if m == 2:
                    continue
                comp_edges[(min(u, w), max(u, w))] = m
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        if not _is_finite_component(comp, comp_edges):
            return False
    return True


def nerve(sys: CoxeterSystem) -> SimplicialComplex:
    """Complex on the generators whose simplices are the spherical subsets."""
    gens = sys.generators
    simplices: set[tuple[str, ...]] = set()
    frontier = [(i,) for i in range(len(gens))]
    while frontier:
        nxt = []
        for idx in frontier:
            simplices.add(tuple(gens[i] for i in idx))
            for j in range(idx[-1] + 1, len(gens)):
                cand = idx + (j,)
                if sys.right_angled:
                    ok = all(sys.commutes(i, j) for i in idx)
                else:
                    ok = _is_spherical_idx(sys, cand)
                if ok:
                    nxt.append(cand)
        frontier = nxt
    return SimplicialComplex(gens, simplices, _validate=False)


# -- hyperbolicity -----------------------------------------------------------


@dataclass(frozen=True)
class HyperbolicityReport:
    right_angled: bool
    flag: bool
    empty_squares: tuple[tuple[str, str, str, str], ...]
    hyperbolic: Optional[bool]
    z2_witness: Optional[tuple[str, str, str, str]]


def hyperbolicity(sys: CoxeterSystem) -> HyperbolicityReport:
    """Flag-no-squares test on the nerve; decides word hyperbolicity for RA systems.

    An empty square (a, b, c, d) of the nerve yields the witness (a, c, b, d):
    the two diagonal pairs generate commuting infinite dihedral subgroups,
    hence a Z x Z subgroup.
    """
    l = nerve(sys)
    report = square_report(l)
    if not sys.right_angled:
        return HyperbolicityReport(False, report.is_flag, report.empty_squares, None, None)
    witness = None
    hyperbolic = report.is_flag and not report.empty_squares
    if report.empty_squares:
        a, b, c, d = report.empty_squares[0]
        witness = (a, c, b, d)
    return HyperbolicityReport(True, report.is_flag, report.empty_squares, hyperbolic, witness)


# -- right-angled word problem ------------------------------------------------


def _check_ra(sys: CoxeterSystem) -> None:
    if not sys.right_angled:
        raise ValueError("word problem operations require a right-angled system")


def _check_word(sys: CoxeterSystem, w: Iterable[int]) -> Word:
    word = tuple(w)
    n = sys.matrix.rank
    for x in word:
        if not 0 <= x < n:
            raise ValueError(f"letter {x} out of range")
    return word


def reduce(sys: CoxeterSystem, w: Iterable[int]) -> Word:
    """ShortLex-canonical normal form of a word in a right-angled system.

    A stack pass deletes pairs of equal letters separated only by commuting
    letters (yielding a geodesic word), then commuting swaps sort the result
    to its lexicographically least representative.
    """
    _check_ra(sys)
    word = _check_word(sys, w)
    out: list[int] = []
    for g in word:
        cancelled = False
        for j in range(len(out) - 1, -1, -1):
            if out[j] == g:
                del out[j]
                cancelled = True
                break
            if not sys.commutes(out[j], g):
                break
        if not cancelled:
            out.append(g)
    # ShortLex canonical order: repeatedly emit the least letter that can
    # commute to the front of what remains
    result: list[int] = []
    remaining = out
    while remaining:
        best = None
        for i, g in enumerate(remaining):
            if all(sys.commutes(remaining[j], g) for j in range(i)):
                if best is None or g < remaining[best]:
                    best = i
        result.append(remaining[best])
        del remaining[best]
    return tuple(result)


def word_length(sys: CoxeterSystem, w: Iterable[int]) -> int:
    return len(reduce(sys, w))


def multiply(sys: CoxeterSystem, w: Word, g: int) -> Word:
    """Normal form of w*g."""
    return reduce(sys, w + (g,))


def ball(sys: CoxeterSystem, radius: int) -> list[Word]:
    """All canonical normal forms of length <= radius, BFS order then sorted.

    The returned list is closed under taking prefixes of normal forms and is
    sorted by (length, lex).
    """
    _check_ra(sys)
    if radius < 0:
        raise ValueError("radius must be >= 0")
    seen: set[Word] = {()}
    frontier: list[Word] = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for g in range(sys.matrix.rank):
                nf = multiply(sys, w, g)
                if len(nf) == len(w) + 1 and nf not in seen:
                    seen.add(nf)
                    nxt.append(nf)
        frontier = nxt
    return sorted(seen, key=lambda w: (len(w), w))


def min_coset_rep(sys: CoxeterSystem, w: Iterable[int], subset: Iterable[str]) -> Word:
    """Unique shortest element of w*W_T for spherical T, by greedy descent."""
    _check_ra(sys)
    t_idx = _subset_indices(sys, subset)
    if not _is_spherical_idx(sys, t_idx):
        raise ValueError("subset is not spherical")
    cur = reduce(sys, w)
    changed = True
    while changed:
        changed = False
        for t in t_idx:
            nxt = multiply(sys, cur, t)
            if len(nxt) < len(cur):
                cur = nxt
                changed = True
                break
    return cur


def in_special_subgroup(sys: CoxeterSystem, w: Iterable[int], subset: Iterable[str]) -> bool:
    """Membership in W_T: the normal form may only use letters of T."""
    _check_ra(sys)
    t_idx = set(_subset_indices(sys, subset))
    return all(x in t_idx for x in reduce(sys, w))


def _subset_indices(sys: CoxeterSystem, subset: Iterable[str]) -> tuple[int, ...]:
    lookup = {g: i for i, g in enumerate(sys.generators)}
    try:
        return tuple(sorted({lookup[g] for g in subset}))
    except KeyError as exc:
        raise ValueError(f"unknown generator {exc.args[0]!r}") from exc


# -- JSON interchange ---------------------------------------------------------


def system_to_json(sys: CoxeterSystem) -> dict:
    return {
        "generators": list(sys.generators),
        "matrix": [list(row) for row in sys.matrix.entries],
    }


def system_from_json(data: Mapping) -> CoxeterSystem:
    if not isinstance(data, Mapping):
        raise ValueError("system JSON must be an object")
    try:
        gens = data["generators"]
        matrix = data["matrix"]
    except (KeyError, TypeError) as exc:
        raise ValueError("system JSON needs 'generators' and 'matrix'") from exc
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ValueError("'generators' must be a list of strings")
    if not isinstance(matrix, list):
        raise ValueError("'matrix' must be a list of integer rows")
    try:
        return system_from_matrix(gens, [[int(x) for x in row] for row in matrix])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid Coxeter matrix: {exc}") from exc
