"""Integral simplicial homology via exact Smith normal form."""
from __future__ import annotations

import heapq
import os
from typing import Iterable, Optional

from .simplicial import SimplicialComplex


class MatrixSizeError(RuntimeError):
    """Raised when a boundary matrix exceeds the configured safety cap."""


def _cell_limit() -> int:
    return int(os.environ.get("COXCERT_SNF_CELL_LIMIT", "50000000"))


# -- Smith normal form ----------------------------------------------------


def _dense_snf_divisors(entries: dict[tuple[int, int], int]) -> list[int]:
    """Exact SNF divisors of a small dense integer matrix.

    Entries are given sparsely; arbitrary-precision arithmetic throughout.
    """
    if not entries:
        return []
    rows = sorted({r for r, _ in entries})
    cols = sorted({c for _, c in entries})
    rmap = {r: i for i, r in enumerate(rows)}
    cmap = {c: j for j, c in enumerate(cols)}
    m, n = len(rows), len(cols)
    a = [[0] * n for _ in range(m)]
    for (r, c), v in entries.items():
        a[rmap[r]][cmap[c]] = v
    divisors = []
    top = 0
    while True:
        pivot = None
        best = None
        for i in range(top, m):
            row = a[i]
            for j in range(top, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        i, j = pivot
        a[top], a[i] = a[i], a[top]
        for row in a:
            row[top], row[j] = row[j], row[top]
        while True:
            # clear column by row operations, reducing the pivot as needed
            p = a[top][top]
            for i in range(top + 1, m):
                if a[i][top]:
                    q = a[i][top] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        break
            else:
                p = a[top][top]
                done = True
                for j in range(top + 1, n):
                    if a[top][j]:
                        q = a[top][j] // p
                        if q:
                            for row in a:
                                row[j] -= q * row[top]
                        if a[top][j]:
                            for row in a:
                                row[top], row[j] = row[j], row[top]
                            done = False
                            break
                if done:
                    break
        divisors.append(abs(a[top][top]))
        top += 1
        if top >= m or top >= n:
            break
    # enforce the divisibility chain d1 | d2 | ...
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            di, dj = divisors[i], divisors[j]
            if dj % di:
                g = _gcd(di, dj)
                divisors[i], divisors[j] = g, di * dj // g
    return divisors


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def snf_divisors(columns: Iterable[dict[int, int]], check_limit: bool = True) -> list[int]:
    """Nonzero diagonal of the Smith normal form of a sparse integer matrix.

    `columns[j]` maps row index to entry.  Unit pivots are eliminated first
    with Markowitz-style pivoting to limit fill; whatever residue is left
    (torsion candidates) goes through a dense exact SNF.
    """
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, set[int]] = {}
    nnz = 0
    for j, col in enumerate(columns):
        col = {r: v for r, v in col.items() if v}
        if col:
            cols[j] = dict(col)
            for r in col:
                rows.setdefault(r, set()).add(j)
            nnz += len(col)
    if check_limit and nnz > _cell_limit():
        raise MatrixSizeError(f"sparse matrix with {nnz} entries exceeds cell limit")
    unit_rank = 0
    heap: list[tuple[int, int]] = [(len(c), j) for j, c in cols.items()]
    heapq.heapify(heap)
    while heap:
        sz, j = heapq.heappop(heap)
        col = cols.get(j)
        if col is None:
            continue
        if len(col) != sz:
            heapq.heappush(heap, (len(col), j))
            continue
        pivot_row = None
        best = None
        for r, v in col.items():
            if v in (1, -1):
                score = len(rows[r])
                if best is None or score < best:
                    best = score
                    pivot_row = r
        if pivot_row is None:
            continue  # leave for the dense stage
        pv = col[pivot_row]
        unit_rank += 1
        pivot_col_entries = [(r, v) for r, v in col.items() if r != pivot_row]
        pivot_row_cols = [c for c in rows[pivot_row] if c != j]
        # remove the pivot row and column
        for r, _ in pivot_col_entries:
            rows[r].discard(j)
        del cols[j]
        for c in pivot_row_cols:
            coef = cols[c].pop(pivot_row)
            factor = coef if pv == 1 else -coef
            if pivot_col_entries:
                target = cols[c]
                for r, v in pivot_col_entries:
                    nv = target.get(r, 0) - factor * v
                    if nv:
                        if r not in target:
                            rows[r].add(c)
                        target[r] = nv
                    elif r in target:
                        del target[r]
                        rows[r].discard(c)
            if cols[c]:
                heapq.heappush(heap, (len(cols[c]), c))
            else:
                del cols[c]
        del rows[pivot_row]
    residual: dict[tuple[int, int], int] = {}
    for j, col in cols.items():
        for r, v in col.items():
            residual[(r, j)] = v
    tail = _dense_snf_divisors(residual)
    return [1] * unit_rank + [d for d in tail if d]


def rank_and_torsion(columns: Iterable[dict[int, int]]) -> tuple[int, tuple[int, ...]]:
    divisors = snf_divisors(columns)
    return len(divisors), tuple(sorted(d for d in divisors if d > 1))


# -- chain complexes -------------------------------------------------------


class ChainComplex:
    """Boundary matrices of a complex with the sorted-vertex orientation.

    Degree-k boundary columns are indexed by k-simplices (position-lex order),
    rows by (k-1)-simplices, with alternating signs over omitted vertices.
    """

    def __init__(self, k: SimplicialComplex, relative_to: Optional[SimplicialComplex] = None):
        excluded = relative_to.simplices if relative_to is not None else frozenset()
        self.basis: list[list[tuple[str, ...]]] = []
        self.index: list[dict[tuple[str, ...], int]] = []
        dim = k.dim()
        for d in range(dim + 1):
            cells = [s for s in k.k_simplices(d) if s not in excluded]
            self.basis.append(cells)
            self.index.append({s: i for i, s in enumerate(cells)})
        self.boundaries: list[list[dict[int, int]]] = []
        for d in range(1, dim + 1):
            idx = self.index[d - 1]
            cols = []
            for s in self.basis[d]:
                col: dict[int, int] = {}
                for i in range(len(s)):
                    face = s[:i] + s[i + 1 :]
                    r = idx.get(face)
                    if r is not None:
                        col[r] = -1 if i % 2 else 1
                cols.append(col)
            self.boundaries.append(cols)

    def n_cells(self, d: int) -> int:
        return len(self.basis[d]) if 0 <= d < len(self.basis) else 0

    def boundary_columns(self, d: int) -> list[dict[int, int]]:
        """Columns of the degree-d boundary map (d >= 1)."""
        if 1 <= d < len(self.basis):
            return self.boundaries[d - 1]
        return []


class HomologyResult:
    """Per-degree Betti numbers and torsion divisors of a chain complex."""

    def __init__(self, betti: dict[int, int], torsion: dict[int, tuple[int, ...]], reduced: bool):
        self.reduced = reduced
        self._betti = {d: b for d, b in betti.items() if b}
        self._torsion = {d: tuple(t) for d, t in torsion.items() if t}

    def betti(self, degree: int) -> int:
        return self._betti.get(degree, 0)

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self._torsion.get(degree, ())

    def degrees(self) -> list[int]:
        return sorted(set(self._betti) | set(self._torsion))

    def is_trivial(self) -> bool:
        """All stored groups vanish (for reduced results: acyclicity)."""
        return not self._betti and not self._torsion

    def cohomology_betti(self, degree: int) -> int:
        """Free rank of integral cohomology via universal coefficients."""
        return self.betti(degree)

    def cohomology_torsion(self, degree: int) -> tuple[int, ...]:
        return self.torsion(degree - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomologyResult):
            return NotImplemented
        return (
            self.reduced == other.reduced
            and self._betti == other._betti
            and self._torsion == other._torsion
        )

    def __hash__(self) -> int:
        return hash((self.reduced, tuple(sorted(self._betti.items())), tuple(sorted(self._torsion.items()))))

    def __repr__(self) -> str:
        parts = []
        for d in self.degrees():
            summands = ["Z"] * self.betti(d) + [f"Z/{t}" for t in self.torsion(d)]
            parts.append(f"H{d}=" + ("+".join(summands) if summands else "0"))
        kind = "reduced" if self.reduced else "unreduced"
        return f"HomologyResult({kind}: {', '.join(parts) if parts else 'trivial'})"

    def to_json(self, max_degree: Optional[int] = None) -> list[dict]:
        top = max(self.degrees(), default=0)
        if max_degree is not None:
            top = max(top, max_degree)
        low = -1 if self.betti(-1) else 0
        return [
            {"degree": d, "betti": self.betti(d), "torsion": list(self.torsion(d))}
            for d in range(low, top + 1)
        ]


def homology(k: SimplicialComplex, reduced: bool = False) -> HomologyResult:
    """Integral homology by Smith normal form over exact integers.

    The empty complex in reduced mode reports the augmentation kernel as a
    single Z in degree -1.
    """
    if not k.simplices:
        if reduced:
            return HomologyResult({-1: 1}, {}, reduced=True)
        return HomologyResult({}, {}, reduced=False)
    cc = ChainComplex(k)
    dim = k.dim()
    ranks = {}
    torsions = {}
    for d in range(1, dim + 1):
        ranks[d], torsions[d] = rank_and_torsion(cc.boundary_columns(d))
    if reduced:
        ranks[0] = 1  # augmentation onto Z is onto for a non-empty complex
        torsions[0] = ()
    else:
        ranks[0], torsions[0] = 0, ()
    ranks[dim + 1], torsions[dim + 1] = 0, ()
    betti = {}
    torsion = {}
    for d in range(dim + 1):
        betti[d] = cc.n_cells(d) - ranks[d] - ranks[d + 1]
        torsion[d] = torsions[d + 1]
    return HomologyResult(betti, torsion, reduced=reduced)


def relative_homology(k: SimplicialComplex, a: SimplicialComplex) -> HomologyResult:
    """Homology of the quotient chain complex C(K)/C(A)."""
    if not a.simplices <= k.simplices:
        raise ValueError("A is not a subcomplex of K")
    if not k.simplices:
        return HomologyResult({}, {}, reduced=False)
    cc = ChainComplex(k, relative_to=a)
    dim = k.dim()
    ranks = {0: 0}
    torsions = {0: ()}
    for d in range(1, dim + 1):
        ranks[d], torsions[d] = rank_and_torsion(cc.boundary_columns(d))
    ranks[dim + 1], torsions[dim + 1] = 0, ()
    betti = {}
    torsion = {}
    for d in range(dim + 1):
        betti[d] = cc.n_cells(d) - ranks[d] - ranks[d + 1]
        torsion[d] = torsions[d + 1]
    return HomologyResult(betti, torsion, reduced=False)


def euler_from_homology(result: HomologyResult) -> int:
    """Euler characteristic from Betti numbers (torsion contributes nothing).

    For reduced results the augmentation degree is put back, so the value is
    comparable with the simplex-count alternating sum either way.
    """
    total = sum((-1 if d % 2 else 1) * result.betti(d) for d in result.degrees())
    return total + (1 if result.reduced else 0)
