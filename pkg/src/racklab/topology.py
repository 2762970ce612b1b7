"""Order complexes of bounded posets and exact reduced integer homology.

The order complex has one vertex per proper node (bottom and top removed) and
one d-simplex per (d+1)-chain.  Homology is computed from sparse integer
boundary matrices through Smith normal form; an optional free-face collapse
pass shrinks the complex first (it is an elementary-collapse sequence, so it
preserves the homotopy type and in particular all homology including
torsion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import BudgetExceeded, CoverPoset

DEFAULT_SIMPLEX_BUDGET = 1_000_000


# ---------------------------------------------------------------------------
# order complex


class OrderComplex:
    """Chains of the proper part of a bounded poset, listed per dimension.

    Vertices are poset node ids; simplices are tuples of vertex ids that are
    strictly increasing in the id order, which is a linear extension of the
    poset order.
    """

    __slots__ = ("vertices", "simplices")

    def __init__(self, vertices: list[int], simplices: list[list[tuple[int, ...]]]):
        self.vertices = vertices
        self.simplices = simplices

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(level) for level in self.simplices]

    def size(self) -> int:
        return sum(len(level) for level in self.simplices)

    def is_empty(self) -> bool:
        return not self.vertices


def order_complex(
    poset: CoverPoset, simplex_budget: int = DEFAULT_SIMPLEX_BUDGET
) -> OrderComplex:
    """All chains of the proper part of `poset` (node 0 and node n-1 dropped)."""
    n = poset.n
    if n < 2:
        raise ValueError("order complex needs a poset with at least 2 elements")
    proper = list(range(1, n - 1))
    if not proper:
        return OrderComplex([], [])
    # strict up-sets within the proper part, as bitmasks over proper positions
    pos = {v: i for i, v in enumerate(proper)}
    above = [0] * len(proper)
    for v in reversed(proper):
        acc = 0
        for p in poset.parents(v):
            if p in pos:
                acc |= above[pos[p]] | (1 << pos[p])
        above[pos[v]] = acc
    simplices: list[list[tuple[int, ...]]] = [[(v,) for v in proper]]
    total = len(proper)
    if total > simplex_budget:
        raise BudgetExceeded(
            f"simplex budget {simplex_budget} exceeded at dimension 0", partial=total
        )
    frontier = [((v,), above[pos[v]]) for v in proper]
    while frontier:
        nxt = []
        for chain, up in frontier:
            rem = up
            while rem:
                low = rem & -rem
                rem ^= low
                i = low.bit_length() - 1
                w = proper[i]
                nxt.append((chain + (w,), up & above[i]))
        if not nxt:
            break
        total += len(nxt)
        if total > simplex_budget:
            raise BudgetExceeded(
                f"simplex budget {simplex_budget} exceeded at dimension "
                f"{len(simplices)}",
                partial=total,
            )
        simplices.append([c for c, _ in nxt])
        frontier = nxt
    return OrderComplex(proper, simplices)


# ---------------------------------------------------------------------------
# free-face collapses


def collapse_complex(K: OrderComplex) -> OrderComplex:
    """Greedy elementary collapses: repeatedly remove a free face together
    with its unique cofacet.  Homotopy type is preserved."""
    if K.is_empty():
        return K
    alive: list[set[tuple[int, ...]]] = [set(level) for level in K.simplices]
    cofacets: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for d in range(1, len(alive)):
        for s in alive[d]:
            for i in range(len(s)):
                f = s[:i] + s[i + 1:]
                cofacets.setdefault(f, set()).add(s)
    queue = [f for f, cs in cofacets.items() if len(cs) == 1]
    top_dim = len(alive) - 1
    while queue:
        f = queue.pop()
        d = len(f) - 1
        if f not in alive[d]:
            continue
        cs = cofacets.get(f)
        if not cs or len(cs) != 1:
            continue
        (t,) = cs
        if t not in alive[d + 1]:
            continue
        alive[d].discard(f)
        alive[d + 1].discard(t)
        for simplex in (f, t):
            for i in range(len(simplex)):
                g = simplex[:i] + simplex[i + 1:]
                if not g:
                    continue
                gc = cofacets.get(g)
                if gc is not None:
                    gc.discard(simplex)
                    if len(gc) == 1 and g in alive[len(g) - 1]:
                        queue.append(g)
        del cofacets[f]
    levels = [sorted(level) for level in alive]
    while levels and not levels[-1]:
        levels.pop()
    return OrderComplex(K.vertices, levels)


# ---------------------------------------------------------------------------
# sparse integer matrices and Smith normal form


class SparseIntMatrix:
    """Row/column dict-of-dicts sparse matrix with exact integer entries."""

    __slots__ = ("nrows", "ncols", "rows", "cols")

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, dict[int, int]] = {}

    def set(self, r: int, c: int, v: int) -> None:
        if v:
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, {})[r] = v
        else:
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del self.rows[r]
                col = self.cols[c]
                del col[r]
                if not col:
                    del self.cols[c]

    def get(self, r: int, c: int) -> int:
        return self.rows.get(r, {}).get(c, 0)

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        m = cls(len(data), len(data[0]) if data else 0)
        for r, row in enumerate(data):
            for c, v in enumerate(row):
                if v:
                    m.set(r, c, v)
        return m

    def copy(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.nrows, self.ncols)
        for r, row in self.rows.items():
            for c, v in row.items():
                m.rows.setdefault(r, {})[c] = v
                m.cols.setdefault(c, {})[r] = v
        return m


def _add_row(M: SparseIntMatrix, src: int, dst: int, factor: int) -> None:
    # row[dst] += factor * row[src]
    if not factor:
        return
    for c, v in list(M.rows.get(src, {}).items()):
        M.set(dst, c, M.get(dst, c) + factor * v)


def _add_col(M: SparseIntMatrix, src: int, dst: int, factor: int) -> None:
    if not factor:
        return
    for r, v in list(M.cols.get(src, {}).items()):
        M.set(r, dst, M.get(r, dst) + factor * v)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _combine_rows(M: SparseIntMatrix, r1: int, r2: int, a: int, b: int, c: int, d: int) -> None:
    # (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2); ad - bc = +-1
    row1 = dict(M.rows.get(r1, {}))
    row2 = dict(M.rows.get(r2, {}))
    for col in set(row1) | set(row2):
        v1 = row1.get(col, 0)
        v2 = row2.get(col, 0)
        M.set(r1, col, a * v1 + b * v2)
        M.set(r2, col, c * v1 + d * v2)


def _combine_cols(M: SparseIntMatrix, c1: int, c2: int, a: int, b: int, c: int, d: int) -> None:
    col1 = dict(M.cols.get(c1, {}))
    col2 = dict(M.cols.get(c2, {}))
    for row in set(col1) | set(col2):
        v1 = col1.get(row, 0)
        v2 = col2.get(row, 0)
        M.set(row, c1, a * v1 + b * v2)
        M.set(row, c2, c * v1 + d * v2)


def _scan_pivot(M: SparseIntMatrix) -> tuple[int, int]:
    # full scan: the entry of smallest magnitude, best Markowitz fill estimate
    best = None
    best_key = None
    for r in M.rows:
        row = M.rows[r]
        rl = len(row) - 1
        for c, v in row.items():
            key = (abs(v), rl * (len(M.cols[c]) - 1), r, c)
            if best_key is None or key < best_key:
                best_key = key
                best = (r, c)
    return best


def _diagonalize(M: SparseIntMatrix) -> list[int]:
    """Destructively diagonalize; returns the (positive) diagonal entries.

    Unit pivots are taken from a lazily re-keyed heap ordered by the Markowitz
    fill estimate; a full scan runs only when no unit entry is left.
    """
    import heapq

    heap: list[tuple[int, int, int]] = []

    def push_unit(r: int, c: int) -> None:
        fill = (len(M.rows[r]) - 1) * (len(M.cols[c]) - 1)
        heapq.heappush(heap, (fill, r, c))

    for r, row in M.rows.items():
        for c, v in row.items():
            if v == 1 or v == -1:
                push_unit(r, c)

    def pop_unit() -> tuple[int, int] | None:
        while heap:
            fill, r, c = heapq.heappop(heap)
            v = M.rows.get(r, {}).get(c, 0)
            if v != 1 and v != -1:
                continue
            actual = (len(M.rows[r]) - 1) * (len(M.cols[c]) - 1)
            if actual > fill:
                heapq.heappush(heap, (actual, r, c))
                continue
            return r, c
        return None

    diag = []
    while M.rows:
        pivot = pop_unit()
        if pivot is None:
            pivot = _scan_pivot(M)
        r, c = pivot
        while True:
            v = M.get(r, c)
            touched_rows: list[int] = []
            touched_cols: list[int] = []
            progressed = False
            # clear the pivot column
            for r2 in [x for x in M.cols[c] if x != r]:
                v2 = M.get(r2, c)
                if v2 == 0:
                    continue
                if v2 % v == 0:
                    _add_row(M, r, r2, -(v2 // v))
                else:
                    g, x, y = _xgcd(v, v2)
                    _combine_rows(M, r, r2, x, y, -(v2 // g), v // g)
                    v = g
                    progressed = True
                touched_rows.append(r2)
            # clear the pivot row
            for c2 in [x for x in M.rows.get(r, {}) if x != c]:
                v2 = M.get(r, c2)
                if v2 == 0:
                    continue
                if v2 % v == 0:
                    _add_col(M, c, c2, -(v2 // v))
                else:
                    g, x, y = _xgcd(v, v2)
                    _combine_cols(M, c, c2, x, y, -(v2 // g), v // g)
                    v = g
                    progressed = True
                touched_cols.append(c2)
            for r2 in touched_rows:
                for c2, v2 in M.rows.get(r2, {}).items():
                    if v2 == 1 or v2 == -1:
                        push_unit(r2, c2)
            for c2 in touched_cols:
                for r2, v2 in M.cols.get(c2, {}).items():
                    if v2 == 1 or v2 == -1:
                        push_unit(r2, c2)
            if (
                not progressed
                and len(M.cols.get(c, {})) == 1
                and len(M.rows.get(r, {})) == 1
            ):
                break
        diag.append(abs(M.get(r, c)))
        M.set(r, c, 0)
    return diag


def _invariant_factors(diag: Iterable[int]) -> tuple[int, ...]:
    # redistribute prime powers so the factors form a divisibility chain
    primes: dict[int, list[int]] = {}
    count = 0
    for d in diag:
        count += 1
        d = abs(d)
        if d == 1:
            continue
        p = 2
        while p * p <= d:
            if d % p == 0:
                e = 0
                while d % p == 0:
                    d //= p
                    e += 1
                primes.setdefault(p, []).append(e)
            p += 1
        if d > 1:
            primes.setdefault(d, []).append(1)
    factors = [1] * count
    for p, exps in sorted(primes.items()):
        exps.sort(reverse=True)
        for i, e in enumerate(exps):
            factors[count - 1 - i] *= p**e
    return tuple(factors)


def smith_normal_form(matrix: SparseIntMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an integer matrix."""
    M = matrix.copy() if isinstance(matrix, SparseIntMatrix) else SparseIntMatrix.from_rows(matrix)
    return _invariant_factors(_diagonalize(M))


def rank_and_torsion(matrix: SparseIntMatrix) -> tuple[int, tuple[int, ...]]:
    factors = _invariant_factors(_diagonalize(matrix.copy()))
    return len(factors), tuple(f for f in factors if f > 1)


# ---------------------------------------------------------------------------
# boundary matrices and homology


def boundary_matrices(K: OrderComplex) -> list[SparseIntMatrix]:
    """Boundary maps of the augmented complex: index 0 is the augmentation
    (one row, one column per vertex); index d >= 1 maps d-simplices to their
    facets with alternating signs.  Satisfies boundary-of-boundary = 0."""
    if K.is_empty():
        return []
    out = []
    aug = SparseIntMatrix(1, len(K.simplices[0]))
    for j in range(len(K.simplices[0])):
        aug.set(0, j, 1)
    out.append(aug)
    for d in range(1, len(K.simplices)):
        lower_index = {s: i for i, s in enumerate(K.simplices[d - 1])}
        m = SparseIntMatrix(len(K.simplices[d - 1]), len(K.simplices[d]))
        for j, s in enumerate(K.simplices[d]):
            sign = 1
            for i in range(len(s)):
                f = s[:i] + s[i + 1:]
                m.set(lower_index[f], j, sign)
                sign = -sign
        out.append(m)
    return out


@dataclass(frozen=True)
class HomologyResult:
    """Reduced Betti numbers and torsion per dimension.

    `empty_complex` flags the empty complex, whose only reduced homology is a
    single Z in dimension -1; Betti numbers themselves are never negative.
    """

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]]
    euler_characteristic: int
    empty_complex: bool
    simplex_counts: tuple[int, ...]

    def nonzero_dimensions(self) -> list[int]:
        return sorted(
            set(d for d, b in self.betti.items() if b)
            | set(d for d, t in self.torsion.items() if t)
        )

    def to_jsonable(self) -> dict:
        dims = {}
        for d in range(len(self.simplex_counts)):
            dims[str(d)] = {
                "rank": self.betti.get(d, 0),
                "torsion": list(self.torsion.get(d, ())),
            }
        return {
            "dims": dims,
            "euler_characteristic": self.euler_characteristic,
            "empty_complex": self.empty_complex,
            "simplex_counts": list(self.simplex_counts),
        }


def reduced_homology(K: OrderComplex, collapse: bool = True) -> HomologyResult:
    """Exact reduced integer homology of an order complex."""
    counts = tuple(K.counts())
    if K.is_empty():
        # the empty complex is the (-1)-sphere: a single Z in dimension -1,
        # carried by the flag; its reduced Euler characteristic is -1
        return HomologyResult({}, {}, -1, True, ())
    euler = -1
    for d, c in enumerate(counts):
        euler += c if d % 2 == 0 else -c
    work = collapse_complex(K) if collapse else K
    mats = boundary_matrices(work)
    ranks = []
    torsions = []
    for m in mats:
        r, t = rank_and_torsion(m)
        ranks.append(r)
        torsions.append(t)
    betti = {}
    torsion = {}
    wcounts = work.counts()
    for d in range(len(wcounts)):
        rank_d = ranks[d]
        rank_up = ranks[d + 1] if d + 1 < len(mats) else 0
        b = wcounts[d] - rank_d - rank_up
        if b:
            betti[d] = b
        if d + 1 < len(mats) and torsions[d + 1]:
            torsion[d] = torsions[d + 1]
    check = sum(b if d % 2 == 0 else -b for d, b in betti.items())
    if check != euler:
        raise AssertionError(
            f"Euler characteristic mismatch: betti give {check}, counts give {euler}"
        )
    return HomologyResult(betti, torsion, euler, False, counts)


def is_homology_sphere(H: HomologyResult, d: int) -> bool:
    """H equals the reduced homology of a d-sphere (d = -1 is the empty complex)."""
    if H.empty_complex:
        return d == -1
    if d < 0:
        return False
    if any(H.torsion.values()):
        return False
    return H.betti == {d: 1}


def homology_from_export(
    text: str,
    collapse: bool = True,
    simplex_budget: int = DEFAULT_SIMPLEX_BUDGET,
) -> HomologyResult:
    """Reduced homology of a lattice given in the line-oriented export format."""
    from .lattice import load_lattice_export

    lat = load_lattice_export(text)
    return reduced_homology(order_complex(lat, simplex_budget), collapse=collapse)
