"""Subrack lattices: enumeration of all subracks of a finite rack, Hasse
covers, and the lattice analytics built on them (gradedness, chain lengths,
atoms/coatoms, Int(L), Boolean tests, the M-set, product decompositions).

Lattice nodes are bit-vector element sets, canonically ordered by
(popcount, value), so node 0 is the empty set and the last node is the full
rack; node ids are therefore a topological order of the cover DAG.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bitsets import bit_list, bits
from .groups import CapExceeded, ClassDecomposition, FiniteGroup, conjugacy_classes
from .racks import Rack, conjugation_rack

DEFAULT_RACK_CAP = 40
DEFAULT_NODE_BUDGET = 5_000_000
DEFAULT_M_CAP = 24


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial: int = 0):
        super().__init__(message)
        self.partial = partial


class LatticeInvariantError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# cover DAG storage


class CoverPoset:
    """Bounded poset given by its Hasse diagram, nodes 0..n-1 in a topological
    order with 0 the bottom and n-1 the top."""

    __slots__ = ("n", "_pstart", "_pflat", "_cstart", "_cflat")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        pcount = [0] * (n + 1)
        ccount = [0] * (n + 1)
        for c, p in edges:
            pcount[c + 1] += 1
            ccount[p + 1] += 1
        for i in range(n):
            pcount[i + 1] += pcount[i]
            ccount[i + 1] += ccount[i]
        pflat = array("l", [0] * len(edges))
        cflat = array("l", [0] * len(edges))
        pfill = pcount[:]
        cfill = ccount[:]
        for c, p in edges:
            pflat[pfill[c]] = p
            pfill[c] += 1
            cflat[cfill[p]] = c
            cfill[p] += 1
        self._pstart = array("l", pcount)
        self._pflat = pflat
        self._cstart = array("l", ccount)
        self._cflat = cflat

    def parents(self, v: int) -> list[int]:
        """Upper covers of v."""
        return list(self._pflat[self._pstart[v]:self._pstart[v + 1]])

    def children(self, v: int) -> list[int]:
        """Lower covers of v."""
        return list(self._cflat[self._cstart[v]:self._cstart[v + 1]])

    def edge_count(self) -> int:
        return len(self._pflat)

    def edges(self) -> Iterator[tuple[int, int]]:
        for c in range(self.n):
            for p in self._pflat[self._pstart[c]:self._pstart[c + 1]]:
                yield (c, p)


class SubrackLattice(CoverPoset):
    """All subracks of a rack, ordered by inclusion, with cover relations."""

    __slots__ = ("rack", "sets", "index", "labels", "spec")

    def __init__(self, rack, sets, edges, labels=None, spec=None):
        super().__init__(len(sets), edges)
        self.rack = rack
        self.sets = list(sets)
        self.index = {s: i for i, s in enumerate(self.sets)}
        if labels is None:
            labels = rack.labels if rack is not None else ()
        self.labels = tuple(labels)
        if spec is None:
            spec = rack.provenance if rack is not None else None
        self.spec = spec

    def node_of(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise LatticeInvariantError(f"set {mask:#x} is not a lattice node") from None

    def set_labels(self, v: int) -> list[str]:
        return [self.labels[i] for i in bits(self.sets[v])]

    def __repr__(self) -> str:
        return f"SubrackLattice(nodes={self.n}, edges={self.edge_count()})"


# ---------------------------------------------------------------------------
# enumeration


def enumerate_subracks(
    rack: Rack,
    node_budget: int = DEFAULT_NODE_BUDGET,
    rack_cap: int = DEFAULT_RACK_CAP,
) -> SubrackLattice:
    """Enumerate every subrack (fixed point of the closure) together with the
    Hasse diagram.

    Closed sets are discovered from the empty set through memoized
    single-element extensions; covers are the inclusion-minimal extension
    closures of each node.
    """
    if rack.size > rack_cap:
        raise CapExceeded(f"rack size {rack.size} exceeds the enumeration cap {rack_cap}")
    close = rack.closure
    full = rack.full_mask()
    pid = {0: 0}
    psets = [0]
    queue = deque([0])
    edges_c = array("l")
    edges_p = array("l")
    while queue:
        v = queue.popleft()
        s = psets[v]
        rem = full & ~s
        if not rem:
            continue
        exts = set()
        for x in bits(rem):
            exts.add(close(s | (1 << x)))
        cand = sorted(exts, key=lambda m: (m.bit_count(), m))
        if cand[0].bit_count() == cand[-1].bit_count():
            covers = cand
        else:
            covers = []
            for b in cand:
                pb = b.bit_count()
                for c in covers:
                    if c.bit_count() < pb and c & b == c:
                        break
                else:
                    covers.append(b)
        for b in covers:
            w = pid.get(b)
            if w is None:
                if len(psets) >= node_budget:
                    raise BudgetExceeded(
                        f"node budget {node_budget} exceeded; "
                        f"{len(psets)} subracks enumerated so far",
                        partial=len(psets),
                    )
                w = len(psets)
                pid[b] = w
                psets.append(b)
                queue.append(w)
            edges_c.append(v)
            edges_p.append(w)
    order = sorted(range(len(psets)), key=lambda i: (psets[i].bit_count(), psets[i]))
    remap = [0] * len(psets)
    for new, old in enumerate(order):
        remap[old] = new
    sets = [psets[old] for old in order]
    edges = sorted(
        (remap[edges_c[i]], remap[edges_p[i]]) for i in range(len(edges_c))
    )
    return SubrackLattice(rack, sets, edges)


def iter_closed_sets_lectic(rack: Rack) -> Iterator[int]:
    """All subracks in lectic (NextClosure) order; cross-checks enumeration."""
    close = rack.closure
    n = rack.size
    full = rack.full_mask()
    a = close(0)
    yield a
    while a != full:
        nxt = None
        for i in reversed(range(n)):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                b = close(a | bit)
                below = bit - 1
                if (b & below) == (a & below):
                    nxt = b
                    break
        if nxt is None:
            return
        yield nxt
        a = nxt


def brute_force_subracks(rack: Rack) -> list[int]:
    """Independent oracle: scan all subsets for closure (sizes <= ~20 only)."""
    n = rack.size
    op, inv_op = rack.op, rack.inv_op
    out = []
    for m in range(1 << n):
        elems = bit_list(m)
        ok = True
        for a in elems:
            ra, ia = op[a], inv_op[a]
            for b in elems:
                if not (1 << ra[b]) & m or not (1 << ia[b]) & m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return sorted(out, key=lambda m: (m.bit_count(), m))


# ---------------------------------------------------------------------------
# basic lattice operations


def meet(L: SubrackLattice, a: int, b: int) -> int:
    return L.node_of(L.sets[a] & L.sets[b])


def join(L: SubrackLattice, a: int, b: int) -> int:
    if L.rack is None:
        raise LatticeInvariantError("join needs the rack closure; lattice was loaded bare")
    return L.node_of(L.rack.closure(L.sets[a] | L.sets[b]))


def atoms(L: SubrackLattice) -> list[int]:
    return L.parents(0)


def coatoms(L: SubrackLattice) -> list[int]:
    return L.children(L.n - 1)


def is_atomic(L: SubrackLattice) -> bool:
    """Every node is the join of the atoms below it."""
    if L.rack is None:
        raise LatticeInvariantError("atomicity needs the rack closure")
    atom_sets = [L.sets[a] for a in atoms(L)]
    for s in L.sets:
        u = 0
        for a in atom_sets:
            if a & s == a:
                u |= a
        if L.rack.closure(u) != s:
            return False
    return True


# ---------------------------------------------------------------------------
# chains and gradedness


def _length_sets(P: CoverPoset) -> list[int]:
    # lb[v] is a bitmask of achievable cover-path lengths bottom -> v
    lb = [0] * P.n
    lb[0] = 1
    for v in range(1, P.n):
        acc = 0
        for u in P.children(v):
            acc |= lb[u]
        lb[v] = acc << 1
    return lb


def all_maximal_chain_lengths(P: CoverPoset) -> tuple[int, ...]:
    return tuple(bits(_length_sets(P)[P.n - 1]))


def _witness_chain(P: CoverPoset, lb: list[int], target: int) -> list[int]:
    chain = [P.n - 1]
    v, rem = P.n - 1, target
    while v != 0:
        for u in P.children(v):
            if lb[u] >> (rem - 1) & 1:
                chain.append(u)
                v, rem = u, rem - 1
                break
        else:
            raise AssertionError("length DP inconsistent")
    chain.reverse()
    return chain


@dataclass(frozen=True)
class GradednessReport:
    is_graded: bool
    min_maximal_chain: int
    max_maximal_chain: int
    witness_short: tuple[int, ...]
    witness_long: tuple[int, ...]


def gradedness(P: CoverPoset) -> GradednessReport:
    lb = _length_sets(P)
    lengths = bit_list(lb[P.n - 1])
    lo, hi = lengths[0], lengths[-1]
    return GradednessReport(
        is_graded=(lo == hi),
        min_maximal_chain=lo,
        max_maximal_chain=hi,
        witness_short=tuple(_witness_chain(P, lb, lo)),
        witness_long=tuple(_witness_chain(P, lb, hi)),
    )


@dataclass(frozen=True)
class ChainLengthsThrough:
    through: tuple[int, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]


def maximal_chain_lengths_through(L: SubrackLattice, node: int) -> ChainLengthsThrough:
    """Cover-lengths of maximal bottom->top chains through `node`, with the
    per-interval lengths for [bottom, node] and [node, top]."""
    sets = L.sets
    m = sets[node]
    # lower interval: children of members are members, so the plain DP works
    lbl = {0: 1}
    for v in range(1, node + 1):
        if sets[v] & m != sets[v]:
            continue
        acc = 0
        for u in L.children(v):
            acc |= lbl.get(u, 0)
        lbl[v] = acc << 1
    lower = bit_list(lbl[node])
    lbu = {node: 1}
    top = L.n - 1
    for v in range(node + 1, L.n):
        if sets[v] & m != m:
            continue
        acc = 0
        for u in L.children(v):
            acc |= lbu.get(u, 0)
        if acc:
            lbu[v] = acc << 1
    upper = bit_list(lbu.get(top, 0))
    through = sorted({a + b for a in lower for b in upper})
    return ChainLengthsThrough(tuple(through), tuple(lower), tuple(upper))


def connected_components_proper(L: CoverPoset) -> int:
    """Connected components of the proper part (top and bottom removed)."""
    n = L.n
    if n <= 2:
        return 0
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c, p in L.edges():
        if c != 0 and p != n - 1:
            rc, rp = find(c), find(p)
            if rc != rp:
                parent[rc] = rp
    return len({find(v) for v in range(1, n - 1)})


# ---------------------------------------------------------------------------
# closure to class unions, Int(L), Boolean tests


def closure_bar(classes: ClassDecomposition, mask: int) -> int:
    """Union of the conjugacy classes meeting `mask`."""
    out = 0
    for c in classes.classes:
        if c & mask:
            out |= c
    return out


def int_lattice(L: SubrackLattice) -> list[int]:
    """Int(L): all meets of sets of coatoms (the empty meet being the top)."""
    top = L.sets[-1]
    coat = [L.sets[c] for c in coatoms(L)]
    out = {top}
    queue = [top]
    while queue:
        s = queue.pop()
        for c in coat:
            t = s & c
            if t not in out:
                out.add(t)
                queue.append(t)
    return sorted(out, key=lambda s: (s.bit_count(), s))


def is_boolean_sets(elements: Iterable[int]) -> bool:
    """Is this family of sets, ordered by inclusion, a Boolean algebra 2^[k]?"""
    elems = sorted(set(elements), key=lambda s: (s.bit_count(), s))
    if not elems:
        return False
    bottom = elems[0]
    if any(e & bottom != bottom for e in elems):
        return False
    atom_sets: list[int] = []
    for e in elems[1:]:
        if not any(a & e == a for a in atom_sets):
            atom_sets.append(e)
    k = len(atom_sets)
    if len(elems) != 1 << k:
        return False
    sigs = {}
    union_joins = True
    for e in elems:
        s = 0
        acc = bottom
        for i, a in enumerate(atom_sets):
            if a & e == a:
                s |= 1 << i
                acc |= a
        if s in sigs:
            return False
        sigs[s] = e
        if acc != e:
            union_joins = False
    if len(sigs) != 1 << k:
        return False
    if union_joins:
        # x = bottom | union(atoms below x) makes the signature map an order
        # isomorphism outright
        return True
    # general case: signatures must reflect inclusion both ways
    items = list(sigs.items())
    for s1, e1 in items:
        for s2, e2 in items:
            if (s1 & s2 == s1) != (e1 & e2 == e1):
                return False
    return True


def is_boolean(L: SubrackLattice) -> bool:
    return is_boolean_sets(L.sets)


# ---------------------------------------------------------------------------
# the M-set (detects non-normal maximal subgroups)


@dataclass(frozen=True)
class MEntry:
    node: int
    elems: int
    not_closed: bool      # (A)
    unique_cover_bar: bool  # (B)
    interval_closed: bool   # (C)
    int_not_boolean: bool   # (D)

    @property
    def member(self) -> bool:
        return (
            self.not_closed
            and self.unique_cover_bar
            and self.interval_closed
            and self.int_not_boolean
        )


@dataclass(frozen=True)
class MReport:
    entries: tuple[MEntry, ...]
    members: tuple[int, ...]  # node ids


def compute_M(
    L: SubrackLattice, classes: ClassDecomposition, m_cap: int = DEFAULT_M_CAP
) -> MReport:
    """All nodes satisfying the four conditions: not closed; unique cover equal
    to the class-union closure; everything above that closure closed; the
    coatom-meet lattice of [bottom, closure] not Boolean."""
    if L.rack is None or L.rack.size != len(classes.class_of):
        raise LatticeInvariantError("compute_M needs the full group lattice")
    if L.rack.size > m_cap:
        raise CapExceeded(f"M computation capped at group order {m_cap}")
    sets = L.sets
    closed_above: dict[int, bool] = {}
    int_not_boolean: dict[int, bool] = {}
    entries = []
    for v in range(L.n):
        s = sets[v]
        bar = closure_bar(classes, s)
        if bar == s:
            continue
        pars = L.parents(v)
        if len(pars) != 1 or sets[pars[0]] != bar:
            continue
        if bar not in closed_above:
            ok = True
            for w in range(L.n):
                t = sets[w]
                if t & bar == bar and closure_bar(classes, t) != t:
                    ok = False
                    break
            closed_above[bar] = ok
        if bar not in int_not_boolean:
            bar_node = L.node_of(bar)
            coat = [sets[c] for c in L.children(bar_node)]
            meets = {bar}
            queue = [bar]
            while queue:
                t = queue.pop()
                for c in coat:
                    u = t & c
                    if u not in meets:
                        meets.add(u)
                        queue.append(u)
            int_not_boolean[bar] = not is_boolean_sets(meets)
        entries.append(
            MEntry(
                node=v,
                elems=s,
                not_closed=True,
                unique_cover_bar=True,
                interval_closed=closed_above[bar],
                int_not_boolean=int_not_boolean[bar],
            )
        )
    members = tuple(e.node for e in entries if e.member)
    return MReport(tuple(entries), members)


# ---------------------------------------------------------------------------
# product decomposition over a central part


@dataclass(frozen=True)
class ProductDecompositionReport:
    ok: bool
    nodes: int
    factor_nodes: int
    center_size: int
    detail: str


def product_decomposition_check(
    G: FiniteGroup,
    lattice: SubrackLattice | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    rack_cap: int = DEFAULT_RACK_CAP,
) -> ProductDecompositionReport:
    """Verify Q -> (Q & R, Q & Z) is an order isomorphism from the full lattice
    onto (lattice of the non-central rack) x (subsets of the center)."""
    classes = conjugacy_classes(G)
    z_mask = classes.center
    r_mask = ((1 << G.order) - 1) & ~z_mask
    z = z_mask.bit_count()
    if lattice is None:
        lattice = enumerate_subracks(
            conjugation_rack(G, provenance=G.name), node_budget, rack_cap
        )
    sub = enumerate_subracks(
        conjugation_rack(G, r_mask, provenance=f"{G.name}:noncentral"),
        node_budget,
        rack_cap,
    )
    # compress G-element masks to positions within the non-central rack
    pos = {e: i for i, e in enumerate(bit_list(r_mask))}

    def compress(mask: int) -> int:
        out = 0
        for e in bits(mask):
            out |= 1 << pos[e]
        return out

    expected = sub.n * (1 << z)
    if lattice.n != expected:
        return ProductDecompositionReport(
            False, lattice.n, sub.n, z, f"node count {lattice.n} != {sub.n} * 2^{z}"
        )
    seen = set()
    for s in lattice.sets:
        rs = compress(s & r_mask)
        if rs not in sub.index:
            return ProductDecompositionReport(
                False, lattice.n, sub.n, z, "projection to the non-central part is not a subrack"
            )
        key = (sub.index[rs], s & z_mask)
        if key in seen:
            return ProductDecompositionReport(
                False, lattice.n, sub.n, z, "projection map is not injective"
            )
        seen.add(key)
    sub_edges = set()
    for c, p in sub.edges():
        sub_edges.add((sub.sets[c], sub.sets[p]))
    for c, p in lattice.edges():
        sc, sp = lattice.sets[c], lattice.sets[p]
        rc, rp = compress(sc & r_mask), compress(sp & r_mask)
        zc, zp = sc & z_mask, sp & z_mask
        if zc == zp:
            if (rc, rp) not in sub_edges:
                return ProductDecompositionReport(
                    False, lattice.n, sub.n, z, "a cover does not project to a factor cover"
                )
        elif rc == rp:
            d = zp & ~zc
            if zc & ~zp or d.bit_count() != 1:
                return ProductDecompositionReport(
                    False, lattice.n, sub.n, z, "a cover changes the central part by != 1 element"
                )
        else:
            return ProductDecompositionReport(
                False, lattice.n, sub.n, z, "a cover moves in both coordinates"
            )
    want_edges = len(sub_edges) * (1 << z) + sub.n * z * (1 << max(z - 1, 0))
    if z == 0:
        want_edges = len(sub_edges)
    if lattice.edge_count() != want_edges:
        return ProductDecompositionReport(
            False, lattice.n, sub.n, z,
            f"cover count {lattice.edge_count()} != expected {want_edges}",
        )
    return ProductDecompositionReport(True, lattice.n, sub.n, z, "order isomorphism verified")


# ---------------------------------------------------------------------------
# line-oriented export


def export_lattice_text(L: SubrackLattice) -> str:
    lines = [
        "racklat 1",
        f"spec {L.spec or '-'}",
        f"elements {len(L.labels)}",
    ]
    for i, lab in enumerate(L.labels):
        lines.append(f"label {i} {lab}")
    lines.append(f"nodes {L.n}")
    for i, s in enumerate(L.sets):
        lines.append(f"n {i} {s:x}")
    edges = list(L.edges())
    lines.append(f"edges {len(edges)}")
    for c, p in edges:
        lines.append(f"e {c} {p}")
    return "\n".join(lines) + "\n"


def load_lattice_export(text: str) -> SubrackLattice:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split() != ["racklat", "1"]:
        raise ValueError("not a racklat v1 export")
    spec = lines[1].split(" ", 1)[1]
    if spec == "-":
        spec = None
    n_elements = int(lines[2].split()[1])
    labels = [""] * n_elements
    i = 3
    for _ in range(n_elements):
        _, idx, lab = lines[i].split(" ", 2)
        labels[int(idx)] = lab
        i += 1
    n_nodes = int(lines[i].split()[1])
    i += 1
    sets = [0] * n_nodes
    for _ in range(n_nodes):
        _, idx, hx = lines[i].split()
        sets[int(idx)] = int(hx, 16)
        i += 1
    n_edges = int(lines[i].split()[1])
    i += 1
    edges = []
    for _ in range(n_edges):
        _, c, p = lines[i].split()
        edges.append((int(c), int(p)))
        i += 1
    return SubrackLattice(None, sets, sorted(edges), labels=labels, spec=spec)
