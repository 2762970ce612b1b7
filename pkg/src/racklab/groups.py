"""Finite groups from a small constructor grammar, plus the subgroup toolkit.

Groups are stored as full multiplication tables over element indices
0..order-1, with index 0 always the identity.  The grammar covers cyclic,
symmetric, alternating, dihedral, dicyclic, semidihedral-16, SL(2,3) and an
order-18 semidirect product, closed under binary direct products.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import reduce
from typing import Union

from .bitsets import bit_list, bits, mask_of

DEFAULT_MAX_ORDER = 120
DEFAULT_SUBGROUP_CAP = 48

_ASSOC_EXHAUSTIVE_CAP = 48
_ASSOC_SAMPLES = 4000


class GroupSpecError(ValueError):
    """Rejected group spec; `position` is the offset of the offending token."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OrderCapExceeded(RuntimeError):
    pass


class CapExceeded(RuntimeError):
    pass


class InvariantViolation(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# spec grammar


@dataclass(frozen=True)
class FamilyTerm:
    kind: str  # "Z", "S", "A", "D", "DIC" or a fixed token (Q8, Q16, SD16, SL(2,3), TV18)
    param: int | None = None


@dataclass(frozen=True)
class ProductNode:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[FamilyTerm, ProductNode]

_FIXED_TOKENS = {"Q8": 8, "Q16": 16, "SD16": 16, "SL(2,3)": 24, "TV18": 18}


def _parse_term(token: str, position: int) -> FamilyTerm:
    if token in _FIXED_TOKENS:
        return FamilyTerm(token)
    m = re.fullmatch(r"DIC(\d+)", token)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise GroupSpecError("dicyclic parameter must be at least 2", position)
        return FamilyTerm("DIC", k)
    m = re.fullmatch(r"([ZSAD])(\d+)", token)
    if not m:
        raise GroupSpecError(f"unrecognized term {token!r}", position)
    kind, n = m.group(1), int(m.group(2))
    if kind == "Z":
        if n < 1:
            raise GroupSpecError("cyclic parameter must be at least 1", position)
    elif kind in ("S", "A"):
        if not 1 <= n <= 8:
            raise GroupSpecError(f"{kind}{n}: parameter must be between 1 and 8", position)
    else:  # D
        if n % 2 != 0 or n < 4:
            raise GroupSpecError(
                "dihedral parameter is the group order; it must be even and at least 4",
                position,
            )
    return FamilyTerm(kind, n)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group spec string such as "S4", "D8xZ3" or "SL(2,3)"."""
    if not text:
        raise GroupSpecError("empty group spec")
    terms = []
    position = 0
    for piece in text.split("x"):
        if not piece:
            raise GroupSpecError("empty term", position)
        terms.append(_parse_term(piece, position))
        position += len(piece) + 1
    return reduce(ProductNode, terms)


def format_group_spec(spec: GroupSpec) -> str:
    if isinstance(spec, FamilyTerm):
        if spec.kind in _FIXED_TOKENS:
            return spec.kind
        return f"{spec.kind}{spec.param}"
    return f"{format_group_spec(spec.left)}x{format_group_spec(spec.right)}"


def spec_order(spec: GroupSpec) -> int:
    if isinstance(spec, ProductNode):
        return spec_order(spec.left) * spec_order(spec.right)
    kind, n = spec.kind, spec.param
    if kind in _FIXED_TOKENS:
        return _FIXED_TOKENS[kind]
    if kind == "Z":
        return n
    if kind == "S":
        return _factorial(n)
    if kind == "A":
        return max(1, _factorial(n) // 2)
    if kind == "D":
        return n
    if kind == "DIC":
        return 4 * n
    raise AssertionError(kind)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# group object


class FiniteGroup:
    """Multiplication table group; element 0 is the identity."""

    __slots__ = ("name", "order", "mul", "inv", "labels", "perms", "_label_index")

    def __init__(self, name, mul, labels, perms=None, validate=True):
        self.name = name
        self.mul = tuple(tuple(row) for row in mul)
        self.order = len(self.mul)
        self.labels = tuple(labels)
        self.perms = tuple(perms) if perms is not None else None
        inv = [-1] * self.order
        for a in range(self.order):
            row = self.mul[a]
            for b in range(self.order):
                if row[b] == 0:
                    inv[a] = b
                    break
        self.inv = tuple(inv)
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        if validate:
            self._validate()

    def _validate(self) -> None:
        n, mul, inv = self.order, self.mul, self.inv
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise ValueError("labels must be unique, one per element")
        for a in range(n):
            if sorted(mul[a]) != list(range(n)) or sorted(r[a] for r in mul) != list(range(n)):
                raise ValueError(f"row/column {a} of the table is not a permutation")
            if mul[0][a] != a or mul[a][0] != a:
                raise ValueError("element 0 is not an identity")
            if inv[a] < 0 or mul[a][inv[a]] != 0 or mul[inv[a]][a] != 0:
                raise ValueError(f"element {a} has no two-sided inverse")
        if n <= _ASSOC_EXHAUSTIVE_CAP:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0xA55)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ValueError(f"associativity fails at ({a}, {b}, {c})")

    @property
    def identity(self) -> int:
        return 0

    def conj(self, a: int, b: int) -> int:
        """a b a^-1"""
        return self.mul[self.mul[a][b]][self.inv[a]]

    def label_index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element labeled {label!r} in {self.name}") from None

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# ---------------------------------------------------------------------------
# family constructors


def _perm_label(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        cycles.append("(" + "".join(str(v + 1) for v in cyc) + ")")
    return "".join(cycles) if cycles else "e"


def _perm_group(name: str, perms: list[tuple[int, ...]]) -> FiniteGroup:
    n = len(perms[0])
    identity = tuple(range(n))
    perms = [identity] + sorted(p for p in perms if p != identity)
    index = {p: i for i, p in enumerate(perms)}
    mul = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    return FiniteGroup(name, mul, [_perm_label(p) for p in perms], perms=perms)


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _build_symmetric(n: int) -> FiniteGroup:
    return _perm_group(f"S{n}", list(itertools.permutations(range(n))))


def _build_alternating(n: int) -> FiniteGroup:
    evens = [p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1]
    return _perm_group(f"A{n}", evens)


def _build_cyclic(n: int) -> FiniteGroup:
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(f"Z{n}", mul, labels)


def _build_dihedral(order: int) -> FiniteGroup:
    k = order // 2
    # indices: i < k rotation r^i, k+i reflection s r^i
    def mul(a, b):
        ia, fa = a % k, a // k
        ib, fb = b % k, b // k
        if fa == 0 and fb == 0:
            return (ia + ib) % k
        if fa == 0 and fb == 1:
            return k + (ib - ia) % k
        if fa == 1 and fb == 0:
            return k + (ia + ib) % k
        return (ib - ia) % k

    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    labels = ["e"] + [f"r{i}" if i > 1 else "r" for i in range(1, k)]
    labels += [f"sr{i}" if i > 1 else ("s" if i == 0 else "sr") for i in range(k)]
    return FiniteGroup(f"D{order}", table, labels)


def _build_dicyclic(k: int, name: str | None = None) -> FiniteGroup:
    # <a, b | a^(2k) = 1, b^2 = a^k, b a b^-1 = a^-1>
    # indices: i < 2k is a^i, 2k+i is a^i b
    m = 2 * k
    def mul(x, y):
        i, f = x % m, x // m
        j, g = y % m, y // m
        if f == 0 and g == 0:
            return (i + j) % m
        if f == 0 and g == 1:
            return m + (i + j) % m
        if f == 1 and g == 0:
            return m + (i - j) % m
        return (i - j + k) % m

    table = [[mul(x, y) for y in range(4 * k)] for x in range(4 * k)]
    labels = ["e"] + [f"a{i}" if i > 1 else "a" for i in range(1, m)]
    labels += [f"a{i}b" if i > 1 else ("b" if i == 0 else "ab") for i in range(m)]
    return FiniteGroup(name or f"DIC{k}", table, labels)


def _build_semidihedral16() -> FiniteGroup:
    # <a, b | a^8 = b^2 = 1, b a b = a^3>
    def mul(x, y):
        i, f = x % 8, x // 8
        j, g = y % 8, y // 8
        if f == 0:
            return (i + j) % 8 + 8 * g
        return (i + 3 * j) % 8 + 8 * (1 - g)

    table = [[mul(x, y) for y in range(16)] for x in range(16)]
    labels = ["e"] + [f"a{i}" if i > 1 else "a" for i in range(1, 8)]
    labels += [f"a{i}b" if i > 1 else ("b" if i == 0 else "ab") for i in range(8)]
    return FiniteGroup("SD16", table, labels)


def _build_sl23() -> FiniteGroup:
    elems = [
        (a, b, c, d)
        for a in range(3)
        for b in range(3)
        for c in range(3)
        for d in range(3)
        if (a * d - b * c) % 3 == 1
    ]
    ident = (1, 0, 0, 1)
    elems = [ident] + sorted(e for e in elems if e != ident)
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    labels = ["e" if e == ident else f"[{e[0]}{e[1]}|{e[2]}{e[3]}]" for e in elems]
    return FiniteGroup("SL(2,3)", table, labels)


def _build_tv18() -> FiniteGroup:
    # (eps, v) with eps in Z2, v in Z3 x Z3 and (eps,v)(delta,w) = (eps+delta, (-1)^delta v + w)
    def mul(x, y):
        e1, v1, w1 = x
        e2, v2, w2 = y
        s = -1 if e2 else 1
        return ((e1 + e2) % 2, (s * v1 + v2) % 3, (s * w1 + w2) % 3)

    elems = [(e, v, w) for e in range(2) for v in range(3) for w in range(3)]
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    labels = [
        "e" if x == (0, 0, 0) else (f"v{x[1]}{x[2]}" if x[0] == 0 else f"tv{x[1]}{x[2]}")
        for x in elems
    ]
    return FiniteGroup("TV18", table, labels)


def _build_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    na, nb = a.order, b.order
    table = [
        [a.mul[i][k] * nb + b.mul[j][l] for k in range(na) for l in range(nb)]
        for i in range(na)
        for j in range(nb)
    ]
    labels = [
        "e" if (i, j) == (0, 0) else f"({a.labels[i]}|{b.labels[j]})"
        for i in range(na)
        for j in range(nb)
    ]
    return FiniteGroup(f"{a.name}x{b.name}", table, labels)


def build_group(spec: GroupSpec | str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build the group described by `spec` (a parse tree or a spec string)."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    order = spec_order(spec)
    if order > max_order:
        raise OrderCapExceeded(
            f"group order {order} exceeds the cap {max_order} for {format_group_spec(spec)}"
        )
    return _build(spec)


def _build(spec: GroupSpec) -> FiniteGroup:
    if isinstance(spec, ProductNode):
        return _build_product(_build(spec.left), _build(spec.right))
    kind, n = spec.kind, spec.param
    if kind == "Z":
        return _build_cyclic(n)
    if kind == "S":
        return _build_symmetric(n)
    if kind == "A":
        return _build_alternating(n)
    if kind == "D":
        return _build_dihedral(n)
    if kind == "DIC":
        return _build_dicyclic(n)
    if kind == "Q8":
        return _build_dicyclic(2, name="Q8")
    if kind == "Q16":
        return _build_dicyclic(4, name="Q16")
    if kind == "SD16":
        return _build_semidihedral16()
    if kind == "SL(2,3)":
        return _build_sl23()
    if kind == "TV18":
        return _build_tv18()
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# conjugacy classes


@dataclass(frozen=True)
class ClassDecomposition:
    classes: tuple[int, ...]  # element-set bitmasks sorted by (size, min element)
    class_of: tuple[int, ...]
    center: int  # bitmask

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.bit_count() for c in self.classes)

    def class_mask_of(self, e: int) -> int:
        return self.classes[self.class_of[e]]


def conjugacy_classes(G: FiniteGroup) -> ClassDecomposition:
    n, mul, inv = G.order, G.mul, G.inv
    assigned = [-1] * n
    raw = []
    for e in range(n):
        if assigned[e] >= 0:
            continue
        members = {mul[mul[g][e]][inv[g]] for g in range(n)}
        for m in members:
            assigned[m] = len(raw)
        raw.append(mask_of(members))
    order_keys = sorted(range(len(raw)), key=lambda i: (raw[i].bit_count(), raw[i] & -raw[i], raw[i]))
    classes = tuple(raw[i] for i in order_keys)
    renumber = {old: new for new, old in enumerate(order_keys)}
    class_of = tuple(renumber[c] for c in assigned)
    center = mask_of(e for e in range(n) if classes[class_of[e]].bit_count() == 1)
    return ClassDecomposition(classes, class_of, center)


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class SubgroupHandle:
    elems: int  # bitmask
    order: int
    normal: bool
    abelian: bool
    maximal: bool | None = None  # filled by all_subgroups


def subgroup_closure_mask(G: FiniteGroup, seed: int) -> int:
    mul = G.mul
    res = seed | 1
    todo = bit_list(res)
    members = set(todo)
    while todo:
        a = todo.pop()
        row = mul[a]
        for b in list(members):
            for c in (row[b], mul[b][a]):
                if c not in members:
                    members.add(c)
                    todo.append(c)
    return mask_of(members)


def _is_abelian_subset(G: FiniteGroup, mask: int) -> bool:
    mul = G.mul
    elems = bit_list(mask)
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if mul[a][b] != mul[b][a]:
                return False
    return True


def conjugate_subgroup_mask(G: FiniteGroup, mask: int, g: int) -> int:
    return mask_of(G.conj(g, h) for h in bits(mask))


def _is_normal_mask(G: FiniteGroup, mask: int) -> bool:
    return all(conjugate_subgroup_mask(G, mask, g) == mask for g in range(G.order))


def _handle(G: FiniteGroup, mask: int, maximal: bool | None = None) -> SubgroupHandle:
    return SubgroupHandle(
        elems=mask,
        order=mask.bit_count(),
        normal=_is_normal_mask(G, mask),
        abelian=_is_abelian_subset(G, mask),
        maximal=maximal,
    )


def subgroup_generated(G: FiniteGroup, seed) -> SubgroupHandle:
    """Smallest subgroup containing `seed` (an iterable of indices or a bitmask)."""
    mask = seed if isinstance(seed, int) else mask_of(seed)
    return _handle(G, subgroup_closure_mask(G, mask))


def all_subgroups(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> list[SubgroupHandle]:
    """Every subgroup of G, deterministically ordered, with normal/maximal/abelian flags."""
    if G.order > cap:
        raise CapExceeded(f"subgroup enumeration capped at order {cap}, got {G.order}")
    cyclics = sorted({subgroup_closure_mask(G, 1 << g) for g in range(G.order)})
    found = {1} | set(cyclics)
    queue = sorted(found)
    while queue:
        h = queue.pop()
        for c in cyclics:
            if c | h != h:
                k = subgroup_closure_mask(G, c | h)
                if k not in found:
                    found.add(k)
                    queue.append(k)
    masks = sorted(found, key=lambda m: (m.bit_count(), m))
    full = (1 << G.order) - 1
    handles = []
    for m in masks:
        if m == full:
            maximal = False
        else:
            maximal = not any(
                m != k and m & k == m and k != full for k in masks
            )
        handles.append(_handle(G, m, maximal))
    return handles


def maximal_subgroups(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> list[SubgroupHandle]:
    return [h for h in all_subgroups(G, cap) if h.maximal]


def core_and_normalizer(
    G: FiniteGroup, H: SubgroupHandle | int
) -> tuple[SubgroupHandle, SubgroupHandle]:
    mask = H.elems if isinstance(H, SubgroupHandle) else H
    core = (1 << G.order) - 1
    normalizer = []
    for g in range(G.order):
        cj = conjugate_subgroup_mask(G, mask, g)
        core &= cj
        if cj == mask:
            normalizer.append(g)
    return _handle(G, core), _handle(G, mask_of(normalizer))


def subgroup_conjugates(G: FiniteGroup, mask: int) -> frozenset[int]:
    return frozenset(conjugate_subgroup_mask(G, mask, g) for g in range(G.order))


# ---------------------------------------------------------------------------
# normal subgroups and the solvability hierarchy


def normal_subgroups_masks(G: FiniteGroup) -> list[int]:
    """All normal subgroups, found by closing unions of conjugacy classes."""
    classes = conjugacy_classes(G).classes
    found = {1}
    queue = [1]
    while queue:
        n_mask = queue.pop()
        for c in classes:
            if c | n_mask != n_mask:
                k = subgroup_closure_mask(G, n_mask | c)
                if k not in found:
                    found.add(k)
                    queue.append(k)
    return sorted(found, key=lambda m: (m.bit_count(), m))


def commutator_mask(G: FiniteGroup, a_mask: int, b_mask: int) -> int:
    mul, inv = G.mul, G.inv
    gens = set()
    for a in bits(a_mask):
        for b in bits(b_mask):
            gens.add(mul[mul[mul[a][b]][inv[a]]][inv[b]])
    return subgroup_closure_mask(G, mask_of(gens))


def derived_series(G: FiniteGroup) -> list[int]:
    series = [(1 << G.order) - 1]
    while True:
        nxt = commutator_mask(G, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(G: FiniteGroup) -> list[int]:
    full = (1 << G.order) - 1
    series = [full]
    while True:
        nxt = commutator_mask(G, series[-1], full)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent_lcs(G: FiniteGroup) -> bool:
    return lower_central_series(G)[-1] == 1


def _cyclic_quotient(G: FiniteGroup, m_mask: int, n_mask: int) -> bool:
    """Is M/N cyclic?  Both masks must be subgroups with N normal in M."""
    mul = G.mul
    n_elems = bit_list(n_mask)
    for x in bits(m_mask & ~n_mask):
        covered = n_mask
        y = x
        while not (1 << y) & n_mask:
            covered |= mask_of(mul[t][y] for t in n_elems)
            y = mul[y][x]
        if covered == m_mask:
            return True
    return m_mask == n_mask


def _is_supersolvable(G: FiniteGroup, abelian: bool) -> bool:
    if abelian:
        return True
    normals = normal_subgroups_masks(G)
    full = (1 << G.order) - 1
    dead: set[int] = set()

    def extend(cur: int) -> bool:
        if cur == full:
            return True
        if cur in dead:
            return False
        for nxt in normals:
            if nxt != cur and nxt & cur == cur and _cyclic_quotient(G, nxt, cur):
                if extend(nxt):
                    return True
        dead.add(cur)
        return False

    return extend(1)


def _is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    full = (1 << G.order) - 1
    for c in conjugacy_classes(G).classes:
        if c == 1:
            continue
        if subgroup_closure_mask(G, c) != full:
            return False
    return True


@dataclass(frozen=True)
class GroupProperties:
    abelian: bool
    nilpotent: bool
    solvable: bool
    supersolvable: bool
    simple: bool


def all_maximal_subgroups_normal(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> bool:
    return all(h.normal for h in all_subgroups(G, cap) if h.maximal)


def group_properties(G: FiniteGroup, subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> GroupProperties:
    mul = G.mul
    abelian = all(
        mul[a][b] == mul[b][a] for a in range(G.order) for b in range(a + 1, G.order)
    )
    # the maximal-subgroup criterion when enumeration is feasible, else the
    # lower central series (equal by a classical theorem; cross-checked in tests)
    if G.order <= subgroup_cap:
        nilpotent = all_maximal_subgroups_normal(G, subgroup_cap)
    else:
        nilpotent = is_nilpotent_lcs(G)
    solvable = derived_series(G)[-1] == 1
    supersolvable = solvable and _is_supersolvable(G, abelian)
    return GroupProperties(abelian, nilpotent, solvable, supersolvable, _is_simple(G))


# ---------------------------------------------------------------------------
# minimal non-abelian subgroups and class avoidance


def minimal_nonabelian_subgroups(
    G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP
) -> list[SubgroupHandle]:
    subs = all_subgroups(G, cap)
    nonabelian = [h for h in subs if not h.abelian]
    out = []
    for h in nonabelian:
        if not any(k.elems != h.elems and k.elems & h.elems == k.elems for k in nonabelian):
            out.append(h)
    return out


@dataclass(frozen=True)
class ClassAvoidanceReport:
    ok: bool
    witnesses: tuple[tuple[int, int], ...]  # (subgroup mask, avoided class mask)


def check_class_avoidance(G: FiniteGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> ClassAvoidanceReport:
    """For every proper subgroup, find a conjugacy class it misses entirely."""
    classes = conjugacy_classes(G).classes
    full = (1 << G.order) - 1
    witnesses = []
    for h in all_subgroups(G, cap):
        if h.elems == full:
            continue
        witness = next((c for c in classes if c & h.elems == 0), None)
        if witness is None:
            raise InvariantViolation(
                f"proper subgroup of order {h.order} in {G.name} meets every conjugacy class"
            )
        witnesses.append((h.elems, witness))
    return ClassAvoidanceReport(True, tuple(witnesses))
