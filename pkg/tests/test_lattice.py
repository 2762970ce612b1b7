from __future__ import annotations

import pytest

from conftest import all_maximal_chains
from racklab.bitsets import bit_list, bits, mask_of
from racklab.groups import all_subgroups, build_group, conjugacy_classes
from racklab.lattice import (
    BudgetExceeded,
    all_maximal_chain_lengths,
    atoms,
    brute_force_subracks,
    closure_bar,
    coatoms,
    compute_M,
    connected_components_proper,
    enumerate_subracks,
    export_lattice_text,
    gradedness,
    int_lattice,
    is_atomic,
    is_boolean,
    is_boolean_sets,
    iter_closed_sets_lectic,
    join,
    load_lattice_export,
    maximal_chain_lengths_through,
    meet,
    product_decomposition_check,
)
from racklab.racks import conjugation_rack, rack_from_spec

SMALL_RACKS = [
    "S3", "S4:cycles(4)", "D8", "Q8", "D8:noncentral", "D10", "A4", "Z6",
    "S4:transpositions", "DIC3",
]


@pytest.mark.parametrize("spec", SMALL_RACKS)
def test_enumeration_matches_oracles(spec):
    rack = rack_from_spec(spec)
    lat = enumerate_subracks(rack)
    assert lat.sets == brute_force_subracks(rack)
    lectic = sorted(iter_closed_sets_lectic(rack), key=lambda m: (m.bit_count(), m))
    assert lat.sets == lectic


def test_s3_has_18_subracks():
    assert enumerate_subracks(rack_from_spec("S3")).n == 18


def test_four_cycle_lattice_structure():
    rack = rack_from_spec("S4:cycles(4)")
    lat = enumerate_subracks(rack)
    assert lat.n == 11
    by_size = {}
    for s in lat.sets:
        by_size.setdefault(s.bit_count(), []).append(s)
    assert {k: len(v) for k, v in by_size.items()} == {0: 1, 1: 6, 2: 3, 6: 1}
    # each two-element node pairs a cycle with its inverse
    perms = {lab: i for i, lab in enumerate(rack.labels)}
    inverse_label = {"(1234)": "(1432)", "(1243)": "(1342)", "(1324)": "(1423)"}
    pairs = {
        tuple(sorted((perms[a], perms[b]))) for a, b in inverse_label.items()
    }
    assert {tuple(bit_list(s)) for s in by_size[2]} == pairs
    assert [lat.sets[v] for v in coatoms(lat)] == sorted(by_size[2])


def test_five_cycle_lattice_against_structured_oracle():
    # candidate subracks: subsets of the four-power sets of each 5-cycle,
    # plus the two conjugacy classes and their union
    G = build_group("A5", max_order=60)
    rack = rack_from_spec("A5:cycles(5)", max_order=60)
    cd = conjugacy_classes(G)
    elem = [G.label_index(lab) for lab in rack.labels]
    pos = {e: i for i, e in enumerate(elem)}
    candidates = {0}
    traces = set()
    for e in elem:
        powers = set()
        x = e
        while x != 0:
            powers.add(x)
            x = G.mul[x][e]
        traces.add(mask_of(pos[x] for x in powers))
    for t in traces:
        sub = t
        while True:
            candidates.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & t
    for cm in cd.classes:
        if cm.bit_count() == 12:
            candidates.add(mask_of(pos[e] for e in bits(cm)))
    candidates.add(rack.full_mask())
    assert len(traces) == 6
    assert all(rack.is_closed(c) for c in candidates)
    lat = enumerate_subracks(rack)
    assert set(lat.sets) == candidates
    assert lat.n == 94


def test_meet_and_join():
    lat = enumerate_subracks(rack_from_spec("S3"))
    bottom, top = 0, lat.n - 1
    for v in range(lat.n):
        assert meet(lat, bottom, v) == bottom
        assert join(lat, v, top) == top
    G = build_group("S3")
    t12 = lat.node_of(1 << G.label_index("(12)"))
    t13 = lat.node_of(1 << G.label_index("(13)"))
    j = join(lat, t12, t13)
    assert sorted(lat.set_labels(j)) == ["(12)", "(13)", "(23)"]


def test_join_of_five_cycles_is_class_union():
    G = build_group("A5", max_order=60)
    rack = rack_from_spec("A5:cycles(5)", max_order=60)
    lat = enumerate_subracks(rack)
    cd = conjugacy_classes(G)
    elem = [G.label_index(lab) for lab in rack.labels]
    pos = {e: i for i, e in enumerate(elem)}
    x = elem[0]
    powers = {x}
    y = G.mul[x][x]
    while y != x:
        powers.add(y)
        y = G.mul[y][x]
    other = next(e for e in elem if e not in powers)
    a = lat.node_of(1 << pos[x])
    b = lat.node_of(1 << pos[other])
    joined = lat.sets[join(lat, a, b)]
    union = 0
    for cm in cd.classes:
        if cm & ((1 << x) | (1 << other)):
            union |= mask_of(pos[e] for e in bits(cm))
    assert joined == union


def test_meet_closure_invariant():
    lat = enumerate_subracks(rack_from_spec("A4"))
    for a in lat.sets:
        for b in lat.sets:
            assert (a & b) in lat.index


def test_atoms_are_singletons_for_group_racks():
    for spec in ["S3", "D8", "A4"]:
        lat = enumerate_subracks(rack_from_spec(spec))
        assert sorted(lat.sets[v] for v in atoms(lat)) == [1 << i for i in range(lat.rack.size)]


def test_quandle_lattices_are_atomic():
    for spec in ["S3", "S4:cycles(4)", "A5:cycles(5)", "Q8"]:
        lat = enumerate_subracks(rack_from_spec(spec, max_order=60))
        assert is_atomic(lat)


def test_coatoms_of_group_lattice_are_class_complements():
    for spec in ["S3", "D8", "A4", "SL(2,3)"]:
        G = build_group(spec)
        cd = conjugacy_classes(G)
        lat = enumerate_subracks(conjugation_rack(G))
        full = (1 << G.order) - 1
        want = sorted((full & ~c for c in cd.classes), key=lambda s: (s.bit_count(), s))
        got = sorted((lat.sets[v] for v in coatoms(lat)), key=lambda s: (s.bit_count(), s))
        assert got == want


# ---------------------------------------------------------------------------
# chains


@pytest.mark.parametrize("spec,graded,lengths", [
    ("Z5", True, (5,)),
    ("S3", True, (4,)),
    ("D8", True, (6,)),
    ("Q8", True, (6,)),
    ("A5:cycles(5)", False, (4, 5)),
    ("S4:cycles(4)", True, (3,)),
])
def test_gradedness_against_chain_enumeration(spec, graded, lengths):
    lat = enumerate_subracks(rack_from_spec(spec, max_order=60))
    rep = gradedness(lat)
    assert rep.is_graded == graded
    assert all_maximal_chain_lengths(lat) == lengths
    chains = all_maximal_chains(lat)
    assert {len(c) - 1 for c in chains} == set(lengths)
    assert len(rep.witness_short) - 1 == rep.min_maximal_chain
    assert len(rep.witness_long) - 1 == rep.max_maximal_chain
    # witnesses are genuine cover chains
    for w in (rep.witness_short, rep.witness_long):
        for u, v in zip(w, w[1:]):
            assert u in lat.children(v)


def test_chain_lengths_through_subgroups_sl23():
    G = build_group("SL(2,3)")
    lat = enumerate_subracks(conjugation_rack(G))
    through = {}
    for h in all_subgroups(G):
        node = lat.node_of(h.elems)
        through.setdefault(h.order, set()).update(
            maximal_chain_lengths_through(lat, node).through
        )
    assert through[8] == {10}  # the quaternion Sylow subgroup
    assert through[6] == {8}   # the cyclic order-6 maximal subgroups
    assert all_maximal_chain_lengths(lat) == (8, 10)


def test_chain_lengths_through_d18_and_tv18():
    for spec, order_a, len_a, order_b, len_b in [
        ("D18", 9, 10, 6, 8),
        ("TV18", 9, 10, 6, 8),
    ]:
        G = build_group(spec)
        lat = enumerate_subracks(conjugation_rack(G))
        seen = {}
        for h in all_subgroups(G):
            node = lat.node_of(h.elems)
            seen.setdefault(h.order, set()).update(
                maximal_chain_lengths_through(lat, node).through
            )
        assert len_a in seen[order_a]
        assert len_b in seen[order_b]


def test_four_cycle_proper_part_components():
    lat = enumerate_subracks(rack_from_spec("S4:cycles(4)"))
    assert connected_components_proper(lat) == 3


# ---------------------------------------------------------------------------
# closure to class unions, Int, Boolean


def test_closure_bar():
    G = build_group("S3")
    cd = conjugacy_classes(G)
    t = 1 << G.label_index("(12)")
    bar = closure_bar(cd, t)
    assert bar == cd.class_mask_of(G.label_index("(12)"))
    assert closure_bar(cd, bar) == bar
    assert closure_bar(cd, 0) == 0
    # extensive and monotone over all subsets of a small group
    for m in range(1 << G.order):
        b = closure_bar(cd, m)
        assert b & m == m
        assert closure_bar(cd, m | t) & b == b

    G = build_group("S4")
    cd = conjugacy_classes(G)
    s = (1 << G.label_index("(12)")) | (1 << G.label_index("(1234)"))
    want = cd.class_mask_of(G.label_index("(12)")) | cd.class_mask_of(G.label_index("(1234)"))
    assert closure_bar(cd, s) == want


def test_int_lattice_of_group_lattices():
    for spec in ["S3", "D8", "S4"]:
        G = build_group(spec)
        cd = conjugacy_classes(G)
        lat = enumerate_subracks(conjugation_rack(G))
        ints = int_lattice(lat)
        assert len(ints) == 2 ** len(cd.classes)
        assert is_boolean_sets(ints)
        # Int consists exactly of the unions of conjugacy classes
        unions = {0}
        for c in cd.classes:
            unions |= {u | c for u in unions}
        assert set(ints) == unions


def test_int_of_four_cycle_lattice_not_boolean():
    lat = enumerate_subracks(rack_from_spec("S4:cycles(4)"))
    ints = int_lattice(lat)
    assert len(ints) == 5
    assert not is_boolean_sets(ints)


def test_is_boolean_sets_cases():
    # the subsets of a 3-set
    cube = [m for m in range(8)]
    assert is_boolean_sets(cube)
    # a chain of length 3 is not Boolean
    assert not is_boolean_sets([0, 1, 3])
    # an abstract square whose top is bigger than the union of its atoms
    assert is_boolean_sets([0, 1, 2, 7])
    # five elements can never be Boolean
    assert not is_boolean_sets([0, 1, 2, 3, 7])


def test_lattice_boolean_iff_abelian():
    for spec, want in [("Z6", True), ("Z2xZ2", True), ("S3", False), ("D8", False)]:
        lat = enumerate_subracks(rack_from_spec(spec))
        assert is_boolean(lat) == want


# ---------------------------------------------------------------------------
# the M-set


def _m_member_sets(spec):
    G = build_group(spec)
    cd = conjugacy_classes(G)
    lat = enumerate_subracks(conjugation_rack(G))
    rep = compute_M(lat, cd)
    return G, lat, rep


def test_m_of_s3():
    G, lat, rep = _m_member_sets("S3")
    got = sorted(lat.sets[v] for v in rep.members)
    want = sorted(h.elems for h in all_subgroups(G) if h.order == 2)
    assert got == want
    for e in rep.entries:
        assert e.member == (e.not_closed and e.unique_cover_bar
                            and e.interval_closed and e.int_not_boolean)


def test_m_of_nilpotent_and_abelian_groups_empty():
    for spec in ["D8", "Q8", "Z6", "Z12", "D8xZ2"]:
        _, _, rep = _m_member_sets(spec)
        assert rep.members == ()


def test_m_of_a4():
    G, lat, rep = _m_member_sets("A4")
    got = sorted(lat.sets[v] for v in rep.members)
    want = sorted(h.elems for h in all_subgroups(G) if h.maximal and not h.normal)
    assert got == want and len(got) == 4


# ---------------------------------------------------------------------------
# product decomposition


@pytest.mark.parametrize("spec", ["D8", "Q8", "D12", "Z6", "Q8xZ2"])
def test_product_decomposition(spec):
    rep = product_decomposition_check(build_group(spec))
    assert rep.ok, rep.detail


# ---------------------------------------------------------------------------
# export format


def test_export_roundtrip():
    lat = enumerate_subracks(rack_from_spec("S4:cycles(4)"))
    text = export_lattice_text(lat)
    loaded = load_lattice_export(text)
    assert loaded.sets == lat.sets
    assert list(loaded.edges()) == list(lat.edges())
    assert loaded.labels == lat.labels
    assert loaded.spec == "S4:cycles(4)"


def test_budget_exceeded_carries_partial_count():
    with pytest.raises(BudgetExceeded) as e:
        enumerate_subracks(rack_from_spec("D8"), node_budget=5)
    assert e.value.partial == 5


def test_coatoms_of_noncentral_rack_are_class_complements():
    # for a rack holding every non-central class, the maximal subracks are
    # again the all-but-one-class unions
    for spec in ["D8", "Q8", "SL(2,3)"]:
        G = build_group(spec)
        cd = conjugacy_classes(G)
        rack = rack_from_spec(f"{spec}:noncentral")
        lat = enumerate_subracks(rack)
        pos = {G.label_index(lab): i for i, lab in enumerate(rack.labels)}
        noncentral_classes = [c for c in cd.classes if c.bit_count() > 1]
        full = lat.rack.full_mask()
        want = sorted(
            full & ~mask_of(pos[e] for e in bits(c)) for c in noncentral_classes
        )
        got = sorted(lat.sets[v] for v in coatoms(lat))
        assert got == want
