from __future__ import annotations

from math import comb

import pytest

from racklab.bitsets import mask_of
from racklab.partitions import (
    SetPartition,
    all_partitions,
    k_equal_lattice,
    orbit_partition_map,
    partition_lattice,
    pcycle_rack_and_lattice,
    quillen_fiber_check,
    transposition_rack_isomorphism,
)

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}


def test_bell_counts():
    for n, b in BELL.items():
        assert len(all_partitions(n)) == b


def test_partition_lattice_counts_and_bounds():
    lat = partition_lattice(3)
    assert lat.n == 5
    assert lat.elements[0] == SetPartition.discrete(3)
    assert lat.elements[-1] == SetPartition.one_block(3)
    assert partition_lattice(4).n == 15


def test_covers_of_discrete_partition():
    lat = partition_lattice(4)
    discrete = lat.index[SetPartition.discrete(4)]
    ups = lat.parents(discrete)
    assert len(ups) == comb(4, 2)
    for v in ups:
        assert sorted(len(b) for b in lat.elements[v].blocks) == [1, 1, 2]


def test_refinement_and_meet():
    a = SetPartition.from_blocks(4, [[0, 1], [2, 3]])
    b = SetPartition.from_blocks(4, [[0, 1, 2], [3]])
    assert not a.refines(b) and not b.refines(a)
    m = a.meet(b)
    assert m == SetPartition.from_blocks(4, [[0, 1], [2], [3]])
    assert m.refines(a) and m.refines(b)
    assert str(SetPartition.from_blocks(6, [[0, 1, 2], [3, 4], [5]])) == "123|45|6"


def test_k_equal_degenerate_cases():
    for n in (4, 5):
        full = partition_lattice(n)
        for k in (1, 2):
            ke = k_equal_lattice(n, k)
            assert ke.n == full.n
            assert ke.elements == full.elements
            assert sorted(ke.edges()) == sorted(full.edges())
    assert k_equal_lattice(4, 4).n == 2


def test_k_equal_4_3_covers():
    ke = k_equal_lattice(4, 3)
    assert ke.n == 6
    # discrete -> each 3-block (4 covers), each 3-block -> top (4 covers)
    assert ke.edge_count() == 8


def test_pi63_count_by_block_type():
    # block-size profiles with every block of size 1 or >= 3 on six points:
    # 1^6; 3,1^3; 4,1^2; 5,1; 6; 3,3
    expected = 1 + comb(6, 3) + comb(6, 4) + comb(6, 5) + 1 + comb(6, 3) // 2
    assert expected == 53
    assert k_equal_lattice(6, 3).n == 53


@pytest.mark.parametrize("n", [3, 4, 5])
def test_transposition_rack_isomorphism(n):
    rep = transposition_rack_isomorphism(n)
    assert rep.ok, rep.detail
    assert rep.count_left == rep.count_right == BELL[n]


def test_orbit_partition_map_examples():
    G, rack, lat = pcycle_rack_and_lattice(6, 3)
    one = 1 << rack.labels.index("(123)")
    assert str(orbit_partition_map(6, rack, G, one)) == "123|4|5|6"
    assert orbit_partition_map(6, rack, G, 0) == SetPartition.discrete(6)
    both_blocks = mask_of(
        i for i, lab in enumerate(rack.labels)
        if set(lab) <= set("(123)") or set(lab) <= set("(456)")
    )
    assert str(orbit_partition_map(6, rack, G, both_blocks)) == "123|456"


def test_fiber_maxima_sizes():
    G, rack, lat = pcycle_rack_and_lattice(6, 3)
    # tau = 123|4|5|6: the fiber maximum is the two 3-cycles on {1,2,3}
    tau_small = SetPartition.from_blocks(6, [[0, 1, 2], [3], [4], [5]])
    tau_big = SetPartition.from_blocks(6, [[0, 1, 2], [3, 4, 5]])
    for tau, size in [(tau_small, 2), (tau_big, 4)]:
        block_of = {}
        for bi, b in enumerate(tau.blocks):
            for v in b:
                block_of[v] = bi
        perm_of_label = {G.labels[i]: G.perms[i] for i in range(G.order)}
        q_h = mask_of(
            i for i, lab in enumerate(rack.labels)
            if len({block_of[v] for v in range(6) if perm_of_label[lab][v] != v}) == 1
        )
        assert q_h.bit_count() == size
        assert q_h in lat.index
        members = [
            s for s in lat.sets
            if orbit_partition_map(6, rack, G, s).refines(tau)
        ]
        assert all(s & q_h == s for s in members)


def test_orbit_map_is_order_preserving():
    G, rack, lat = pcycle_rack_and_lattice(6, 3)
    images = [orbit_partition_map(6, rack, G, s) for s in lat.sets]
    for c, p in lat.edges():
        assert images[c].refines(images[p])


def test_quillen_fiber_check():
    rep = quillen_fiber_check(6, 3)
    assert rep.ok, rep.detail
    assert rep.image_equals_kequal
    assert rep.fibers_total == 51
    assert rep.lattice_nodes == 203


def test_quillen_parameter_guard():
    with pytest.raises(ValueError):
        quillen_fiber_check(5, 3)
