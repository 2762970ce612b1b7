from __future__ import annotations

from racklab.bitsets import bit_list
from racklab.groups import FiniteGroup


def brute_force_subgroups(G: FiniteGroup) -> list[int]:
    """Independent oracle: scan all identity-containing subsets for closure
    under product and inverse (use only for order <= 12)."""
    out = []
    for m in range(1, 1 << G.order, 2):  # must contain element 0
        elems = bit_list(m)
        ok = True
        for a in elems:
            if not (1 << G.inv[a]) & m:
                ok = False
                break
            for b in elems:
                if not (1 << G.mul[a][b]) & m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return sorted(out, key=lambda m: (m.bit_count(), m))


def all_maximal_chains(poset) -> list[tuple[int, ...]]:
    """Independent oracle: DFS every maximal bottom-to-top chain."""
    top = poset.n - 1
    chains = []
    stack = [(0, (0,))]
    while stack:
        v, chain = stack.pop()
        if v == top:
            chains.append(chain)
            continue
        for p in poset.parents(v):
            stack.append((p, chain + (p,)))
    return chains
