"""Pure-Python bitset kernels.

Fallback implementations of the hot loops; `hypercover._kernel` selects
these when the compiled extension is unavailable (or when the
HYPERCOVER_PURE environment variable is set).  Python integers serve as
bitmasks, so these versions have no width limits, only speed limits.
"""

from __future__ import annotations

BACKEND = "pure-python"

# The agreement sweep walks every family of distinct nonempty subsets of a
# small universe.  Bit i of a family mask stands for the vertex subset with
# mask i+1, so the 2**u - 1 candidate edges are exactly the masks 1..2**u-1.

MAX_SWEEP_UNIVERSE = 4


def _subset_union_table(n_edges: int) -> list[int]:
    """union_table[S] = union of the vertex masks of the edges selected by S."""
    table = [0] * (1 << n_edges)
    for s in range(1, 1 << n_edges):
        low = s & -s
        table[s] = table[s ^ low] | low.bit_length()  # edge at bit i has mask i+1
    return table


def minimality_agreement_sweep(universe_size: int):
    """Compare the private-vertex minimality test with the proper-subcover
    definition over every (family, cover) pair on the given universe.

    Returns ``(n_families, n_cover_pairs, disagreements)`` where
    ``disagreements`` lists (family_mask, cover_mask) pairs on which the
    two tests differ (empty when the characterization holds).

    Both verdicts depend only on the selected edges and their union, so
    they are tabulated once per selection and the pair loop replays the
    tables; the two tables are still built by independent routes.
    """
    if not 1 <= universe_size <= MAX_SWEEP_UNIVERSE:
        raise ValueError(
            f"sweep universe size must be in 1..{MAX_SWEEP_UNIVERSE}, got {universe_size}"
        )
    n_edges = (1 << universe_size) - 1
    n_sel = 1 << n_edges
    union = _subset_union_table(n_edges)

    # route 1: every selected edge keeps a vertex of its own
    private_ok = bytearray(n_sel)
    private_ok[0] = 1
    for sel in range(1, n_sel):
        rest = sel
        ok = 1
        while rest:
            low = rest & -rest
            rest ^= low
            if low.bit_length() & ~union[sel ^ low] == 0:
                ok = 0
                break
        private_ok[sel] = ok

    # route 2: no proper subselection has the same union
    subcover_ok = bytearray(n_sel)
    subcover_ok[0] = 1
    for sel in range(1, n_sel):
        target = union[sel]
        ok = 1
        sub = (sel - 1) & sel
        while True:
            if union[sub] == target:
                ok = 0
                break
            if sub == 0:
                break
            sub = (sub - 1) & sel
        subcover_ok[sel] = ok

    n_pairs = 0
    disagreements = []
    for fam in range(n_sel):
        full = union[fam]
        sel = fam
        while True:
            if union[sel] == full:
                n_pairs += 1
                if private_ok[sel] != subcover_ok[sel]:
                    disagreements.append((fam, sel))
            if sel == 0:
                break
            sel = (sel - 1) & fam
    return n_sel, n_pairs, disagreements


def minimal_cover_masks(edge_masks: list[int]) -> list[int]:
    """Selection masks over the given (distinct) edges that cover the union
    of all edges and give every selected edge a private vertex.

    Ascending numeric mask order; callers needing (size, lex) order sort
    the result.
    """
    k = len(edge_masks)
    universe = 0
    for m in edge_masks:
        universe |= m
    union = [0] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        union[s] = union[s ^ low] | edge_masks[low.bit_length() - 1]

    out = []
    for sel in range(1 << k):
        if union[sel] != universe:
            continue
        rest = sel
        ok = True
        while rest:
            low = rest & -rest
            rest ^= low
            if edge_masks[low.bit_length() - 1] & ~union[sel ^ low] == 0:
                ok = False
                break
        if ok:
            out.append(sel)
    return out
