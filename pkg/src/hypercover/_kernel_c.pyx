# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; mirrors hypercover._kernel_py."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

MAX_SWEEP_UNIVERSE = 4

# compiled limits; the dispatcher falls back to the pure kernel beyond them
MAX_MASK_EDGES = 22
MAX_MASK_VERTICES = 64


cdef inline int _bit_index(unsigned long long x):
    # x is a power of two
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


def minimality_agreement_sweep(int universe_size):
    """See hypercover._kernel_py.minimality_agreement_sweep."""
    if universe_size < 1 or universe_size > MAX_SWEEP_UNIVERSE:
        raise ValueError(
            f"sweep universe size must be in 1..{MAX_SWEEP_UNIVERSE}, got {universe_size}"
        )
    cdef int n_edges = (1 << universe_size) - 1
    cdef long n_sel = (<long> 1) << n_edges
    cdef int *union_of = <int *> malloc(n_sel * sizeof(int))
    cdef unsigned char *private_ok = <unsigned char *> malloc(n_sel)
    cdef unsigned char *subcover_ok = <unsigned char *> malloc(n_sel)
    if union_of is NULL or private_ok is NULL or subcover_ok is NULL:
        free(union_of); free(private_ok); free(subcover_ok)
        raise MemoryError()

    cdef long sel, fam, sub, rest, low
    cdef int edge_mask, target, full
    cdef unsigned char ok
    cdef long n_pairs = 0
    disagreements = []

    try:
        union_of[0] = 0
        for sel in range(1, n_sel):
            low = sel & (-sel)
            edge_mask = _bit_index(low) + 1  # edge at bit i covers vertex mask i+1
            union_of[sel] = union_of[sel ^ low] | edge_mask

        private_ok[0] = 1
        for sel in range(1, n_sel):
            rest = sel
            ok = 1
            while rest:
                low = rest & (-rest)
                rest ^= low
                edge_mask = _bit_index(low) + 1
                if (edge_mask & ~union_of[sel ^ low]) == 0:
                    ok = 0
                    break
            private_ok[sel] = ok

        subcover_ok[0] = 1
        for sel in range(1, n_sel):
            target = union_of[sel]
            ok = 1
            sub = (sel - 1) & sel
            while True:
                if union_of[sub] == target:
                    ok = 0
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & sel
            subcover_ok[sel] = ok

        for fam in range(n_sel):
            full = union_of[fam]
            sel = fam
            while True:
                if union_of[sel] == full:
                    n_pairs += 1
                    if private_ok[sel] != subcover_ok[sel]:
                        disagreements.append((fam, sel))
                if sel == 0:
                    break
                sel = (sel - 1) & fam
        return n_sel, n_pairs, disagreements
    finally:
        free(union_of)
        free(private_ok)
        free(subcover_ok)


def minimal_cover_masks(edge_masks):
    """See hypercover._kernel_py.minimal_cover_masks.

    Compiled path: at most MAX_MASK_EDGES edges over MAX_MASK_VERTICES
    vertex bits; the dispatcher enforces both.
    """
    cdef int k = len(edge_masks)
    if k > MAX_MASK_EDGES:
        raise ValueError(f"compiled kernel limited to {MAX_MASK_EDGES} edges")
    cdef unsigned long long masks[64]
    cdef unsigned long long universe = 0
    cdef int i
    for i in range(k):
        masks[i] = edge_masks[i]
        universe |= masks[i]

    cdef long n_sel = (<long> 1) << k
    cdef unsigned long long *union_of = <unsigned long long *> malloc(
        n_sel * sizeof(unsigned long long)
    )
    if union_of is NULL:
        raise MemoryError()

    cdef long sel, rest, low
    cdef bint ok
    out = []
    try:
        union_of[0] = 0
        for sel in range(1, n_sel):
            low = sel & (-sel)
            union_of[sel] = union_of[sel ^ low] | masks[_bit_index(low)]
        for sel in range(n_sel):
            if union_of[sel] != universe:
                continue
            rest = sel
            ok = True
            while rest:
                low = rest & (-rest)
                rest ^= low
                if (masks[_bit_index(low)] & ~union_of[sel ^ low]) == 0:
                    ok = False
                    break
            if ok:
                out.append(sel)
        return out
    finally:
        free(union_of)
