"""Cover verification, minimality tests, and minimal-cover extraction.

Two independent minimality tests are provided: the private-vertex test
(`is_minimal_cover`) and the subset-enumeration definition
(`is_minimal_cover_def`).  They are provably equivalent; keeping both
routes separate lets the test suite machine-check that equivalence, so
neither may be implemented in terms of the other.

All minimality semantics treat the selected edges as a set of sets:
duplicate edges inside a selection collapse to their lowest selected
index before any test runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _kernel
from .core import FiniteHypergraph, restrict
from .errors import InvariantViolation, NotACover, SizeLimit

DEFAULT_SUBSET_LIMIT = 20


@dataclass(frozen=True)
class Cover:
    """A selection of edge indices of a host hypergraph.

    Whether the selection actually covers the vertex set is a checkable
    property (`is_cover`), not a construction-time guarantee.
    """

    host: FiniteHypergraph
    selected: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "selected", frozenset(self.selected))
        for i in self.selected:
            self.host.check_index(i)


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of the private-vertex minimality test.

    When minimal, ``private_vertex`` maps every (collapsed) selected edge
    index to a vertex lying in that edge and in no other selected edge.
    When not minimal, removing ``violating_edge`` still leaves a cover.
    """

    minimal: bool
    private_vertex: dict[int, int] = field(default_factory=dict)
    violating_edge: int | None = None


@dataclass(frozen=True)
class SweepResult:
    """Tally of the exhaustive minimality-equivalence sweep."""

    universe_size: int
    backend: str
    families: int
    cover_pairs: int
    disagreements: tuple[tuple[int, int], ...]


def _collapsed(cover: Cover) -> list[int]:
    """Selected indices with duplicate edges collapsed to the lowest
    selected index, ascending."""
    h = cover.host
    first: dict = {}
    for i in sorted(cover.selected):
        first.setdefault(h.edges[i], i)
    return sorted(first.values())


def _require_cover(cover: Cover) -> None:
    h = cover.host
    missing = h.full_mask() & ~h.union_mask(cover.selected)
    if missing:
        raise NotACover(f"selection misses vertices {sorted(h.set_of_mask(missing))}")


def is_cover(cover: Cover) -> bool:
    """True iff the union of the selected edges equals the host vertex set."""
    h = cover.host
    return h.union_mask(cover.selected) == h.full_mask()


def is_minimal_cover(cover: Cover) -> MinimalityReport:
    """Private-vertex minimality test.

    Raises NotACover when the selection is not a cover.  A collapsed
    selection is minimal iff every selected edge keeps a vertex shared
    with no other selected edge; otherwise the lowest witnessing index is
    reported as removable.
    """
    _require_cover(cover)
    h = cover.host
    canon = _collapsed(cover)

    seen_once = 0
    seen_multi = 0
    for i in canon:
        m = h.edge_mask(i)
        seen_multi |= seen_once & m
        seen_once |= m

    witnesses: dict[int, int] = {}
    for i in canon:
        priv = h.edge_mask(i) & ~seen_multi
        if not priv:
            return MinimalityReport(minimal=False, violating_edge=i)
        witnesses[i] = h.first_vertex(priv)
    return MinimalityReport(minimal=True, private_vertex=witnesses)


def is_minimal_cover_def(
    cover: Cover, max_edges: int = DEFAULT_SUBSET_LIMIT
) -> bool:
    """Definitional minimality test: no proper subselection is a cover.

    Enumerates every proper subset of the collapsed selection, smallest
    first, and is therefore limited to ``max_edges`` selected edges.
    Deliberately brute force: this is the oracle the private-vertex test
    is checked against.
    """
    _require_cover(cover)
    h = cover.host
    canon = _collapsed(cover)
    if len(canon) > max_edges:
        raise SizeLimit(f"{len(canon)} distinct selected edges exceed limit {max_edges}")
    full = h.full_mask()
    for size in range(len(canon)):
        for combo in itertools.combinations(canon, size):
            if h.union_mask(combo) == full:
                return False
    return True


def greedy_minimalize(cover: Cover) -> Cover:
    """Shrink a cover to a minimal one by a single ascending-index scan.

    Each selected index is dropped iff the remaining selection still
    covers; the scan order makes the result deterministic.  The result is
    a subset of the input selection and passes `is_minimal_cover`.
    """
    h = cover.host
    sel = sorted(cover.selected)
    full = h.full_mask()

    suffix = [0] * (len(sel) + 1)
    for t in range(len(sel) - 1, -1, -1):
        suffix[t] = suffix[t + 1] | h.edge_mask(sel[t])
    if suffix[0] != full:
        missing = h.set_of_mask(full & ~suffix[0])
        raise NotACover(f"selection misses vertices {sorted(missing)}")

    kept: list[int] = []
    kept_mask = 0
    for t, i in enumerate(sel):
        if kept_mask | suffix[t + 1] == full:
            continue  # still a cover without edge i
        kept.append(i)
        kept_mask |= h.edge_mask(i)
    return Cover(h, frozenset(kept))


def enumerate_minimal_covers(
    h: FiniteHypergraph, max_edges: int = DEFAULT_SUBSET_LIMIT
) -> Iterator[Cover]:
    """All minimal covers of ``h``, over deduplicated edge indices.

    Emitted by selection size, then lexicographically by index tuple.
    Minimality is decided by the private-vertex criterion (bitset kernel),
    independently of `is_minimal_cover_def`, so the two can be
    cross-checked.
    """
    canon = h.distinct_indices
    if len(canon) > max_edges:
        raise SizeLimit(f"{len(canon)} distinct edges exceed limit {max_edges}")
    edge_masks = [h.edge_mask(i) for i in canon]
    sel_masks = _kernel.minimal_cover_masks(edge_masks, len(h.vertices))

    def indices_of(mask: int) -> tuple[int, ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(canon[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    combos = sorted(indices_of(m) for m in sel_masks)
    combos.sort(key=len)
    for combo in combos:
        yield Cover(h, frozenset(combo))


def delete_and_lift(h: FiniteHypergraph, f: int) -> Cover:
    """Build a minimal cover of ``h`` from a minimal cover of the trace
    hypergraph on the complement of edge ``f``.

    The trace cover is minimalized greedily, each trace is lifted to its
    lowest-index preimage edge, and ``f`` itself is added only when the
    lifted family leaves some of ``f`` uncovered.  (For a full edge family
    the covering precondition holds by construction, since the vertex set
    is the union of the edges.)
    """
    h.check_index(f)
    keep = h.vertices - h.edges[f]
    traced = restrict(h, keep).hypergraph
    local = greedy_minimalize(Cover(traced, frozenset(range(len(traced)))))

    trace_preimage: dict = {}
    for i, e in enumerate(h.edges):  # ascending: first hit is the lowest preimage
        trace_preimage.setdefault(e & keep, i)
    lifted = {trace_preimage[traced.edges[j]] for j in local.selected}

    if h.union_mask(lifted) != h.full_mask():
        lifted.add(f)
    result = Cover(h, frozenset(lifted))
    report = is_minimal_cover(result)
    if not report.minimal:
        raise InvariantViolation(
            f"lifted cover is not minimal (removable edge {report.violating_edge})"
        )
    return result


def minimality_equivalence_sweep(universe_size: int = 4) -> SweepResult:
    """Exhaustively compare the two minimality tests over every family of
    distinct nonempty subsets of a small universe and every cover of each
    family.  An empty ``disagreements`` tuple confirms the private-vertex
    characterization on that universe.
    """
    if not 1 <= universe_size <= _kernel.MAX_SWEEP_UNIVERSE:
        raise SizeLimit(
            f"sweep universe size limited to {_kernel.MAX_SWEEP_UNIVERSE}"
        )
    families, pairs, disagreements = _kernel.minimality_agreement_sweep(universe_size)
    return SweepResult(
        universe_size=universe_size,
        backend=_kernel.backend_name(),
        families=families,
        cover_pairs=pairs,
        disagreements=tuple(disagreements),
    )
