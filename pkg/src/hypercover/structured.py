"""Structural sufficient conditions for minimal covers, with constructors.

Quantitative checks (`check_nm`, `check_point_finite`, and the
three-valued `check_finite_support`) probe finite instances for the
structural hypotheses under which minimal covers are guaranteed to exist,
and two constructors (`point_finite_cover`, `bounded_width_cover`) build
minimal covers by exploiting those structures.  Maximal subfamilies are
realized as greedy ascending-index scans, which on finite inputs yield
inclusion-maximal families deterministically.

Both constructors verify their own output with the private-vertex test
and raise InvariantViolation rather than return a non-minimal cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import FiniteHypergraph
from .covers import Cover, is_minimal_cover
from .errors import InvariantViolation, SizeLimit

DEFAULT_COMBINATION_BUDGET = 5_000_000

VERDICT_HOLDS = "holds-on-instance"
VERDICT_FAILS = "fails-with-witness"
VERDICT_UNKNOWN = "unknown"


@dataclass(frozen=True)
class NmParams:
    """Subfamily size ``n`` and intersection bound ``m``; both positive."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"parameters must be positive, got n={self.n}, m={self.m}")


@dataclass(frozen=True)
class NmReport:
    holds: bool
    witness_indices: tuple[int, ...] | None = None
    intersection: frozenset[int] | None = None


@dataclass(frozen=True)
class DegreeReport:
    within_bound: bool
    max_degree_vertex: int | None
    max_degree: int


@dataclass(frozen=True)
class SupportReport:
    """Three-valued verdict on the bounded-support condition.

    ``fails-with-witness`` carries a vertex set contained in at least
    ``threshold`` distinct edges (listed in ``edge_indices``); a finite
    instance can never certify the unbounded condition, so the positive
    verdict is only ``holds-on-instance``.
    """

    verdict: str
    support: frozenset[int] | None = None
    edge_indices: tuple[int, ...] | None = None


def _distinct_degree(h: FiniteHypergraph, v: int) -> int:
    return sum(1 for i in h.distinct_indices if v in h.edges[i])


def check_nm(
    h: FiniteHypergraph,
    params: NmParams,
    max_combinations: int = DEFAULT_COMBINATION_BUDGET,
) -> NmReport:
    """Check that every ``n``-element subfamily of distinct edges meets in
    fewer than ``m`` vertices.

    Subfamilies are scanned in lexicographic index order and the first
    violation is reported; prefixes whose running intersection is already
    below ``m`` are skipped, which cannot hide the first violation.
    """
    canon = h.distinct_indices
    k, n, m = len(canon), params.n, params.m
    if n <= k and math.comb(k, n) > max_combinations:
        raise SizeLimit(
            f"C({k},{n}) subfamilies exceed the work budget {max_combinations}"
        )

    found: list[tuple[int, ...]] = []

    def scan(start: int, chosen: list[int], inter: int) -> bool:
        if len(chosen) == n:
            found.append(tuple(chosen))
            return True
        for t in range(start, k):
            nxt = inter & h.edge_mask(canon[t]) if chosen else h.edge_mask(canon[t])
            if nxt.bit_count() < m:
                continue  # intersection only shrinks along this branch
            chosen.append(canon[t])
            if scan(t + 1, chosen, nxt):
                return True
            chosen.pop()
        return False

    if n <= k and scan(0, [], 0):
        witness = found[0]
        inter = h.edge_mask(witness[0])
        for i in witness[1:]:
            inter &= h.edge_mask(i)
        return NmReport(False, witness, h.set_of_mask(inter))
    return NmReport(True)


def check_point_finite(h: FiniteHypergraph, degree_bound: int) -> DegreeReport:
    """Check that every vertex lies in at most ``degree_bound`` distinct
    edges; the maximum-degree vertex is reported either way.

    Finiteness of vertex degrees is vacuous on finite instances; the
    bound gives the check quantitative content.
    """
    best_v: int | None = None
    best_d = 0
    for v in sorted(h.vertices):
        d = _distinct_degree(h, v)
        if d > best_d:
            best_v, best_d = v, d
    return DegreeReport(best_d <= degree_bound, best_v, best_d)


def check_finite_support(h: FiniteHypergraph, threshold: int) -> SupportReport:
    """Look for a vertex set contained in at least ``threshold`` distinct
    edges (evidence against the bounded-support condition).

    Since enlarging the support can only shrink the family of edges
    containing it, a singleton support maximizes that family; the search
    therefore inspects single vertices only.  With fewer than
    ``threshold`` distinct edges in total the check is vacuous and the
    verdict is unknown.
    """
    if threshold < 1:
        raise ValueError(f"threshold must be positive, got {threshold}")
    canon = h.distinct_indices
    if len(canon) < threshold:
        return SupportReport(VERDICT_UNKNOWN)
    for v in sorted(h.vertices):
        containing = tuple(i for i in canon if v in h.edges[i])
        if len(containing) >= threshold:
            return SupportReport(VERDICT_FAILS, frozenset([v]), containing)
    return SupportReport(VERDICT_HOLDS)


def point_finite_cover(h: FiniteHypergraph) -> Cover:
    """Minimal cover via the complement of a greedily maximal subfamily
    that keeps every vertex degree strictly below its total degree.

    Scanning distinct edges ascending, an edge joins the subfamily iff
    afterwards every one of its vertices still lies in fewer subfamily
    edges than total edges; the complement of the subfamily is the cover.
    """
    canon = h.distinct_indices
    total = {v: 0 for v in h.vertices}
    for i in canon:
        for v in h.edges[i]:
            total[v] += 1

    held = {v: 0 for v in h.vertices}
    removed: list[int] = []
    for i in canon:
        if all(held[v] + 1 < total[v] for v in h.edges[i]):
            removed.append(i)
            for v in h.edges[i]:
                held[v] += 1

    result = Cover(h, frozenset(canon) - frozenset(removed))
    report = is_minimal_cover(result)
    if not report.minimal:
        raise InvariantViolation(
            f"complement cover is not minimal (removable edge {report.violating_edge})"
        )
    return result


def maximal_disjoint_subfamily(h: FiniteHypergraph) -> frozenset[int]:
    """Greedy ascending scan collecting pairwise-disjoint nonempty edges;
    the result is inclusion-maximal among such subfamilies."""
    taken_mask = 0
    taken: list[int] = []
    for i in range(len(h)):
        m = h.edge_mask(i)
        if m and not m & taken_mask:
            taken.append(i)
            taken_mask |= m
    return frozenset(taken)


def bounded_width_cover(h: FiniteHypergraph) -> Cover:
    """Minimal cover by induction on the largest edge size.

    Width <= 1 keeps all distinct nonempty edges.  Otherwise the edges of
    a maximal disjoint subfamily are cut out, the strictly narrower
    residual hypergraph is covered recursively, residual edges are lifted
    to their lowest-index preimages, and the disjoint edges not absorbed
    by the lifted family are added back.
    """
    if h.width <= 1:
        selection = frozenset(i for i in h.distinct_indices if h.edges[i])
        result = Cover(h, selection)
    else:
        disjoint = maximal_disjoint_subfamily(h)
        cut = h.union_mask(disjoint)
        cut_set = h.set_of_mask(cut)
        residual = FiniteHypergraph(
            (e - cut_set for e in h.edges), vertex_names=h.vertex_names
        )

        inner = bounded_width_cover(residual)
        preimage: dict = {}
        for i, e in enumerate(h.edges):  # ascending: lowest preimage wins
            preimage.setdefault(e - cut_set, i)
        lifted = {preimage[residual.edges[j]] for j in inner.selected}

        lifted_mask = h.union_mask(lifted)
        kept = {d for d in disjoint if h.edge_mask(d) & ~lifted_mask}
        result = Cover(h, frozenset(lifted | kept))

    report = is_minimal_cover(result)
    if not report.minimal:
        raise InvariantViolation(
            f"width-induction cover is not minimal (removable edge {report.violating_edge})"
        )
    return result
