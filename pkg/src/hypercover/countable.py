"""Lazily presented countable hypergraphs and finite-depth evidence tools.

A countable hypergraph is presented as a total, deterministic function
from edge indices to finite edges.  Everything computable here happens on
finite truncations: generators for the canonical families, a backtracking
search for staircase witnesses (finite-depth evidence of the initial
segment pattern that obstructs minimal covers), and an inductive cover
construction whose full bookkeeping is returned for inspection.

The staircase omits the pattern's empty edge: an edge disjoint from the
witness vertices supplies an empty trace, so the empty level carries no
information; witness depth counts nonempty initial segments only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .core import Edge, FiniteHypergraph, restrict, sub_cont_disj, sub_disjoint, subfamily
from .covers import Cover, greedy_minimalize, is_minimal_cover
from .errors import InvariantViolation, SizeLimit

DEFAULT_MAX_LINES_RADIUS = 16


@dataclass(frozen=True)
class GeneratorInfo:
    """Known structural facts about the full (non-truncated) family.

    ``None`` means unknown; ``note`` records where a flag comes from.
    """

    point_finite: bool | None = None
    bounded_width: bool | None = None
    no_minimal_cover: bool | None = None
    note: str = ""


@dataclass(frozen=True)
class LazyHypergraph:
    """A countable edge family presented by index.

    ``edge_at`` must be pure and deterministic (same index, same edge) and
    every edge must be finite.  ``length`` is None for infinite families.
    ``label`` renders vertex ids for files and reports.
    """

    edge_at: Callable[[int], Edge]
    length: int | None = None
    label: Callable[[int], str] | None = None
    info: GeneratorInfo = field(default_factory=GeneratorInfo)


class Truncation(NamedTuple):
    """A finite window onto a lazy family plus the window's lazy indices."""

    hypergraph: FiniteHypergraph
    lazy_indices: tuple[int, ...]


def truncate(lazy: LazyHypergraph, count: int) -> Truncation:
    """Finite hypergraph on the first ``count`` edges (clamped to the
    family length); the index map back to lazy indices is the identity
    range."""
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    n = count if lazy.length is None else min(count, lazy.length)
    edges = [frozenset(lazy.edge_at(i)) for i in range(n)]
    names = None
    if lazy.label is not None:
        names = {v: lazy.label(v) for e in edges for v in e}
    return Truncation(FiniteHypergraph(edges, vertex_names=names), tuple(range(n)))


# -- generators ----------------------------------------------------------


def gen_omega() -> LazyHypergraph:
    """The initial-segment family: edge n is {0, ..., n-1} (edge 0 is empty).

    The canonical countable family without a minimal cover.
    """
    return LazyHypergraph(
        edge_at=lambda n: frozenset(range(n)),
        info=GeneratorInfo(
            point_finite=False,
            bounded_width=False,
            no_minimal_cover=True,
            note="initial segments are a strictly increasing chain",
        ),
    )


def encode_integer(z: int) -> int:
    """Fixed bijection from all integers to vertex ids: 0->0, k->2k, -k->2k-1."""
    return 2 * z if z >= 0 else -2 * z - 1


def decode_integer(v: int) -> int:
    """Inverse of `encode_integer`."""
    return v // 2 if v % 2 == 0 else -(v + 1) // 2


def gen_domotor() -> LazyHypergraph:
    """The incomparable-sets family over the integers: for n >= 2, even
    index 2(n-2) is [-n, 0] union {n} and odd index 2(n-2)+1 is {-n}
    union [0, n], with integers encoded by `encode_integer`.

    Pairwise incomparable edges, yet the full family has no minimal cover.
    """

    def edge_at(i: int) -> Edge:
        n = i // 2 + 2
        if i % 2 == 0:
            span = list(range(-n, 1)) + [n]
        else:
            span = [-n] + list(range(0, n + 1))
        return frozenset(encode_integer(z) for z in span)

    return LazyHypergraph(
        edge_at=edge_at,
        label=lambda v: str(decode_integer(v)),
        info=GeneratorInfo(
            point_finite=False,
            bounded_width=False,
            no_minimal_cover=True,
            note="pairwise incomparable edges covering the integers",
        ),
    )


def _line_through(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int, int]:
    """Normal form (a, b, c) of the line through two distinct lattice
    points: a*x + b*y + c = 0, gcd-reduced, first nonzero of (a, b)
    positive."""
    import math

    (px, py), (qx, qy) = p, q
    a, b = qy - py, px - qx
    c = -(a * px + b * py)
    g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return a, b, c


def gen_lattice_lines(
    radius: int, max_radius: int = DEFAULT_MAX_LINES_RADIUS
) -> LazyHypergraph:
    """Finite surrogate of a cover of the plane by lines: one edge per
    line through at least two points of the integer grid
    [-radius, radius]^2, containing exactly the grid points on that line.

    Grid points get row-major ids; edges are ordered by line normal form.
    Whether the infinite family has a minimal cover is open, so the
    metadata asserts nothing.
    """
    if radius < 1:
        raise ValueError(f"radius must be positive, got {radius}")
    if radius > max_radius:
        raise SizeLimit(f"radius {radius} exceeds limit {max_radius}")

    side = 2 * radius + 1
    points = [(x, y) for y in range(-radius, radius + 1) for x in range(-radius, radius + 1)]

    def point_id(p: tuple[int, int]) -> int:
        return (p[1] + radius) * side + (p[0] + radius)

    lines: dict[tuple[int, int, int], set[int]] = {}
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            lines.setdefault(_line_through(p, q), set()).update(
                (point_id(p), point_id(q))
            )
    edges = [frozenset(lines[key]) for key in sorted(lines)]

    def label(v: int) -> str:
        y, x = divmod(v, side)
        return f"({x - radius},{y - radius})"

    return LazyHypergraph(
        edge_at=edges.__getitem__,
        length=len(edges),
        label=label,
        info=GeneratorInfo(
            note="whether the full family of plane lines admits a minimal cover is open"
        ),
    )


# -- staircase witnesses ---------------------------------------------------


@dataclass(frozen=True)
class OmegaWitness:
    """A depth-k staircase: distinct vertices v_0..v_{k-1} and distinct
    edge indices F_1..F_k whose traces on the vertices are exactly the
    nonempty initial segments ({v_0}, {v_0, v_1}, ...)."""

    omega: tuple[int, ...]
    edge_indices: tuple[int, ...]
    depth: int


def validate_omega_witness(h: FiniteHypergraph, witness: OmegaWitness) -> bool:
    """Re-check the staircase condition directly on edge sets,
    independently of the search that produced the witness."""
    k = witness.depth
    vs, es = witness.omega, witness.edge_indices
    if k < 1 or len(vs) != k or len(es) != k:
        return False
    if len(set(vs)) != k or len(set(es)) != k:
        return False
    if not all(0 <= i < len(h) for i in es):
        return False
    stair = set(vs)
    if not stair <= h.vertices:
        return False
    for i in range(1, k + 1):
        if h.edges[es[i - 1]] & stair != set(vs[:i]):
            return False
    return True


def find_omega_witness(h: FiniteHypergraph, depth: int) -> OmegaWitness | None:
    """Backtracking search for a depth-``depth`` staircase witness.

    The search alternates between picking the next edge (smallest index
    first) and the next vertex (smallest id first), pruning any partial
    assignment that breaks the initial-segment condition, and returns the
    first witness found in that order, or None.  A vertex shared by all
    witness edges must have degree at least ``depth``, so the search is
    skipped when no vertex does.
    """
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth}")
    n = len(h)
    if depth > n:
        return None

    masks = [h.edge_mask(i) for i in range(n)]
    distinct_deg = 0
    for v in h.vertices:
        d = sum(1 for i in h.distinct_indices if v in h.edges[i])
        distinct_deg = max(distinct_deg, d)
    if depth > distinct_deg:
        return None

    edges_chosen: list[int] = []
    verts_chosen: list[int] = []
    used_edges = [False] * n

    def pick_edge(required: int, prior_union: int) -> OmegaWitness | None:
        for e in range(n):
            if used_edges[e] or masks[e] & required != required:
                continue
            used_edges[e] = True
            edges_chosen.append(e)
            found = pick_vertex(required, prior_union, final=len(edges_chosen) == depth)
            if found is not None:
                return found
            edges_chosen.pop()
            used_edges[e] = False
        return None

    def pick_vertex(required: int, prior_union: int, final: bool) -> OmegaWitness | None:
        latest = masks[edges_chosen[-1]]
        candidates = latest & ~prior_union & ~required
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            v = h.first_vertex(low)
            verts_chosen.append(v)
            if final:
                return OmegaWitness(tuple(verts_chosen), tuple(edges_chosen), depth)
            found = pick_edge(required | low, prior_union | latest)
            if found is not None:
                return found
            verts_chosen.pop()
        return None

    return pick_edge(0, 0)


# -- inductive cover construction -----------------------------------------


@dataclass(frozen=True)
class ConstructionStep:
    """One round of the inductive construction, fully inspectable."""

    step: int
    remaining: frozenset[int]
    pivot: int
    blocked: frozenset[int]
    local_hypergraph: FiniteHypergraph
    local_cover: frozenset[int]
    lifted: frozenset[int]


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[ConstructionStep, ...]


def local_construction(h: FiniteHypergraph) -> tuple[Cover, ConstructionTrace]:
    """Build a minimal cover by repeatedly covering around the smallest
    uncovered vertex.

    Each round takes the smallest remaining vertex as pivot, restricts
    the edges that contain the pivot and avoid all previous pivots to the
    region reachable only through current pivots, minimalizes that local
    cover greedily, and lifts the chosen traces to their lowest-index
    preimages.  The recorded trace exposes every intermediate quantity;
    violations of the construction's internal facts raise
    InvariantViolation instead of being papered over.
    """
    remaining = set(h.vertices)
    pivots: list[int] = []
    accumulated: set[int] = set()
    steps: list[ConstructionStep] = []

    while remaining:
        pivot = min(remaining)
        blocked = frozenset(pivots)

        avoiding = sub_disjoint(h, blocked)
        if not remaining <= h.set_of_mask(h.union_mask(avoiding)):
            raise InvariantViolation(
                f"remaining vertices not reachable while avoiding pivots {sorted(blocked)}"
            )

        selectors = sorted(sub_cont_disj(h, {pivot}, blocked))
        shielded = h.set_of_mask(h.union_mask(sub_disjoint(h, blocked | {pivot})))
        region = frozenset(remaining) - shielded

        local_family = subfamily(h, selectors).hypergraph
        local = restrict(local_family, region).hypergraph
        local_cover = greedy_minimalize(Cover(local, frozenset(range(len(local)))))

        preimage: dict = {}
        for i in selectors:  # ascending: lowest preimage wins
            preimage.setdefault(h.edges[i] & region, i)
        lifted = frozenset(preimage[local.edges[j]] for j in local_cover.selected)

        steps.append(
            ConstructionStep(
                step=len(steps),
                remaining=frozenset(remaining),
                pivot=pivot,
                blocked=blocked,
                local_hypergraph=local,
                local_cover=local_cover.selected,
                lifted=lifted,
            )
        )

        newly = h.set_of_mask(h.union_mask(lifted))
        if pivot not in newly:
            raise InvariantViolation(f"round for pivot {pivot} failed to cover it")
        remaining -= newly
        pivots.append(pivot)
        accumulated |= lifted

    result = Cover(h, frozenset(accumulated))
    report = is_minimal_cover(result)
    if not report.minimal:
        raise InvariantViolation(
            f"constructed cover is not minimal (removable edge {report.violating_edge})"
        )
    return result, ConstructionTrace(tuple(steps))
