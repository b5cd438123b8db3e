"""Finite hypergraphs over integer vertices.

A hypergraph here is an ordered family of finite edges; its vertex set is
the union of the edges, so there are no free vertices.  Edges are stored
in the given order (duplicates permitted) because several algorithms use
the index order for deterministic tie-breaking; all set-level semantics
collapse duplicate edges to their lowest index.

Vertices are non-negative integers.  Each hypergraph keeps an internal
bit-position table so that edge and vertex-set operations run on Python
integer bitmasks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import SizeLimit

Edge = frozenset  # frozenset[int]

DEFAULT_ISO_VERTEX_LIMIT = 10


class FiniteHypergraph:
    """An ordered family of finite edges over non-negative integer vertices."""

    __slots__ = (
        "_edges",
        "_names",
        "_vertices",
        "_order",
        "_pos",
        "_masks",
        "_dup_of",
        "_distinct",
    )

    def __init__(
        self,
        edges: Iterable[Iterable[int]] = (),
        vertex_names: Mapping[int, str] | None = None,
    ):
        normd = []
        for e in edges:
            fs = frozenset(e)
            for v in fs:
                if not isinstance(v, int) or v < 0:
                    raise ValueError(f"vertex must be a non-negative integer, got {v!r}")
            normd.append(fs)
        self._edges: tuple[Edge, ...] = tuple(normd)

        vertices = frozenset().union(*self._edges) if self._edges else frozenset()
        self._vertices: frozenset[int] = vertices
        self._order: tuple[int, ...] = tuple(sorted(vertices))
        self._pos: dict[int, int] = {v: i for i, v in enumerate(self._order)}
        pos = self._pos
        self._masks: tuple[int, ...] = tuple(
            sum(1 << pos[v] for v in e) for e in self._edges
        )

        # collapse duplicate edges to their lowest index
        first_seen: dict[Edge, int] = {}
        dup = []
        for i, e in enumerate(self._edges):
            dup.append(first_seen.setdefault(e, i))
        self._dup_of: tuple[int, ...] = tuple(dup)
        self._distinct: tuple[int, ...] = tuple(sorted(first_seen.values()))

        if vertex_names is not None:
            self._names: dict[int, str] | None = {
                int(v): str(s) for v, s in vertex_names.items() if int(v) in vertices
            }
        else:
            self._names = None

    # -- basic accessors ------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def vertex_names(self) -> dict[int, str] | None:
        return dict(self._names) if self._names is not None else None

    @property
    def distinct_indices(self) -> tuple[int, ...]:
        """Lowest index of every distinct edge, ascending."""
        return self._distinct

    @property
    def width(self) -> int:
        """Largest edge cardinality (0 for an empty family)."""
        return max((len(e) for e in self._edges), default=0)

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteHypergraph):
            return NotImplemented
        return self._edges == other._edges and self._names == other._names

    __hash__ = None  # value equality without value hashing

    def __repr__(self) -> str:
        shown = ", ".join(repr(set(e) or {}) for e in self._edges[:6])
        more = ", ..." if len(self._edges) > 6 else ""
        return f"FiniteHypergraph([{shown}{more}])"

    def label(self, v: int) -> str:
        """External label of a vertex (falls back to its id)."""
        if self._names is not None and v in self._names:
            return self._names[v]
        return str(v)

    def duplicate_of(self, i: int) -> int:
        """Lowest index carrying an edge equal to edge ``i``."""
        return self._dup_of[i]

    # -- bitmask plumbing -------------------------------------------------

    def edge_mask(self, i: int) -> int:
        return self._masks[i]

    def vertex_mask(self, vs: Iterable[int]) -> int:
        """Bitmask of the given vertices; ids outside the vertex set are dropped."""
        pos = self._pos
        m = 0
        for v in vs:
            p = pos.get(v)
            if p is not None:
                m |= 1 << p
        return m

    def union_mask(self, indices: Iterable[int]) -> int:
        masks = self._masks
        m = 0
        for i in indices:
            m |= masks[i]
        return m

    def full_mask(self) -> int:
        return (1 << len(self._order)) - 1

    def set_of_mask(self, mask: int) -> frozenset[int]:
        order = self._order
        out = []
        while mask:
            low = mask & -mask
            out.append(order[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    def first_vertex(self, mask: int) -> int:
        """Smallest vertex id present in a nonzero mask."""
        low = mask & -mask
        return self._order[low.bit_length() - 1]

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < len(self._edges):
            raise IndexError(f"edge index {i!r} out of range for {len(self._edges)} edges")


class Restriction(NamedTuple):
    """A trace hypergraph plus the map from its edges back to source indices."""

    hypergraph: FiniteHypergraph
    source_indices: tuple[int, ...]


class Subfamily(NamedTuple):
    """A hypergraph built from selected edges plus their source indices."""

    hypergraph: FiniteHypergraph
    source_indices: tuple[int, ...]


class IsomorphismResult(NamedTuple):
    isomorphic: bool
    mapping: dict[int, int] | None


def vertex_set(h: FiniteHypergraph) -> frozenset[int]:
    """Union of all edges; empty iff every edge is empty or there are none."""
    return h.vertices


def restrict(h: FiniteHypergraph, keep: Iterable[int]) -> Restriction:
    """Trace hypergraph: edge i of the result is edge i of ``h`` intersected
    with ``keep``.  Order and count are preserved, so the provenance map is
    the identity on indices; it is returned for uniformity with other
    derived hypergraphs.
    """
    keep = frozenset(keep)
    names = h.vertex_names
    traced = FiniteHypergraph((e & keep for e in h.edges), vertex_names=names)
    return Restriction(traced, tuple(range(len(h))))


def subfamily(h: FiniteHypergraph, indices: Iterable[int]) -> Subfamily:
    """Hypergraph on the selected edges, in ascending index order."""
    idx = tuple(sorted(set(indices)))
    for i in idx:
        h.check_index(i)
    sub = FiniteHypergraph((h.edges[i] for i in idx), vertex_names=h.vertex_names)
    return Subfamily(sub, idx)


def sub_containing(h: FiniteHypergraph, required: Iterable[int]) -> frozenset[int]:
    """Indices of edges containing every vertex of ``required``."""
    req = frozenset(required)
    if not req <= h.vertices:
        return frozenset()  # a vertex outside the union lies in no edge
    m = h.vertex_mask(req)
    return frozenset(i for i in range(len(h)) if h.edge_mask(i) & m == m)


def sub_disjoint(h: FiniteHypergraph, avoid: Iterable[int]) -> frozenset[int]:
    """Indices of edges disjoint from ``avoid``."""
    m = h.vertex_mask(avoid)
    return frozenset(i for i in range(len(h)) if not h.edge_mask(i) & m)


def sub_cont_disj(
    h: FiniteHypergraph, required: Iterable[int], avoid: Iterable[int]
) -> frozenset[int]:
    """Indices of edges containing all of ``required`` and none of ``avoid``."""
    return sub_containing(h, required) & sub_disjoint(h, avoid)


def maximal_edges(h: FiniteHypergraph) -> frozenset[int]:
    """Indices of edges not strictly contained in any other edge.

    Every copy of a duplicated maximal edge is reported.
    """
    masks = h._masks
    out = []
    for i, mi in enumerate(masks):
        if not any(mi != mj and mi & mj == mi for mj in masks):
            out.append(i)
    return frozenset(out)


def _distinct_edge_sets(h: FiniteHypergraph) -> frozenset[Edge]:
    return frozenset(h.edges[i] for i in h.distinct_indices)


def _vertex_signature(v: int, family: frozenset[Edge]) -> tuple:
    sizes = sorted(len(e) for e in family if v in e)
    return (len(sizes), tuple(sizes))


def is_isomorphic(
    h1: FiniteHypergraph,
    h2: FiniteHypergraph,
    max_vertices: int = DEFAULT_ISO_VERTEX_LIMIT,
) -> IsomorphismResult:
    """Decide whether some vertex bijection carries the edge family of ``h1``
    onto that of ``h2`` (families compared as sets of sets).

    Backtracking over vertex assignments with degree-signature and
    codegree pruning; intended for small instances, so inputs with more
    than ``max_vertices`` vertices are rejected with SizeLimit.
    """
    v1, v2 = sorted(h1.vertices), sorted(h2.vertices)
    if len(v1) > max_vertices or len(v2) > max_vertices:
        raise SizeLimit(
            f"isomorphism search limited to {max_vertices} vertices "
            f"(got {len(v1)} and {len(v2)})"
        )
    fam1, fam2 = _distinct_edge_sets(h1), _distinct_edge_sets(h2)
    if len(v1) != len(v2) or len(fam1) != len(fam2):
        return IsomorphismResult(False, None)
    if sorted(map(len, fam1)) != sorted(map(len, fam2)):
        return IsomorphismResult(False, None)

    sig1 = {v: _vertex_signature(v, fam1) for v in v1}
    sig2 = {v: _vertex_signature(v, fam2) for v in v2}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return IsomorphismResult(False, None)

    def codegree(u, v, family):
        return sum(1 for e in family if u in e and v in e)

    candidates = {u: [w for w in v2 if sig2[w] == sig1[u]] for u in v1}
    order = sorted(v1, key=lambda u: len(candidates[u]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            image = frozenset(frozenset(mapping[v] for v in e) for e in fam1)
            return image == fam2
        u = order[k]
        for w in candidates[u]:
            if w in used:
                continue
            if any(codegree(u, p, fam1) != codegree(w, q, fam2) for p, q in mapping.items()):
                continue
            mapping[u] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[u]
            used.discard(w)
        return False

    if extend(0):
        return IsomorphismResult(True, dict(mapping))
    return IsomorphismResult(False, None)
