"""The hypergraph file format: one edge per line.

Each non-comment, non-blank line is one edge given as whitespace-separated
vertex tokens; ``#`` starts a comment.  A line consisting of the single
keyword ``empty`` denotes the empty edge (a blank line is ignored, never
an empty edge, so stray whitespace cannot change the family).  Tokens are
arbitrary labels; they map to dense vertex ids in first-appearance order
and the mapping is recorded as comments when serializing.
"""

from __future__ import annotations

from .core import FiniteHypergraph
from .errors import ParseError

EMPTY_EDGE_KEYWORD = "empty"


def parse_hypergraph(text: str) -> FiniteHypergraph:
    """Parse the edge-list format into a hypergraph with dense vertex ids."""
    ids: dict[str, int] = {}
    edges: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens == [EMPTY_EDGE_KEYWORD]:
            edges.append(frozenset())
            continue
        if EMPTY_EDGE_KEYWORD in tokens:
            raise ParseError(
                f"line {lineno}: {EMPTY_EDGE_KEYWORD!r} is reserved for the empty edge"
            )
        edges.append(frozenset(ids.setdefault(t, len(ids)) for t in tokens))
    names = {i: label for label, i in ids.items()}
    return FiniteHypergraph(edges, vertex_names=names)


def serialize_hypergraph(h: FiniteHypergraph, header: str | None = None) -> str:
    """Render a hypergraph in the edge-list format, labels in id order,
    with the id-to-label mapping in leading comments."""
    labels = {v: h.label(v) for v in h.vertices}
    for v, s in labels.items():
        if not s or s.split() != [s] or "#" in s or s == EMPTY_EDGE_KEYWORD:
            raise ValueError(f"label {s!r} of vertex {v} cannot be serialized")
    if len(set(labels.values())) != len(labels):
        raise ValueError("vertex labels are not distinct")

    lines = []
    if header:
        lines.append(f"# {header}")
    for v in sorted(h.vertices):
        lines.append(f"# vertex {v} = {labels[v]}")
    for e in h.edges:
        if e:
            lines.append(" ".join(labels[v] for v in sorted(e)))
        else:
            lines.append(EMPTY_EDGE_KEYWORD)
    return "\n".join(lines) + "\n"
