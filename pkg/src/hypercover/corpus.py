"""Seeded random hypergraph instances for tests and exploration."""

from __future__ import annotations

import random

from .core import FiniteHypergraph


def random_hypergraph(
    rng: random.Random,
    n_edges: int,
    max_vertex: int = 20,
    max_width: int = 6,
    allow_empty: bool = True,
) -> FiniteHypergraph:
    """A hypergraph with exactly ``n_edges`` edges sampled from the vertex
    pool 0..max_vertex-1; duplicate edges may occur."""
    edges = []
    low = 0 if allow_empty else 1
    for _ in range(n_edges):
        width = rng.randint(low, max_width)
        edges.append(frozenset(rng.sample(range(max_vertex), width)))
    return FiniteHypergraph(edges)


def random_degree_capped_hypergraph(
    rng: random.Random,
    n_edges: int,
    max_degree: int,
    max_vertex: int = 20,
    max_width: int = 6,
) -> FiniteHypergraph:
    """A duplicate-free hypergraph in which every vertex lies in at most
    ``max_degree`` edges; candidate edges breaching the cap are skipped,
    so fewer than ``n_edges`` edges may result."""
    degree = [0] * max_vertex
    seen = set()
    edges = []
    for _ in range(n_edges):
        width = rng.randint(1, max_width)
        e = frozenset(rng.sample(range(max_vertex), width))
        if e in seen or any(degree[v] + 1 > max_degree for v in e):
            continue
        seen.add(e)
        edges.append(e)
        for v in e:
            degree[v] += 1
    return FiniteHypergraph(edges)
