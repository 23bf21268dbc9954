"""Instance construction: extremal families and seeded random corpora.

Every generator is a deterministic function of its arguments; random ones take
an explicit seed so test corpora replay identically.
"""

from __future__ import annotations

import random

from .graph import Graph, VertexSet


def complete_instance(n: int) -> tuple[Graph, VertexSet]:
    """K_n with every vertex a terminal."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges), frozenset(range(n))


def subdivided_complete_instance(k: int, r: int) -> tuple[Graph, VertexSet]:
    """K_{2k-1} with each edge replaced by a path of length 3r; terminals are the branch vertices.

    Branch vertices get ids 0..2k-2; the 3r-1 interior vertices of each
    subdivided edge follow in edge-lexicographic order, oriented from the
    lower branch endpoint to the higher.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    b = 2 * k - 1
    edges = []
    next_id = b
    for u in range(b):
        for v in range(u + 1, b):
            prev = u
            for _ in range(3 * r - 1):
                edges.append((prev, next_id))
                prev = next_id
                next_id += 1
            edges.append((prev, v))
    return Graph(next_id, edges), frozenset(range(b))


def random_instance(
    n: int, edge_prob: float, a_prob: float, seed: int
) -> tuple[Graph, VertexSet]:
    """Erdos-Renyi style graph with Bernoulli terminal membership."""
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    a = frozenset(v for v in range(n) if rng.random() < a_prob)
    return Graph(n, edges), a


def random_subcubic_tree(n: int, seed: int) -> tuple[list[tuple[int, int]], VertexSet]:
    """Random tree with maximum degree 3, as (edge list, degree-1 vertices).

    Vertex i >= 1 attaches to a uniformly chosen earlier vertex of current
    degree at most 2, so the degree cap is never exceeded.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    degree = [0] * n
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        candidates = [u for u in range(v) if degree[u] <= 2]
        u = rng.choice(candidates)
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
    leaves = frozenset(v for v in range(n) if degree[v] == 1)
    return edges, leaves
