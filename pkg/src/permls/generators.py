"""Random instances: G(n, p) graphs, matching-based covers and doubly
subdivided graphs."""
from __future__ import annotations

import random
from itertools import combinations

from .graph_core import Graph, subdivide_twice


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graph_m(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform graph with exactly ``m`` edges."""
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise ValueError(f"a simple graph on {n} vertices has at most {len(pairs)} edges")
    return Graph(n, rng.sample(pairs, m))


def maximal_matching_cover(g: Graph, rng: random.Random) -> frozenset[int]:
    """Both endpoints of a random maximal matching (a 2-approximate cover)."""
    edges = list(g.edges())
    rng.shuffle(edges)
    cover: set[int] = set()
    for u, v in edges:
        if u not in cover and v not in cover:
            cover.update((u, v))
    return frozenset(cover)


def random_two_subdivided(n: int, m: int, rng: random.Random) -> tuple[Graph, Graph]:
    """A random ``n``-vertex, ``m``-edge graph and its double subdivision."""
    base = random_graph_m(n, m, rng)
    return base, subdivide_twice(base)


def subdivision_cover(base: Graph, rng: random.Random) -> frozenset[int]:
    """Cover of ``subdivide_twice(base)``: every original vertex plus one
    random inner vertex per subdivided edge."""
    cover = set(range(base.n))
    for i in range(base.m):
        cover.add(base.n + 2 * i + rng.randrange(2))
    return frozenset(cover)
