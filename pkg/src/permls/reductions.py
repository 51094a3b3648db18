"""Instance generators for the hardness reductions: Clique to Hall Set (plain
and on 2-subdivided graphs), Hall Set to strict local search, and the
cover-size shift under double subdivision.

Id layout is fixed so outputs are reproducible byte for byte:

* ``clique_to_hallset``: original vertices keep ids ``0..n-1``, the edge
  vertex of the i-th edge (lexicographic order) is ``n + i``, and the
  padding vertices are ``n + m + j``.
* ``clique_to_hallset_2subdivided``: the above, then ``subdivide_twice``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import AbstractSet

from .graph_core import BipartiteGraph, Graph, neighborhood, subdivide_twice, two_subdivision_origin
from .strict_ls import CoverInstance, HallInstance


@dataclass(frozen=True)
class CliqueInstance:
    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.graph.n:
            raise ValueError(f"k must lie in 1..n, got k={self.k}, n={self.graph.n}")


@dataclass(frozen=True)
class HallReduction:
    """A reduced Hall Set instance plus the bookkeeping needed to read it.

    ``centers`` are the edge vertices (the a-side of the plain reduction);
    ``padding`` is the vertex set every edge vertex is joined to.
    """

    instance: HallInstance
    t: int
    centers: frozenset[int]
    padding: frozenset[int]
    source_n: int
    edge_vertex: dict[tuple[int, int], int]
    subdivided: bool = False

    def clique_witness(self, clique: AbstractSet[int]) -> frozenset[int]:
        """The Hall set built from a k-clique: its edge vertices, and in the
        2-subdivided variant also their distance-2 neighbours."""
        members = sorted(clique)
        centers = frozenset(self.edge_vertex[(u, v)] for i, u in enumerate(members) for v in members[i + 1:])
        if not self.subdivided:
            return centers
        return centers | neighborhood(self.instance.bg.graph, centers, 2)


def padding_size(k: int) -> int:
    """Number of padding vertices, ``C(k,2) - k - 1``."""
    return comb(k, 2) - k - 1


def _gate(k: int) -> None:
    if k < 4:
        raise ValueError(
            f"clique reductions need k >= 4 (padding size C(k,2)-k-1 = {padding_size(k)} "
            "is negative for k = 3 and Clique is polynomial for k <= 2)"
        )


def _hall_graph(ci: CliqueInstance) -> tuple[Graph, frozenset[int], frozenset[int], dict, int]:
    g, k = ci.graph, ci.k
    t = padding_size(k)
    n, m = g.n, g.m
    edges = []
    edge_vertex = {}
    for i, (u, v) in enumerate(g.edges()):
        ve = n + i
        edge_vertex[(u, v)] = ve
        edges += [(u, ve), (v, ve)]
        edges += [(ve, n + m + j) for j in range(t)]
    h = Graph(n + m + t, edges)
    centers = frozenset(range(n, n + m))
    padding = frozenset(range(n + m, n + m + t))
    return h, centers, padding, edge_vertex, t


def clique_to_hallset(ci: CliqueInstance) -> HallReduction:
    """Subdivide every edge once, join each edge vertex to ``t`` padding
    vertices, and ask for a Hall set of size at most ``C(k,2)``."""
    _gate(ci.k)
    h, centers, padding, edge_vertex, t = _hall_graph(ci)
    bg = BipartiteGraph(h, centers, frozenset(range(h.n)) - centers)
    return HallReduction(HallInstance(bg, comb(ci.k, 2)), t, centers, padding, ci.graph.n, edge_vertex)


def clique_to_hallset_2subdivided(ci: CliqueInstance) -> HallReduction:
    """The plain reduction, doubly subdivided, with bound ``(3+t) C(k,2)``.

    The new a-side contains the edge vertices and, on every subdivided
    path, the inner vertex next to the b-side endpoint.
    """
    _gate(ci.k)
    h, centers, padding, edge_vertex, t = _hall_graph(ci)
    g2 = subdivide_twice(h)
    a_side = set(centers)
    for i, (x, y) in enumerate(h.edges()):
        z_near_x, z_near_y = h.n + 2 * i, h.n + 2 * i + 1
        a_side.add(z_near_y if x in centers else z_near_x)
    a = frozenset(a_side)
    bg = BipartiteGraph(g2, a, frozenset(range(g2.n)) - a)
    k_new = (3 + t) * comb(ci.k, 2)
    return HallReduction(HallInstance(bg, k_new), t, centers, padding, ci.graph.n, edge_vertex,
                         subdivided=True)


def minimize_rule(
    bg: BipartiteGraph, s: AbstractSet[int], centers: AbstractSet[int] | None = None
) -> frozenset[int]:
    """Close ``s`` over the blocks ``{v} | N^2(v)``, ``v`` in ``centers``.

    Any block that ``s`` meets only partially is removed entirely; centers
    are scanned in ascending order and the scan restarts after every
    removal. A Hall set stays a Hall set under each removal.

    ``centers`` defaults to the a-side vertices that are branch vertices
    of the 2-subdivided graph.
    """
    g = bg.graph
    if centers is None:
        origin = two_subdivision_origin(g)
        if origin is None:
            raise ValueError("graph is not 2-subdivided; pass centers explicitly")
        centers = origin[0] & bg.a
    blocks = {v: frozenset({v}) | neighborhood(g, {v}, 2) for v in sorted(centers)}
    current = set(s)
    changed = True
    while changed:
        changed = False
        for v, block in blocks.items():
            met = len(block & current)
            if 0 < met < len(block):
                current -= block
                changed = True
                break
    return frozenset(current)


def hallset_to_lsvc(hi: HallInstance) -> CoverInstance:
    """Vertex cover ``A`` with exchange radius ``2k - 1``."""
    return CoverInstance(hi.bg.graph, hi.bg.a, 2 * hi.k - 1)


def vc_subdivision_shift(g: Graph) -> tuple[Graph, int]:
    """The double subdivision of ``g`` and the amount ``m`` by which its
    minimum vertex cover exceeds that of ``g``."""
    return subdivide_twice(g), g.m
