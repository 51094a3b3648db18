"""Undirected simple graphs over dense integer ids, plus the structural
queries the local-search engines need: neighborhoods, degeneracy,
beta-separability certificates and double subdivision.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Iterator


class NotSeparable(ValueError):
    """Raised when a graph has no partition certifying beta-separability."""

    def __init__(self, beta: int, vertex: int, inner_degree: int):
        self.beta = beta
        self.vertex = vertex
        self.inner_degree = inner_degree
        super().__init__(
            f"graph is not {beta}-separable: vertex {vertex} has degree > {beta} "
            f"and {inner_degree} neighbours among the high-degree vertices"
        )


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Duplicate edges in the input are merged; self-loops and out-of-range
    endpoints raise ``ValueError``.
    """

    __slots__ = ("n", "_adj", "_nbr", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._nbr = tuple(frozenset(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SeparabilityCertificate:
    """A partition ``(v1, v2)`` witnessing that a graph is beta-separable."""

    beta: int
    v1: frozenset[int]
    v2: frozenset[int]

    def violations(self, g: Graph) -> list[str]:
        """Human-readable list of broken conditions; empty when valid."""
        problems = []
        if self.v1 & self.v2 or len(self.v1 | self.v2) != g.n:
            problems.append("v1 and v2 do not partition the vertex set")
        for v in sorted(self.v1):
            inner = len(g.neighbor_set(v) & self.v1)
            if inner > self.beta:
                problems.append(f"vertex {v} in v1 has {inner} > {self.beta} neighbours in v1")
        for w in sorted(self.v2):
            if g.degree(w) > self.beta:
                problems.append(f"vertex {w} in v2 has degree {g.degree(w)} > {self.beta}")
        return problems

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a bipartition ``(a, b)`` of its vertices."""

    graph: Graph
    a: frozenset[int]
    b: frozenset[int]

    def __post_init__(self) -> None:
        if self.a & self.b or len(self.a | self.b) != self.graph.n:
            raise ValueError("a and b must partition the vertex set")
        for u, v in self.graph.edges():
            if (u in self.a) == (v in self.a):
                raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")

    @classmethod
    def from_sides(
        cls, n_a: int, n_b: int, edges: Iterable[tuple[int, int]]
    ) -> BipartiteGraph:
        """Build from edges ``(i, j)`` with ``i < n_a`` indexing side a and
        ``j < n_b`` indexing side b; b-vertices get ids ``n_a + j``."""
        g = Graph(n_a + n_b, ((i, n_a + j) for i, j in edges))
        return cls(g, frozenset(range(n_a)), frozenset(range(n_a, n_a + n_b)))

    def side(self, name: str) -> frozenset[int]:
        if name == "a":
            return self.a
        if name == "b":
            return self.b
        raise ValueError(f"unknown side {name!r}; expected 'a' or 'b'")

    def neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for v in w:
            out.update(self.graph.neighbor_set(v))
        return frozenset(out)


def set_distance(s1: AbstractSet[int], s2: AbstractSet[int]) -> int:
    """Size of the symmetric difference of two vertex sets."""
    return len(s1 | s2) - len(s1 & s2)


def neighborhood(g: Graph, s: Iterable[int], d: int = 1, closed: bool = False) -> frozenset[int]:
    """Vertices at distance exactly ``d`` from ``s`` (open) or at most ``d``
    (closed, including ``s`` itself)."""
    if d < 0:
        raise ValueError("distance must be non-negative")
    dist = {v: 0 for v in s}
    frontier = list(dist)
    for level in range(1, d + 1):
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = level
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            break
    if closed or d == 0:
        return frozenset(dist)
    return frozenset(v for v, dv in dist.items() if dv == d)


def induced_has_edge(g: Graph, s: AbstractSet[int]) -> bool:
    return any(g.neighbor_set(v) & s for v in s)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = s if isinstance(s, (set, frozenset)) else frozenset(s)
    return not induced_has_edge(g, members)


def is_vertex_cover(g: Graph, s: AbstractSet[int]) -> bool:
    return all(u in s or v in s for u, v in g.edges())


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Minimum-degree peeling order and the degeneracy it witnesses.

    Bucket queue over current degrees, O(n + m).
    """
    deg = [g.degree(v) for v in range(g.n)]
    max_deg = max(deg, default=0)
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for v, dv in enumerate(deg):
        buckets[dv].add(v)
    removed = [False] * g.n
    order: list[int] = []
    best = 0
    low = 0
    for _ in range(g.n):
        low = max(low - 1, 0)
        while not buckets[low]:
            low += 1
        v = buckets[low].pop()
        removed[v] = True
        order.append(v)
        best = max(best, low)
        for w in g.neighbors(v):
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    return order, best


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g)[1]


def certify_separability(g: Graph, beta: int) -> SeparabilityCertificate:
    """Return the low-degree certificate ``v2 = {v : deg(v) <= beta}``.

    If any partition certifies beta-separability then this one does: every
    vertex of a certifying V2 has degree <= beta, so V1 can only shrink when
    moved to the canonical split, and inner degrees in V1 shrink with it.
    Raises ``NotSeparable`` otherwise.
    """
    if beta < 0:
        raise ValueError("beta must be non-negative")
    v2 = frozenset(v for v in range(g.n) if g.degree(v) <= beta)
    v1 = frozenset(range(g.n)) - v2
    for v in sorted(v1):
        inner = len(g.neighbor_set(v) & v1)
        if inner > beta:
            raise NotSeparable(beta, v, inner)
    return SeparabilityCertificate(beta, v1, v2)


def smallest_separability(g: Graph, cap: int | None = None) -> SeparabilityCertificate:
    """Certificate for the smallest certifiable beta, trying 0, 1, ... up to
    ``cap`` (default: maximum degree, which always succeeds)."""
    limit = g.max_degree() if cap is None else cap
    if limit < 0:
        raise ValueError("cap must be non-negative")
    for beta in range(limit):
        try:
            return certify_separability(g, beta)
        except NotSeparable:
            pass
    return certify_separability(g, limit)


def subdivide_twice(g: Graph) -> Graph:
    """Replace each edge ``x-y`` (``x < y``, lexicographic order, index i)
    by the path ``x - (n+2i) - (n+2i+1) - y``."""
    edges = []
    for i, (x, y) in enumerate(g.edges()):
        z, z2 = g.n + 2 * i, g.n + 2 * i + 1
        edges += [(x, z), (z, z2), (z2, y)]
    return Graph(g.n + 2 * g.m, edges)


def two_subdivision_origin(g: Graph) -> tuple[frozenset[int], Graph] | None:
    """Recover a graph ``h`` with ``subdivide_twice(h)`` isomorphic to ``g``.

    Returns ``(branch_vertices, h)`` where ``branch_vertices`` are the
    vertices of ``g`` playing the role of original vertices and ``h`` is
    relabelled onto ``0..len(branch_vertices)-1`` in id order, or ``None``
    when ``g`` is not 2-subdivided.
    """
    original: dict[int, bool] = {}

    def settle(start: int) -> bool:
        queue = deque([start])
        original[start] = True
        while queue:
            o = queue.popleft()
            for z in g.neighbors(o):
                if original.get(z, False) or g.degree(z) != 2:
                    return False
                z2 = next(w for w in g.neighbors(z) if w != o)
                if original.get(z2, False) or g.degree(z2) != 2:
                    return False
                end = next(w for w in g.neighbors(z2) if w != z)
                if original.get(end) is False or end == z:
                    return False
                original[z] = original[z2] = False
                if end not in original:
                    original[end] = True
                    queue.append(end)
        return True

    for comp in _components(g):
        anchors = [v for v in comp if g.degree(v) != 2]
        if anchors:
            if not settle(anchors[0]):
                return None
            continue
        # a bare cycle; every phase gives the same origin up to relabelling
        start = min(comp)
        ring = [start]
        prev, cur = -1, start
        while True:
            nxt = next(w for w in g.neighbors(cur) if w != prev)
            if nxt == start:
                break
            ring.append(nxt)
            prev, cur = cur, nxt
        if len(ring) % 3 or len(ring) < 9:
            return None
        for i, v in enumerate(ring):
            original[v] = i % 3 == 0
    if any(original.get(v) is None for v in range(g.n)):
        return None

    branch = sorted(v for v in range(g.n) if original[v])
    index = {v: i for i, v in enumerate(branch)}
    pairs: set[tuple[int, int]] = set()
    seen_mid: set[int] = set()
    for o in branch:
        for z in g.neighbors(o):
            if z in seen_mid:
                continue
            z2 = next(w for w in g.neighbors(z) if w != o)
            end = next(w for w in g.neighbors(z2) if w != z)
            seen_mid.update((z, z2))
            key = (min(index[o], index[end]), max(index[o], index[end]))
            if key[0] == key[1] or key in pairs:
                return None
            pairs.add(key)
    return frozenset(branch), Graph(len(branch), pairs)


def is_two_subdivided(g: Graph) -> bool:
    return two_subdivision_origin(g) is not None


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(comp)
    return out
