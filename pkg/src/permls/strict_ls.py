"""Exhaustive strict local search for vertex cover and a size-bounded Hall
set search. Both are exponential in ``k`` and meant for small instances
and as oracles for the permissive engine."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Iterable, Iterator

from .graph_core import BipartiteGraph, Graph, is_vertex_cover, set_distance


class InvalidCover(ValueError):
    pass


@dataclass(frozen=True)
class CoverInstance:
    graph: Graph
    cover: frozenset[int]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "cover", frozenset(self.cover))
        if self.k < 0:
            raise ValueError("k must be non-negative")
        bad = [v for v in self.cover if not 0 <= v < self.graph.n]
        if bad:
            raise InvalidCover(f"cover contains ids outside the graph: {sorted(bad)[:5]}")
        if not is_vertex_cover(self.graph, self.cover):
            u, v = next(e for e in self.graph.edges() if not (e[0] in self.cover or e[1] in self.cover))
            raise InvalidCover(f"not a vertex cover: edge ({u}, {v}) is uncovered")


@dataclass(frozen=True)
class HallInstance:
    bg: BipartiteGraph
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")


def outside_neighbors(g: Graph, s_star: Iterable[int], s: AbstractSet[int]) -> frozenset[int]:
    """``N(S*) \\ S``."""
    out: set[int] = set()
    for v in s_star:
        out.update(g.neighbor_set(v))
    return frozenset(out - s)


def exchange(g: Graph, s: AbstractSet[int], s_star: Iterable[int]) -> frozenset[int]:
    """The cover ``(S \\ S*) | (N(S*) \\ S)``."""
    removed = frozenset(s_star)
    return frozenset(s - removed) | outside_neighbors(g, removed, s)


def improving_sets(inst: CoverInstance) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """Yield every independent ``S* ⊆ S`` meeting the exchange conditions,
    with its outside neighbourhood, in lexicographic order of sorted tuples.

    Branches are cut as soon as ``|N(S*) \\ S| + |S*|`` exceeds ``k``; both
    sides only grow along a branch.
    """
    g, s, k = inst.graph, inst.cover, inst.k
    order = sorted(s)

    def grow(start: int, chosen: list[int], blocked: frozenset[int], outside: frozenset[int]):
        for i in range(start, len(order)):
            v = order[i]
            if v in blocked:
                continue
            new_outside = outside | (g.neighbor_set(v) - s)
            size = len(chosen) + 1
            if len(new_outside) + size > k:
                continue
            chosen.append(v)
            if len(new_outside) < size:
                yield frozenset(chosen), new_outside
            yield from grow(i + 1, chosen, blocked | g.neighbor_set(v), new_outside)
            chosen.pop()

    yield from grow(0, [], frozenset(), frozenset())


def strict_search(inst: CoverInstance) -> frozenset[int] | None:
    """A smaller vertex cover within distance ``k`` of ``inst.cover``, or
    ``None`` if the k-exchange neighbourhood holds no improvement."""
    for s_star, outside in improving_sets(inst):
        return (inst.cover - s_star) | outside
    return None


def strict_search_bruteforce(inst: CoverInstance) -> frozenset[int] | None:
    """Reference search over every set at distance at most ``k``.

    Tries removals ``R ⊆ S`` and additions ``D ⊆ V \\ S`` with
    ``|D| < |R|`` and ``|R| + |D| <= k``.
    """
    g, s, k = inst.graph, inst.cover, inst.k
    inside = sorted(s)
    outside = sorted(set(range(g.n)) - s)
    for r in range(1, k + 1):
        for removed in combinations(inside, r):
            base = s - frozenset(removed)
            for d in range(0, min(r - 1, k - r) + 1):
                for added in combinations(outside, d):
                    candidate = base | frozenset(added)
                    if is_vertex_cover(g, candidate):
                        assert set_distance(candidate, s) <= k
                        return candidate
    return None


def _bitmask_neighborhoods(bg: BipartiteGraph, side: str) -> tuple[list[int], list[int]]:
    left = sorted(bg.side(side))
    right = sorted({v for u in left for v in bg.graph.neighbors(u)})
    bit = {v: 1 << i for i, v in enumerate(right)}
    masks = []
    for u in left:
        m = 0
        for v in bg.graph.neighbors(u):
            m |= bit[v]
        masks.append(m)
    return left, masks


def hall_set_bruteforce(inst: HallInstance, side: str = "a") -> frozenset[int] | None:
    """Smallest-first search for ``S ⊆ A`` with ``|S| <= k`` and
    ``|N(S)| < |S|``.

    Sizes are tried in increasing order; within a size, subsets come in
    lexicographic order and a branch is dropped once its neighbourhood
    already has ``size`` or more vertices.
    """
    left, masks = _bitmask_neighborhoods(inst.bg, side)
    limit = min(inst.k, len(left))

    def search(size: int, start: int, chosen: list[int], nbr: int) -> list[int] | None:
        if len(chosen) == size:
            return list(chosen)
        need = size - len(chosen)
        for i in range(start, len(left) - need + 1):
            merged = nbr | masks[i]
            if merged.bit_count() >= size:
                continue
            chosen.append(i)
            found = search(size, i + 1, chosen, merged)
            if found is not None:
                return found
            chosen.pop()
        return None

    for size in range(1, limit + 1):
        found = search(size, 0, [], 0)
        if found is not None:
            return frozenset(left[i] for i in found)
    return None
