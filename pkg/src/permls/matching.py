"""Bipartite maximum matching (Hopcroft-Karp) and Hall-condition violators."""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Mapping, Sequence

from .graph_core import BipartiteGraph

_INF = float("inf")


def hopcroft_karp(adjacency: Mapping[Hashable, Sequence[Hashable]]) -> dict:
    """Maximum matching of a bipartite graph given as left -> right lists.

    Returns a dict mapping matched left vertices to their right partner.
    Iteration follows the mapping's order, so results are deterministic.
    """
    left = list(adjacency)
    mate_l: dict = {}
    mate_r: dict = {}
    dist: dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u in mate_l:
                dist[u] = _INF
            else:
                dist[u] = 0
                queue.append(u)
        found = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adjacency[u]:
                w = mate_r.get(v)
                if w is None:
                    if found == _INF:
                        found = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found != _INF

    def dfs(root) -> bool:
        # iterative layered DFS; recursion depth would grow with path length
        stack = [(root, iter(adjacency[root]))]
        path = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = mate_r.get(v)
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        mate_l[a] = b
                        mate_r[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(adjacency[w])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in left:
            if u not in mate_l:
                dfs(u)
    return mate_l


def _side_adjacency(bg: BipartiteGraph, side: str) -> dict[int, tuple[int, ...]]:
    return {u: bg.graph.neighbors(u) for u in sorted(bg.side(side))}


def maximum_matching(bg: BipartiteGraph, side: str = "a") -> dict[int, int]:
    """Maximum matching as a dict from ``side`` vertices to their partners."""
    return hopcroft_karp(_side_adjacency(bg, side))


def hall_violator(adjacency: Mapping[Hashable, Sequence[Hashable]]) -> frozenset | None:
    """A left-side set ``W`` with ``|N(W)| < |W|``, or ``None`` if some
    matching saturates the left side.

    ``W`` is the left half of everything reachable by alternating paths from
    the left vertices a maximum matching leaves exposed.
    """
    mate_l = hopcroft_karp(adjacency)
    if len(mate_l) == len(adjacency):
        return None
    mate_r = {v: u for u, v in mate_l.items()}
    reached = {u for u in adjacency if u not in mate_l}
    queue = deque(reached)
    seen_r = set()
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v in seen_r:
                continue
            seen_r.add(v)
            w = mate_r[v]  # every reachable right vertex is matched
            if w not in reached:
                reached.add(w)
                queue.append(w)
    return frozenset(reached)


def find_hall_violator(bg: BipartiteGraph, side: str = "a") -> frozenset[int] | None:
    """Hall violator ``W`` on the given side of ``bg``; ``None`` means a
    matching saturating that side exists."""
    return hall_violator(_side_adjacency(bg, side))


def deficiency(bg: BipartiteGraph, w: Iterable[int]) -> int:
    """``|W| - |N(W)|``; positive exactly when ``W`` violates Hall's condition."""
    members = frozenset(w)
    return len(members) - len(bg.neighborhood(members))
