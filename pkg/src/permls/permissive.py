"""Permissive k-exchange local search for vertex cover on beta-separable
graphs.

Each coloring of the current cover ``S`` is pruned to an independent
candidate set ``Q ⊆ S``; a Hall violator ``W ⊆ Q`` in the bipartite graph
between ``Q`` and ``V \\ S`` yields the smaller cover
``(S \\ W) | (N(W) \\ S)``. When the colorings form a universal family,
exhausting all candidates without a violator proves that no smaller cover
exists within distance ``k``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping, Sequence

import numpy as np
from scipy import sparse

from .coloring import (
    ColoringFamily,
    default_repetitions,
    random_family,
    universal_family,
    universal_family_size_estimate,
)
from .graph_core import Graph, SeparabilityCertificate, certify_separability, is_independent
from .matching import hall_violator
from .strict_ls import CoverInstance, outside_neighbors

MODES = ("universal", "randomized")
# above this q the default switches to random colorings
UNIVERSAL_Q_LIMIT = 16
_PRUNE_CHUNK = 2048


@dataclass(frozen=True)
class PermissiveOutcome:
    """Result of one permissive search step.

    ``cover`` is set exactly when an improvement was found, together with
    the candidate ``q_set`` and Hall violator ``witness`` that produced it.
    A negative from randomized mode is ``probabilistic``.
    """

    cover: frozenset[int] | None
    q: int
    beta: int
    mode: str
    seed: int | None
    family_size: int
    candidates: int
    candidates_tried: int
    candidate_index: int | None = None
    q_set: frozenset[int] | None = None
    witness: frozenset[int] | None = None
    construction: str = ""

    @property
    def improved(self) -> bool:
        return self.cover is not None

    @property
    def probabilistic(self) -> bool:
        return self.cover is None and self.mode == "randomized"

    @property
    def status(self) -> str:
        return "improved" if self.improved else "no-improvement"


def parameter_q(k: int, beta: int) -> int:
    return k + beta * k


def resolve_mode(mode: str, q: int, ground_size: int) -> str:
    """Map ``auto`` to a concrete mode: universal for ``q <= 16`` when the
    universal family fits the budget, randomized otherwise."""
    if mode in MODES:
        return mode
    if mode != "auto":
        raise ValueError(f"unknown mode {mode!r}")
    t = min(q, ground_size)
    if q <= UNIVERSAL_Q_LIMIT and universal_family_size_estimate(ground_size, t) != float("inf"):
        return "universal"
    return "randomized"


def build_family(
    ground_size: int, q: int, mode: str, seed: int = 0, delta: float | None = None
) -> ColoringFamily:
    t = min(q, ground_size)
    if mode == "universal":
        return universal_family(ground_size, t)
    if mode == "randomized":
        return random_family(ground_size, t, default_repetitions(t, delta), seed=seed, delta=delta)
    raise ValueError(f"unknown mode {mode!r}")


def _labels(s_order: Sequence[int], f) -> dict[int, int]:
    if isinstance(f, Mapping):
        return {v: int(f[v]) for v in s_order}
    if len(f) != len(s_order):
        raise ValueError("coloring length does not match the cover size")
    return {v: int(b) for v, b in zip(s_order, f)}


def prune_coloring(
    g: Graph, cert: SeparabilityCertificate, s: AbstractSet[int], f
) -> frozenset[int]:
    """Independent candidate set from one coloring of ``s``.

    ``f`` is a mapping vertex -> label or a sequence aligned with
    ``sorted(s)``. Vertices labelled 0 form ``C0``; those of ``C0`` in the
    low-degree part with a neighbour in ``C0`` are dropped, then every
    endpoint of an edge still inside the remainder is dropped.
    """
    labels = _labels(sorted(s), f)
    c0 = frozenset(v for v, b in labels.items() if b == 0)
    c01 = frozenset(v for v in c0 if v in cert.v2 and g.neighbor_set(v) & c0)
    c0p = c0 - c01
    ends = frozenset(v for v in c0p if g.neighbor_set(v) & c0p)
    return c0p - ends


def _prune_family(
    g: Graph, cert: SeparabilityCertificate, s_order: Sequence[int], family: ColoringFamily
) -> list[frozenset[int]]:
    """``prune_coloring`` over a whole family, deduplicated in family order."""
    n_s = len(s_order)
    if n_s == 0:
        return [frozenset()] if len(family) else []
    pos = {v: i for i, v in enumerate(s_order)}
    rows, cols = [], []
    for v in s_order:
        for w in g.neighbors(v):
            if w in pos:
                rows.append(pos[v])
                cols.append(pos[w])
    adj = sparse.csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n_s, n_s))
    low = np.array([v in cert.v2 for v in s_order], dtype=bool)[:, None]
    ids = np.asarray(s_order)

    seen: set[bytes] = set()
    out: list[frozenset[int]] = []
    for start in range(0, len(family), _PRUNE_CHUNK):
        zero = (family.colorings[start:start + _PRUNE_CHUNK] == 0).T
        hit = (adj @ zero.astype(np.int32)) > 0
        kept = zero & ~(low & hit)
        ends = (adj @ kept.astype(np.int32)) > 0
        cand = kept & ~ends
        for col in cand.T:
            key = np.packbits(col).tobytes()
            if key not in seen:
                seen.add(key)
                out.append(frozenset(ids[col].tolist()))
    return out


def candidate_family(
    g: Graph,
    cert: SeparabilityCertificate,
    s: AbstractSet[int],
    k: int,
    mode: str = "universal",
    seed: int = 0,
    delta: float | None = None,
) -> list[frozenset[int]]:
    """Deduplicated independent candidate sets ``Q ⊆ s`` for ``q = k + beta*k``."""
    order = sorted(s)
    mode = resolve_mode(mode, parameter_q(k, cert.beta), len(order))
    family = build_family(len(order), parameter_q(k, cert.beta), mode, seed, delta)
    return _prune_family(g, cert, order, family)


def _try_candidate(g: Graph, s: AbstractSet[int], q_set: frozenset[int]):
    if not q_set:
        return None
    adjacency = {u: [w for w in g.neighbors(u) if w not in s] for u in sorted(q_set)}
    return hall_violator(adjacency)


def permissive_search(
    inst: CoverInstance,
    beta: int,
    mode: str = "universal",
    seed: int = 0,
    delta: float | None = None,
    cert: SeparabilityCertificate | None = None,
    threads: int = 1,
) -> PermissiveOutcome:
    """One permissive local-search step.

    Returns a strictly smaller vertex cover (at any distance) or reports
    that none exists within distance ``inst.k``; that report is exact in
    universal mode and holds with probability at least ``1 - 1/e`` (or
    ``1 - delta``) in randomized mode. Raises ``NotSeparable`` if ``g`` is
    not beta-separable.
    """
    g, s = inst.graph, inst.cover
    if cert is None:
        cert = certify_separability(g, beta)
    elif cert.beta != beta or not cert.is_valid(g):
        raise ValueError("certificate does not certify the requested beta")
    q = parameter_q(inst.k, beta)
    order = sorted(s)
    mode = resolve_mode(mode, q, len(order))
    family = build_family(len(order), q, mode, seed, delta)
    candidates = _prune_family(g, cert, order, family)
    base = dict(
        q=q, beta=beta, mode=mode, seed=seed if mode == "randomized" else None,
        family_size=len(family), candidates=len(candidates), construction=family.construction,
    )

    def found(idx: int, w: frozenset[int]) -> PermissiveOutcome:
        cover = (s - w) | outside_neighbors(g, w, s)
        return PermissiveOutcome(cover=cover, candidates_tried=idx + 1, candidate_index=idx,
                                 q_set=candidates[idx], witness=w, **base)

    if threads <= 1:
        for idx, q_set in enumerate(candidates):
            w = _try_candidate(g, s, q_set)
            if w is not None:
                return found(idx, w)
    else:
        step = threads * 4
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for start in range(0, len(candidates), step):
                chunk = candidates[start:start + step]
                results = list(pool.map(lambda q_set: _try_candidate(g, s, q_set), chunk))
                for off, w in enumerate(results):
                    if w is not None:
                        return found(start + off, w)
    return PermissiveOutcome(cover=None, candidates_tried=len(candidates), **base)


def check_structural_witness(
    g: Graph, s: AbstractSet[int], k: int, s_star: Iterable[int]
) -> bool:
    """Whether ``s_star ⊆ s`` is independent, has fewer outside neighbours
    than members, and members plus outside neighbours number at most ``k``."""
    star = frozenset(s_star)
    if not star <= s:
        raise ValueError("s_star must be a subset of s")
    outside = outside_neighbors(g, star, s)
    return is_independent(g, star) and len(outside) < len(star) and len(outside) + len(star) <= k


def structural_violations(
    g: Graph, s: AbstractSet[int], k: int, s_star: Iterable[int]
) -> list[str]:
    """Which of the three witness conditions fail, as readable strings."""
    star = frozenset(s_star)
    outside = outside_neighbors(g, star, s)
    problems = []
    if not star <= s:
        problems.append("s_star is not a subset of the cover")
    if not is_independent(g, star):
        problems.append("s_star is not independent")
    if not len(outside) < len(star):
        problems.append(f"|N(s_star) - S| = {len(outside)} is not < |s_star| = {len(star)}")
    if len(outside) + len(star) > k:
        problems.append(f"|N(s_star) - S| + |s_star| = {len(outside) + len(star)} exceeds k = {k}")
    return problems
