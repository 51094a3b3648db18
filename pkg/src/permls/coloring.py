"""0/1 coloring families over a ground set ``0..n-1``.

Two kinds are built here: independent uniform random colorings, and
deterministic (n, t)-universal families, whose restriction to every
t-subset of the ground set realises all 2^t patterns.

Universal families come from one of three constructions, picked by
estimated size:

* the full cube ``{0,1}^n`` when it is smallest;
* a greedy cover of all (t-subset, pattern) pairs, which is exhaustive by
  construction and therefore verified when it terminates;
* a splitter: for a set of primes whose product exceeds ``n^C(t,2)``, some
  prime ``p`` keeps any t-set distinct under ``x mod p`` (otherwise every
  ``p`` divides the product of pairwise differences, which is smaller than
  ``n^C(t,2)``). Composing each ``x mod p`` with a universal family on the
  ground set ``0..p-1`` is then universal on ``0..n-1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np
from scipy import sparse

# (t-subset, pattern) pairs a direct greedy build may track
DIRECT_PAIR_BUDGET = 1 << 22
# cells (rows * ground size) a universal family may occupy
ROW_CELL_BUDGET = 60_000_000
_GREEDY_BATCH = 32
_GREEDY_SEED = 0x5EED


class FamilyTooLarge(ValueError):
    """The requested universal family exceeds the construction budget."""


@dataclass(frozen=True, eq=False)
class ColoringFamily:
    """A finite family of 0/1 colorings, one row of ``colorings`` each.

    Column ``j`` of a row is the label of ground element ``j``.
    """

    ground_size: int
    t: int
    colorings: np.ndarray
    mode: str
    seed: int | None = None
    repetitions: int | None = None
    construction: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        rows = np.asarray(self.colorings, dtype=np.uint8)
        if rows.ndim != 2 or rows.shape[1] != self.ground_size:
            raise ValueError(f"colorings must have shape (F, {self.ground_size})")
        rows.setflags(write=False)
        object.__setattr__(self, "colorings", rows)

    def __len__(self) -> int:
        return self.colorings.shape[0]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.colorings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoringFamily):
            return NotImplemented
        return (
            self.ground_size == other.ground_size
            and self.t == other.t
            and self.mode == other.mode
            and np.array_equal(self.colorings, other.colorings)
        )

    def patterns_on(self, subset: tuple[int, ...]) -> set[tuple[int, ...]]:
        """Distinct restrictions of the family to ``subset``."""
        if not subset:
            return {()} if len(self) else set()
        return set(map(tuple, np.unique(self.colorings[:, list(subset)], axis=0).tolist()))

    def to_text(self) -> str:
        # a coloring of the empty ground set is written as "-"
        lines = ["".join("1" if b else "0" for b in row) or "-" for row in self.colorings]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(
        cls, text: str, t: int, mode: str = "universal", ground_size: int | None = None
    ) -> ColoringFamily:
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        rows = ["" if r == "-" else r for r in rows]
        if ground_size is None:
            if not rows:
                raise ValueError("cannot infer ground size from an empty family")
            ground_size = len(rows[0])
        for r in rows:
            if len(r) != ground_size or set(r) - {"0", "1"}:
                raise ValueError(f"malformed coloring line {r!r}")
        arr = np.array([[c == "1" for c in r] for r in rows], dtype=np.uint8).reshape(len(rows), ground_size)
        return cls(ground_size, t, arr, mode)


def _check_params(n: int, t: int) -> None:
    if n < 0 or t < 0:
        raise ValueError("n and t must be non-negative")
    if t > n:
        raise ValueError(f"t={t} exceeds ground size n={n}")


def default_repetitions(t: int, delta: float | None = None) -> int:
    """``2^t`` repetitions, or ``ceil(2^t ln(1/delta))`` for a target
    failure probability ``delta``."""
    if delta is None:
        return 1 << t
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    return max(1, math.ceil((1 << t) * math.log(1 / delta)))


def random_family(
    n: int,
    t: int,
    repetitions: int | None = None,
    seed: int = 0,
    delta: float | None = None,
) -> ColoringFamily:
    """``repetitions`` independent uniform colorings drawn from ``seed``."""
    _check_params(n, t)
    if repetitions is None:
        repetitions = default_repetitions(t, delta)
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, 2, size=(repetitions, n), dtype=np.uint8)
    return ColoringFamily(
        n, t, rows, "randomized", seed=seed, repetitions=repetitions,
        construction="random", meta={"delta": delta},
    )


def _greedy_size_estimate(n: int, t: int) -> int:
    # empirical fit of the greedy builder's output size
    return (1 << t) * (math.ceil(0.6 * math.log(max(math.comb(n, t), 2))) + 1)


def _primes_from(lo: int) -> Iterator[int]:
    p = max(lo, 2)
    while True:
        if all(p % d for d in range(2, math.isqrt(p) + 1)):
            yield p
        p += 1


def _splitter_primes(n: int, t: int) -> list[int] | None:
    """Primes ``>= t`` whose product reaches ``n^C(t,2)``, all below ``n``."""
    need = math.comb(t, 2) * math.log(n)
    have = 0.0
    primes = []
    for p in _primes_from(t):
        if p >= n:
            return None
        primes.append(p)
        have += math.log(p)
        if have >= need:
            return primes


@lru_cache(maxsize=None)
def _plan(n: int, t: int) -> tuple[str, int]:
    """Cheapest construction for (n, t) and its estimated row count."""
    if t == 0:
        return "constant", 1
    if t == 1:
        return "constant", 2
    cube = 1 << n if n < 63 else math.inf
    options = []
    if cube * n <= ROW_CELL_BUDGET:
        options.append(("cube", cube))
    if math.comb(n, t) << t <= DIRECT_PAIR_BUDGET:
        options.append(("greedy", _greedy_size_estimate(n, t)))
    primes = _splitter_primes(n, t)
    if primes is not None:
        total = sum(_plan(p, t)[1] for p in primes)
        options.append(("split", total))
    options = [o for o in options if o[1] * n <= ROW_CELL_BUDGET]
    if not options:
        return "none", math.inf
    return min(options, key=lambda o: o[1])


def universal_family_size_estimate(n: int, t: int) -> float:
    """Estimated row count of ``universal_family(n, t)``; ``inf`` when it
    would exceed the construction budget."""
    _check_params(n, t)
    return _plan(n, t)[1]


def _greedy_rows(n: int, t: int) -> np.ndarray:
    subsets = np.array(list(combinations(range(n), t)), dtype=np.intp).reshape(-1, t)
    n_sub = len(subsets)
    # codes = coloring @ encode gives each subset's pattern index
    encode = sparse.csr_matrix(
        (np.tile(1 << np.arange(t), n_sub), (subsets.ravel(), np.repeat(np.arange(n_sub), t))),
        shape=(n, n_sub), dtype=np.int32,
    )
    covered = np.zeros((n_sub, 1 << t), dtype=bool)
    remaining = covered.size
    rng = np.random.default_rng(_GREEDY_SEED)
    all_sub = np.arange(n_sub)
    missing = np.empty(0, dtype=np.intp)
    rows = []
    while remaining:
        cand = rng.integers(0, 2, size=(_GREEDY_BATCH, n), dtype=np.uint8)
        missing = missing[~covered.ravel()[missing]]
        if len(missing) < _GREEDY_BATCH:
            missing = np.flatnonzero(~covered.ravel())
        # half the batch is forced to realise some still-missing pair
        picks = rng.choice(missing, size=min(len(missing), _GREEDY_BATCH // 2), replace=False)
        for j, flat in enumerate(picks):
            sub, pat = divmod(int(flat), 1 << t)
            cand[j, subsets[sub]] = (pat >> np.arange(t)) & 1
        pats = np.asarray((encode.T @ cand.T.astype(np.int32)).T)
        gains = (~covered[all_sub, pats]).sum(axis=1)
        best = int(np.argmax(gains))
        covered[all_sub, pats[best]] = True
        remaining -= int(gains[best])
        rows.append(cand[best])
    return np.array(rows, dtype=np.uint8).reshape(len(rows), n)


def _cube_rows(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)


@lru_cache(maxsize=64)
def _universal_rows(n: int, t: int) -> tuple[np.ndarray, str]:
    kind, _ = _plan(n, t)
    if kind == "constant":
        rows = np.zeros((1, n), dtype=np.uint8) if t == 0 else np.array([[0] * n, [1] * n], dtype=np.uint8)
    elif kind == "cube":
        rows = _cube_rows(n)
    elif kind == "greedy":
        rows = _greedy_rows(n, t)
    elif kind == "split":
        parts = []
        ground = np.arange(n)
        for p in _splitter_primes(n, t):
            inner, _ = _universal_rows(p, t)
            parts.append(inner[:, ground % p])
        rows = _dedupe_rows(np.concatenate(parts))
    else:
        raise FamilyTooLarge(
            f"no ({n},{t})-universal family fits the construction budget; use randomized mode"
        )
    rows.setflags(write=False)
    return rows, kind


def _dedupe_rows(rows: np.ndarray) -> np.ndarray:
    _, first = np.unique(rows, axis=0, return_index=True)
    return rows[np.sort(first)]


def universal_family(n: int, t: int) -> ColoringFamily:
    """A deterministic (n, t)-universal family.

    Raises ``FamilyTooLarge`` when no construction fits the budget.
    """
    _check_params(n, t)
    rows, kind = _universal_rows(n, t)
    return ColoringFamily(n, t, rows, "universal", construction=kind,
                          meta={"size_bound": _plan(n, t)[1]})


def is_universal(family: ColoringFamily, t: int | None = None) -> bool:
    """Exhaustively check that every t-subset sees all 2^t patterns."""
    t = family.t if t is None else t
    n = family.ground_size
    if t == 0:
        return len(family) > 0
    weights = (1 << np.arange(t)).astype(np.int64)
    rows = family.colorings.astype(np.int64)
    for sub in combinations(range(n), t):
        codes = rows[:, list(sub)] @ weights
        if len(np.unique(codes)) != 1 << t:
            return False
    return True
