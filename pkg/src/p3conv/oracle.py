"""Brute-force reference computations for the two-neighbor infection process.

A vertex becomes infected once at least two of its neighbors are infected,
and infection never recedes.  Everything here enumerates vertex subsets
directly, so it is exponential by design: these functions exist to validate
the closed-form results on small graphs, not to be fast.

Subset enumeration skips vertices of degree below two.  Such a vertex can
never become infected by its neighbors, so it belongs to every set whose
closure is to cover the whole graph; folding them in up front shrinks the
search space without changing any answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import Graph

DEFAULT_HULL_CAP = 20
DEFAULT_TIME_CAP = 18
DEFAULT_PROPERTY_CAP = 16


class CapExceeded(Exception):
    """A brute-force computation was asked to search more than its size cap allows."""


def _require_within(g: Graph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise CapExceeded(
            f"{what} enumerates subsets of {g.n} vertices; cap is {max_n}"
        )


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u in range(g.n):
        m = 0
        for w in g.adj(u):
            m |= 1 << w
        masks[u] = m
    return masks


def _spread_once(masks: list[int], current: int, n: int) -> int:
    nxt = current
    for v in range(n):
        bit = 1 << v
        if current & bit:
            continue
        if (masks[v] & current).bit_count() >= 2:
            nxt |= bit
    return nxt


def _closure_rounds(masks: list[int], start: int, n: int) -> list[int]:
    """Masks after each round, beginning with the start set, ending at the fixpoint."""
    rounds = [start]
    current = start
    while True:
        nxt = _spread_once(masks, current, n)
        if nxt == current:
            return rounds
        rounds.append(nxt)
        current = nxt


def interval(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """One infection round: s together with vertices having two infected neighbors."""
    start = frozenset(s)
    out = set(start)
    for v in range(g.n):
        if v not in start and len(g.adj(v) & start) >= 2:
            out.add(v)
    return frozenset(out)


@dataclass(frozen=True)
class PercolationTrace:
    """Round-by-round record of infection spreading from a start set."""

    rounds: tuple[frozenset[int], ...]
    time_of: tuple[Optional[int], ...]
    percolated: bool

    @property
    def closure(self) -> frozenset[int]:
        return self.rounds[-1]

    @property
    def total_rounds(self) -> int:
        """Rounds until nothing more changes (0 when the start set is already closed)."""
        return len(self.rounds) - 1


def percolate(g: Graph, s: Iterable[int]) -> PercolationTrace:
    """Run the infection process from s until it stabilizes."""
    start = 0
    for v in set(s):
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside range 0..{g.n - 1}")
        start |= 1 << v
    masks = _adjacency_masks(g)
    rounds = _closure_rounds(masks, start, g.n)
    time_of: list[Optional[int]] = [None] * g.n
    for v in range(g.n):
        bit = 1 << v
        for t, m in enumerate(rounds):
            if m & bit:
                time_of[v] = t
                break
    full = (1 << g.n) - 1
    return PercolationTrace(
        rounds=tuple(
            frozenset(v for v in range(g.n) if m & (1 << v)) for m in rounds
        ),
        time_of=tuple(time_of),
        percolated=rounds[-1] == full,
    )


def hull_closure(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Smallest superset of s that gains nothing from another infection round."""
    return percolate(g, s).closure


def _forced_mask(masks: list[int], n: int) -> int:
    forced = 0
    for v in range(n):
        if masks[v].bit_count() < 2:
            forced |= 1 << v
    return forced


def _subsets_by_size(free: list[int], extra: int) -> Iterator[int]:
    """Masks of `extra` free vertices, ascending in the combinations order."""
    for combo in combinations(free, extra):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def hull_number_bruteforce(g: Graph, max_n: int = DEFAULT_HULL_CAP) -> int:
    """Minimum size of a set whose closure is the whole vertex set."""
    _require_within(g, max_n, "hull number search")
    if g.n == 0:
        return 0
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    forced = _forced_mask(masks, g.n)
    free = [v for v in range(g.n) if not forced & (1 << v)]
    base = forced.bit_count()
    for extra in range(len(free) + 1):
        for m in _subsets_by_size(free, extra):
            start = forced | m
            if _closure_rounds(masks, start, g.n)[-1] == full:
                return base + extra
    raise AssertionError("the full vertex set always percolates")


def minimum_hull_sets(g: Graph, max_n: int = DEFAULT_HULL_CAP) -> list[frozenset[int]]:
    """All minimum-size sets whose closure is the whole vertex set."""
    _require_within(g, max_n, "hull set search")
    if g.n == 0:
        return [frozenset()]
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    forced = _forced_mask(masks, g.n)
    free = [v for v in range(g.n) if not forced & (1 << v)]
    for extra in range(len(free) + 1):
        found = [
            forced | m
            for m in _subsets_by_size(free, extra)
            if _closure_rounds(masks, forced | m, g.n)[-1] == full
        ]
        if found:
            return [
                frozenset(v for v in range(g.n) if s & (1 << v)) for s in found
            ]
    raise AssertionError("the full vertex set always percolates")


def geodetic_number_bruteforce(g: Graph, max_n: int = DEFAULT_HULL_CAP) -> int:
    """Minimum size of a set that covers the whole graph in a single round."""
    _require_within(g, max_n, "geodetic number search")
    if g.n == 0:
        return 0
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    forced = _forced_mask(masks, g.n)
    free = [v for v in range(g.n) if not forced & (1 << v)]
    base = forced.bit_count()
    for extra in range(len(free) + 1):
        for m in _subsets_by_size(free, extra):
            start = forced | m
            if _spread_once(masks, start, g.n) == full:
                return base + extra
    raise AssertionError("the full vertex set covers itself")


def percolation_time_bruteforce(g: Graph, max_n: int = DEFAULT_TIME_CAP) -> int:
    """Largest number of rounds any percolating set needs to cover the graph."""
    _require_within(g, max_n, "percolation time search")
    if g.n == 0:
        return 0
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    forced = _forced_mask(masks, g.n)
    free = [v for v in range(g.n) if not forced & (1 << v)]
    best = 0
    for extra in range(len(free) + 1):
        for m in _subsets_by_size(free, extra):
            rounds = _closure_rounds(masks, forced | m, g.n)
            if rounds[-1] == full and len(rounds) - 1 > best:
                best = len(rounds) - 1
    return best


def vertex_percolation_time_bruteforce(
    g: Graph, v: int, max_n: int = DEFAULT_TIME_CAP
) -> int:
    """Latest round at which v gets infected, over all percolating start sets."""
    _require_within(g, max_n, "vertex percolation time search")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} outside range 0..{g.n - 1}")
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    forced = _forced_mask(masks, g.n)
    free = [u for u in range(g.n) if not forced & (1 << u)]
    bit = 1 << v
    best = 0
    for extra in range(len(free) + 1):
        for m in _subsets_by_size(free, extra):
            rounds = _closure_rounds(masks, forced | m, g.n)
            if rounds[-1] != full:
                continue
            for t, mask in enumerate(rounds):
                if mask & bit:
                    if t > best:
                        best = t
                    break
    return best


def interval_idempotent_bruteforce(g: Graph, max_n: int = DEFAULT_PROPERTY_CAP) -> bool:
    """Whether spreading once from any vertex set already reaches a fixpoint.

    True iff for every S the set infected after one round equals the set
    infected after two rounds.  Checks all 2^n subsets.
    """
    _require_within(g, max_n, "interval idempotence check")
    masks = _adjacency_masks(g)
    n = g.n
    for s in range(1 << n):
        once = _spread_once(masks, s, n)
        if _spread_once(masks, once, n) != once:
            return False
    return True
