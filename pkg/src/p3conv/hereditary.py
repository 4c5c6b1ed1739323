"""Interval idempotence and the small induced subgraphs that break it.

A graph has an idempotent interval operator when spreading once from any
vertex set already reaches a fixpoint: no vertex ever needs two rounds.  Four
small graphs always break this, so their absence as induced subgraphs is a
cheap structural predictor.  The predictor is cross-checked against the
exhaustive oracle here; any graph where the two disagree is reported rather
than swallowed, since a pattern-free graph that still fails the direct check
would mean the pattern list is incomplete.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, contains_induced
from .oracle import (
    CapExceeded,
    geodetic_number_bruteforce,
    hull_number_bruteforce,
    interval_idempotent_bruteforce,
)
from .graphio import to_graph6
from .generators import DEFAULT_SEED, connected_graphs, random_connected_graph


@dataclass(frozen=True)
class ForbiddenPattern:
    name: str
    graph: Graph


DIAMOND = ForbiddenPattern(
    "diamond", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
)
PAW = ForbiddenPattern("paw", Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]))
CHAIR = ForbiddenPattern("chair", Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)]))
COMPLETE_BIPARTITE_2_3 = ForbiddenPattern("k23", Graph.complete_bipartite(2, 3))

FORBIDDEN_PATTERNS = (DIAMOND, PAW, CHAIR, COMPLETE_BIPARTITE_2_3)


def find_forbidden_patterns(g: Graph) -> tuple[str, ...]:
    """Names of the breaking patterns that occur in g as induced subgraphs."""
    return tuple(p.name for p in FORBIDDEN_PATTERNS if contains_induced(g, p.graph))


def interval_idempotent_by_patterns(g: Graph) -> bool:
    """Predict idempotence from the absence of the four breaking patterns."""
    return not any(contains_induced(g, p.graph) for p in FORBIDDEN_PATTERNS)


@dataclass(frozen=True)
class Disagreement:
    graph6: str
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    pattern_free: bool
    idempotent: bool


@dataclass(frozen=True)
class CrosscheckReport:
    max_n: int
    checked: int
    forward_violations: tuple[Disagreement, ...]
    reverse_findings: tuple[Disagreement, ...]

    @property
    def clean(self) -> bool:
        return not self.forward_violations and not self.reverse_findings


def crosscheck_interval_idempotence(
    max_n: int = 7, seed: int = DEFAULT_SEED, samples_per_size: int = 150
) -> CrosscheckReport:
    """Compare the pattern predictor with the exhaustive check.

    Connected graphs with up to seven vertices are enumerated completely, one
    per isomorphism class; sizes eight and nine are sampled at random.  A
    graph that contains a pattern yet passes the direct check is a forward
    violation (the pattern would not actually be breaking); a pattern-free
    graph that fails the direct check is a reverse finding (a candidate for a
    missing fifth pattern).  Sizes beyond nine are refused.
    """
    if max_n > 9:
        raise CapExceeded(
            f"idempotence crosscheck is capped at 9 vertices, got {max_n}"
        )
    forward: list[Disagreement] = []
    reverse: list[Disagreement] = []
    checked = 0

    def probe(g: Graph) -> None:
        nonlocal checked
        checked += 1
        pattern_free = interval_idempotent_by_patterns(g)
        direct = interval_idempotent_bruteforce(g)
        if pattern_free == direct:
            return
        entry = Disagreement(
            to_graph6(g), g.n, tuple(g.edges()), pattern_free, direct
        )
        if direct:
            forward.append(entry)
        else:
            reverse.append(entry)

    for n in range(1, min(max_n, 7) + 1):
        for g in connected_graphs(n):
            probe(g)
    if max_n > 7:
        rng = random.Random(seed)
        for n in range(8, max_n + 1):
            seen: set[tuple[tuple[int, int], ...]] = set()
            for _ in range(samples_per_size):
                g = random_connected_graph(rng, n)
                key = tuple(g.edges())
                if key in seen:
                    continue
                seen.add(key)
                probe(g)

    key = lambda d: (d.vertex_count, d.graph6)
    return CrosscheckReport(
        max_n=max_n,
        checked=checked,
        forward_violations=tuple(sorted(forward, key=key)),
        reverse_findings=tuple(sorted(reverse, key=key)),
    )


def check_hg_equality(g: Graph, max_n: int = 16) -> bool:
    """Whether the one-round and iterated minimum set sizes coincide for g."""
    return geodetic_number_bruteforce(g, max_n) == hull_number_bruteforce(g, max_n)
