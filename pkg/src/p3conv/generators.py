"""Graph generators used by the validation suites and the command line.

Everything that involves randomness takes an explicit random.Random so runs
are reproducible; the same seed always yields the same graphs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from typing import Iterator, Optional

from .graph import Graph

DEFAULT_SEED = 1729


def spine_sequences(max_len: int) -> Iterator[tuple[int, ...]]:
    """All capped degree profiles with 2..max_len spine positions.

    Endpoints are always 1; interior entries range over 2, 3, 4.
    """
    for k in range(2, max_len + 1):
        for interior in product((2, 3, 4), repeat=k - 2):
            yield (1, *interior, 1)


def realize_caterpillar(
    rds: tuple[int, ...], extra_leaves: Optional[dict[int, int]] = None
) -> Graph:
    """Build a caterpillar whose capped degree profile equals rds.

    Spine vertices come first (0..k-1 along the path), then leaves position
    by position.  A profile entry of 3 gets one leaf and an entry of 4 gets
    two, unless extra_leaves maps that position to a larger count; entries of
    4 are the only ones allowed more, since the profile caps at 4 anyway.
    """
    k = len(rds)
    if k < 2 or rds[0] != 1 or rds[-1] != 1:
        raise ValueError("profile must have length >= 2 and endpoints 1")
    if any(d not in (2, 3, 4) for d in rds[1:-1]):
        raise ValueError("interior profile entries must be 2, 3 or 4")
    extra_leaves = extra_leaves or {}
    counts = []
    for i, d in enumerate(rds):
        base = {1: 0, 2: 0, 3: 1, 4: 2}[d]
        if i in extra_leaves:
            if d != 4:
                raise ValueError(f"position {i} has profile {d}, not 4")
            if extra_leaves[i] < 2:
                raise ValueError("a profile-4 position needs at least two leaves")
            base = extra_leaves[i]
        counts.append(base)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def shuffle_labels(rng: random.Random, g: Graph) -> Graph:
    """The same graph under a random relabeling of its vertices."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[w]) for u, w in g.edges()])


def random_caterpillar(rng: random.Random, max_vertices: int = 14) -> Graph:
    """A random caterpillar with at most max_vertices vertices, labels shuffled."""
    if max_vertices < 2:
        raise ValueError("need room for at least two vertices")
    while True:
        k = rng.randint(2, min(10, max_vertices))
        rds = (1, *(rng.choice((2, 3, 4)) for _ in range(k - 2)), 1)
        extras = {}
        for i, d in enumerate(rds):
            if d == 4 and rng.random() < 0.25:
                extras[i] = rng.randint(3, 4)
        g = realize_caterpillar(rds, extras)
        if g.n <= max_vertices:
            return shuffle_labels(rng, g)


def _mask_connected(mask: int, n: int, pairs: list[tuple[int, int]]) -> bool:
    adj = [0] * n
    mm = mask
    while mm:
        b = mm & -mm
        u, w = pairs[b.bit_length() - 1]
        adj[u] |= 1 << w
        adj[w] |= 1 << u
        mm ^= b
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << n) - 1


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices, one per isomorphism class.

    Feasible up to n = 7.  Edge sets are bitmasks; when a new class is found,
    its whole relabeling orbit is marked so later masks in the orbit are
    skipped without rebuilding them.
    """
    if n < 1:
        return
    if n == 1:
        yield Graph(1, [])
        return
    if n > 7:
        raise ValueError("exhaustive enumeration is only feasible up to 7 vertices")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    idx = {p: i for i, p in enumerate(pairs)}
    edge_maps = []
    for perm in permutations(range(n)):
        edge_maps.append(
            [idx[tuple(sorted((perm[u], perm[w])))] for u, w in pairs]
        )
    seen = bytearray(1 << m)
    for mask in range(1 << m):
        if seen[mask]:
            continue
        if not _mask_connected(mask, n, pairs):
            continue
        yield Graph(n, [pairs[i] for i in range(m) if mask >> i & 1])
        for emap in edge_maps:
            other = 0
            mm = mask
            while mm:
                b = mm & -mm
                other |= 1 << emap[b.bit_length() - 1]
                mm ^= b
            seen[other] = 1


def random_connected_graph(
    rng: random.Random, n: int, p: Optional[float] = None
) -> Graph:
    """A connected graph drawn by edge flips, resampling until connected."""
    if n < 1:
        raise ValueError("need at least one vertex")
    while True:
        density = p if p is not None else rng.uniform(0.25, 0.6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < density]
        g = Graph(n, edges)
        if g.is_connected():
            return g


def random_tree(rng: random.Random, n: int) -> Graph:
    """A uniform-ish random tree: each new vertex attaches to an earlier one."""
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return shuffle_labels(rng, Graph(n, edges))


def random_unit_interval_graph(
    rng: random.Random, n: int
) -> tuple[Graph, tuple[int, ...]]:
    """A connected graph of unit intervals on the line, plus a valid order.

    Returns (graph, order) where order[p] is the vertex at position p; labels
    are shuffled so the order carries real information.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    while True:
        points = sorted(rng.uniform(0, n / 2.5) for _ in range(n))
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if points[j] - points[i] <= 1.0
        ]
        if n > 1 and not Graph(n, edges).is_connected():
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        mapped = [(perm[i], perm[j]) for i, j in edges]
        return Graph(n, mapped), tuple(perm)


def _chain_graph(
    rng: random.Random, n: int, cliques: list[tuple[int, int]]
) -> tuple[Graph, tuple[int, ...]]:
    edges = set()
    for a, b in cliques:
        for i in range(a, b + 1):
            for j in range(i + 1, b + 1):
                edges.add((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    mapped = [(perm[i], perm[j]) for i, j in edges]
    return Graph(n, mapped), tuple(perm)


def random_clique_chain(
    rng: random.Random, n: int
) -> tuple[Graph, tuple[int, ...]]:
    """A chain of overlapping cliques covering positions 0..n-1.

    Consecutive cliques overlap in at least one position, so single shared
    positions (cut vertices) occur regularly.  Returns (graph, order).
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    b = rng.randint(1, min(3, n - 1))
    cliques = [(0, b)]
    a = 0
    while b < n - 1:
        a2 = rng.randint(max(a + 1, b - 3), min(b, n - 2))
        b2 = rng.randint(b + 1, min(n - 1, a2 + 4))
        cliques.append((a2, b2))
        a, b = a2, b2
    return _chain_graph(rng, n, cliques)


def random_biconnected_chain(
    rng: random.Random, n: int
) -> tuple[Graph, tuple[int, ...]]:
    """A 2-connected chain of cliques: consecutive cliques overlap in two.

    Clique ends of nonconsecutive cliques still meet in single positions now
    and then, which is what produces singular positions.  Returns
    (graph, order).
    """
    if n < 3:
        raise ValueError("need at least three vertices")
    b = rng.randint(2, min(4, n - 1))
    cliques = [(0, b)]
    a = 0
    while b < n - 1:
        a2 = rng.randint(max(a + 1, b - 3), min(b - 1, n - 3))
        b2 = rng.randint(b + 1, min(n - 1, a2 + 4))
        cliques.append((a2, b2))
        a, b = a2, b2
    return _chain_graph(rng, n, cliques)
