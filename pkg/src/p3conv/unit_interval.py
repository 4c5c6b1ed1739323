"""Unit interval graphs: recognition, clique structure, and percolation time.

A unit interval graph is one whose vertices can be arranged left to right so
that every closed neighborhood occupies a contiguous run of positions.  All
structure here is expressed in terms of such an order: maximal cliques are
position intervals, and the two-infected-neighbors spreading process can be
timed by walking the clique chain instead of enumerating start sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, blocks, is_biconnected


class UnitIntervalModel:
    """A graph together with a vertex order whose neighborhoods are contiguous.

    ``order[p]`` is the vertex at position p.  ``right[p]`` is the largest
    position adjacent to (or equal to) p, and ``cliques`` lists the maximal
    cliques as closed position intervals ``(start, end)`` with strictly
    increasing starts and ends.
    """

    __slots__ = ("graph", "order", "right", "cliques", "_pos")

    def __init__(self, graph: Graph, order: Sequence[int]):
        order = tuple(order)
        if sorted(order) != list(range(graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = {v: p for p, v in enumerate(order)}
        right = []
        for p, v in enumerate(order):
            nbr_pos = [pos[w] for w in graph.adj(v)]
            lo = min(nbr_pos + [p])
            hi = max(nbr_pos + [p])
            if hi - lo != len(nbr_pos):
                raise ValueError(
                    f"vertex {v} at position {p} has a gap in its neighborhood"
                )
            right.append(hi)
        cliques = []
        for p in range(graph.n):
            if p == 0 or right[p - 1] < right[p]:
                cliques.append((p, right[p]))
        self.graph = graph
        self.order = order
        self.right = tuple(right)
        self.cliques = tuple(cliques)
        self._pos = pos

    def position_of(self, v: int) -> int:
        return self._pos[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitIntervalModel):
            return NotImplemented
        return self.graph == other.graph and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.graph, self.order))

    def __repr__(self) -> str:
        return f"UnitIntervalModel(n={self.graph.n}, order={self.order})"


def build_model(g: Graph, order: Sequence[int]) -> UnitIntervalModel:
    """Validate an explicit vertex order and wrap it in a model."""
    return UnitIntervalModel(g, order)


def _is_clique(adjmap: dict[int, set[int]], vs: set[int]) -> bool:
    vs = list(vs)
    for i, u in enumerate(vs):
        for w in vs[i + 1 :]:
            if w not in adjmap[u]:
                return False
    return True


def _umbrella_ok(adjmap: dict[int, set[int]], order: list[int]) -> bool:
    pos = {v: p for p, v in enumerate(order)}
    for v in order:
        if not adjmap[v]:
            continue
        ps = [pos[w] for w in adjmap[v]]
        lo = min(min(ps), pos[v])
        hi = max(max(ps), pos[v])
        if hi - lo != len(ps):
            return False
    return True


def _search_from(adjmap: dict[int, set[int]], start: int, size: int) -> Optional[list[int]]:
    order = [start]
    placed = {start}
    unplaced_degree = {start: len(adjmap[start])}
    open_vertices = {start} if adjmap[start] else set()

    def place(x: int) -> None:
        remaining = 0
        for u in adjmap[x]:
            if u in placed:
                unplaced_degree[u] -= 1
                if unplaced_degree[u] == 0:
                    open_vertices.discard(u)
            else:
                remaining += 1
        placed.add(x)
        unplaced_degree[x] = remaining
        if remaining:
            open_vertices.add(x)
        order.append(x)

    def unplace() -> None:
        x = order.pop()
        placed.discard(x)
        open_vertices.discard(x)
        del unplaced_degree[x]
        for u in adjmap[x]:
            if u in placed:
                if unplaced_degree[u] == 0:
                    open_vertices.add(u)
                unplaced_degree[u] += 1

    def candidates() -> list[int]:
        # The next vertex must continue the chain from the last one placed,
        # and every placed vertex that still has unplaced neighbors must be
        # adjacent to it, otherwise that vertex's neighborhood gets a gap.
        out = []
        for x in sorted(adjmap[order[-1]]):
            if x in placed:
                continue
            if all(x in adjmap[u] for u in open_vertices if u != x):
                out.append(x)
        return out

    stack = [iter(candidates())]
    while stack:
        x = next(stack[-1], None)
        if x is None:
            stack.pop()
            if stack:
                unplace()
            continue
        place(x)
        if len(order) == size:
            if _umbrella_ok(adjmap, order):
                return list(order)
            unplace()
            continue
        stack.append(iter(candidates()))
    return None


def _component_order(adjmap: dict[int, set[int]], comp: list[int]) -> Optional[list[int]]:
    if len(comp) <= 2:
        return list(comp)
    for start in comp:
        if not _is_clique(adjmap, adjmap[start]):
            continue
        found = _search_from(adjmap, start, len(comp))
        if found is not None:
            return found
    return None


def recognize_unit_interval(g: Graph) -> Optional[UnitIntervalModel]:
    """A valid model for g if one exists, else None.

    Tries every simplicial vertex of each component as the leftmost position
    and extends one position at a time; a candidate must be adjacent to the
    previously placed vertex and to every placed vertex that still has
    unplaced neighbors.  Complete orders are checked directly, so an order is
    returned only if it genuinely has contiguous neighborhoods.  Components
    are laid out one after another, lowest vertex first.
    """
    adjmap = {v: set(g.adj(v)) for v in range(g.n)}
    seen: set[int] = set()
    full_order: list[int] = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adjmap[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        nxt.append(w)
            frontier = nxt
        got = _component_order(adjmap, sorted(comp))
        if got is None:
            return None
        full_order.extend(got)
    return UnitIntervalModel(g, full_order)


def _singulars(cliques: Sequence[tuple[int, int]]) -> list[int]:
    starts = {a: i for i, (a, b) in enumerate(cliques)}
    ends = {b: i for i, (a, b) in enumerate(cliques)}
    return sorted(h for h in starts if h in ends and starts[h] != ends[h])


def singular_positions(model: UnitIntervalModel) -> tuple[int, ...]:
    """Positions that end one maximal clique and begin another."""
    return tuple(_singulars(model.cliques))


def split_singular_vertices(model: UnitIntervalModel) -> UnitIntervalModel:
    """Duplicate each singular position so that adjacent cliques overlap in two.

    Works left to right, one singular position at a time: the clique ending at
    the position keeps the new left copy, the clique starting there gets the
    new right copy, and everything to the right shifts.  Only defined for
    2-connected graphs on at least three vertices.
    """
    if not is_biconnected(model.graph):
        raise ValueError("vertex splitting needs a 2-connected graph on 3+ vertices")
    cliques = list(model.cliques)
    n = model.graph.n
    budget = len(_singulars(cliques))
    while True:
        sing = _singulars(cliques)
        if not sing:
            break
        if budget == 0:
            raise RuntimeError("vertex splitting failed to terminate")
        budget -= 1
        h = sing[0]
        cliques = [
            (a + 1 if a >= h else a, b + 1 if b > h else b) for a, b in cliques
        ]
        n += 1
    edges = set()
    for a, b in cliques:
        for i in range(a, b + 1):
            for j in range(i + 1, b + 1):
                edges.add((i, j))
    return UnitIntervalModel(Graph(n, sorted(edges)), range(n))


def diameter_endpoints(model: UnitIntervalModel) -> int:
    """Distance between the first and last position, by greedy right jumps.

    For a connected model this equals the diameter of the graph.
    """
    n = model.graph.n
    if n == 0:
        raise ValueError("empty graph has no diameter")
    steps = 0
    p = 0
    while p < n - 1:
        r = model.right[p]
        if r == p:
            raise ValueError("graph is disconnected")
        p = r
        steps += 1
    return steps


def percolation_time_biconnected(model: UnitIntervalModel) -> int:
    """Worst-case spreading time of a 2-connected unit interval graph."""
    return diameter_endpoints(split_singular_vertices(model))


@dataclass(frozen=True)
class CutSegment:
    """A maximal position range not crossed by any degree-2 cut vertex."""

    lo: int
    hi: int
    case_tag: str
    time: int


def _range_model(model: UnitIntervalModel, lo: int, hi: int) -> UnitIntervalModel:
    verts = [model.order[p] for p in range(lo, hi + 1)]
    m = len(verts)
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            if model.graph.has_edge(verts[i], verts[j]):
                edges.append((i, j))
    return UnitIntervalModel(Graph(m, edges), range(m))


def _segment_adjacency(model: UnitIntervalModel, lo: int, hi: int) -> list[set[int]]:
    m = hi - lo + 1
    adj: list[set[int]] = [set() for _ in range(m)]
    for p in range(lo, hi + 1):
        r = min(model.right[p], hi)
        for q in range(p + 1, r + 1):
            adj[p - lo].add(q - lo)
            adj[q - lo].add(p - lo)
    return adj


def _segment_time(model: UnitIntervalModel, a: int, b: int, left: str, right: str) -> int:
    """Worst completion time of segment a..b over all spanning start sets.

    The segment is a chain of 2-connected blocks joined at cut vertices.  A
    start set is normalized to at most two vertices per block: any vertex
    ignited by a larger set is already ignited by some pair inside it, and
    shrinking a start set never speeds anything up.  For a fixed choice of
    per-block seeds the spreading process is determined by the firing times
    of the cut vertices, and those times are the unique assignment where
    each cut fires one round after its second-earliest infected neighbor,
    counting neighbors on both sides.  The search below enumerates per-block
    seeds and candidate cut times left to right and keeps only assignments
    that satisfy that firing equation, so every surviving schedule is
    realizable and the realized worst case survives.

    Boundary kinds: ``anchor`` is a plain end of the whole vertex order,
    ``pendant`` is a degree-1 end whose vertex belongs to every spanning
    start set, and ``cut`` is a shared degree-2 cut vertex whose outside
    neighbor is modeled as one extra already-infected helper (the helper is
    free for the worst case: delaying it only delays the boundary vertex
    itself, and that delay is charged to the neighboring segment).
    """
    adj = _segment_adjacency(model, a, b)
    m = len(adj)
    decomp = blocks(Graph(m, sorted((p, q) for p in range(m) for q in adj[p] if p < q)))
    for blk in decomp.blocks:
        ps = sorted(blk)
        if ps[-1] - ps[0] + 1 != len(ps):
            raise RuntimeError("blocks of a unit interval order must be contiguous")
    bounds = [0, *sorted(decomp.cut_vertices), m - 1]
    nblocks = len(bounds) - 1
    left_helper = left == "cut"
    right_helper = right == "cut"
    forced = set()
    if left == "pendant":
        forced.add(0)
    if right == "pendant":
        forced.add(m - 1)
    tmax = m + 4

    evolve_memo: dict[tuple, dict[int, int]] = {}

    def evolve(
        i: int, sigma: frozenset[int], t_lo: Optional[int], t_hi: Optional[int]
    ) -> dict[int, int]:
        """Infection times inside block i with its ends clamped as given.

        ``t_lo``/``t_hi`` inject the block's boundary cut vertices at fixed
        rounds (None = no injection).  Vertices may still fire earlier
        through in-block neighbors; the caller's consistency check rejects
        clamp values that disagree with such earlier firings.  The returned
        map covers infected vertices only.
        """
        key = (i, sigma, t_lo, t_hi)
        got = evolve_memo.get(key)
        if got is not None:
            return got
        lo, hi = bounds[i], bounds[i + 1]
        infected = set(sigma)
        times = {p: 0 for p in sigma}
        if t_lo == 0 and lo not in infected:
            infected.add(lo)
            times[lo] = 0
        if t_hi == 0 and hi not in infected:
            infected.add(hi)
            times[hi] = 0
        for t in range(1, tmax + 1):
            fresh = []
            for p in range(lo, hi + 1):
                if p in infected:
                    continue
                cnt = sum(1 for q in adj[p] if lo <= q <= hi and q in infected)
                if p == 0 and left_helper:
                    cnt += 1
                if p == m - 1 and right_helper:
                    cnt += 1
                if cnt >= 2:
                    fresh.append(p)
            for p in fresh:
                infected.add(p)
                times[p] = t
            if t_lo == t and lo not in infected:
                infected.add(lo)
                times[lo] = t
            if t_hi == t and hi not in infected:
                infected.add(hi)
                times[hi] = t
        evolve_memo[key] = times
        return times

    def seed_choices(i: int) -> list[frozenset[int]]:
        lo, hi = bounds[i], bounds[i + 1]
        pool = [p for p in range(lo, hi + 1) if i == 0 or p != lo]
        musts = sorted(p for p in forced if lo <= p <= hi and (i == 0 or p != lo))
        if len(musts) >= 2:
            return [frozenset(musts[:2])]
        rest = [p for p in pool if p not in musts]
        out = [frozenset(musts)]
        for k, x in enumerate(rest):
            out.append(frozenset([*musts, x]))
            if not musts:
                out.extend(frozenset([x, y]) for y in rest[k + 1 :])
        return out

    def fire(entries: list[int]) -> Optional[int]:
        if len(entries) < 2:
            return None
        ranked = sorted(entries)
        return ranked[1] + 1

    def block_size(i: int) -> int:
        return bounds[i + 1] - bounds[i] + 1

    if nblocks == 1:
        best: Optional[int] = None
        for sigma in seed_choices(0):
            times = evolve(0, sigma, None, None)
            if len(times) < m:
                continue
            done = max(times.values())
            if best is None or done > best:
                best = done
        if best is None:
            raise RuntimeError("no spreading schedule covers the segment")
        return best

    left_nbrs = []
    right_nbrs = []
    for j in range(nblocks - 1):
        c = bounds[j + 1]
        left_nbrs.append([q for q in sorted(adj[c]) if bounds[j] <= q < c])
        right_nbrs.append([q for q in sorted(adj[c]) if c < q <= bounds[j + 2]])

    # State after choosing block j's seeds and cut j's time: the profile is
    # the firing times of the cut's left-side neighbors when the cut itself
    # is left unclamped, which is all the later blocks can ever observe.
    states: dict[tuple, int] = {}
    for sigma in seed_choices(0):
        seeded = bounds[1] in sigma
        profile = ()
        if not seeded:
            free = evolve(0, sigma, None, None)
            profile = tuple(free[q] for q in left_nbrs[0] if q in free)
        for u0 in [0] if seeded else range(tmax + 1):
            done = evolve(0, sigma, None, u0)
            if len(done) < block_size(0):
                continue
            key = (profile, u0, seeded)
            val = max(done.values())
            if states.get(key, -1) < val:
                states[key] = val

    answer: Optional[int] = None
    for j in range(nblocks - 1):
        last = j == nblocks - 2
        nxt: dict[tuple, int] = {}
        for (profile, u, seeded), val in states.items():
            for sigma in seed_choices(j + 1):
                for u2 in [None] if last else list(range(tmax + 1)):
                    if not seeded:
                        around = evolve(j + 1, sigma, None, u2)
                        entries = list(profile) + [
                            around[q] for q in right_nbrs[j] if q in around
                        ]
                        if fire(entries) != u:
                            continue
                    done = evolve(j + 1, sigma, u, u2)
                    if len(done) < block_size(j + 1):
                        continue
                    val2 = max(val, max(done.values()))
                    if last:
                        if answer is None or val2 > answer:
                            answer = val2
                        continue
                    seeded2 = bounds[j + 2] in sigma
                    if seeded2 and u2 != 0:
                        continue
                    profile2 = ()
                    if not seeded2:
                        free = evolve(j + 1, sigma, u, None)
                        profile2 = tuple(
                            free[q] for q in left_nbrs[j + 1] if q in free
                        )
                    key = (profile2, u2, seeded2)
                    if nxt.get(key, -1) < val2:
                        nxt[key] = val2
        states = nxt
    if answer is None:
        raise RuntimeError("no spreading schedule covers the segment")
    return answer


def _classify(model: UnitIntervalModel, a: int, b: int) -> CutSegment:
    if b - a == 1:
        return CutSegment(a, b, "edge", 1)
    n = model.graph.n
    deg_a = model.graph.degree(model.order[a])
    deg_b = model.graph.degree(model.order[b])
    left = "anchor" if (a == 0 and deg_a >= 2) else ("pendant" if a == 0 else "cut")
    right = "anchor" if (b == n - 1 and deg_b >= 2) else ("pendant" if b == n - 1 else "cut")
    if left == "anchor" and right == "anchor":
        tag = "two_anchors"
    elif right == "anchor":
        tag = "guarded_left"
    elif left == "anchor":
        tag = "guarded_right"
    elif left == "pendant" and right == "pendant":
        tag = "two_pendants"
    elif (left, right) in {("cut", "pendant"), ("pendant", "cut"), ("cut", "cut")}:
        tag = "guarded_both"
    else:
        raise RuntimeError(f"no spreading-time case applies to segment {a}..{b}")
    return CutSegment(a, b, tag, _segment_time(model, a, b, left, right))


def cut_segments(model: UnitIntervalModel) -> tuple[CutSegment, ...]:
    """Split the order at degree-2 cut vertices and time each piece.

    A degree-2 vertex whose two neighbors are non-adjacent never spreads
    infection across itself before being infected, so no edge joins the two
    sides and the worst start set works against one side at a time.
    """
    g = model.graph
    n = g.n
    if n < 3:
        raise ValueError("segment analysis needs at least three vertices")
    if not g.is_connected():
        raise ValueError("segment analysis needs a connected graph")
    cuts = [
        p
        for p in range(1, n - 1)
        if g.degree(model.order[p]) == 2
        and not g.has_edge(model.order[p - 1], model.order[p + 1])
    ]
    bounds = [0, *cuts, n - 1]
    return tuple(_classify(model, a, b) for a, b in zip(bounds, bounds[1:]))


def percolation_time(model: UnitIntervalModel) -> int:
    """Worst-case number of rounds to infect a connected unit interval graph."""
    g = model.graph
    if not g.is_connected():
        raise ValueError("percolation time is defined for connected graphs")
    if g.n <= 2:
        return 0
    return max(seg.time for seg in cut_segments(model))
