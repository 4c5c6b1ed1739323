"""Undirected simple graphs and the small structural algorithms everything else builds on.

Vertices are dense integers 0..n-1. A Graph is immutable after construction,
so instances can be shared freely and used as dictionary keys.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._hash: Optional[int] = None

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, [(0, i + 1) for i in range(leaves)])

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} outside range 0..{self.n - 1}")

    def adj(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return tuple(sorted(self.adj(v)))

    def degree(self, v: int) -> int:
        return len(self.adj(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def distance(self, u: int, v: int) -> Optional[int]:
        """Hop count of a shortest path, or None if v is unreachable from u."""
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for w in self._adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    if w == v:
                        return dist[w]
                    queue.append(w)
        return None

    def diameter(self) -> int:
        """Largest pairwise distance. Raises ValueError on a disconnected graph."""
        if self.n == 0:
            raise ValueError("diameter of the empty graph is undefined")
        best = 0
        for s in range(self.n):
            dist = {s: 0}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for w in self._adj[x]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        queue.append(w)
            if len(dist) != self.n:
                raise ValueError("diameter is undefined for a disconnected graph")
            best = max(best, max(dist.values()))
        return best

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertices, reindexed in ascending order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check(v)
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[w])
            for u in vs
            for w in self._adj[u]
            if u < w and w in index
        ]
        return Graph(len(vs), edges)


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal subgraphs without their own cut vertex, plus the cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Decompose g into blocks via depth-first search lowpoints.

    Every edge lies in exactly one block; isolated vertices form singleton
    blocks so that each vertex belongs to at least one.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    out: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            out.append(frozenset((root,)))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                members: set[int] = set()
                while edge_stack:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (u, v):
                        break
                out.append(frozenset(members))
                if u != root:
                    cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    return BlockDecomposition(blocks=tuple(out), cut_vertices=frozenset(cuts))


def is_biconnected(g: Graph) -> bool:
    """True for connected graphs on three or more vertices with no cut vertex."""
    return g.n >= 3 and g.is_connected() and not blocks(g).cut_vertices


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """True when some vertex subset of g induces a graph isomorphic to pattern.

    Meant for small patterns (a handful of vertices); candidate subsets are
    pruned by degree multiset before any bijection is tried.
    """
    k = pattern.n
    if k > g.n:
        return False
    if k == 0:
        return True
    pat_adj = [pattern.adj(v) for v in range(k)]
    pat_degs = sorted(len(a) for a in pat_adj)
    for subset in combinations(range(g.n), k):
        members = frozenset(subset)
        ind_deg = {v: len(g.adj(v) & members) for v in subset}
        if sorted(ind_deg.values()) != pat_degs:
            continue
        for perm in permutations(subset):
            if any(ind_deg[perm[i]] != len(pat_adj[i]) for i in range(k)):
                continue
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    if (j in pat_adj[i]) != g.has_edge(perm[i], perm[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False
