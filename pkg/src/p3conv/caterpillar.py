"""Closed-form infection parameters for caterpillar trees.

A caterpillar is a tree whose non-leaf vertices form a path.  All three
parameters computed here (minimum one-round cover, minimum percolating set,
worst-case infection time) depend only on the tree's capped degree profile
along a longest path, plus the leaf count.  The profile caps each degree at
four because a spine vertex with two infected leaf neighbors is infected in
the first round no matter how many further leaves it carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph

_VALID_VALUES = (1, 2, 3, 4)


@dataclass(frozen=True)
class CaterpillarStructure:
    """A caterpillar described by a longest path and the leaves hanging off it.

    spine            vertices of a longest path, in path order
    reduced_degrees  degree of each spine vertex, capped at four
    leaves           for each spine position, its attached off-spine leaves
    """

    spine: tuple[int, ...]
    reduced_degrees: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]

    @property
    def leaf_count(self) -> int:
        """Number of degree-one vertices of the whole tree."""
        hanging = sum(len(group) for group in self.leaves)
        if len(self.spine) == 1:
            return hanging
        return hanging + 2

    def reversed(self) -> "CaterpillarStructure":
        """The same caterpillar walked from the other end of the spine."""
        return CaterpillarStructure(
            spine=self.spine[::-1],
            reduced_degrees=self.reduced_degrees[::-1],
            leaves=self.leaves[::-1],
        )


def recognize_caterpillar(g: Graph) -> Optional[CaterpillarStructure]:
    """Structure of g if it is a caterpillar tree, else None.

    Graphs with fewer than two vertices are outside the domain and raise
    ValueError rather than returning None.
    """
    if g.n < 2:
        raise ValueError("caterpillar recognition needs at least two vertices")
    if g.edge_count != g.n - 1 or not g.is_connected():
        return None

    def farthest(src: int) -> tuple[int, dict[int, int]]:
        parent = {src: src}
        frontier = [src]
        last = src
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w not in parent:
                        parent[w] = u
                        nxt.append(w)
            if nxt:
                last = nxt[-1]
            frontier = nxt
        return last, parent

    end_a, _ = farthest(0)
    end_b, parent = farthest(end_a)
    path = [end_b]
    while path[-1] != end_a:
        path.append(parent[path[-1]])
    spine = tuple(path)
    on_spine = set(spine)

    for v in range(g.n):
        if v in on_spine:
            continue
        if g.degree(v) != 1:
            return None
        (anchor,) = g.adj(v)
        if anchor not in on_spine:
            return None

    return CaterpillarStructure(
        spine=spine,
        reduced_degrees=tuple(min(g.degree(v), 4) for v in spine),
        leaves=tuple(
            tuple(sorted(w for w in g.adj(v) if w not in on_spine)) for v in spine
        ),
    )


def is_basic_sequence(seq: Sequence[int]) -> bool:
    """Whether seq is one of the indivisible factor shapes.

    The shapes are: a bare 1; a 2 followed by one value; or a 3 or 4, then a
    run of 4s, closed off either by a terminal 1 or 2 or by a 3 plus one
    further value.
    """
    s = tuple(seq)
    if not s or any(x not in _VALID_VALUES for x in s):
        return False
    if s[0] == 1:
        return len(s) == 1
    if s[0] == 2:
        return len(s) == 2
    i = 1
    while i < len(s) and s[i] == 4:
        i += 1
    if i >= len(s):
        return False
    if s[i] in (1, 2):
        return i == len(s) - 1
    return i + 2 == len(s)


@dataclass(frozen=True)
class SpineFactorization:
    """A degree profile split into consecutive indivisible factors."""

    factors: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.factors)


def decompose_degree_sequence(seq: Sequence[int]) -> SpineFactorization:
    """Split a degree profile into its unique sequence of indivisible factors.

    Greedy from the left: a 1 stands alone; a 2 takes the next value with it;
    a 3 or 4 absorbs the following run of 4s and closes at the first value
    that is a 1 or 2, or one step past it when that value is a 3.  Any profile
    ending in 1 splits completely; otherwise ValueError is raised.
    """
    s = tuple(seq)
    if not s:
        raise ValueError("empty degree profile")
    for x in s:
        if x not in _VALID_VALUES:
            raise ValueError(f"degree profile value {x} outside 1..4")
    factors: list[tuple[int, ...]] = []
    i = 0
    while i < len(s):
        head = s[i]
        if head == 1:
            j = i + 1
        elif head == 2:
            j = i + 2
        else:
            k = i + 1
            while k < len(s) and s[k] == 4:
                k += 1
            if k == len(s):
                j = k + 1
            elif s[k] in (1, 2):
                j = k + 1
            else:
                j = k + 2
        if j > len(s):
            raise ValueError(f"profile {s} has no complete factor at offset {i}")
        factors.append(s[i:j])
        i = j
    return SpineFactorization(tuple(factors))


@dataclass(frozen=True)
class PercolationSequence:
    """Per-position worst-case infection times along a caterpillar spine.

    Positions are grouped into runs: consecutive capped-3 positions share a
    run, every other position is a run by itself.  run_ids numbers the runs
    from 1; run_starts and run_ends give each position's run boundaries as
    0-based positions.  times[i] is the largest round at which spine position
    i can become infected under any percolating start set.
    """

    run_ids: tuple[int, ...]
    run_starts: tuple[int, ...]
    run_ends: tuple[int, ...]
    times: tuple[int, ...]

    @property
    def worst_time(self) -> int:
        return max(self.times)


def percolation_sequence(seq: Sequence[int]) -> PercolationSequence:
    """Worst-case infection round of every spine position, from the degree profile."""
    s = tuple(seq)
    k = len(s)
    if k == 0:
        raise ValueError("empty degree profile")
    if s[0] != 1 or s[-1] != 1:
        raise ValueError("degree profile must start and end with 1")
    for x in s[1:-1]:
        if x not in (2, 3, 4):
            raise ValueError(f"interior profile value {x} outside 2..4")

    run_ids = [1]
    for i in range(1, k):
        same_run = s[i] == 3 and s[i - 1] == 3
        run_ids.append(run_ids[-1] if same_run else run_ids[-1] + 1)

    run_starts = [0] * k
    run_ends = [0] * k
    i = 0
    while i < k:
        j = i
        while j + 1 < k and run_ids[j + 1] == run_ids[i]:
            j += 1
        for p in range(i, j + 1):
            run_starts[p] = i
            run_ends[p] = j
        i = j + 1

    times: list[int] = [0] * k
    for i in range(k):
        if s[i] == 1:
            times[i] = 0
        elif s[i] == 4:
            times[i] = 1
        elif s[i] == 3:
            lo, hi = run_starts[i], run_ends[i]
            before, after = s[lo - 1], s[hi + 1]
            a, b = i - lo, hi - i
            if before == 1 and after == 1:
                t = min(a, b) + 1
            elif before == 2 and after == 2:
                # With degree-2 flanks the infection cannot enter the run
                # until a seed touches it, and the worst seed sits at the far
                # side, so this is a max, not a min like the 1,1 case.
                t = max(a, b) + 1
            elif before == 1 and after == 2:
                t = a + 1
            elif before == 2 and after == 1:
                t = b + 1
            elif before == 1 and after == 4:
                t = min(a + 1, b + 2)
            elif before == 4 and after == 1:
                t = min(a + 2, b + 1)
            elif before == 4 and after == 2:
                t = a + 2
            elif before == 2 and after == 4:
                t = b + 2
            else:
                t = min(a, b) + 2
            times[i] = t
    for i in range(k):
        if s[i] != 2:
            continue
        left_small = s[i - 1] in (1, 2)
        right_small = s[i + 1] in (1, 2)
        if left_small and right_small:
            times[i] = 1
        elif left_small:
            times[i] = times[i + 1] + 1
        elif right_small:
            times[i] = times[i - 1] + 1
        else:
            times[i] = max(times[i - 1], times[i + 1]) + 1

    return PercolationSequence(
        run_ids=tuple(run_ids),
        run_starts=tuple(run_starts),
        run_ends=tuple(run_ends),
        times=tuple(times),
    )


def geodetic_number(structure: CaterpillarStructure) -> int:
    """Minimum size of a set covering the tree in a single infection round."""
    if len(structure.spine) == 1:
        return 1
    split = decompose_degree_sequence(structure.reduced_degrees)
    return split.count + structure.leaf_count - 2


def _paired_twos(values: Sequence[int]) -> int:
    total = 0
    run = 0
    for d in values:
        if d == 2:
            run += 1
        else:
            total += run // 2
            run = 0
    return total + run // 2


def hull_number(structure: CaterpillarStructure) -> int:
    """Minimum size of a set whose infection eventually covers the tree.

    Every leaf is needed; beyond that, each maximal stretch of capped-2
    spine positions (measured after dropping the capped-3 positions, which
    relay infection on their own) demands one extra seed per two positions.
    """
    if len(structure.spine) == 1:
        return 1
    pruned = [d for d in structure.reduced_degrees if d != 3]
    return structure.leaf_count + _paired_twos(pruned)


def percolation_time(structure: CaterpillarStructure) -> int:
    """Largest number of rounds a percolating set can take to cover the tree."""
    if len(structure.spine) == 1:
        return 0
    return percolation_sequence(structure.reduced_degrees).worst_time
