"""Acceptance suite: ten checks, one verdict line each.

Each test prints a [criterion NN] line through the shared recorder;
the conftest hook echoes all lines after the run.  Criterion 9 is a
known failure: the claimed bound is false and the test demonstrates a
counterexample instead of pretending otherwise.  Everything else must
pass.
"""

import random
from time import perf_counter

import pytest

from conftest import record_criterion
from p3conv.caterpillar import (
    decompose_degree_sequence,
    geodetic_number,
    hull_number,
    percolation_sequence,
    percolation_time,
    recognize_caterpillar,
)
from p3conv.crossval import caterpillar_suite
from p3conv.generators import (
    DEFAULT_SEED,
    connected_graphs,
    random_biconnected_chain,
    random_clique_chain,
    random_connected_graph,
    random_unit_interval_graph,
    realize_caterpillar,
    spine_sequences,
)
from p3conv.graph import Graph, blocks, is_biconnected
from p3conv.hereditary import crosscheck_interval_idempotence
from p3conv.oracle import (
    geodetic_number_bruteforce,
    hull_closure,
    hull_number_bruteforce,
    interval,
    interval_idempotent_bruteforce,
    percolation_time_bruteforce,
)
from p3conv.unit_interval import (
    build_model,
    diameter_endpoints,
    percolation_time as interval_percolation_time,
    singular_positions,
    split_singular_vertices,
)

REFERENCE_PROFILE = (1, 4, 3, 4, 2, 3, 3, 1)
STEP_PROFILE = (1, 2, 3, 4, 2, 3, 3, 1)


def best_time(fn, repeats=5):
    fn()  # warm caches before timing
    best = min(timed(fn) for _ in range(repeats))
    return best


def timed(fn):
    t0 = perf_counter()
    fn()
    return perf_counter() - t0


@pytest.fixture(scope="module")
def interval_corpus():
    rng = random.Random(DEFAULT_SEED)
    makers = [
        (random_unit_interval_graph, 2),
        (random_clique_chain, 3),
        (random_biconnected_chain, 3),
    ]
    corpus = []
    for i in range(300):
        make, lo = makers[i % 3]
        g, order = make(rng, rng.randint(lo, 10))
        corpus.append((g, build_model(g, order)))
    return corpus


def test_criterion_01_profile_factorization():
    f = decompose_degree_sequence(REFERENCE_PROFILE)
    ok = f.factors == ((1,), (4, 3, 4), (2, 3), (3, 1)) and f.count == 4
    r = decompose_degree_sequence(REFERENCE_PROFILE[::-1])
    ok = ok and r.factors == ((1,), (3, 3, 2), (4, 3, 4), (1,)) and r.count == 4
    elapsed = best_time(lambda: decompose_degree_sequence(REFERENCE_PROFILE))
    ok = ok and elapsed < 0.001
    record_criterion(1, "profile factorization", ok, f"{elapsed * 1e6:.0f}us per call")
    assert ok


def test_criterion_02_spreading_step_vectors():
    p = percolation_sequence(STEP_PROFILE)
    ok = (
        p.run_ids == (1, 2, 3, 4, 5, 6, 6, 7)
        and p.run_starts == (0, 1, 2, 3, 4, 5, 5, 7)
        and p.run_ends == (0, 1, 2, 3, 4, 6, 6, 7)
        and p.times == (0, 3, 2, 1, 3, 2, 1, 0)
        and max(p.times) == 3
    )
    elapsed = best_time(lambda: percolation_sequence(STEP_PROFILE))
    ok = ok and elapsed < 0.001
    record_criterion(2, "spreading step vectors", ok, f"{elapsed * 1e6:.0f}us per call")
    assert ok


def test_criterion_03_caterpillar_formulas_vs_oracle():
    t0 = perf_counter()
    rep = caterpillar_suite(
        spine_max=8, random_count=500, random_max_n=14, search_cap=26, time_cap=26
    )
    elapsed = perf_counter() - t0
    ok = not rep.disagreements and not rep.skipped and elapsed < 300
    record_criterion(
        3,
        "caterpillar formulas vs oracle",
        ok,
        f"{len(rep.rows)} checks, {len(rep.disagreements)} disagreements, {elapsed:.1f}s",
    )
    assert ok, rep.disagreements[:5]


def test_criterion_04_orientation_invariance():
    checked = 0
    ok = True
    for profile in spine_sequences(8):
        s = recognize_caterpillar(realize_caterpillar(profile))
        r = s.reversed()
        ok = ok and geodetic_number(s) == geodetic_number(r)
        ok = ok and hull_number(s) == hull_number(r)
        ok = ok and percolation_time(s) == percolation_time(r)
        ok = ok and (
            decompose_degree_sequence(profile).count
            == decompose_degree_sequence(profile[::-1]).count
        )
        checked += 1
    record_criterion(4, "orientation invariance", ok, f"{checked} profiles")
    assert ok


def test_criterion_05_interval_graph_times_vs_oracle(interval_corpus):
    t0 = perf_counter()
    two_connected = 0
    with_singulars = 0
    bad = []
    for g, model in interval_corpus:
        if interval_percolation_time(model) != percolation_time_bruteforce(g):
            bad.append(model)
        if singular_positions(model):
            with_singulars += 1
        if is_biconnected(g):
            two_connected += 1
            split = split_singular_vertices(model)
            for (a1, b1), (a2, b2) in zip(split.cliques, split.cliques[1:]):
                if b1 - a2 + 1 < 2:
                    bad.append(("split overlap", model))
            if percolation_time_bruteforce(split.graph) != percolation_time_bruteforce(g):
                bad.append(("split time", model))
    elapsed = perf_counter() - t0
    ok = not bad and two_connected >= 50 and with_singulars >= 50 and elapsed < 600
    record_criterion(
        5,
        "interval graph times vs oracle",
        ok,
        f"300 instances, {two_connected} 2-connected, "
        f"{with_singulars} with singular positions, {elapsed:.1f}s",
    )
    assert ok, bad[:3]


def test_criterion_06_endpoint_distance_shortcut(interval_corpus):
    def bfs_diameter(g):
        best = 0
        for src in range(g.n):
            dist = {src: 0}
            frontier = [src]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in g.adj(u):
                        if w not in dist:
                            dist[w] = dist[u] + 1
                            nxt.append(w)
                frontier = nxt
            best = max(best, max(dist.values()))
        return best

    ok = all(diameter_endpoints(model) == bfs_diameter(g) for g, model in interval_corpus)
    record_criterion(6, "endpoint distance shortcut", ok, f"{len(interval_corpus)} instances")
    assert ok


def test_criterion_07_idempotence_pattern_crosscheck():
    rep = crosscheck_interval_idempotence(max_n=6)
    for d in rep.reverse_findings:
        print(
            f"  reverse finding: n={d.vertex_count} graph6={d.graph6} "
            f"edges={d.edges} pattern_free={d.pattern_free} idempotent={d.idempotent}"
        )
    ok = (
        rep.forward_violations == ()
        and {d.graph6 for d in rep.reverse_findings} == {"D]_", "EFj?", "E]Q?"}
    )
    record_criterion(
        7,
        "idempotence pattern crosscheck",
        ok,
        f"{rep.checked} graphs, 0 forward violations, "
        f"{len(rep.reverse_findings)} reverse findings reported above",
    )
    assert ok


def test_criterion_08_idempotent_graphs_have_equal_invariants():
    checked = 0
    ok = True
    for n in range(2, 7):
        for g in connected_graphs(n):
            if interval_idempotent_bruteforce(g):
                checked += 1
                ok = ok and hull_number_bruteforce(g) == geodetic_number_bruteforce(g)
    record_criterion(
        8, "idempotent graphs have equal invariants", ok, f"{checked} idempotent graphs"
    )
    assert ok


def test_criterion_09_blockwise_time_bound():
    """Claimed: whole-graph spreading time is at most the sum over blocks.

    The claim is false.  Any path on three vertices already violates it:
    both blocks are single edges with spreading time 0, yet the whole
    path needs one round.  This test documents the failure honestly
    rather than weakening the check.
    """
    rng = random.Random(DEFAULT_SEED)
    violations = []
    for i in range(200):
        g = random_connected_graph(rng, rng.randint(2, 10))
        whole = percolation_time_bruteforce(g, max_n=12)
        total = 0
        for vs in blocks(g).blocks:
            order = sorted(vs)
            index = {v: k for k, v in enumerate(order)}
            sub = Graph(
                len(order),
                [(index[u], index[v]) for u, v in g.edges() if u in index and v in index],
            )
            total += percolation_time_bruteforce(sub, max_n=12)
        if whole > total:
            violations.append((i, g, whole, total))
    ok = not violations
    detail = f"{len(violations)} of 200 instances violate the bound"
    record_criterion(9, "blockwise time bound", ok, detail)
    if violations:
        i, g, whole, total = violations[0]
        p3 = Graph(3, [(0, 1), (1, 2)])
        print("  the claimed bound fails; smallest counterexample: path on 3 vertices")
        print(
            f"    whole-graph time {percolation_time_bruteforce(p3)}, "
            f"blocks are two single edges with time 0 each, sum 0"
        )
        print(
            f"  first corpus violation: instance {i}, n={g.n}, "
            f"edges={g.edges()}, whole={whole}, block sum={total}"
        )
        pytest.fail(
            "the blockwise bound is false: "
            f"{len(violations)} of 200 corpus instances exceed the block sum "
            f"(first: whole={whole} > sum={total}); "
            "a path on three vertices is the minimal counterexample"
        )


def test_criterion_10_invariant_inequality_and_process_properties():
    t0 = perf_counter()
    ok = True
    exhaustive = 0
    for n in range(1, 8):
        for g in connected_graphs(n):
            exhaustive += 1
            ok = ok and hull_number_bruteforce(g) <= geodetic_number_bruteforce(g)

    rng = random.Random(DEFAULT_SEED)
    randomized = 0
    for _ in range(10_000):
        g = random_connected_graph(rng, rng.randint(2, 8))
        small = {v for v in range(g.n) if rng.random() < 0.4}
        grow = small | {v for v in range(g.n) if rng.random() < 0.3}
        spread = interval(g, small)
        ok = ok and small <= spread
        ok = ok and spread <= interval(g, grow)
        closed = hull_closure(g, small)
        ok = ok and hull_closure(g, closed) == closed
        randomized += 3
    elapsed = perf_counter() - t0
    ok = ok and randomized >= 10_000
    record_criterion(
        10,
        "invariant inequality and process properties",
        ok,
        f"{exhaustive} exhaustive graphs, {randomized} randomized checks, {elapsed:.1f}s",
    )
    assert ok
