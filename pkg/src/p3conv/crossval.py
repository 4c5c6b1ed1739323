"""Cross-validation of closed-form parameters against the brute-force oracles.

Each suite generates a corpus, computes every parameter twice (formula and
oracle) and returns a report of per-check rows.  Instances too large for an
oracle cap are recorded as skipped rather than silently dropped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter

from .caterpillar import (
    geodetic_number,
    hull_number,
    percolation_time as caterpillar_percolation_time,
    recognize_caterpillar,
)
from .generators import (
    DEFAULT_SEED,
    connected_graphs,
    random_biconnected_chain,
    random_caterpillar,
    random_clique_chain,
    random_connected_graph,
    random_unit_interval_graph,
    realize_caterpillar,
    spine_sequences,
)
from .graph import is_biconnected
from .graphio import to_graph6
from .hereditary import interval_idempotent_by_patterns
from .oracle import (
    DEFAULT_HULL_CAP,
    DEFAULT_PROPERTY_CAP,
    DEFAULT_TIME_CAP,
    geodetic_number_bruteforce,
    hull_number_bruteforce,
    interval_idempotent_bruteforce,
    percolation_time_bruteforce,
)
from .unit_interval import (
    build_model,
    percolation_time as unit_interval_percolation_time,
    percolation_time_biconnected,
)


@dataclass(frozen=True)
class CheckRow:
    instance: str
    parameter: str
    formula: int
    oracle: int
    runtime: float

    @property
    def agree(self) -> bool:
        return self.formula == self.oracle


@dataclass(frozen=True)
class ValidationReport:
    rows: tuple[CheckRow, ...]
    skipped: tuple[str, ...] = ()

    @property
    def disagreements(self) -> tuple[CheckRow, ...]:
        return tuple(r for r in self.rows if not r.agree)

    @property
    def summary(self) -> dict:
        bad = len(self.disagreements)
        return {
            "rows": len(self.rows),
            "agreeing": len(self.rows) - bad,
            "disagreeing": bad,
            "skipped": len(self.skipped),
        }

    def to_text(self) -> str:
        lines = ["instance\tparameter\tformula\toracle\tagree\tseconds"]
        for r in self.rows:
            lines.append(
                f"{r.instance}\t{r.parameter}\t{r.formula}\t{r.oracle}"
                f"\t{'yes' if r.agree else 'NO'}\t{r.runtime:.6f}"
            )
        for s in self.skipped:
            lines.append(f"# skipped beyond oracle cap: {s}")
        summ = self.summary
        lines.append(
            "# summary: rows={rows} agreeing={agreeing} "
            "disagreeing={disagreeing} skipped={skipped}".format(**summ)
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "rows": [
                {
                    "instance": r.instance,
                    "parameter": r.parameter,
                    "formula": r.formula,
                    "oracle": r.oracle,
                    "agree": r.agree,
                    "seconds": r.runtime,
                }
                for r in self.rows
            ],
            "skipped": list(self.skipped),
            "summary": self.summary,
        }


def merge_reports(*reports: ValidationReport) -> ValidationReport:
    rows = []
    skipped = []
    for rep in reports:
        rows.extend(rep.rows)
        skipped.extend(rep.skipped)
    return ValidationReport(tuple(rows), tuple(skipped))


def _sorted_report(rows, skipped) -> ValidationReport:
    rows.sort(key=lambda r: (r.instance, r.parameter))
    return ValidationReport(tuple(rows), tuple(skipped))


def caterpillar_suite(
    spine_max: int = 8,
    random_count: int = 500,
    random_max_n: int = 14,
    seed: int = DEFAULT_SEED,
    max_n: int | None = None,
    search_cap: int = DEFAULT_HULL_CAP,
    time_cap: int = DEFAULT_TIME_CAP,
) -> ValidationReport:
    """Exhaustive spine profiles plus random caterpillars, three rows each.

    The exhaustive part realizes every capped degree profile with up to
    spine_max positions, once with the default leaf counts and once with
    three leaves on each profile-4 position.  max_n, when given, drops
    larger instances from the corpus entirely; the oracle caps only skip
    individual checks.
    """
    rows: list[CheckRow] = []
    skipped: list[str] = []

    def check(instance, g, struct):
        plan = [
            ("geodetic_number", geodetic_number, geodetic_number_bruteforce, search_cap),
            ("hull_number", hull_number, hull_number_bruteforce, search_cap),
            (
                "percolation_time",
                caterpillar_percolation_time,
                percolation_time_bruteforce,
                time_cap,
            ),
        ]
        for param, ffn, ofn, cap in plan:
            if g.n > cap:
                skipped.append(f"{instance}/{param}")
                continue
            t0 = perf_counter()
            fv = ffn(struct)
            ov = ofn(g, cap)
            rows.append(CheckRow(instance, param, fv, ov, perf_counter() - t0))

    def handle(instance, g):
        if max_n is not None and g.n > max_n:
            return
        struct = recognize_caterpillar(g)
        if struct is None:
            raise AssertionError(f"{instance}: generated graph is not a caterpillar")
        check(instance, g, struct)

    for rds in spine_sequences(spine_max):
        tag = "".join(str(d) for d in rds)
        handle(f"cat-ex-{tag}", realize_caterpillar(rds))
        heavy = {i: 3 for i, d in enumerate(rds) if d == 4}
        if heavy:
            handle(f"cat-ex4-{tag}", realize_caterpillar(rds, heavy))

    rng = random.Random(seed)
    for i in range(random_count):
        handle(f"cat-rnd-{i:04d}", random_caterpillar(rng, random_max_n))

    return _sorted_report(rows, skipped)


def uig_suite(
    count: int = 300,
    max_n: int = 10,
    seed: int = DEFAULT_SEED,
    time_cap: int = DEFAULT_TIME_CAP,
) -> ValidationReport:
    """Random unit interval graphs of three flavors, spreading time rows.

    One third is sampled from random points on the line, one third from
    loosely overlapping clique chains (these carry cut vertices), one third
    from 2-connected chains (these carry singular positions).  2-connected
    instances get an extra row for the diameter shortcut.
    """
    rows: list[CheckRow] = []
    skipped: list[str] = []
    rng = random.Random(seed)

    makers = [
        ("uig-rnd", lambda: random_unit_interval_graph(rng, rng.randint(2, max_n))),
        ("uig-chain", lambda: random_clique_chain(rng, rng.randint(3, max_n))),
        ("uig-2conn", lambda: random_biconnected_chain(rng, rng.randint(3, max_n))),
    ]
    per = [count - 2 * (count // 3), count // 3, count // 3]
    for (prefix, make), quota in zip(makers, per):
        for i in range(quota):
            instance = f"{prefix}-{i:04d}"
            g, order = make()
            model = build_model(g, order)
            if g.n > time_cap:
                skipped.append(f"{instance}/percolation_time")
                continue
            t0 = perf_counter()
            fv = unit_interval_percolation_time(model)
            ov = percolation_time_bruteforce(g, time_cap)
            rows.append(
                CheckRow(instance, "percolation_time", fv, ov, perf_counter() - t0)
            )
            if is_biconnected(g):
                t0 = perf_counter()
                bv = percolation_time_biconnected(model)
                rows.append(
                    CheckRow(
                        instance,
                        "percolation_time_biconnected",
                        bv,
                        ov,
                        perf_counter() - t0,
                    )
                )

    return _sorted_report(rows, skipped)


def idempotence_suite(
    max_n: int = 6,
    seed: int = DEFAULT_SEED,
    samples_per_size: int = 120,
    property_cap: int = DEFAULT_PROPERTY_CAP,
) -> ValidationReport:
    """Pattern-predicted interval idempotence against the exhaustive check.

    Connected graphs up to min(max_n, 7) vertices are enumerated completely;
    larger sizes (up to the cap) are sampled.  Booleans are recorded as 0/1
    rows keyed by graph6 string.
    """
    rows: list[CheckRow] = []
    skipped: list[str] = []

    def probe(g):
        instance = f"g6-{to_graph6(g)}"
        if g.n > property_cap:
            skipped.append(f"{instance}/interval_idempotent")
            return
        t0 = perf_counter()
        fv = int(interval_idempotent_by_patterns(g))
        ov = int(interval_idempotent_bruteforce(g, property_cap))
        rows.append(
            CheckRow(instance, "interval_idempotent", fv, ov, perf_counter() - t0)
        )

    for n in range(1, min(max_n, 7) + 1):
        for g in connected_graphs(n):
            probe(g)
    if max_n > 7:
        rng = random.Random(seed)
        for n in range(8, max_n + 1):
            seen = set()
            for _ in range(samples_per_size):
                g = random_connected_graph(rng, n)
                key = tuple(g.edges())
                if key not in seen:
                    seen.add(key)
                    probe(g)

    return _sorted_report(rows, skipped)


def full_suite(seed: int = DEFAULT_SEED) -> ValidationReport:
    return merge_reports(
        caterpillar_suite(seed=seed),
        uig_suite(seed=seed),
        idempotence_suite(seed=seed),
    )
