"""Command line interface.

Exit codes: 0 on success and agreement, 1 on usage or input errors, 2 when a
formula and an oracle (or a predictor and a direct check) disagree, 3 when a
requested computation exceeds a size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caterpillar import (
    decompose_degree_sequence,
    geodetic_number,
    hull_number,
    percolation_sequence,
    percolation_time as caterpillar_percolation_time,
    recognize_caterpillar,
)
from .crossval import (
    caterpillar_suite,
    full_suite,
    idempotence_suite,
    merge_reports,
    uig_suite,
)
from .generators import (
    DEFAULT_SEED,
    connected_graphs,
    random_biconnected_chain,
    random_caterpillar,
    random_unit_interval_graph,
    realize_caterpillar,
    spine_sequences,
)
from .graph import Graph, is_biconnected
from .graphio import (
    GraphDocument,
    ParseError,
    document_for,
    parse_document,
    serialize_documents,
)
from .hereditary import crosscheck_interval_idempotence, find_forbidden_patterns
from .oracle import (
    CapExceeded,
    DEFAULT_HULL_CAP,
    DEFAULT_TIME_CAP,
    geodetic_number_bruteforce,
    hull_number_bruteforce,
    percolation_time_bruteforce,
)
from .unit_interval import (
    build_model,
    cut_segments,
    diameter_endpoints,
    percolation_time as unit_interval_percolation_time,
    recognize_unit_interval,
    singular_positions,
    split_singular_vertices,
)

import random


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for real
    # disagreements, so usage problems are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    p = _Parser(
        prog="p3conv",
        description=(
            "Geodetic number, hull number and percolation time of caterpillar "
            "trees and unit interval graphs, with brute-force cross-checks."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify one graph document and print its parameters")
    a.add_argument("path", help="file containing a single graph document")
    a.add_argument("--oracle", action="store_true", help="also run the brute-force oracles")
    a.add_argument("--max-oracle-n", type=int, default=None, help="override the oracle size caps")
    a.add_argument("--format", choices=("text", "object"), default="text")
    a.set_defaults(func=_cmd_analyze)

    g = sub.add_parser("generate", help="write graph documents to stdout")
    g.add_argument(
        "kind",
        choices=(
            "caterpillar-exhaustive",
            "caterpillar-random",
            "uig-random",
            "uig-2connected-random",
            "all-connected",
        ),
    )
    g.add_argument("--size", type=int, default=None, help="spine length or vertex count, by kind")
    g.add_argument("--count", type=int, default=10, help="how many graphs, for random kinds")
    g.add_argument("--seed", type=int, default=DEFAULT_SEED)
    g.set_defaults(func=_cmd_generate)

    c = sub.add_parser("crossval", help="validate formulas against oracles over a corpus")
    c.add_argument("suite", choices=("caterpillar", "uig", "property-p", "all"))
    c.add_argument("--max-n", type=int, default=None, help="bound the instance sizes")
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--max-oracle-n", type=int, default=None, help="override the oracle size caps")
    c.add_argument("--format", choices=("text", "object"), default="text")
    c.set_defaults(func=_cmd_crossval)

    pc = sub.add_parser("propcheck", help="cross-check the idempotence pattern predictor")
    pc.add_argument("--max-n", type=int, default=6, help="largest vertex count to examine (at most 9)")
    pc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pc.add_argument("--format", choices=("text", "object"), default="text")
    pc.set_defaults(func=_cmd_propcheck)

    return p


def _print_payload(payload: dict, fmt: str) -> None:
    if fmt == "object":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            for k2, v2 in value.items():
                print(f"{key}.{k2}: {_fmt(v2)}")
        else:
            print(f"{key}: {_fmt(value)}")


def _fmt(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _cmd_analyze(args) -> int:
    doc = parse_document(Path(args.path).read_text())
    g = doc.to_graph()
    payload: dict = {}
    if doc.name:
        payload["name"] = doc.name
    payload["vertices"] = g.n
    payload["edge_count"] = g.edge_count

    struct = None
    model = None
    if doc.order is not None:
        model = build_model(g, doc.order)
        cls = "unit-interval"
    else:
        struct = recognize_caterpillar(g) if g.n >= 2 else None
        if struct is not None:
            cls = "caterpillar"
        else:
            model = recognize_unit_interval(g)
            cls = "unit-interval" if model is not None else "other"
    payload["class"] = cls

    formula_values: dict = {}
    if cls == "caterpillar":
        rds = struct.reduced_degrees
        seq = percolation_sequence(rds)
        payload["spine"] = list(struct.spine)
        payload["degree_profile"] = list(rds)
        payload["leaf_count"] = struct.leaf_count
        payload["factors"] = ["".join(str(d) for d in f) for f in decompose_degree_sequence(rds).factors]
        payload["spine_times"] = list(seq.times)
        formula_values = {
            "geodetic_number": geodetic_number(struct),
            "hull_number": hull_number(struct),
            "percolation_time": caterpillar_percolation_time(struct),
        }
        payload.update(formula_values)
    elif cls == "unit-interval":
        payload["order"] = list(model.order)
        payload["cliques"] = [[a, b] for a, b in model.cliques]
        payload["singular_positions"] = list(singular_positions(model))
        if g.is_connected():
            if g.n >= 3:
                payload["segments"] = [
                    f"{s.lo}..{s.hi} {s.case_tag} t={s.time}" for s in cut_segments(model)
                ]
            formula_values = {"percolation_time": unit_interval_percolation_time(model)}
            payload.update(formula_values)
            if is_biconnected(g):
                payload["split_diameter"] = diameter_endpoints(split_singular_vertices(model))
        else:
            payload["connected"] = False
    else:
        payload["forbidden_patterns"] = list(find_forbidden_patterns(g))
        if not args.oracle:
            print(
                "error: graph is neither a caterpillar nor a unit interval graph; "
                "rerun with --oracle for brute-force values",
                file=sys.stderr,
            )
            return 1

    exit_code = 0
    if args.oracle:
        search_cap = args.max_oracle_n or DEFAULT_HULL_CAP
        time_cap = args.max_oracle_n or DEFAULT_TIME_CAP
        oracle_values = {
            "geodetic_number": geodetic_number_bruteforce(g, search_cap),
            "hull_number": hull_number_bruteforce(g, search_cap),
        }
        if g.is_connected():
            oracle_values["percolation_time"] = percolation_time_bruteforce(g, time_cap)
        payload["oracle"] = oracle_values
        agreement = {
            key: formula_values[key] == oracle_values[key]
            for key in formula_values
            if key in oracle_values
        }
        if agreement:
            payload["agreement"] = agreement
            if not all(agreement.values()):
                exit_code = 2

    _print_payload(payload, args.format)
    return exit_code


def _cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    kind = args.kind
    docs: list[GraphDocument] = []
    if kind == "caterpillar-exhaustive":
        size = args.size if args.size is not None else 5
        if size < 2:
            raise ValueError("caterpillar-exhaustive needs --size of at least 2")
        for rds in spine_sequences(size):
            tag = "".join(str(d) for d in rds)
            docs.append(document_for(realize_caterpillar(rds), name=f"caterpillar-{tag}"))
    elif kind == "caterpillar-random":
        size = args.size if args.size is not None else 14
        for i in range(args.count):
            docs.append(document_for(random_caterpillar(rng, size), name=f"caterpillar-random-{i}"))
    elif kind == "uig-random":
        size = args.size if args.size is not None else 8
        for i in range(args.count):
            g, order = random_unit_interval_graph(rng, size)
            docs.append(document_for(g, order=order, name=f"uig-random-{i}"))
    elif kind == "uig-2connected-random":
        size = args.size if args.size is not None else 8
        for i in range(args.count):
            g, order = random_biconnected_chain(rng, size)
            docs.append(document_for(g, order=order, name=f"uig-2connected-{i}"))
    elif kind == "all-connected":
        size = args.size if args.size is not None else 5
        if not 1 <= size <= 7:
            raise ValueError("all-connected enumeration supports sizes 1 through 7")
        for i, g in enumerate(connected_graphs(size)):
            docs.append(document_for(g, name=f"connected-{size}-{i:03d}"))
    sys.stdout.write(serialize_documents(docs))
    return 0


def _cmd_crossval(args) -> int:
    seed = args.seed
    caps = {}
    if args.max_oracle_n is not None:
        caps = {"search_cap": args.max_oracle_n, "time_cap": args.max_oracle_n}
    if args.suite == "caterpillar":
        report = caterpillar_suite(
            seed=seed,
            max_n=args.max_n,
            random_max_n=min(14, args.max_n) if args.max_n else 14,
            **caps,
        )
    elif args.suite == "uig":
        report = uig_suite(
            seed=seed,
            max_n=args.max_n if args.max_n else 10,
            **({"time_cap": args.max_oracle_n} if args.max_oracle_n else {}),
        )
    elif args.suite == "property-p":
        report = idempotence_suite(max_n=args.max_n if args.max_n else 6, seed=seed)
    else:
        report = full_suite(seed=seed)

    if args.format == "object":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report.to_text())
    if report.skipped:
        print(
            f"warning: {len(report.skipped)} checks skipped beyond the oracle cap; "
            "raise --max-oracle-n to include them",
            file=sys.stderr,
        )
    return 2 if report.disagreements else 0


def _cmd_propcheck(args) -> int:
    report = crosscheck_interval_idempotence(max_n=args.max_n, seed=args.seed)
    if args.format == "object":
        payload = {
            "max_n": report.max_n,
            "checked": report.checked,
            "forward_violations": [d.__dict__ for d in report.forward_violations],
            "reverse_findings": [d.__dict__ for d in report.reverse_findings],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"graphs checked: {report.checked} (sizes up to {report.max_n})")
        print(f"forward violations (pattern present, still idempotent): {len(report.forward_violations)}")
        print(f"reverse findings (pattern-free, not idempotent): {len(report.reverse_findings)}")
        for d in list(report.forward_violations) + list(report.reverse_findings):
            kind = "forward" if d.idempotent else "reverse"
            edges = " ".join(f"{u}-{w}" for u, w in d.edges)
            print(f"  [{kind}] n={d.vertex_count} graph6={d.graph6} edges: {edges}")
    return 2 if not report.clean else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
