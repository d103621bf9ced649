"""Command-line surface: analyze, census, bases, fan, decompose.

Machine-readable output is JSON with a stable field order and no
environment-dependent content (timings are opt-in), so identical inputs
and budgets reproduce byte-identical documents.  Exit codes: 0 success,
1 parse error, 2 budget exceeded somewhere.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import __version__
from .classify import (
    Budget,
    ClassificationReport,
    classify,
    is_mg,
    is_ring_graph,
    odd_cycle_decompose,
    theta_decompose,
)
from .errors import BudgetExceededError, ParseError, ToricGraphsError
from .fan import enumerate_reduced_gbs
from .formats import (
    binomial_to_text,
    iter_graph6_lines,
    parse_edge_list,
    parse_graph6_line,
    encode_graph6,
)
from .graphs import Graph, is_bipartite
from .ideals import markov_basis_bipartite, toric_ideal, universal_markov_basis
from .lattice import minimal_generators

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_BUDGET = 2


@dataclass
class InputSpec:
    """Where graphs come from and how to read them.

    ``fmt`` is detected from the file extension unless given explicitly;
    an explicit flag wins.  ``line_range`` selects 1-based inclusive lines
    of a graph6 stream.
    """

    source: str
    fmt: str
    line_range: tuple[Optional[int], Optional[int]] = (None, None)


def _detect_format(path: str, explicit: Optional[str]) -> str:
    if explicit:
        return explicit
    if path.endswith(".g6") or path.endswith(".graph6"):
        return "graph6"
    return "edgelist"


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="ascii") as fh:
        return fh.read()


def load_graphs(spec: InputSpec) -> list[tuple[str, Graph]]:
    """(label, graph) pairs from the input; label is line-based for streams."""
    text = _read_text(spec.source)
    if spec.fmt == "edgelist":
        return [(spec.source, parse_edge_list(text))]
    lo, hi = spec.line_range
    out = []
    for lineno, line in iter_graph6_lines(text):
        if lo is not None and lineno < lo:
            continue
        if hi is not None and lineno > hi:
            continue
        out.append((f"{spec.source}:{lineno}", parse_graph6_line(line)))
    return out


def _parse_line_range(raw: Optional[str]) -> tuple[Optional[int], Optional[int]]:
    if not raw:
        return (None, None)
    lo, _, hi = raw.partition(":")
    return (int(lo) if lo else None, int(hi) if hi else None)


def _budget_from_args(args: argparse.Namespace) -> Budget:
    return Budget(
        max_cycles=args.max_cycles,
        max_fiber=args.max_fiber,
        max_cones=args.max_cones,
        seed=args.seed,
    )


def report_to_dict(r: ClassificationReport, with_timings: bool) -> dict:
    return {
        "graphId": r.graph_id,
        "n": r.n,
        "m": r.m,
        "bipartite": r.bipartite,
        "chordlessCycleLengths": list(r.chordless_cycle_lengths),
        "mu": r.mu,
        "gbSizeMin": r.gb_size_min,
        "gbSizeMax": r.gb_size_max,
        "isMG": r.is_mg,
        "isUMG": r.is_umg,
        "isRobust": r.is_robust,
        "isGenRobust": r.is_gen_robust,
        "thetaK": r.theta_k,
        "thetaLeafCount": r.theta_leaf_count,
        "ringGraph": r.ring_graph,
        "completeIntersection": r.complete_intersection,
        "budgetExceeded": list(r.budget_exceeded),
        "timings": (
            {k: round(v, 6) for k, v in r.timings.items()} if with_timings else None
        ),
    }


def document(reports: list[dict], budget: Budget) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "toolVersion": __version__,
        "budgets": {
            "maxCycles": budget.max_cycles,
            "maxFiber": budget.max_fiber,
            "maxCones": budget.max_cones,
            "seed": budget.seed,
        },
        "reports": reports,
    }


def _print_report_text(r: ClassificationReport, out) -> None:
    print(f"graph {r.graph_id}: n={r.n} m={r.m} bipartite={r.bipartite}", file=out)
    print(f"  chordless cycle lengths: {list(r.chordless_cycle_lengths)}", file=out)
    print(f"  mu={r.mu} gb sizes=[{r.gb_size_min}, {r.gb_size_max}]", file=out)
    print(f"  {r.flags_key()}", file=out)
    theta = f"k={r.theta_k} leaves={r.theta_leaf_count}" if r.theta_k else "absent"
    print(f"  theta decomposition: {theta}", file=out)
    print(
        f"  ring graph: {r.ring_graph}"
        + (
            f"  complete intersection: {r.complete_intersection}"
            if r.complete_intersection is not None
            else ""
        ),
        file=out,
    )
    if r.budget_exceeded:
        print(f"  budget exceeded: {list(r.budget_exceeded)}", file=out)


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = InputSpec(
        args.input, _detect_format(args.input, args.format),
        _parse_line_range(args.line_range),
    )
    budget = _budget_from_args(args)
    try:
        graphs = load_graphs(spec)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    reports = [classify(g, budget) for _, g in graphs]
    if args.json:
        doc = document(
            [report_to_dict(r, args.timings) for r in reports], budget
        )
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            _print_report_text(r, sys.stdout)
    return EXIT_BUDGET if any(r.budget_exceeded for r in reports) else EXIT_OK


def _census_worker(payload: tuple[bytes, str, bytes]) -> dict:
    import pickle

    graph_bytes, mode, budget_bytes = payload
    g: Graph = pickle.loads(graph_bytes)
    budget: Budget = pickle.loads(budget_bytes)
    if mode == "full":
        r = classify(g, budget)
        return report_to_dict(r, False)
    try:
        res = is_mg(g, budget)
        return {
            "graphId": encode_graph6(g),
            "n": g.n,
            "m": g.m,
            "mu": res.mu,
            "isMG": res.is_mg,
        }
    except BudgetExceededError as exc:
        return {
            "graphId": encode_graph6(g),
            "n": g.n,
            "m": g.m,
            "mu": None,
            "isMG": None,
            "budgetExceeded": [str(exc)],
        }


def cmd_census(args: argparse.Namespace) -> int:
    import pickle

    spec = InputSpec(
        args.input, _detect_format(args.input, args.format or "graph6"),
        _parse_line_range(args.line_range),
    )
    budget = _budget_from_args(args)
    try:
        graphs = load_graphs(spec)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    payloads = [
        (pickle.dumps(g), args.props, pickle.dumps(budget)) for _, g in graphs
    ]
    if args.workers > 1:
        with multiprocessing.Pool(args.workers) as pool:
            records = list(pool.imap(_census_worker, payloads, chunksize=1))
    else:
        records = [_census_worker(p) for p in payloads]

    summary: dict[str, int] = {}
    budget_hit = False
    for rec in records:
        if args.json:
            print(json.dumps(rec))
        else:
            flag = rec.get("isMG")
            print(f"{rec['graphId']}  n={rec['n']} m={rec['m']} mu={rec['mu']} isMG={flag}")
        key_parts = []
        for name in ("isMG", "isUMG", "isRobust", "isGenRobust"):
            if name in rec:
                v = rec[name]
                key_parts.append(f"{name}={'?' if v is None else int(v)}")
                if v is None:
                    budget_hit = True
        key = " ".join(key_parts)
        summary[key] = summary.get(key, 0) + 1
    if args.json:
        print(json.dumps({"summary": summary, "total": len(records)}))
    else:
        print("summary:")
        for key in sorted(summary):
            print(f"  {key}: {summary[key]}")
        print(f"  total: {len(records)}")
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _single_graph(args: argparse.Namespace) -> tuple[Optional[Graph], int]:
    spec = InputSpec(
        args.input, _detect_format(args.input, args.format),
        _parse_line_range(args.line_range),
    )
    try:
        graphs = load_graphs(spec)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE
    if not graphs:
        print("no graphs in input", file=sys.stderr)
        return None, EXIT_PARSE
    return graphs[0][1], EXIT_OK


def cmd_bases(args: argparse.Namespace) -> int:
    g, code = _single_graph(args)
    if g is None:
        return code
    budget = _budget_from_args(args)
    gi = toric_ideal(g)
    try:
        mg = minimal_generators(gi.generators, gi.A, max_fiber=budget.max_fiber,
                                groebner=gi.groebner() if gi.generators else None)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    bipartite = is_bipartite(g) is not None
    payload = {
        "graphId": encode_graph6(g),
        "mu": mg.mu,
        "markovBasis": [binomial_to_text(b) for b in mg.markov],
    }
    if bipartite:
        payload["chordlessCycleBasis"] = [
            binomial_to_text(b) for b in markov_basis_bipartite(g, budget.max_cycles)
        ]
    if args.universal:
        try:
            umb = universal_markov_basis(gi)
            payload["universalMarkovBasis"] = [binomial_to_text(b) for b in umb]
        except BudgetExceededError as exc:
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"graph {payload['graphId']}: mu = {mg.mu}")
        print("markov basis:")
        for line in payload["markovBasis"]:
            print(f"  {line}")
        if bipartite:
            print("chordless cycle binomials:")
            for line in payload["chordlessCycleBasis"]:
                print(f"  {line}")
        if args.universal:
            print("universal markov basis:")
            for line in payload["universalMarkovBasis"]:
                print(f"  {line}")
    return EXIT_OK


def cmd_fan(args: argparse.Namespace) -> int:
    g, code = _single_graph(args)
    if g is None:
        return code
    budget = _budget_from_args(args)
    gi = toric_ideal(g)
    try:
        result = enumerate_reduced_gbs(gi.generators, max_cones=budget.max_cones)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    lo, hi = result.size_range()
    sizes: dict[int, int] = {}
    for b in result.bases:
        sizes[len(b)] = sizes.get(len(b), 0) + 1
    payload = {
        "graphId": encode_graph6(g),
        "reducedBases": len(result.bases),
        "sizeMin": lo,
        "sizeMax": hi,
        "sizeHistogram": {str(k): sizes[k] for k in sorted(sizes)},
    }
    listing = len(result.bases) <= args.list_limit
    if listing:
        payload["bases"] = [
            [binomial_to_text(b) for b in basis.elements] for basis in result.bases
        ]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(
            f"graph {payload['graphId']}: {payload['reducedBases']} reduced "
            f"groebner bases, sizes {lo}..{hi}"
        )
        for k in sorted(sizes):
            print(f"  size {k}: {sizes[k]}")
        if listing:
            for i, basis in enumerate(payload["bases"]):
                print(f"basis {i} ({len(basis)} elements):")
                for line in basis:
                    print(f"  {line}")
    return EXIT_OK


def _tree_leaves_payload(tree) -> list[dict]:
    from .classify import CycleLeaf, EdgeLeaf, ThetaLeaf

    out = []
    for leaf in tree.leaves():
        if isinstance(leaf, ThetaLeaf):
            out.append(
                {
                    "kind": "theta",
                    "r": leaf.r,
                    "k": leaf.k,
                    "basePoints": list(leaf.base_points),
                    "edges": list(leaf.edges),
                }
            )
        elif isinstance(leaf, CycleLeaf):
            out.append({"kind": "cycle", "length": leaf.length, "edges": list(leaf.edges)})
        elif isinstance(leaf, EdgeLeaf):
            out.append({"kind": "edge", "edges": list(leaf.edges)})
    return out


def cmd_decompose(args: argparse.Namespace) -> int:
    g, code = _single_graph(args)
    if g is None:
        return code
    budget = _budget_from_args(args)
    try:
        theta = theta_decompose(g, budget.max_cycles)
        odd = odd_cycle_decompose(g, budget.max_cycles)
        ring, ring_tree = is_ring_graph(g, budget.max_cycles)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    payload: dict = {"graphId": encode_graph6(g), "ringGraph": ring}
    if theta is not None:
        payload["theta"] = {"k": theta[0], "leaves": _tree_leaves_payload(theta[1])}
    if odd is not None:
        payload["oddCycles"] = {"k": odd[0], "leaves": _tree_leaves_payload(odd[1])}
    if ring and ring_tree is not None:
        payload["ringLeaves"] = _tree_leaves_payload(ring_tree)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"graph {payload['graphId']}:")
        if theta is not None:
            print(f"  theta decomposition with k={theta[0]}:")
            for leaf in payload["theta"]["leaves"]:
                if leaf["kind"] == "theta":
                    print(
                        f"    theta r={leaf['r']} k={leaf['k']} "
                        f"base={leaf['basePoints']} edges={leaf['edges']}"
                    )
                else:
                    print(f"    {leaf['kind']} edges={leaf['edges']}")
        else:
            print("  theta decomposition: absent")
        if odd is not None:
            print(f"  odd-cycle decomposition with k={odd[0]}")
        print(f"  ring graph: {ring}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgraphs",
        description="Exact toric ideals of graphs: bases, fans, classification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="file path or - for stdin")
        p.add_argument("--format", choices=["edgelist", "graph6"], default=None)
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-cycles", type=int, default=10**6)
        p.add_argument("--max-fiber", type=int, default=10**5)
        p.add_argument("--max-cones", type=int, default=10**5)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--line-range", default=None, metavar="LO:HI")

    p = sub.add_parser("analyze", help="full classification report per graph")
    common(p)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in JSON output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="stream classification over a graph6 file")
    common(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--props", choices=["mg", "full"], default="mg")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bases", help="markov basis and friends")
    common(p)
    p.add_argument("--universal", action="store_true")
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("fan", help="enumerate all reduced groebner bases")
    common(p)
    p.add_argument("--list-limit", type=int, default=50)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("decompose", help="theta / odd-cycle / ring decompositions")
    common(p)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ToricGraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE if isinstance(exc, ParseError) else EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
