"""Command-line front end.

Exit codes: 0 success, 1 unparseable input, 2 semantic or capacity failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .entanglement import SCHEMA_VERSION, census, schmidt_bounds, separability_structure
from .errors import CapacityError, HypergraphError, ParseError
from .hypergraph import (
    Hypergraph,
    con,
    is_trivial,
    isomorphic,
    parse,
    rank,
    to_json_obj,
)
from .rules import apply_pauli_element, classify, is_stabilizer, measure_z_rule
from .state import PauliElement, apply_pauli, build_state, phase_text, SignState


def _read_hypergraph(text: str) -> Hypergraph:
    if text == "-":
        text = sys.stdin.read()
    return parse(text)


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "command": args.command, **record}, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_show(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    sep = separability_structure(g)
    record = {
        "hypergraph": to_json_obj(g),
        "compact": str(g),
        "rank": rank(g),
        "con": con(g),
        "trivial": is_trivial(g),
        "fully_separable": sep.fully_separable,
        "class": classify(g).value,
    }
    _emit(args, record, [
        f"hypergraph: {g}",
        f"vertices: {g.n}",
        f"edges: {len(g.edges)}",
        f"rank: {record['rank']}",
        f"con: {record['con']}",
        f"trivial: {str(record['trivial']).lower()}",
        f"fully separable: {str(sep.fully_separable).lower()}",
        f"class: {record['class']}",
    ])
    return 0


def cmd_state(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    s = build_state(g)
    _emit(args, {"signs": s.sign_string(), "phase": phase_text(s.phase)}, [s.sign_string(), f"phase: {phase_text(s.phase)}"])
    return 0


def cmd_apply(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    p = PauliElement.parse(" ".join(args.pauli))
    if p.n != g.n:
        raise HypergraphError(f"Pauli string has {p.n} letters, hypergraph has {g.n} vertices")
    out, phase = apply_pauli_element(g, p)
    record = {"result": str(out), "phase": phase_text(phase)}
    lines = [str(out), f"phase: {phase_text(phase)}"]
    if args.verify:
        symbolic = build_state(out)
        symbolic = SignState(symbolic.n, symbolic.signs, phase)
        numeric = apply_pauli(build_state(g), p)
        ok = symbolic == numeric
        record["verified"] = ok
        lines.append(f"verified: {str(ok).lower()}")
        _emit(args, record, lines)
        return 0 if ok else 2
    _emit(args, record, lines)
    return 0


def _parse_outcome(text: str) -> int:
    if text in ("+1", "1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise HypergraphError(f"outcome must be +1 or -1, got {text!r}")


def _parse_seed(text: str) -> int:
    key, sep, value = text.partition("=")
    if key != "seed" or not sep:
        raise ParseError(f"expected seed=<u64>, got {text!r}")
    try:
        seed = int(value)
    except ValueError:
        raise ParseError(f"bad seed {value!r}") from None
    if not 0 <= seed < 1 << 64:
        raise HypergraphError("seed must fit in an unsigned 64-bit integer")
    return seed


def cmd_measure(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    if (args.outcome is None) == (args.sample is None):
        raise HypergraphError("give exactly one of an outcome or --sample seed=<u64>")
    if args.sample is not None:
        outcome = random.Random(_parse_seed(args.sample)).choice((1, -1))
    else:
        outcome = _parse_outcome(args.outcome)
    out = measure_z_rule(g, args.vertex, outcome)
    # every outcome of a sigma_z measurement on a hypergraph state is equally likely
    probability = Fraction(1, 2)
    record = {
        "result": str(out),
        "outcome": outcome,
        "probability": str(probability),
        "labels": list(out.labels),
    }
    _emit(args, record, [
        str(out),
        f"outcome: {outcome:+d}",
        f"probability: {probability}",
        f"labels: {','.join(map(str, out.labels))}",
    ])
    return 0


def cmd_analyze(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    sep = separability_structure(g)
    bounds = schmidt_bounds(g)
    stab = is_stabilizer(g)
    record = {
        "hypergraph": str(g),
        "separability": sep.as_record(),
        "schmidt_bounds": bounds.as_record(),
        "class": classify(g).value,
        "stabilizer": bool(stab),
    }
    witness = sorted(bounds.witness_bipartition) if bounds.witness_bipartition else []
    lines = [
        f"hypergraph: {g}",
        f"components: {' | '.join(','.join(map(str, sorted(c))) for c in sep.components) or '-'}",
        f"con: {sep.max_m}",
        f"fully separable: {str(sep.fully_separable).lower()}",
        f"completely entangled: {str(sep.completely_entangled).lower()}",
        f"schmidt bounds: [{bounds.lower},{bounds.upper}]",
        f"max bipartite rank: {bounds.max_rank} across {{{','.join(map(str, witness))}}}",
        f"vertex cover (every deletion mode): {{{','.join(map(str, sorted(bounds.witness_cover)))}}}",
        f"vertex cover (some deletion mode): {{{','.join(map(str, sorted(bounds.exists_cover)))}}}",
        f"exact: {str(bounds.exact).lower()}",
        f"class: {classify(g).value}",
    ]
    if not stab:
        lines.append(f"non-stabilizer witness: vertex {stab.witness_vertex}, edge {set(stab.witness_edge)}")
    _emit(args, record, lines)
    return 0


def cmd_census(args) -> int:
    report = census(args.n)
    record = report.as_record()
    record.pop("schema")
    lines = [f"{key}: {str(value).lower() if isinstance(value, bool) else value}" for key, value in record.items()]
    failures = report.failures() if args.check else []
    if args.check:
        record["check"] = not failures
        lines.append("check: " + ("ok" if not failures else "; ".join(failures)))
    _emit(args, record, lines)
    return 2 if failures else 0


def cmd_isomorphic(args) -> int:
    g = _read_hypergraph(args.first)
    h = _read_hypergraph(args.second)
    p = isomorphic(g, h)
    record = {"isomorphic": p is not None, "permutation": list(p.mapping) if p else None}
    _emit(args, record, [str(p) if p else "not isomorphic"])
    return 0


def export_dot(g: Hypergraph) -> str:
    lines = ["graph hypergraph {"]
    for v in g.vertices:
        lines.append(f'  v{v} [shape=circle, label="{v}"];')
    edges = g.edge_sets()
    for i, e in enumerate(edges, start=1):
        label = ",".join(map(str, e)) if e else "∅"
        lines.append(f'  e{i} [shape=box, label="{label}"];')
    for i, e in enumerate(edges, start=1):
        for v in e:
            lines.append(f"  v{v} -- e{i};")
    lines.append("}")
    return "\n".join(lines)


def cmd_export_dot(args) -> int:
    g = _read_hypergraph(args.hypergraph)
    dot = export_dot(g)
    if args.json:
        _emit(args, {"dot": dot}, [])
    else:
        print(dot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="hyperstate", description="Exact hypergraph-state calculus.")
    sub = parser.add_subparsers(dest="command", required=True)
    hg_help = "hypergraph as '<n>:<edge>;...' or JSON; '-' reads stdin"

    p = sub.add_parser("show", parents=[common], help="summarise a hypergraph")
    p.add_argument("hypergraph", help=hg_help)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("state", parents=[common], help="print the sign table of |g>")
    p.add_argument("hypergraph", help=hg_help)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("apply", parents=[common], help="apply a Pauli element symbolically")
    p.add_argument("hypergraph", help=hg_help)
    p.add_argument("pauli", nargs="+", help="e.g. XIII or '-i XZIY'")
    p.add_argument("--verify", action="store_true", help="cross-check against the numeric state")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("measure", parents=[common], help="measure sigma_z on one vertex")
    p.add_argument("hypergraph", help=hg_help)
    p.add_argument("vertex", type=int)
    p.add_argument("outcome", nargs="?", help="+1 or -1")
    p.add_argument("--sample", metavar="seed=<u64>", help="pick the outcome pseudo-randomly")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("analyze", parents=[common], help="separability and Schmidt-measure bounds")
    p.add_argument("hypergraph", help=hg_help)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", parents=[common], help="tally all hypergraphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="fail unless the connectivity claims hold")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("isomorphic", parents=[common], help="find a vertex permutation between two hypergraphs")
    p.add_argument("first", help=hg_help)
    p.add_argument("second", help=hg_help)
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("export-dot", parents=[common], help="incidence drawing in DOT")
    p.add_argument("hypergraph", help=hg_help)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HypergraphError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
