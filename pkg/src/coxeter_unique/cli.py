"""Command-line front end.

Exit codes: 0 success (an infinite count is an answer, not an error),
1 bad input, 2 overflow or internal failure, 3 closed form and oracle
disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import family_graph, standard_graph, table_families
from .counting import Infinite, u_graph
from .graph import (
    GraphError,
    SimplyLacedTree,
    SingleHighEdgeTree,
    classify_component,
    connected_components,
    parse_graph,
)
from .oracle import (
    CountOverflow,
    WouldNotTerminate,
    build_automaton,
    count_paths,
    enumerate_unique_words,
    infinite_witness,
    length_census,
    oracle_count,
)

EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(text)


def load_source(args):
    """Return ``(label, graph)`` for the --file / --family source."""
    if args.file is not None:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        return args.file, parse_graph(text)
    return args.family, family_graph(args.family)


def count_text(u) -> str:
    if isinstance(u, Infinite):
        if u.reason is None:
            return "infinite"
        return f"infinite (reason: {u.reason.describe()})"
    return str(u)


def _result(u):
    return "infinite" if isinstance(u, Infinite) else u


def describe_class(component, cls) -> tuple:
    """Human line fragment and JSON dict for one classified component."""
    if isinstance(cls, SimplyLacedTree):
        return f"simply-laced tree n={cls.n}", {"class": "simply-laced tree", "n": cls.n}
    if isinstance(cls, SingleHighEdgeTree):
        text = f"single-high-edge tree n={cls.n} m={cls.m} a={cls.a} b={cls.b}"
        rec = {
            "class": "single-high-edge tree", "n": cls.n, "m": cls.m, "a": cls.a, "b": cls.b,
            "high_edge": list(cls.high_edge),
        }
        return text, rec
    witness = component.render(infinite_witness(component).base)
    reason = cls.reason.describe()
    return (
        f"infinite ({reason}), witness: {witness}",
        {"class": "infinite", "reason": reason, "witness": witness},
    )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    name, g = load_source(args)
    u = u_graph(g)
    record = {"subcommand": "count", "input": name, "result": _result(u)}
    if isinstance(u, Infinite) and u.reason is not None:
        record["reason"] = u.reason.describe()
    text = f"U = {count_text(u)}"
    status = 0
    if args.verify and not isinstance(u, Infinite):
        check = oracle_count(g)
        record["components"] = [{"oracle": _result(check), "match": check == u}]
        if check != u:
            text += f"\nverification FAILED: oracle U = {count_text(check)}"
            status = EXIT_MISMATCH
        else:
            text += f"\nverified: oracle U = {check}"
    emit(args, record, text)
    return status


def cmd_classify(args) -> int:
    name, g = load_source(args)
    lines = []
    components = []
    for k, comp in enumerate(connected_components(g), 1):
        cls = classify_component(comp)
        text, rec = describe_class(comp, cls)
        lines.append(f"component {k}: {text}")
        rec = {"id": k, "vertices": list(comp.names), **rec}
        components.append(rec)
    u = u_graph(g)
    record = {"subcommand": "classify", "input": name, "result": _result(u), "components": components}
    if not lines:
        lines.append("no components (empty graph)")
    emit(args, record, "\n".join(lines))
    return 0


def cmd_oracle(args) -> int:
    name, g = load_source(args)
    aut = build_automaton(g)
    u = count_paths(aut)
    if args.max_count is not None and not isinstance(u, Infinite) and u > args.max_count:
        raise CountOverflow(f"oracle count exceeds --max-count {args.max_count}")
    result = {"count": _result(u), "states": len(aut)}
    lines = [f"oracle U = {_result(u)}", f"states = {len(aut)}"]
    if args.max_length is not None:
        census = length_census(aut, args.max_length)
        result["census"] = census
        lines.extend(f"length {k}: {c}" for k, c in enumerate(census))
    emit(args, {"subcommand": "oracle", "input": name, "result": result}, "\n".join(lines))
    return 0


def cmd_list(args) -> int:
    name, g = load_source(args)
    try:
        words = enumerate_unique_words(g, args.max_length)
    except WouldNotTerminate:
        raise UsageError("infinitely many such elements; pass --max-length") from None
    rendered = [g.render(w) for w in words]
    emit(args, {"subcommand": "list", "input": name, "result": rendered}, "\n".join(rendered))
    return 0


def cmd_table(args) -> int:
    if args.max_rank < 4:
        raise UsageError("--max-rank must be at least 4")
    status = 0
    for fam in table_families(args.max_rank):
        g = standard_graph(fam)
        u = u_graph(g)
        check = oracle_count(g)
        agree = (isinstance(u, Infinite) and isinstance(check, Infinite)) or u == check
        record = {"subcommand": "table", "input": str(fam), "result": _result(u)}
        text = f"{str(fam):<6} U = {u}"
        if not agree:
            status = EXIT_MISMATCH
            text += f"  MISMATCH: oracle gives {check}"
            record["reason"] = f"oracle mismatch: {_result(check)}"
        emit(args, record, text)
    return status


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="coxeter-unique",
        description="Count Coxeter group elements that have a unique reduced expression.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", metavar="PATH", help="graph file")
        src.add_argument("--family", metavar="NAME", help="standard graph, e.g. B4, ~B3, E8, I2:7")
        p.add_argument("--json", action="store_true", help="one JSON record per result")
        return p

    p = with_source(sub.add_parser("count", help="closed-form count"))
    p.add_argument("--verify", action="store_true", help="cross-check with the automaton oracle")
    p.set_defaults(func=cmd_count)

    p = with_source(sub.add_parser("classify", help="classify each connected component"))
    p.set_defaults(func=cmd_classify)

    p = with_source(sub.add_parser("oracle", help="count with the factor-avoiding automaton"))
    p.add_argument("--max-length", type=int, metavar="L", help="print word counts by length up to L")
    p.add_argument("--max-count", type=int, metavar="N", help="fail (exit 2) if the count exceeds N")
    p.set_defaults(func=cmd_oracle)

    p = with_source(sub.add_parser("list", help="list the words with a unique reduced expression"))
    p.add_argument("--max-length", type=int, metavar="L")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("table", help="reproduce the finite/affine table")
    p.add_argument("--max-rank", type=int, default=8, metavar="K")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CountOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
