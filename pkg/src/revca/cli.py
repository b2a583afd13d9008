"""Command-line front end.

Exit codes: 0 success (for ``check``: reversible for every requested cell
count), 1 irreversible, 2 usage or parse error, 3 resource budget
exceeded. All randomness sits behind an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decider import decide, decide_range
from .errors import ResourceLimitError, RuleFormatError
from .evolution import (
    build_debruijn,
    export_dot,
    format_configuration,
    parse_configuration,
    step,
)
from .infinite import infinite_injective
from .oracle import oracle_is_reversible
from .rules import format_rule, parse_rule
from .strategies import STRATEGIES, enumerate_strategy, sample_strategy

USAGE_ERROR = 2
RESOURCE_ERROR = 3


def _add_rule_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--states", type=int, required=True, help="states per cell (d)")
    p.add_argument("--rule", required=True, help="rule string, next state of RMT 0 rightmost")


def _parse_cells_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError("expected LO:HI")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revca",
        description="Reversibility analysis of d-state cellular automata on rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide reversibility for one or many cell counts")
    _add_rule_args(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cells", type=int, help="ring size n")
    group.add_argument("--cells-range", help="inclusive range LO:HI")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("evolve", help="print a configuration trace")
    _add_rule_args(p)
    p.add_argument("--config", required=True, help="initial configuration digits")
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("gen", help="emit a strategy family, one rule per line")
    p.add_argument("--strategy", choices=STRATEGIES, required=True)
    p.add_argument("--states", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="stream the whole family")
    group.add_argument("--sample", type=int, metavar="N", help="sample N rules")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")

    p = sub.add_parser("oracle", help="brute-force global map summary")
    _add_rule_args(p)
    p.add_argument("--cells", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("infinite", help="injectivity on the unbounded lattice")
    _add_rule_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("dot", help="emit the rule's de Bruijn graph as DOT")
    _add_rule_args(p)
    return parser


def _witness_line(verdict) -> str:
    if verdict.witness is None:
        return ""
    return f"  witness: {verdict.witness.detail}"


def _cmd_check(args) -> int:
    rule = parse_rule(args.rule, args.states)
    if args.cells is not None:
        verdicts = {args.cells: decide(rule, args.cells)}
    else:
        lo, hi = _parse_cells_range(args.cells_range)
        verdicts = decide_range(rule, lo, hi)
    if args.format == "json":
        records = [v.to_dict() for v in verdicts.values()]
        if len(records) == 1:
            print(json.dumps(records[0]))
        else:
            print(json.dumps({"schema": "revca/verdict-range:1", "results": records}))
    else:
        for n, v in sorted(verdicts.items()):
            print(f"n={n}: {'Reversible' if v.reversible else 'Irreversible'}")
            line = _witness_line(v)
            if line:
                print(line)
    return 0 if all(v.reversible for v in verdicts.values()) else 1


def _cmd_evolve(args) -> int:
    rule = parse_rule(args.rule, args.states)
    if args.steps < 0:
        raise RuleFormatError("steps must be >= 0")
    cells = parse_configuration(args.config, args.states)
    print(f"0 {format_configuration(cells, args.states)}")
    for t in range(1, args.steps + 1):
        cells = step(rule, cells)
        print(f"{t} {format_configuration(cells, args.states)}")
    return 0


def _cmd_gen(args) -> int:
    if args.all:
        rules = enumerate_strategy(args.strategy, args.states)
    else:
        rules = sample_strategy(args.strategy, args.states, args.sample, args.seed)
    for rule in rules:
        print(format_rule(rule))
    return 0


def _cmd_oracle(args) -> int:
    rule = parse_rule(args.rule, args.states)
    summary = oracle_is_reversible(rule, args.cells)
    if args.format == "json":
        print(json.dumps(summary.to_dict()))
    else:
        print(
            f"bijective: {'yes' if summary.bijective else 'no'}  "
            f"image={summary.image_size}/{args.states ** args.cells}  "
            f"max_indegree={summary.max_indegree}"
        )
    return 0


def _cmd_infinite(args) -> int:
    rule = parse_rule(args.rule, args.states)
    result = infinite_injective(rule)
    if args.format == "json":
        print(json.dumps(result.to_dict()))
    else:
        print(f"injective: {'yes' if result.injective else 'no'}")
        if result.witness is not None:
            pairs = " ".join(f"{a}{b}|{c}{e}" for (a, b), (c, e) in result.witness.pairs)
            print(f"  witness cycle: {pairs}")
            print(f"  outputs: {''.join(map(str, result.witness.outputs))}")
    return 0


def _cmd_dot(args) -> int:
    rule = parse_rule(args.rule, args.states)
    sys.stdout.write(export_dot(build_debruijn(rule)))
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "evolve": _cmd_evolve,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
    "infinite": _cmd_infinite,
    "dot": _cmd_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (RuleFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
