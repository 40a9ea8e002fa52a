"""Command-line front end.

Exit codes: 0 success or agreement, 1 negative decision, 2 disagreement
found, 3 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from teamnego.core import ValidationError, aggregate, swf
from teamnego.harness import (
    CHECKS,
    TARGET_FILTERS,
    ExperimentConfig,
    flagged_count,
    run_experiment,
    serialize_report,
    stream_text,
)
from teamnego.instances import parse_instance, serialize_instance
from teamnego.manipulation import (
    DECISION_NO,
    GATE_FEASIBLE,
    GATE_PAPER,
    ManipulationQuery,
    find_manipulation,
)
from teamnego.core import CONSTRUCTIVE, DESTRUCTIVE, Rule
from teamnego.negotiation import INITIATORS, NegotiationInstance, rc, spe_both, spe_result
from teamnego.oracle import brute_force

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_DISAGREEMENT = 2
EXIT_USAGE = 3

_GATE_TOKENS = {"paper": GATE_PAPER, "feasible": GATE_FEASIBLE}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_instance(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_instance(text)


def _add_instance_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("instance", help="instance file path, or - for stdin")


def _add_query_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--mode", required=True, choices=(CONSTRUCTIVE, DESTRUCTIVE))
    sub.add_argument("--target", required=True)
    sub.add_argument("--k", type=int, default=1)
    sub.add_argument("--gate", choices=sorted(_GATE_TOKENS), default="paper")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teamnego")
    subs = parser.add_subparsers(dest="command", required=True)

    p_swf = subs.add_parser("swf", help="aggregate the team votes into a ranking")
    _add_instance_arg(p_swf)
    p_swf.add_argument("--scores", action="store_true", help="also print the score table")

    p_neg = subs.add_parser("negotiate", help="negotiation result and compromise trace")
    p_neg.add_argument("--initiator", required=True, choices=INITIATORS)
    _add_instance_arg(p_neg)

    p_man = subs.add_parser("manipulate", help="search for manipulative votes")
    _add_query_args(p_man)
    p_man.add_argument("--trace", action="store_true", help="print per-iteration records")
    _add_instance_arg(p_man)

    p_orc = subs.add_parser("oracle", help="brute-force decision over all vote multisets")
    _add_query_args(p_orc)
    p_orc.add_argument("--compare", action="store_true", help="also run the solver; exit 2 on disagreement")
    p_orc.add_argument("--max-m", type=int, default=6)
    p_orc.add_argument("--max-k", type=int, default=2)
    _add_instance_arg(p_orc)

    for name in ("generate", "experiment"):
        p = subs.add_parser(
            name,
            help="emit a seeded instance stream" if name == "generate" else "run seeded solver/oracle checks",
        )
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--count", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--rule", default="borda", help="borda, approval:<x>, or scoring:<csv>")
        p.add_argument("--mode", choices=(CONSTRUCTIVE, DESTRUCTIVE), default=CONSTRUCTIVE)
        p.add_argument("--gate", choices=sorted(_GATE_TOKENS), default="paper")
        p.add_argument("--target-filter", choices=TARGET_FILTERS, default="gate")
        if name == "experiment":
            p.add_argument("--check", choices=CHECKS, default="oracle")
            p.add_argument("--timing", action="store_true", help="append timing columns")
            p.add_argument("--out", help="also write the report to this file")
    return parser


def _print_trace(result) -> None:
    for record in result.trace:
        print(f"iteration: {record.iteration}")
        if record.skipped:
            print("  skipped: no valid top block")
            continue
        print(f"  block: {' '.join(sorted(record.block))}")
        for num, stage in enumerate(record.stages, 1):
            print(f"  stage {num} vote: {stage.vote}")
            scores = " ".join(f"{name}={stage.scores[name]}" for name in sorted(stage.scores))
            print(f"  stage {num} scores: {scores}")
            print(f"  stage {num} ranking: {stage.aggregate}")
        rc_res = record.rc_result
        print(f"  rc: j={rc_res.terminating_index} outcomes={' '.join(sorted(rc_res.outcomes))}")
        print(f"  spe: team={record.spe_team} other={record.spe_other}")


def _cmd_swf(args) -> int:
    profile, _other, rule = _read_instance(args.instance)
    ranking = swf(profile, rule)
    print(ranking)
    if args.scores:
        for name, score in sorted(aggregate(profile, rule).items()):
            print(f"{name} {score}")
    return EXIT_OK


def _cmd_negotiate(args) -> int:
    profile, other, rule = _read_instance(args.instance)
    instance = NegotiationInstance(swf(profile, rule), other)
    result = spe_result(instance, args.initiator)
    trace = rc(instance)
    print(f"spe: {result}")
    print(f"rc-iteration: {trace.terminating_index}")
    print(f"rc-intersection: {' '.join(sorted(trace.outcomes))}")
    return EXIT_OK


def _query_from_args(args) -> ManipulationQuery:
    profile, other, rule = _read_instance(args.instance)
    return ManipulationQuery(
        honest=profile,
        other_order=other,
        rule=rule,
        mode=args.mode,
        target=args.target,
        manipulators=args.k,
        gate_mode=_GATE_TOKENS[args.gate],
    )


def _cmd_manipulate(args) -> int:
    result = find_manipulation(_query_from_args(args))
    print(f"decision: {result.decision}")
    for vote in result.votes:
        print(f"vote: {vote}")
    if args.trace:
        _print_trace(result)
    return EXIT_OK if result.succeeded else EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    query = _query_from_args(args)
    oracle = brute_force(query, max_m=args.max_m, max_k=args.max_k)
    print(f"oracle: {oracle.decision}")
    for vote in oracle.votes:
        print(f"vote: {vote}")
    if not args.compare:
        return EXIT_OK if oracle.succeeded else EXIT_NEGATIVE
    solver = find_manipulation(query)
    print(f"solver: {solver.decision}")
    if solver.succeeded != oracle.succeeded:
        print("disagreement: solver and oracle differ on this instance")
        sys.stdout.write(serialize_instance(query.honest, query.other_order, query.rule))
        return EXIT_DISAGREEMENT
    print("agreement")
    return EXIT_OK


def _config_from_args(args, check: str | None = None) -> ExperimentConfig:
    return ExperimentConfig(
        seed=args.seed,
        count=args.count,
        m=args.m,
        n=args.n,
        k=args.k,
        rule=Rule.from_token(args.rule),
        mode=args.mode,
        gate_mode=_GATE_TOKENS[args.gate],
        target_filter=args.target_filter,
        check=check or "oracle",
    )


def _cmd_generate(args) -> int:
    sys.stdout.write(stream_text(_config_from_args(args)))
    return EXIT_OK


def _cmd_experiment(args) -> int:
    report = run_experiment(_config_from_args(args, check=args.check))
    text = serialize_report(report, include_timing=args.timing)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(serialize_report(report))
    return EXIT_DISAGREEMENT if flagged_count(report) else EXIT_OK


_COMMANDS = {
    "swf": _cmd_swf,
    "negotiate": _cmd_negotiate,
    "manipulate": _cmd_manipulate,
    "oracle": _cmd_oracle,
    "generate": _cmd_generate,
    "experiment": _cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
