"""Seeded instance generation and the batch experiment runner.

Instances are drawn with uniform-random strict orders for every honest voter
and for the other party; candidate names are ``c0..c{m-1}`` so the
lexicographic tie-break is predictable.  The same configuration always yields
the same instance stream and the same report bytes: timing columns are left
out of the canonical serialization and only added on request.
"""

from __future__ import annotations

import hashlib
import random
import time
from collections.abc import Iterator
from dataclasses import dataclass, field

from teamnego.core import CONSTRUCTIVE, MODES, Order, Profile, Rule, ValidationError
from teamnego.instances import serialize_instance
from teamnego.manipulation import (
    DECISION_NO,
    GATE_MODES,
    GATE_PAPER,
    ManipulationQuery,
    find_manipulation,
    gate_threshold,
)
from teamnego.oracle import brute_force

TARGET_FILTERS = ("gate", "any")
CHECKS = ("oracle", "additive", "gates")

_CHECK_COLUMNS = {
    "oracle": ("solver", "oracle", "agree"),
    "additive": ("oracle_k", "solver_k", "solver_k1", "violation"),
    "gates": ("oracle", "solver_paper", "solver_feasible", "paper_agree", "feasible_agree"),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """A reproducible batch: the seed and sizes fully determine the instances."""

    seed: int
    count: int
    m: int
    n: int
    k: int = 1
    rule: Rule = field(default_factory=Rule.borda)
    mode: str = CONSTRUCTIVE
    gate_mode: str = GATE_PAPER
    target_filter: str = "gate"
    check: str = "oracle"
    distribution: str = "uniform"

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValidationError(f"count must be >= 0, got {self.count}")
        if self.m < 2:
            raise ValidationError(f"need at least 2 outcomes, got m={self.m}")
        if self.n < 1:
            raise ValidationError(f"need at least 1 honest voter, got n={self.n}")
        if self.k < 0:
            raise ValidationError(f"manipulator count must be >= 0, got {self.k}")
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.gate_mode not in GATE_MODES:
            raise ValidationError(f"gate mode must be one of {GATE_MODES}, got {self.gate_mode!r}")
        if self.target_filter not in TARGET_FILTERS:
            raise ValidationError(
                f"target filter must be one of {TARGET_FILTERS}, got {self.target_filter!r}"
            )
        if self.check not in CHECKS:
            raise ValidationError(f"check must be one of {CHECKS}, got {self.check!r}")
        if self.distribution != "uniform":
            raise ValidationError(f"only the uniform distribution is supported, got {self.distribution!r}")

    def describe(self) -> str:
        return (
            f"seed={self.seed} count={self.count} m={self.m} n={self.n} k={self.k} "
            f"rule={self.rule.token()} mode={self.mode} gate={self.gate_mode} "
            f"target-filter={self.target_filter} check={self.check}"
        )


@dataclass(frozen=True)
class GeneratedInstance:
    """One seeded instance together with its manipulation target."""

    index: int
    profile: Profile
    other_order: Order
    rule: Rule
    mode: str
    target: str

    def query(self, k: int, gate_mode: str = GATE_PAPER) -> ManipulationQuery:
        return ManipulationQuery(
            honest=self.profile,
            other_order=self.other_order,
            rule=self.rule,
            mode=self.mode,
            target=self.target,
            manipulators=k,
            gate_mode=gate_mode,
        )

    def text(self) -> str:
        header = (
            f"# instance {self.index}\n"
            f"# mode: {self.mode}\n"
            f"# target: {self.target}\n"
        )
        return header + serialize_instance(self.profile, self.other_order, self.rule)

    def digest(self) -> str:
        return hashlib.sha256(self.text().encode()).hexdigest()[:12]


def generate(config: ExperimentConfig) -> Iterator[GeneratedInstance]:
    """Deterministic stream of ``config.count`` random instances."""
    rng = random.Random(config.seed)
    names = [f"c{i}" for i in range(config.m)]
    if config.target_filter == "gate":
        threshold = gate_threshold(config.m, config.mode, config.gate_mode)
    else:
        threshold = 0
    for index in range(config.count):
        other = Order(tuple(rng.sample(names, config.m)))
        votes = tuple(Order(tuple(rng.sample(names, config.m))) for _ in range(config.n))
        eligible = [name for name in names if other.position(name) >= threshold]
        target = rng.choice(eligible)
        yield GeneratedInstance(
            index=index,
            profile=Profile(votes),
            other_order=other,
            rule=config.rule,
            mode=config.mode,
            target=target,
        )


def stream_text(config: ExperimentConfig) -> str:
    """The whole generated stream as one text blob (instances separated by blank lines)."""
    chunks = [f"# generated instances: {config.describe()}\n"]
    chunks.extend(inst.text() for inst in generate(config))
    return "\n".join(chunks)


@dataclass(frozen=True)
class InstanceRecord:
    """One row of an experiment report plus its replay material."""

    index: int
    digest: str
    cells: tuple[str, ...]
    flagged: bool
    timings: tuple[float, ...]
    instance_text: str
    replay: str


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    columns: tuple[str, ...]
    records: tuple[InstanceRecord, ...]
    summary: tuple[tuple[str, int], ...]


def _succeeded(decision: str) -> bool:
    return decision != DECISION_NO


def _replay_command(inst: GeneratedInstance, k: int, gate_mode: str) -> str:
    return (
        f"teamnego oracle --mode {inst.mode} --target {inst.target} "
        f"--k {k} --gate {gate_mode} --compare --max-k {max(k, 2)} -"
    )


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Run the configured per-instance checks and collect a deterministic report.

    ``oracle``   compares the solver decision with brute force at ``k``.
    ``additive`` also runs the solver at ``k + 1`` and flags instances where
                 brute force succeeds at ``k`` but the solver still fails
                 with the extra manipulator.
    ``gates``    runs the solver under both gate modes against the oracle and
                 flags each mode's disagreements separately.
    """
    columns = _CHECK_COLUMNS[config.check]
    records: list[InstanceRecord] = []
    counts: dict[str, int] = {"total": 0}
    if config.check == "oracle":
        counts.update(agreements=0, disagreements=0)
    elif config.check == "additive":
        counts.update(oracle_yes=0, violations=0)
    else:
        counts.update(paper_disagreements=0, feasible_disagreements=0)
    oracle_k = max(config.k, 2)
    for inst in generate(config):
        counts["total"] += 1
        t0 = time.perf_counter()
        solver = find_manipulation(inst.query(config.k, config.gate_mode))
        t1 = time.perf_counter()
        oracle = brute_force(inst.query(config.k), max_m=config.m, max_k=oracle_k)
        t2 = time.perf_counter()
        solver_ok = _succeeded(solver.decision)
        oracle_ok = oracle.succeeded
        flagged = False
        if config.check == "oracle":
            agree = solver_ok == oracle_ok
            cells = (solver.decision, oracle.decision, "1" if agree else "0")
            counts["agreements" if agree else "disagreements"] += 1
            flagged = not agree
        elif config.check == "additive":
            plus_one = find_manipulation(inst.query(config.k + 1, config.gate_mode))
            violation = oracle_ok and not _succeeded(plus_one.decision)
            cells = (
                oracle.decision,
                solver.decision,
                plus_one.decision,
                "1" if violation else "0",
            )
            if oracle_ok:
                counts["oracle_yes"] += 1
            if violation:
                counts["violations"] += 1
            flagged = violation
        else:
            feasible = find_manipulation(inst.query(config.k, "feasible"))
            paper = solver if config.gate_mode == GATE_PAPER else find_manipulation(
                inst.query(config.k, GATE_PAPER)
            )
            paper_agree = _succeeded(paper.decision) == oracle_ok
            feasible_agree = _succeeded(feasible.decision) == oracle_ok
            cells = (
                oracle.decision,
                paper.decision,
                feasible.decision,
                "1" if paper_agree else "0",
                "1" if feasible_agree else "0",
            )
            if not paper_agree:
                counts["paper_disagreements"] += 1
            if not feasible_agree:
                counts["feasible_disagreements"] += 1
            flagged = not (paper_agree and feasible_agree)
        records.append(
            InstanceRecord(
                index=inst.index,
                digest=inst.digest(),
                cells=cells,
                flagged=flagged,
                timings=(t1 - t0, t2 - t1),
                instance_text=inst.text(),
                replay=_replay_command(inst, config.k, config.gate_mode),
            )
        )
    return ExperimentReport(
        config=config,
        columns=columns,
        records=tuple(records),
        summary=tuple(counts.items()),
    )


def serialize_report(report: ExperimentReport, include_timing: bool = False) -> str:
    """Report text: a comment header, CSV rows, a summary, and replay blocks.

    Timing columns are opt-in so that the default serialization is a pure
    function of the configuration.
    """
    lines = [f"# experiment: {report.config.describe()}"]
    header = ("index", "digest") + report.columns
    if include_timing:
        header += ("solver_s", "oracle_s")
    lines.append(",".join(header))
    for rec in report.records:
        row = (str(rec.index), rec.digest) + rec.cells
        if include_timing:
            row += tuple(f"{t:.6f}" for t in rec.timings)
        lines.append(",".join(row))
    summary = " ".join(f"{key}={val}" for key, val in report.summary)
    lines.append(f"# summary: {summary}")
    flagged = [rec for rec in report.records if rec.flagged]
    lines.append(f"# result: {'flagged' if flagged else 'clean'}")
    for rec in flagged:
        lines.append(f"# flagged index={rec.index} digest={rec.digest}")
        lines.append(f"# replay: {rec.replay}")
        lines.append(rec.instance_text.rstrip("\n"))
        lines.append("# end flagged")
    return "\n".join(lines) + "\n"


def flagged_count(report: ExperimentReport) -> int:
    return sum(1 for rec in report.records if rec.flagged)
