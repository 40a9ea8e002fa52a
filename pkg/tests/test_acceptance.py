"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines and timings.
"""

import itertools
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass

import pytest

from teamnego import (
    ExperimentConfig,
    ManipulationQuery,
    NegotiationInstance,
    Order,
    Profile,
    Rule,
    aggregate,
    brute_force,
    find_manipulation,
    generate,
    parse_instance,
    permutation_sum,
    placement_closures,
    rc,
    run_experiment,
    serialize_report,
    spe_both,
    swf,
    verify,
)
from teamnego.cli import main
from teamnego.harness import flagged_count
from tests.conftest import EXAMPLE_TEXT


@contextmanager
def criterion(num: int, description: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} {description}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_s, f"criterion {num} took {elapsed:.1f}s, budget {budget_s}s"
    print(f"ACCEPTANCE {num} {description}: PASS ({elapsed:.2f}s)")


def test_criterion_1_worked_example_end_to_end(tmp_path, capsys):
    with criterion(1, "worked example end to end", 1.0):
        profile, other, rule = parse_instance(EXAMPLE_TEXT)
        assert aggregate(profile, rule) == {"b": 8, "p": 8, "a": 5, "c": 3}
        assert swf(profile, rule) == Order.from_string("b p a c")

        path = tmp_path / "example.txt"
        path.write_text(EXAMPLE_TEXT)
        code = main(
            ["manipulate", "--mode", "constructive", "--target", "p", "--k", "1", str(path)]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "decision: yes" in out
        assert "vote: a p c b" in out

        joined = profile.with_votes([Order.from_string("a p c b")])
        assert aggregate(joined, rule) == {"p": 10, "a": 8, "b": 8, "c": 4}
        game = NegotiationInstance(swf(joined, rule), other)
        assert spe_both(game) == ("p", "p")


def test_criterion_2_single_voter_matches_oracle_everywhere():
    rules = [Rule.borda(), Rule.approval(1), Rule.approval(2), Rule.approval(3)]
    with criterion(2, "single-voter solver == oracle (1008 instances)", 300.0):
        mismatches = 0
        total = 0
        for rule_idx, rule in enumerate(rules):
            for n in (2, 3, 4, 5):
                config = ExperimentConfig(
                    seed=1_0000 + 97 * rule_idx + n,
                    count=63,
                    m=4,
                    n=n,
                    k=1,
                    rule=rule,
                    mode="constructive",
                )
                report = run_experiment(config)
                total += dict(report.summary)["total"]
                mismatches += dict(report.summary)["disagreements"]
        assert total >= 1000
        assert mismatches == 0


@dataclass
class CoalitionRuns:
    mismatches: int
    total: int
    elapsed: float
    results: list  # successful and failed solver results, x-approval only


@pytest.fixture(scope="module")
def coalition_runs() -> CoalitionRuns:
    start = time.perf_counter()
    mismatches = 0
    total = 0
    results = []
    for mode in ("constructive", "destructive"):
        for k in (2, 3):
            for x in (1, 2, 3):
                config = ExperimentConfig(
                    seed=2_0000 + 13 * k + x,
                    count=25,
                    m=4,
                    n=3,
                    k=k,
                    rule=Rule.approval(x),
                    mode=mode,
                )
                for inst in generate(config):
                    total += 1
                    solver = find_manipulation(inst.query(k))
                    oracle = brute_force(inst.query(k), max_k=3)
                    if (solver.decision != "no") != oracle.succeeded:
                        mismatches += 1
                    results.append(solver)
    return CoalitionRuns(mismatches, total, time.perf_counter() - start, results)


def test_criterion_3_coalition_x_approval_matches_oracle(coalition_runs):
    with criterion(3, "coalition x-approval solver == oracle (300 instances)", 600.0):
        assert coalition_runs.total == 300
        assert coalition_runs.mismatches == 0
        assert coalition_runs.elapsed < 600.0


def test_criterion_4_borda_one_additive_and_gadget():
    with criterion(4, "Borda succeeds with one extra manipulator", 600.0):
        violations = 0
        oracle_wins = 0
        total = 0
        for mode in ("constructive", "destructive"):
            for k in (1, 2):
                config = ExperimentConfig(
                    seed=4_0000 + k,
                    count=50,
                    m=4,
                    n=3,
                    k=k,
                    rule=Rule.borda(),
                    mode=mode,
                    check="additive",
                )
                report = run_experiment(config)
                summary = dict(report.summary)
                total += summary["total"]
                oracle_wins += summary["oracle_yes"]
                violations += summary["violations"]
        assert total == 200
        assert oracle_wins > 0
        assert violations == 0

        # gadget behind the hardness reductions
        assert permutation_sum((3, 3)) == ((1, 2), (2, 1))
        assert permutation_sum((1, 5)) is None
        for n in range(1, 5):
            for values in itertools.combinations_with_replacement(range(2, 2 * n + 1), n):
                if sum(values) != n * (n + 1):
                    continue
                exhaustive = any(
                    all(s + p == v for s, p, v in zip(sigma, pi, values))
                    for sigma in itertools.permutations(range(1, n + 1))
                    for pi in itertools.permutations(range(1, n + 1))
                )
                assert (permutation_sum(values) is not None) == exhaustive


def test_criterion_5_negotiation_result_in_compromise_set():
    with criterion(5, "negotiation result always in compromise set", 120.0):
        def check(team, other):
            game = NegotiationInstance(team, other)
            result = rc(game)
            n_t, n_o = spe_both(game)
            assert n_t in result.outcomes and n_o in result.outcomes

        for m in (3, 4):
            names = [f"c{i}" for i in range(m)]
            pairs = 0
            for team in itertools.permutations(names):
                for other in itertools.permutations(names):
                    check(Order(team), Order(other))
                    pairs += 1
            assert pairs == (6 if m == 3 else 24) ** 2

        rng = random.Random(5_0000)
        for m in (5, 6, 7, 8):
            names = [f"c{i}" for i in range(m)]
            for _ in range(2500):
                check(
                    Order(tuple(rng.sample(names, m))),
                    Order(tuple(rng.sample(names, m))),
                )


def test_criterion_6_staged_vote_diagnostics(coalition_runs):
    with criterion(6, "staged-vote placement and score-spread diagnostics", 120.0):
        checked = 0
        for result in coalition_runs.results:
            team = result.team_order
            for record in result.trace:
                if record.skipped or not record.stages:
                    continue
                closures = placement_closures(result, record.iteration)
                top, bottom = closures.top_pool, closures.bottom_pool
                # churn pools stay glued to the edges of every stage vote
                for stage in record.stages:
                    ranking = stage.vote.ranking
                    assert set(ranking[: len(top)]) == top
                    assert set(ranking[-len(bottom):]) == bottom
                final = record.stages[-1].scores
                for pool in (top, bottom):
                    values = [final[name] for name in pool]
                    assert max(values) - min(values) <= 1
                assert len(top) == 1 or len(bottom) == 1
                checked += 1
        assert checked > 0


def test_criterion_7_determinism_and_anonymity():
    with criterion(7, "determinism and vote-order anonymity", 300.0):
        config = ExperimentConfig(seed=7_0000, count=20, m=4, n=3, k=1)
        assert serialize_report(run_experiment(config)) == serialize_report(
            run_experiment(config)
        )

        rng = random.Random(7_1000)
        shuffles = 0
        for mode in ("constructive", "destructive"):
            config = ExperimentConfig(
                seed=7_2000, count=13, m=4, n=4, k=1, mode=mode
            )
            for inst in generate(config):
                baseline = find_manipulation(inst.query(1)).decision
                votes = list(inst.profile.votes)
                for _ in range(8):
                    rng.shuffle(votes)
                    shuffled = ManipulationQuery(
                        honest=Profile(tuple(votes)),
                        other_order=inst.other_order,
                        rule=inst.rule,
                        mode=inst.mode,
                        target=inst.target,
                        manipulators=1,
                    )
                    assert find_manipulation(shuffled).decision == baseline
                    shuffles += 1
        assert shuffles >= 200


def test_criterion_8_odd_candidate_gate_report():
    with criterion(8, "three-outcome gate-mode diagnostic report", 300.0):
        config = ExperimentConfig(
            seed=8_0000,
            count=150,
            m=3,
            n=2,
            k=1,
            mode="constructive",
            check="gates",
            target_filter="any",
        )
        report = run_experiment(config)
        text = serialize_report(report)
        assert text == serialize_report(run_experiment(config))
        summary = dict(report.summary)
        print(
            "  gate diagnostic (m=3, constructive, any target): "
            f"paper_disagreements={summary['paper_disagreements']} "
            f"feasible_disagreements={summary['feasible_disagreements']} "
            f"of {summary['total']}"
        )
        assert "paper_disagreements" in text
        # every flagged row embeds a replayable instance block
        if flagged_count(report):
            assert "# replay:" in text
