"""Manipulation solvers for elections that feed a negotiation.

A manipulator (or a coalition of ``k`` manipulators) joins a team whose
ranking is produced by a positional scoring rule and then negotiated against
another party.  A *constructive* manipulation makes a preferred outcome the
negotiation result for both possible initiators; a *destructive* one keeps a
disliked outcome from being the result for either initiator.

The solver iterates over the round ``i`` at which the compromise rule should
terminate.  For each ``i`` it assembles a block of ``i`` outcomes to install
at the top of the team ranking and fills the manipulative votes greedily:
block members occupy the top positions ordered weakest-first by the current
aggregate, everything else fills the bottom strongest-first, one vote per
stage, re-aggregating between stages.  The candidate votes are then checked
against the actual negotiation results.

Decisions are exact for single manipulators under any scoring rule and for
coalitions under x-approval rules.  Under Borda a coalition "yes" is always
correct, and any instance manipulable with ``k`` voters is reported
manipulable with ``k + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from teamnego.core import (
    CONSTRUCTIVE,
    DESTRUCTIVE,
    MODES,
    Order,
    Profile,
    Rule,
    ValidationError,
    aggregate,
    position,
    ranking_from_scores,
    realize_vector,
    swf,
)
from teamnego.negotiation import NegotiationInstance, RcResult, rc, spe_both

GATE_PAPER = "paper"
GATE_FEASIBLE = "feasible"
GATE_MODES = (GATE_PAPER, GATE_FEASIBLE)

DECISION_YES = "yes"
DECISION_NO = "no"
DECISION_ALWAYS_SAFE = "always-safe"


class InfeasibleIterationError(ValidationError):
    """No valid top block exists at this iteration index."""


@dataclass(frozen=True)
class ManipulationQuery:
    """One manipulation question: who votes, what rule, which outcome, how many manipulators."""

    honest: Profile
    other_order: Order
    rule: Rule
    mode: str
    target: str
    manipulators: int = 1
    gate_mode: str = GATE_PAPER

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.gate_mode not in GATE_MODES:
            raise ValidationError(
                f"gate mode must be one of {GATE_MODES}, got {self.gate_mode!r}"
            )
        if self.honest.outcomes() != self.other_order.outcomes():
            raise ValidationError("honest profile and other party rank different outcome sets")
        if self.target not in self.honest.outcomes():
            raise ValidationError(f"target outcome {self.target!r} is not in the outcome set")
        if self.manipulators < 0:
            raise ValidationError(f"manipulator count must be >= 0, got {self.manipulators}")

    @property
    def num_outcomes(self) -> int:
        return self.honest.num_outcomes


@dataclass(frozen=True)
class TopBlock:
    """The outcomes to install in the top ``iteration`` positions of the team ranking."""

    iteration: int
    members: frozenset[str]


@dataclass(frozen=True)
class StageRecord:
    """One manipulative vote and the aggregate standing after casting it."""

    vote: Order
    scores: dict[str, int]
    aggregate: Order


@dataclass(frozen=True)
class IterationRecord:
    """Everything the solver did while targeting termination round ``iteration``."""

    iteration: int
    block: frozenset[str]
    stages: tuple[StageRecord, ...]
    rc_result: RcResult | None
    spe_team: str | None
    spe_other: str | None
    skipped: bool = False


@dataclass(frozen=True)
class ManipulationResult:
    """Solver outcome: the decision, the manipulative votes, and a full trace."""

    decision: str
    votes: tuple[Order, ...]
    trace: tuple[IterationRecord, ...]
    query: ManipulationQuery
    team_order: Order

    @property
    def succeeded(self) -> bool:
        return self.decision != DECISION_NO


def max_iteration(m: int, mode: str) -> int:
    """Largest compromise-termination round the solver targets.

    The compromise rule stops by round ``floor(m/2) + 1``.  A constructive
    goal is unreachable at that last round when it returns two outcomes (the
    initiators then realize different ones), so the constructive loop stops
    at ``ceil(m/2)``; a destructive goal can hinge on exactly that round, so
    the destructive loop covers it.
    """
    if mode == CONSTRUCTIVE:
        return math.ceil(m / 2)
    return m // 2 + 1


def gate_threshold(m: int, mode: str, gate_mode: str) -> int:
    """Minimum position of the target in the other party's order for the solver to try.

    Below the threshold a constructive query is hopeless and a destructive
    target is deemed safe.  The ``feasible`` gate only rules out targets that
    can never enter the compromise set; the ``paper`` gate is stricter
    (``ceil(m/2)`` constructive, ``floor(m/2)`` destructive).
    """
    if gate_mode == GATE_FEASIBLE:
        return math.ceil(m / 2) - 1
    if mode == CONSTRUCTIVE:
        return math.ceil(m / 2)
    return m // 2


def top_block(
    team_order: Order,
    other_order: Order,
    target: str,
    iteration: int,
    mode: str,
) -> TopBlock:
    """The block of ``iteration`` outcomes the solver installs at the top.

    Constructive: the target plus the team's best outcomes outside the other
    party's top-``iteration`` set.  Destructive: the team's best member of the
    other party's top-``iteration`` set apart from the target (the anchor the
    compromise can land on), plus the team's best remaining outcomes; those
    fillers exclude the target exactly when the target sits in the other
    party's top-``iteration`` set, because only then could it reach the
    intersection, while otherwise it may be unremovable from the team's top
    positions and costs nothing there.
    """
    m = len(team_order)
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    if not 1 <= iteration <= max_iteration(m, mode):
        raise ValidationError(
            f"iteration {iteration} out of range 1..{max_iteration(m, mode)}"
        )
    if target not in team_order:
        raise ValidationError(f"target outcome {target!r} is not in the outcome set")
    opponent_top = other_order.top(iteration)
    if mode == CONSTRUCTIVE:
        pool = [c for c in team_order if c not in opponent_top and c != target]
        if len(pool) < iteration - 1:
            raise InfeasibleIterationError(
                f"only {len(pool)} outcomes available outside the opponent's "
                f"top-{iteration} set, need {iteration - 1}"
            )
        members = frozenset({target, *pool[: iteration - 1]})
    else:
        anchors = [c for c in team_order if c in opponent_top and c != target]
        if not anchors:
            raise InfeasibleIterationError(
                f"the opponent's top-{iteration} set holds no outcome other "
                f"than {target!r}"
            )
        anchor = anchors[0]
        if target in opponent_top:
            pool = [c for c in team_order if c != target and c != anchor]
        else:
            pool = [c for c in team_order if c != anchor]
        if len(pool) < iteration - 1:
            raise InfeasibleIterationError(
                f"only {len(pool)} outcomes available besides {target!r} and "
                f"the anchor, need {iteration - 1}"
            )
        members = frozenset({anchor, *pool[: iteration - 1]})
    return TopBlock(iteration=iteration, members=members)


def _stage_vote(block: frozenset[str], current: Order) -> Order:
    """One manipulative vote given the current aggregate ranking.

    Block members take the top positions weakest-first (so the weakest gets
    the biggest award); the rest take the bottom positions with the strongest
    at the very bottom.
    """
    pos = {name: current.position(name) for name in current}
    top = sorted(block, key=lambda c: pos[c])
    rest = sorted((c for c in current if c not in block), key=lambda c: pos[c])
    return Order(tuple(top) + tuple(rest))


def _meets_goal(n_t: str, n_o: str, target: str, mode: str) -> bool:
    if mode == CONSTRUCTIVE:
        return n_t == target and n_o == target
    return n_t != target and n_o != target


def _always_safe_vote(team_order: Order, target: str) -> Order:
    """Canonical witness when the gate already rules the target out: target last."""
    return Order(tuple(c for c in team_order if c != target) + (target,))


def verify(
    honest: Profile,
    other_order: Order,
    votes: tuple[Order, ...] | list[Order],
    rule: Rule,
    mode: str,
    target: str,
) -> bool:
    """Re-run the election and the negotiation and test the manipulation goal."""
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    profile = honest.with_votes(votes)
    if profile.outcomes() != other_order.outcomes():
        raise ValidationError("votes and the other party rank different outcome sets")
    ranking = swf(profile, rule)
    n_t, n_o = spe_both(NegotiationInstance(ranking, other_order))
    return _meets_goal(n_t, n_o, target, mode)


def _evaluate(query: ManipulationQuery, scores: dict[str, int]) -> tuple[Order, RcResult, str, str]:
    ranking = ranking_from_scores(scores)
    instance = NegotiationInstance(ranking, query.other_order)
    return ranking, rc(instance), *spe_both(instance)


def find_manipulation(query: ManipulationQuery) -> ManipulationResult:
    """Decide the manipulation question and return votes plus a per-iteration trace.

    Routes on ``query.manipulators``: ``k = 0`` just evaluates the honest
    profile, ``k = 1`` is the single-voter solver, larger ``k`` builds one
    vote per stage against the running aggregate.  A destructive query whose
    target fails the gate is answered ``always-safe`` with a canonical
    witness; a constructive one is answered ``no``.
    """
    m = query.num_outcomes
    k = query.manipulators
    team_order = swf(query.honest, query.rule)
    base_scores = aggregate(query.honest, query.rule)

    if k == 0:
        ranking, rc_res, n_t, n_o = _evaluate(query, base_scores)
        record = IterationRecord(
            iteration=0,
            block=frozenset(),
            stages=(),
            rc_result=rc_res,
            spe_team=n_t,
            spe_other=n_o,
        )
        decision = DECISION_YES if _meets_goal(n_t, n_o, query.target, query.mode) else DECISION_NO
        return ManipulationResult(decision, (), (record,), query, team_order)

    if position(query.target, query.other_order) < gate_threshold(m, query.mode, query.gate_mode):
        if query.mode == CONSTRUCTIVE:
            return ManipulationResult(DECISION_NO, (), (), query, team_order)
        witness = _always_safe_vote(team_order, query.target)
        return ManipulationResult(
            DECISION_ALWAYS_SAFE, (witness,) * k, (), query, team_order
        )

    vec = realize_vector(query.rule, m)
    trace: list[IterationRecord] = []
    for i in range(1, max_iteration(m, query.mode) + 1):
        try:
            block = top_block(team_order, query.other_order, query.target, i, query.mode)
        except InfeasibleIterationError:
            trace.append(
                IterationRecord(i, frozenset(), (), None, None, None, skipped=True)
            )
            continue
        scores = dict(base_scores)
        current = team_order
        votes: list[Order] = []
        stages: list[StageRecord] = []
        for _ in range(k):
            vote = _stage_vote(block.members, current)
            votes.append(vote)
            for idx, name in enumerate(vote.ranking):
                scores[name] += vec[idx]
            current = ranking_from_scores(scores)
            stages.append(StageRecord(vote=vote, scores=dict(scores), aggregate=current))
        instance = NegotiationInstance(current, query.other_order)
        rc_res = rc(instance)
        n_t, n_o = spe_both(instance)
        trace.append(
            IterationRecord(i, block.members, tuple(stages), rc_res, n_t, n_o)
        )
        if _meets_goal(n_t, n_o, query.target, query.mode):
            result = ManipulationResult(
                DECISION_YES, tuple(votes), tuple(trace), query, team_order
            )
            assert verify(
                query.honest, query.other_order, result.votes, query.rule,
                query.mode, query.target,
            )
            return result
    return ManipulationResult(DECISION_NO, (), tuple(trace), query, team_order)
