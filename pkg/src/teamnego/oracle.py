"""Ground-truth checks: brute-force search, trace diagnostics, and gadget solvers.

Everything here is desk-scale by design.  The brute-force solver settles
manipulation questions exactly by enumerating whole vote multisets, the
unmemoized game solver re-derives negotiation results without any caching,
and the permutation-sum solver handles the gadget behind the coalition
hardness results.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from teamnego import kernel
from teamnego.core import CONSTRUCTIVE, Order, ValidationError, aggregate, realize_vector
from teamnego.manipulation import DECISION_NO, DECISION_YES, ManipulationQuery, ManipulationResult
from teamnego.negotiation import (
    INITIATOR_OTHER,
    INITIATOR_TEAM,
    INITIATORS,
    NegotiationInstance,
)

MAX_BRUTE_FORCE_OUTCOMES = 6
MAX_BRUTE_FORCE_MANIPULATORS = 2
MAX_UNMEMOIZED_OUTCOMES = 5
MAX_PERMUTATION_SUM_N = 8


class OracleLimitError(ValidationError):
    """The requested exhaustive search exceeds the configured bounds."""


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive decision plus the first witness in canonical enumeration order."""

    decision: str
    votes: tuple[Order, ...]
    search_space: int

    @property
    def succeeded(self) -> bool:
        return self.decision == DECISION_YES


def search_space_size(m: int, k: int) -> int:
    """Number of vote multisets: ``C(m! + k - 1, k)``."""
    return math.comb(math.factorial(m) + k - 1, k)


def brute_force(
    query: ManipulationQuery,
    *,
    max_m: int = MAX_BRUTE_FORCE_OUTCOMES,
    max_k: int = MAX_BRUTE_FORCE_MANIPULATORS,
) -> OracleResult:
    """Decide a manipulation query by checking every manipulator vote multiset.

    Votes are anonymous, so candidate profiles are non-decreasing index
    sequences over the lexicographically ordered permutations of the outcome
    set; the first qualifying multiset in that canonical order is returned.
    Exact by construction for any rule, mode, and coalition size within the
    bounds.
    """
    m = query.num_outcomes
    k = query.manipulators
    if m > max_m or k > max_k:
        raise OracleLimitError(
            f"instance has m={m}, k={k}, beyond bounds m<={max_m}, k<={max_k} "
            f"(search space {search_space_size(m, k)} multisets); raise the "
            f"bounds explicitly to force the search"
        )
    names = sorted(query.honest.outcomes())
    index_of = {name: i for i, name in enumerate(names)}
    vec = realize_vector(query.rule, m)
    perms = list(itertools.permutations(names))
    awards = []
    for perm in perms:
        row = [0] * m
        for idx, name in enumerate(perm):
            row[index_of[name]] = vec[idx]
        awards.append(row)
    base = aggregate(query.honest, query.rule)
    base_scores = [base[name] for name in names]
    pos_o = [query.other_order.position(name) for name in names]
    combo = kernel.find_coalition(
        base_scores,
        awards,
        pos_o,
        k,
        index_of[query.target],
        query.mode == CONSTRUCTIVE,
    )
    space = search_space_size(m, k)
    if combo is None:
        return OracleResult(DECISION_NO, (), space)
    return OracleResult(DECISION_YES, tuple(Order(perms[v]) for v in combo), space)


@dataclass(frozen=True)
class PlacementClosures:
    """The candidate pools that churn through the edge slots of the staged votes.

    ``top_pool`` grows from the block member weakest in the honest ranking
    and absorbs any block member that some stage's vote places above a pool
    member; ``bottom_pool`` mirrors this for the outcomes outside the block,
    growing from the strongest outsider and absorbing whatever some stage's
    vote places below a pool member.  At the fixed point the top pool fills
    the highest positions of every stage's vote and the bottom pool the
    lowest, so each pool's members share the stage awards among themselves.
    ``rounds`` counts the growth passes needed to reach the fixed point.
    """

    iteration: int
    top_pool: frozenset[str]
    bottom_pool: frozenset[str]
    stage_votes: tuple[Order, ...]
    rounds: int


def _grow(
    seed: str,
    pool: frozenset[str],
    votes: tuple[Order, ...],
    above: bool,
) -> tuple[frozenset[str], int]:
    members = {seed}
    rounds = 0
    while True:
        added = set()
        for cand in pool - members:
            for vote in votes:
                if above:
                    hit = any(vote.position(cand) > vote.position(u) for u in members)
                else:
                    hit = any(vote.position(cand) < vote.position(u) for u in members)
                if hit:
                    added.add(cand)
                    break
        if not added:
            return frozenset(members), rounds
        members |= added
        rounds += 1


def placement_closures(result: ManipulationResult, iteration: int) -> PlacementClosures:
    """Compute the staged-vote placement pools for one solver iteration."""
    record = next((r for r in result.trace if r.iteration == iteration), None)
    if record is None or record.skipped:
        raise ValidationError(f"trace has no completed iteration {iteration}")
    if not record.stages:
        raise ValidationError(f"iteration {iteration} recorded no stages")
    team = result.team_order
    votes = tuple(stage.vote for stage in record.stages)
    block = record.block
    outside = team.outcomes() - block
    weakest = min(block, key=team.position)
    strongest = max(outside, key=team.position)
    top_pool, up_rounds = _grow(weakest, block, votes, above=True)
    bottom_pool, down_rounds = _grow(strongest, frozenset(outside), votes, above=False)
    return PlacementClosures(
        iteration=iteration,
        top_pool=top_pool,
        bottom_pool=bottom_pool,
        stage_votes=votes,
        rounds=max(up_rounds, down_rounds),
    )


def permutation_sum(
    values: tuple[int, ...] | list[int],
    *,
    max_n: int = MAX_PERMUTATION_SUM_N,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find permutations ``sigma, pi`` of ``1..n`` with ``sigma[i] + pi[i] == values[i]``.

    ``values`` must be non-decreasing with total ``n (n + 1)``.  Enumerates
    ``sigma`` in lexicographic order; ``pi`` is forced pointwise and checked,
    so the first solution found is canonical.  Returns ``None`` when no pair
    exists.
    """
    values = tuple(values)
    n = len(values)
    if n == 0:
        raise ValidationError("values must be non-empty")
    if n > max_n:
        raise OracleLimitError(
            f"n={n} exceeds bound {max_n} ({math.factorial(n)} candidate permutations)"
        )
    if any(a > b for a, b in zip(values, values[1:])):
        raise ValidationError(f"values must be non-decreasing, got {values}")
    if sum(values) != n * (n + 1):
        raise ValidationError(
            f"values must sum to n(n+1) = {n * (n + 1)}, got {sum(values)}"
        )
    wanted = set(range(1, n + 1))
    for sigma in itertools.permutations(range(1, n + 1)):
        pi = tuple(v - s for v, s in zip(values, sigma))
        if set(pi) == wanted:
            return sigma, pi
    return None


def spe_unmemoized(instance: NegotiationInstance, initiator: str) -> str:
    """Negotiation result by plain recursion, no caching anywhere.

    Independent of the table-driven kernel; kept deliberately naive so it can
    certify the fast path on small instances.
    """
    if initiator not in INITIATORS:
        raise ValidationError(f"initiator must be one of {INITIATORS}, got {initiator!r}")
    m = instance.num_outcomes
    if m > MAX_UNMEMOIZED_OUTCOMES:
        raise OracleLimitError(
            f"unmemoized recursion supports m<={MAX_UNMEMOIZED_OUTCOMES}, got {m}"
        )
    prefs = {
        INITIATOR_TEAM: instance.team_order,
        INITIATOR_OTHER: instance.other_order,
    }

    def flip(party: str) -> str:
        return INITIATOR_OTHER if party == INITIATOR_TEAM else INITIATOR_TEAM

    def value(available: frozenset[str], proposer: str) -> str:
        if len(available) == 1:
            return next(iter(available))
        responder = flip(proposer)
        best = None
        for offer in sorted(available):
            cont = value(available - {offer}, responder)
            realized = offer if prefs[responder].prefers(offer, cont) else cont
            if best is None or prefs[proposer].prefers(realized, best):
                best = realized
        assert best is not None
        return best

    return value(instance.outcomes(), initiator)
