"""The alternating-offers negotiation game and the compromise bargaining rule.

Two parties with strict preference orders alternate offering outcomes; a
rejected offer is off the table, and the last remaining outcome is accepted
in the final round.  With full information and rational play the realized
outcome is unique per initiator, and it always belongs to the set returned by
the compromise rule (the first non-empty intersection of the parties' top-j
sets, i.e. two-voter Bucklin).
"""

from __future__ import annotations

from dataclasses import dataclass

from teamnego import kernel
from teamnego.core import Order, ValidationError

INITIATOR_TEAM = "team"
INITIATOR_OTHER = "other"
INITIATORS = (INITIATOR_TEAM, INITIATOR_OTHER)

# the subset table has 2^m entries per proposer; beyond this the game is
# out of scope for exact backward induction
MAX_OUTCOMES = 20


@dataclass(frozen=True)
class NegotiationInstance:
    """A pair of strict orders over one outcome set: the team's and the other party's."""

    team_order: Order
    other_order: Order

    def __post_init__(self) -> None:
        if self.team_order.outcomes() != self.other_order.outcomes():
            raise ValidationError("negotiation parties rank different outcome sets")

    @property
    def num_outcomes(self) -> int:
        return len(self.team_order)

    def outcomes(self) -> frozenset[str]:
        return self.team_order.outcomes()


@dataclass(frozen=True)
class RcResult:
    """Where the compromise rule stops: the iteration index and the intersection."""

    terminating_index: int
    outcomes: frozenset[str]


def top_set(order: Order, j: int) -> frozenset[str]:
    """The ``j`` most preferred outcomes of ``order``."""
    return order.top(j)


def rc(instance: NegotiationInstance) -> RcResult:
    """First non-empty intersection of the parties' top-j sets.

    Grows ``j`` from 1 until the two top-j sets meet; by pigeonhole this
    happens no later than ``floor(m/2) + 1``, and the intersection found
    there has one or two members.
    """
    m = instance.num_outcomes
    for j in range(1, m + 1):
        common = instance.team_order.top(j) & instance.other_order.top(j)
        if common:
            assert j <= m // 2 + 1 and len(common) <= 2
            return RcResult(terminating_index=j, outcomes=common)
    raise AssertionError("unreachable: full top-sets always intersect")


def _positions(instance: NegotiationInstance) -> tuple[list[int], list[int], list[str]]:
    names = sorted(instance.outcomes())
    pos_t = [instance.team_order.position(name) for name in names]
    pos_o = [instance.other_order.position(name) for name in names]
    return pos_t, pos_o, names


def spe_both(instance: NegotiationInstance) -> tuple[str, str]:
    """Realized negotiation outcomes for team-opening and other-opening play."""
    if instance.num_outcomes > MAX_OUTCOMES:
        raise ValidationError(
            f"backward induction supports up to {MAX_OUTCOMES} outcomes, "
            f"got {instance.num_outcomes}"
        )
    pos_t, pos_o, names = _positions(instance)
    n_t, n_o = kernel.spe_pair(pos_t, pos_o)
    return names[n_t], names[n_o]


def spe_result(instance: NegotiationInstance, initiator: str) -> str:
    """Realized negotiation outcome when ``initiator`` makes the first offer."""
    if initiator not in INITIATORS:
        raise ValidationError(f"initiator must be one of {INITIATORS}, got {initiator!r}")
    pair = spe_both(instance)
    return pair[0] if initiator == INITIATOR_TEAM else pair[1]
