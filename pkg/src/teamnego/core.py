"""Outcomes, strict preference orders, profiles, and positional scoring rules.

Positions follow the convention used throughout this package: in an order
over ``m`` outcomes the most preferred outcome has position ``m - 1`` and the
least preferred has position ``0``.  All scores are exact integers, and every
ranking produced by the social welfare function breaks score ties by
bytewise-ascending outcome name (the smaller name wins the higher position).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass


class ValidationError(ValueError):
    """An order, profile, rule, or instance violates its invariants."""


CONSTRUCTIVE = "constructive"
DESTRUCTIVE = "destructive"
MODES = (CONSTRUCTIVE, DESTRUCTIVE)


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise ValidationError(f"outcome name must be a non-empty string, got {name!r}")
    if any(ch.isspace() for ch in name):
        raise ValidationError(f"outcome name {name!r} contains whitespace")
    return name


@dataclass(frozen=True)
class Order:
    """A strict total order over outcomes, most preferred first."""

    ranking: tuple[str, ...]

    def __post_init__(self) -> None:
        ranking = tuple(_check_name(name) for name in self.ranking)
        if not ranking:
            raise ValidationError("an order must rank at least one outcome")
        if len(set(ranking)) != len(ranking):
            raise ValidationError(f"duplicate outcome in order {ranking}")
        object.__setattr__(self, "ranking", ranking)

    @classmethod
    def from_string(cls, text: str) -> "Order":
        """Build an order from whitespace-separated names, best first."""
        return cls(tuple(text.split()))

    def __len__(self) -> int:
        return len(self.ranking)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ranking)

    def __contains__(self, name: object) -> bool:
        return name in self.ranking

    def __str__(self) -> str:
        return " ".join(self.ranking)

    def outcomes(self) -> frozenset[str]:
        return frozenset(self.ranking)

    def position(self, name: str) -> int:
        """Number of outcomes ranked below ``name`` (best = ``m - 1``)."""
        try:
            return len(self.ranking) - 1 - self.ranking.index(name)
        except ValueError:
            raise ValidationError(f"unknown outcome {name!r}") from None

    def top(self, j: int) -> frozenset[str]:
        """The ``j`` most preferred outcomes."""
        if not 1 <= j <= len(self.ranking):
            raise ValidationError(f"top-set size {j} out of range 1..{len(self.ranking)}")
        return frozenset(self.ranking[:j])

    def prefers(self, a: str, b: str) -> bool:
        return self.position(a) > self.position(b)


@dataclass(frozen=True)
class Profile:
    """A multiset of votes (orders) over one common outcome set.

    The order of votes never affects any aggregate computed from a profile.
    """

    votes: tuple[Order, ...]

    def __post_init__(self) -> None:
        votes = tuple(self.votes)
        if not votes:
            raise ValidationError("a profile needs at least one vote")
        outcome_set = votes[0].outcomes()
        for idx, vote in enumerate(votes):
            if vote.outcomes() != outcome_set:
                raise ValidationError(
                    f"vote {idx} ranks a different outcome set than vote 0"
                )
        object.__setattr__(self, "votes", votes)

    def __len__(self) -> int:
        return len(self.votes)

    def __iter__(self) -> Iterator[Order]:
        return iter(self.votes)

    def outcomes(self) -> frozenset[str]:
        return self.votes[0].outcomes()

    @property
    def num_outcomes(self) -> int:
        return len(self.votes[0])

    def with_votes(self, extra: Iterable[Order]) -> "Profile":
        """A new profile with ``extra`` votes appended."""
        return Profile(self.votes + tuple(extra))


@dataclass(frozen=True)
class Rule:
    """A positional scoring rule: Borda, x-approval, or a custom vector.

    The realized vector for ``m`` candidates lists the award for the top
    position first and must be non-increasing with a strict drop from first
    to last.  Scores are integers so that ties are exact.
    """

    kind: str
    x: int | None = None
    vector: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind == "borda":
            if self.x is not None or self.vector is not None:
                raise ValidationError("borda takes no parameters")
        elif self.kind == "approval":
            if not isinstance(self.x, int) or self.x < 1:
                raise ValidationError(f"approval threshold must be a positive int, got {self.x!r}")
            if self.vector is not None:
                raise ValidationError("approval takes no custom vector")
        elif self.kind == "scoring":
            vec = self.vector
            if vec is None or len(vec) < 2:
                raise ValidationError("scoring rule needs a vector of length >= 2")
            vec = tuple(vec)
            if not all(isinstance(s, int) for s in vec):
                raise ValidationError(f"scoring vector must be integers, got {vec}")
            if any(a < b for a, b in zip(vec, vec[1:])):
                raise ValidationError(f"scoring vector must be non-increasing, got {vec}")
            if vec[-1] < 0:
                raise ValidationError(f"scoring vector must be non-negative, got {vec}")
            if vec[0] == vec[-1]:
                raise ValidationError(f"scoring vector must strictly decrease overall, got {vec}")
            object.__setattr__(self, "vector", vec)
        else:
            raise ValidationError(f"unknown rule kind {self.kind!r}")

    @classmethod
    def borda(cls) -> "Rule":
        return cls("borda")

    @classmethod
    def approval(cls, x: int) -> "Rule":
        return cls("approval", x=x)

    @classmethod
    def scoring(cls, vector: Iterable[int]) -> "Rule":
        return cls("scoring", vector=tuple(vector))

    @classmethod
    def from_token(cls, token: str) -> "Rule":
        """Parse a rule token: ``borda``, ``approval:<x>``, or ``scoring:<csv>``."""
        token = token.strip()
        if token == "borda":
            return cls.borda()
        if token.startswith("approval:"):
            try:
                return cls.approval(int(token.split(":", 1)[1]))
            except ValueError as exc:
                raise ValidationError(f"bad approval token {token!r}") from exc
        if token.startswith("scoring:"):
            parts = token.split(":", 1)[1].split(",")
            try:
                return cls.scoring(int(p) for p in parts)
            except ValueError as exc:
                raise ValidationError(f"bad scoring token {token!r}") from exc
        raise ValidationError(f"unknown rule token {token!r}")

    def token(self) -> str:
        if self.kind == "borda":
            return "borda"
        if self.kind == "approval":
            return f"approval:{self.x}"
        assert self.vector is not None
        return "scoring:" + ",".join(str(s) for s in self.vector)


def position(outcome: str, order: Order) -> int:
    """Position of ``outcome`` in ``order`` (best = ``m - 1``, worst = 0)."""
    return order.position(outcome)


def realize_vector(rule: Rule, m: int) -> tuple[int, ...]:
    """The scoring vector for ``m`` candidates, top-position award first."""
    if m < 2:
        raise ValidationError(f"scoring rules need at least 2 candidates, got m={m}")
    if rule.kind == "borda":
        return tuple(range(m - 1, -1, -1))
    if rule.kind == "approval":
        assert rule.x is not None
        if not 1 <= rule.x <= m - 1:
            raise ValidationError(f"approval threshold {rule.x} out of range 1..{m - 1}")
        return (1,) * rule.x + (0,) * (m - rule.x)
    assert rule.vector is not None
    if len(rule.vector) != m:
        raise ValidationError(
            f"scoring vector has length {len(rule.vector)}, expected {m}"
        )
    return rule.vector


def aggregate(profile: Profile, rule: Rule) -> dict[str, int]:
    """Total score of every outcome under ``rule``.

    The candidate at position ``i`` of a vote is awarded the vector entry for
    position ``i``; totals are summed over all votes.
    """
    vec = realize_vector(rule, profile.num_outcomes)
    scores = {name: 0 for name in sorted(profile.outcomes())}
    for vote in profile:
        for idx, name in enumerate(vote.ranking):
            scores[name] += vec[idx]
    return scores


def ranking_from_scores(scores: dict[str, int]) -> Order:
    """Order outcomes by score, breaking ties by ascending name."""
    return Order(tuple(sorted(scores, key=lambda name: (-scores[name], name))))


def swf(profile: Profile, rule: Rule) -> Order:
    """The social welfare function: aggregate scores into a strict ranking.

    Equal scores are broken by bytewise-ascending name, the smaller name
    taking the higher position, so the output is always a strict order.
    """
    return ranking_from_scores(aggregate(profile, rule))
