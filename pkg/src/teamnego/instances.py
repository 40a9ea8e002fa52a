"""Reading and writing the plain-text instance format.

An instance file looks like::

    rule: borda
    other: b p a c
    team:
    p c a b
    p b a c

``rule:`` takes ``borda``, ``approval:<x>``, or ``scoring:<s,...,s>`` (awards
listed top position first).  ``other:`` gives the other party's order, most
preferred first, and fixes the candidate set; every vote line under ``team:``
must be a permutation of it.  Lines starting with ``#`` are comments, blank
lines are ignored, tokens are whitespace-separated.
"""

from __future__ import annotations

from teamnego.core import Order, Profile, Rule, ValidationError, realize_vector


class ParseError(ValidationError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_instance(text: str) -> tuple[Profile, Order, Rule]:
    """Parse instance text into the honest profile, the other party's order, and the rule."""
    rule: Rule | None = None
    other: Order | None = None
    in_team = False
    votes: list[tuple[int, Order]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_team:
            if line.startswith("rule:"):
                if rule is not None:
                    raise ParseError(lineno, "duplicate rule line")
                try:
                    rule = Rule.from_token(line.split(":", 1)[1])
                except ValidationError as exc:
                    raise ParseError(lineno, str(exc)) from exc
                continue
            if line.startswith("other:"):
                if other is not None:
                    raise ParseError(lineno, "duplicate other line")
                try:
                    other = Order(tuple(line.split(":", 1)[1].split()))
                except ValidationError as exc:
                    raise ParseError(lineno, str(exc)) from exc
                continue
            if line == "team:":
                if rule is None:
                    raise ParseError(lineno, "team: section before rule: line")
                if other is None:
                    raise ParseError(lineno, "team: section before other: line")
                in_team = True
                continue
            raise ParseError(lineno, f"unexpected line {line!r}")
        try:
            votes.append((lineno, Order(tuple(line.split()))))
        except ValidationError as exc:
            raise ParseError(lineno, str(exc)) from exc
    if rule is None:
        raise ParseError(1, "missing rule: line")
    if other is None:
        raise ParseError(1, "missing other: line")
    if not votes:
        raise ParseError(len(text.splitlines()) or 1, "team section is empty")
    outcome_set = other.outcomes()
    for lineno, vote in votes:
        if vote.outcomes() != outcome_set:
            raise ParseError(
                lineno,
                f"vote is not a permutation of the candidate set {sorted(outcome_set)}",
            )
    profile = Profile(tuple(vote for _, vote in votes))
    # surfaces rule/candidate-count mismatches (e.g. wrong scoring length) early
    try:
        realize_vector(rule, len(other))
    except ValidationError as exc:
        raise ParseError(1, str(exc)) from exc
    return profile, other, rule


def serialize_instance(profile: Profile, other_order: Order, rule: Rule) -> str:
    """Canonical instance text; round-trips through :func:`parse_instance`."""
    lines = [f"rule: {rule.token()}", f"other: {other_order}", "team:"]
    lines.extend(str(vote) for vote in profile)
    return "\n".join(lines) + "\n"
