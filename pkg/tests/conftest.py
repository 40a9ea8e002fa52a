import pytest

from teamnego import Order, Profile, Rule

# Running example used across the suite: four honest voters, Borda, and an
# opposing party whose order is b p a c.  A single extra voter can make p the
# negotiation result with the vote a p c b.
EXAMPLE_TEXT = """\
# running example: four honest voters, borda
rule: borda
other: b p a c
team:
p c a b
p b a c
b p a c
b a c p
"""


@pytest.fixture
def example_profile() -> Profile:
    return Profile(
        (
            Order.from_string("p c a b"),
            Order.from_string("p b a c"),
            Order.from_string("b p a c"),
            Order.from_string("b a c p"),
        )
    )


@pytest.fixture
def example_other() -> Order:
    return Order.from_string("b p a c")


@pytest.fixture
def borda() -> Rule:
    return Rule.borda()
