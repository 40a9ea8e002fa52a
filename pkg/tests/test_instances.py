import pytest

from teamnego import Order, ParseError, Rule, parse_instance, serialize_instance
from tests.conftest import EXAMPLE_TEXT


class TestParse:
    def test_running_example(self, example_profile, example_other, borda):
        profile, other, rule = parse_instance(EXAMPLE_TEXT)
        assert profile == example_profile
        assert other == example_other
        assert rule == borda

    def test_round_trip(self):
        profile, other, rule = parse_instance(EXAMPLE_TEXT)
        text = serialize_instance(profile, other, rule)
        assert parse_instance(text) == (profile, other, rule)
        assert serialize_instance(*parse_instance(text)) == text

    def test_comments_and_blank_lines_ignored(self):
        text = "\n# header\nrule: borda\n\nother: a b\n# mid\nteam:\n\na b\n# tail\n"
        profile, other, rule = parse_instance(text)
        assert len(profile) == 1
        assert other == Order.from_string("a b")

    def test_approval_rule_token(self):
        text = "rule: approval:2\nother: a b c d\nteam:\na b c d\n"
        _, _, rule = parse_instance(text)
        assert rule == Rule.approval(2)

    def test_missing_candidate_names_the_line(self):
        text = "rule: borda\nother: a b c\nteam:\na b c\na b\n"
        with pytest.raises(ParseError, match="line 5"):
            parse_instance(text)

    def test_duplicate_candidate_names_the_line(self):
        text = "rule: borda\nother: a b c\nteam:\na a c\n"
        with pytest.raises(ParseError, match="line 4"):
            parse_instance(text)

    def test_unknown_rule_token(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_instance("rule: stv\nother: a b\nteam:\na b\n")

    def test_empty_team(self):
        with pytest.raises(ParseError, match="empty"):
            parse_instance("rule: borda\nother: a b\nteam:\n")

    def test_sections_required_in_order(self):
        with pytest.raises(ParseError):
            parse_instance("other: a b\nteam:\na b\n")
        with pytest.raises(ParseError):
            parse_instance("rule: borda\nteam:\na b\n")

    def test_scoring_vector_must_fit_candidate_count(self):
        text = "rule: scoring:2,1,0\nother: a b c d\nteam:\na b c d\n"
        with pytest.raises(ParseError):
            parse_instance(text)

    def test_stray_line_rejected(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_instance("rule: borda\nwhat is this\nother: a b\nteam:\na b\n")
