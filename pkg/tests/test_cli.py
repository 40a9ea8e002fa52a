import pytest

from teamnego.cli import main
from tests.conftest import EXAMPLE_TEXT


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "instance.txt"
    path.write_text(EXAMPLE_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSwf:
    def test_prints_ranking(self, capsys, instance_file):
        code, out, _ = run(capsys, "swf", instance_file)
        assert code == 0
        assert out.splitlines()[0] == "b p a c"

    def test_scores_flag(self, capsys, instance_file):
        code, out, _ = run(capsys, "swf", "--scores", instance_file)
        assert code == 0
        assert "b 8" in out and "c 3" in out


class TestNegotiate:
    def test_team_initiator(self, capsys, instance_file):
        code, out, _ = run(capsys, "negotiate", "--initiator", "team", instance_file)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "spe: b"
        assert lines[1] == "rc-iteration: 1"
        assert lines[2] == "rc-intersection: b"


class TestManipulate:
    def test_constructive_yes(self, capsys, instance_file):
        code, out, _ = run(
            capsys, "manipulate", "--mode", "constructive", "--target", "p",
            "--k", "1", instance_file,
        )
        assert code == 0
        assert "decision: yes" in out
        assert "vote: a p c b" in out

    def test_constructive_no_exits_1(self, capsys, instance_file):
        code, out, _ = run(
            capsys, "manipulate", "--mode", "constructive", "--target", "c",
            "--k", "1", instance_file,
        )
        assert code == 1
        assert "decision: no" in out

    def test_trace_lines(self, capsys, instance_file):
        code, out, _ = run(
            capsys, "manipulate", "--mode", "constructive", "--target", "p",
            "--k", "1", "--trace", instance_file,
        )
        assert code == 0
        assert "iteration: 1" in out
        assert "stage 1 vote:" in out
        assert "rc: j=" in out
        assert "spe: team=" in out

    def test_always_safe_exits_0(self, capsys, tmp_path):
        path = tmp_path / "inst.txt"
        path.write_text("rule: borda\nother: a b c p\nteam:\nb a c p\n")
        code, out, _ = run(
            capsys, "manipulate", "--mode", "destructive", "--target", "p",
            "--k", "1", str(path),
        )
        assert code == 0
        assert "decision: always-safe" in out


class TestOracle:
    def test_decision(self, capsys, instance_file):
        code, out, _ = run(
            capsys, "oracle", "--mode", "constructive", "--target", "p",
            "--k", "1", instance_file,
        )
        assert code == 0
        assert "oracle: yes" in out

    def test_compare_agreement(self, capsys, instance_file):
        code, out, _ = run(
            capsys, "oracle", "--mode", "constructive", "--target", "p",
            "--k", "1", "--compare", instance_file,
        )
        assert code == 0
        assert "agreement" in out

    def test_limits_error_exits_3(self, capsys, instance_file):
        code, _, err = run(
            capsys, "oracle", "--mode", "constructive", "--target", "p",
            "--k", "3", instance_file,
        )
        assert code == 3
        assert "bounds" in err

    def test_compare_disagreement_prints_instance_and_exits_2(self, capsys, tmp_path):
        # strict-gate false negative with three outcomes
        path = tmp_path / "odd.txt"
        path.write_text("rule: borda\nother: x p y\nteam:\np y x\n")
        code, out, _ = run(
            capsys, "oracle", "--mode", "constructive", "--target", "p",
            "--k", "1", "--compare", str(path),
        )
        assert code == 2
        assert "disagreement" in out
        assert "rule: borda" in out
        assert "other: x p y" in out


class TestGenerateAndExperiment:
    def test_generate_deterministic(self, capsys):
        args = ["generate", "--seed", "3", "--count", "4", "--m", "4", "--n", "3"]
        code, first, _ = run(capsys, *args)
        assert code == 0
        code, second, _ = run(capsys, *args)
        assert first == second
        assert first.count("rule: borda") == 4

    def test_experiment_clean_run_exits_0(self, capsys):
        code, out, _ = run(
            capsys, "experiment", "--seed", "11", "--count", "8", "--m", "4",
            "--n", "3", "--rule", "approval:2",
        )
        assert code == 0
        assert "# summary:" in out
        assert "disagreements=0" in out

    def test_experiment_writes_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.csv"
        code, out, _ = run(
            capsys, "experiment", "--seed", "11", "--count", "5", "--m", "4",
            "--n", "3", "--out", str(out_path),
        )
        assert code == 0
        assert out_path.read_text().startswith("# experiment:")


class TestErrors:
    def test_unknown_command_exits_3(self, capsys):
        assert run(capsys, "frobnicate")[0] == 3

    def test_missing_file_exits_3(self, capsys):
        code, _, err = run(
            capsys, "swf", "/nonexistent/instance.txt"
        )
        assert code == 3
        assert "error" in err

    def test_parse_error_exits_3(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("rule: borda\nother: a b\nteam:\na c\n")
        code, _, err = run(capsys, "swf", str(path))
        assert code == 3
        assert "line 4" in err
