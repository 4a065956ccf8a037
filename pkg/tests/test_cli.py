import json

import pytest

from critexp import Word
from critexp.cli import main, parse_rational
from fractions import Fraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseRational:
    def test_fraction_and_decimal_forms(self):
        assert parse_rational("7/3") == Fraction(7, 3)
        assert parse_rational("2.1") == Fraction(21, 10)
        assert parse_rational("3") == Fraction(3)

    def test_rejects_garbage(self):
        for bad in ("x", "7/0", "1/2/3", ""):
            with pytest.raises(ValueError):
                parse_rational(bad)


class TestGenerate:
    def test_writes_word_and_schedule(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        code, stdout, _ = run_cli(
            capsys, "generate", "--alpha", "7/3", "--levels", "2", "--out", str(out)
        )
        assert code == 0
        assert "73/32" in stdout and "147/64" in stdout
        assert "period 2048" in stdout
        word = Word.from_text(out.read_text())
        assert len(word) == 4713

    def test_alpha_at_most_two_is_usage_error(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "generate", "--alpha", "2", "--out", str(tmp_path / "w")
        )
        assert code == 2
        assert "alpha must exceed 2" in err

    def test_target_len_truncates(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        code, _, _ = run_cli(
            capsys, "generate", "--alpha", "7/3", "--target-len", "10", "--out", str(out)
        )
        assert code == 0
        assert len(Word.from_text(out.read_text())) == 10

    def test_budget_exceeded_is_size_error(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys,
            "generate", "--alpha", "7/3", "--levels", "2",
            "--out", str(tmp_path / "w"), "--budget", "100",
        )
        assert code == 3
        assert "level" in err

    def test_packed_round_trip(self, tmp_path, capsys):
        out = tmp_path / "w.bin"
        code, _, _ = run_cli(
            capsys,
            "generate", "--alpha", "5/2", "--levels", "2",
            "--out", str(out), "--format", "packed",
        )
        assert code == 0
        packed = Word.from_packed(out.read_bytes())
        code, _, _ = run_cli(
            capsys,
            "generate", "--alpha", "5/2", "--levels", "2",
            "--out", str(tmp_path / "w.txt"),
        )
        text = Word.from_text((tmp_path / "w.txt").read_text())
        assert packed == text

    def test_byte_identical_reruns(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
        _, stdout1, _ = run_cli(
            capsys, "generate", "--alpha", "21/10", "--levels", "2", "--out", str(out1)
        )
        _, stdout2, _ = run_cli(
            capsys, "generate", "--alpha", "21/10", "--levels", "2", "--out", str(out2)
        )
        assert out1.read_bytes() == out2.read_bytes()
        assert stdout1.replace(str(out1), "") == stdout2.replace(str(out2), "")


class TestAnalyze:
    def test_generated_word_is_free(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        run_cli(capsys, "generate", "--alpha", "7/3", "--levels", "2", "--out", str(out))
        code, stdout, _ = run_cli(capsys, "analyze", str(out), "--alpha", "7/3")
        assert code == 0
        assert "max exponent: 147/64" in stdout
        assert "verdict: free" in stdout

    def test_literal_cube_violation(self, capsys):
        code, stdout, _ = run_cli(
            capsys, "analyze", "000", "--literal", "--alpha", "7/3"
        )
        assert code == 1
        assert "violation start=0 period=1 length=3" in stdout

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("01x\n")
        code, _, err = run_cli(capsys, "analyze", str(bad))
        assert code == 2
        assert "invalid letter" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run_cli(capsys, "analyze", str(tmp_path / "nope.txt"))
        assert code == 2

    def test_no_alpha_reports_only(self, capsys):
        code, stdout, _ = run_cli(capsys, "analyze", "000", "--literal")
        assert code == 0
        assert "max exponent: 3/1" in stdout

    def test_json_report(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        code, _, _ = run_cli(
            capsys,
            "analyze", "00100100", "--literal", "--alpha", "7/3",
            "--report", str(report),
        )
        assert code == 1
        payload = json.loads(report.read_text())
        assert payload["length"] == 8
        assert payload["verdict"] == "violation"
        assert payload["witness"] == {"start": 0, "period": 3, "length": 8}
        assert {"start": 0, "period": 3, "length": 8, "exponent": "8/3"} in payload["runs"]

    def test_packed_input(self, tmp_path, capsys):
        data = tmp_path / "w.bin"
        data.write_bytes(Word("0101").to_packed())
        code, stdout, _ = run_cli(
            capsys, "analyze", str(data), "--format", "packed"
        )
        assert code == 0
        assert "max exponent: 2/1" in stdout

    def test_empty_word_file(self, tmp_path, capsys):
        empty = tmp_path / "empty.txt"
        empty.write_text("\n")
        code, stdout, _ = run_cli(capsys, "analyze", str(empty), "--alpha", "7/3")
        assert code == 0
        assert "word length: 0" in stdout
        assert "max exponent: none" in stdout

    def test_max_runs_zero_suppresses_listing(self, capsys):
        code, stdout, _ = run_cli(
            capsys, "analyze", "000111", "--literal", "--max-runs", "0"
        )
        assert code == 0
        assert "start=" not in stdout
        assert "2 more" in stdout


class TestBetas:
    def test_seven_thirds_table(self, capsys):
        code, stdout, _ = run_cli(
            capsys, "betas", "--alpha", "7/3", "--s-min", "3", "--s-max", "6"
        )
        assert code == 0
        lines = [ln.strip() for ln in stdout.splitlines()]
        assert any(ln.startswith("3") and "none" in ln for ln in lines)
        assert any(ln.startswith("4") and "none" in ln for ln in lines)
        assert any(ln.startswith("5") and "23" in ln and "73/32" in ln for ln in lines)
        assert any(ln.startswith("6") and "45" in ln and "147/64" in ln for ln in lines)

    def test_integer_alpha_has_row_at_three(self, capsys):
        code, stdout, _ = run_cli(
            capsys, "betas", "--alpha", "3", "--s-min", "3", "--s-max", "3"
        )
        assert code == 0
        assert "19/8" in stdout

    def test_bad_range(self, capsys):
        code, _, err = run_cli(
            capsys, "betas", "--alpha", "7/3", "--s-min", "6", "--s-max", "3"
        )
        assert code == 2


class TestVerify:
    def test_small_suite_passes(self, capsys):
        code, stdout, _ = run_cli(
            capsys,
            "verify", "--alpha", "7/3", "--levels", "2", "--seed", "42",
            "--lemma1-s-max", "6", "--t2-max-len", "9", "--t2-samples", "20",
            "--t3-samples", "60", "--l4-samples", "20", "--l5-samples", "8",
        )
        assert code == 0
        assert "all checks passed" in stdout
        assert stdout.count("PASS") == 6

    def test_alpha_below_two_rejected(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--alpha", "3/2")
        assert code == 2

    def test_five_halves_three_levels(self, capsys, tmp_path):
        report = tmp_path / "v.json"
        code, stdout, _ = run_cli(
            capsys,
            "verify", "--alpha", "5/2", "--levels", "3",
            "--t2-max-len", "8", "--t3-samples", "50", "--l4-samples", "10",
            "--l5-samples", "5", "--report", str(report),
        )
        assert code == 0
        payload = json.loads(report.read_text())
        assert payload["passed"] is True
        assert len(payload["checks"]) == 6
