"""Command-line surface: output lines, JSON records and exit codes."""

import json

from src.cli import main
from src.models.enums import CheckStatus
from src.models.records import PropertyResult


def _json(output: str) -> dict:
    """The JSON record, skipping any status lines printed before it."""
    return json.loads(output[output.index("{"):])


class TestComplexity:
    def test_single_word(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0b10110100"])
        assert result.exit_code == 0
        assert result.output == "A=5\n"

    def test_zero_word(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0b0000"])
        assert result.output == "A=0\n"

    def test_bad_length_is_input_error(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0b101"])
        assert result.exit_code == 3
        assert "Error:" in result.output
        assert "A=" not in result.output

    def test_needs_a_word(self, runner):
        result = runner.invoke(main, ["complexity"])
        assert result.exit_code == 1

    def test_several_words_with_certificates(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0b1", "--input", "0b10", "--cert"])
        assert result.output.splitlines() == ["0b1 A=1 ranks=- final=1", "0b10 A=2 ranks=- final=2"]

    def test_naive_chain(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0b10", "--engine", "naive", "--cert"])
        assert result.output == "A=2 chain=0b10,0b11,0b00\n"

    def test_naive_without_chain(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0xB4", "--engine", "naive", "--cross-check"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "A=5"

    def test_cross_check_agrees(self, runner):
        result = runner.invoke(main, ["complexity", "--input", "0xB4", "--cross-check"])
        assert result.exit_code == 0

    def test_words_file_keeps_order(self, runner, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("0b10110100\n# skip\n0b0000\n")
        result = runner.invoke(main, ["complexity", "--file", str(path)])
        assert result.output.splitlines() == ["0b10110100 A=5", "0b0000 A=0"]

    def test_words_file_error(self, runner, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("0b10\n0b1x\n")
        result = runner.invoke(main, ["complexity", "--file", str(path)])
        assert result.exit_code == 3
        assert "words.txt:2" in result.output

    def test_json_is_deterministic(self, runner):
        args = ["--json", "complexity", "--input", "0b10110100", "--cert"]
        first = runner.invoke(main, args).output
        assert first == runner.invoke(main, args).output
        record = json.loads(first)
        assert record["command"] == "complexity"
        assert record["results"][0]["complexity"] == 5
        assert record["results"][0]["certificate"] == {"ranks": [], "final_complexity": 5, "total": 5}
        assert record["timing_ns"] is None

    def test_timing_flag(self, runner):
        result = runner.invoke(main, ["--timing", "complexity", "--input", "0b10", "--json"])
        assert isinstance(json.loads(result.output)["timing_ns"], int)


class TestPlan:
    def test_worked_example(self, runner):
        result = runner.invoke(main, ["plan", "--value", "372", "--bits", "9"])
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "A=372 (101110100)",
            "subcase: 2.2",
            "rank 1 -> 371 (101110011)",
            "rank 256 -> 115 (001110011)",
            "rank 2 -> 113 (001110001)",
            "final: 113 (001110001)",
            "count: 3",
        ]

    def test_already_final(self, runner):
        lines = runner.invoke(main, ["plan", "--value", "13", "--bits", "4"]).output.splitlines()
        assert "subcase: already-final" in lines
        assert lines[-1] == "count: 0"

    def test_odd_with_bfs(self, runner):
        lines = runner.invoke(main, ["plan", "--value", "55", "--bits", "6", "--bfs"]).output.splitlines()
        assert lines[2:] == [
            "rank 4 -> 51 (110011)",
            "rank 2 -> 49 (110001)",
            "final: 49 (110001)",
            "count: 2",
            "bfs: 2",
        ]

    def test_bfs_width_capped(self, runner):
        result = runner.invoke(main, ["plan", "--value", "5", "--bits", "40", "--bfs"])
        assert result.exit_code == 3
        assert "--bfs needs bits <= 16" in result.output

    def test_wide_plan_without_bfs(self, runner):
        assert runner.invoke(main, ["plan", "--value", "5", "--bits", "40"]).exit_code == 0

    def test_json(self, runner):
        record = json.loads(runner.invoke(main, ["plan", "--value", "372", "--bits", "9", "--json"]).output)
        row = record["results"][0]
        assert row["subcase"] == "even-2.2"
        assert row["ranks"] == [1, 256, 2]
        assert row["count"] == 3

    def test_out_of_range(self, runner):
        result = runner.invoke(main, ["plan", "--value", "0", "--bits", "3"])
        assert result.exit_code == 3


class TestScheme:
    def test_to_zero(self, runner):
        result = runner.invoke(main, ["scheme", "--input", "0b0110", "--rank", "4"])
        assert result.output.splitlines() == ["start: 0b0110", "rank 4: 0b0000", "terminal: zero-word"]

    def test_to_final(self, runner):
        result = runner.invoke(main, ["scheme", "--input", "0b10110100", "--rank", "1"])
        assert result.output.splitlines()[-1].startswith("terminal: final-word A=4")

    def test_open(self, runner):
        # A = 6 is not final at length 8
        word = runner.invoke(main, ["synth", "--bits", "3", "--value", "6", "--seed", "1"]).output.strip()
        result = runner.invoke(main, ["scheme", "--input", word])
        assert result.output.splitlines()[-1] == "terminal: open"

    def test_bad_rank(self, runner):
        result = runner.invoke(main, ["scheme", "--input", "0b0110", "--rank", "3"])
        assert result.exit_code == 3


class TestParities:
    def test_tree(self, runner):
        result = runner.invoke(main, ["parities", "--input", "0b10110100"])
        assert result.output.splitlines() == [
            "0: 0",
            "1: 0 0",
            "2: 1 1 1 1",
            "3: 1 0 1 1 0 1 0 0",
            "xor_count: 7",
            "final: level 2 A=5",
        ]

    def test_reference_path_agrees(self, runner):
        packed = runner.invoke(main, ["parities", "--input", "0x96"]).output
        reference = runner.invoke(main, ["parities", "--input", "0x96", "--reference"]).output
        assert packed == reference


class TestSynth:
    def test_word_has_requested_complexity(self, runner):
        result = runner.invoke(main, ["--json", "synth", "--bits", "5", "--value", "20", "--seed", "1"])
        row = json.loads(result.output)["results"][0]
        assert row["complexity"] == 20
        check = runner.invoke(main, ["complexity", "--input", row["word"], "--engine", "naive"])
        assert check.output == "A=20\n"

    def test_global_seed(self, runner):
        first = runner.invoke(main, ["--seed", "4", "synth", "--bits", "4", "--value", "9"]).output
        second = runner.invoke(main, ["synth", "--bits", "4", "--value", "9", "--seed", "4"]).output
        assert first == second

    def test_out_of_range(self, runner):
        assert runner.invoke(main, ["synth", "--bits", "3", "--value", "9"]).exit_code == 3


class TestShannon:
    def test_rows(self, runner):
        result = runner.invoke(main, ["shannon", "--min-n", "4", "--max-n", "6"])
        lines = result.output.splitlines()
        assert result.exit_code == 0
        assert len(lines) == 4
        assert lines[1] == "4 | 1 | 1 | 1 | 2 | ok"
        assert lines[2].startswith("5 | 1 | 1 |")

    def test_validate_passes(self, runner):
        result = runner.invoke(main, ["shannon", "--min-n", "5", "--max-n", "10", "--validate"])
        assert result.exit_code == 0

    def test_defaults_from_config(self, runner, config_file):
        path = config_file('{"shannon": {"min_n": 2, "max_n": 3}}')
        lines = runner.invoke(main, ["--config", str(path), "shannon"]).output.splitlines()
        assert [line.split(" | ")[0] for line in lines[1:]] == ["2", "3"]

    def test_range_checked(self, runner):
        assert runner.invoke(main, ["shannon", "--min-n", "0", "--max-n", "3"]).exit_code == 3
        assert runner.invoke(main, ["shannon", "--min-n", "5", "--max-n", "17"]).exit_code == 3
        assert runner.invoke(main, ["shannon", "--min-n", "6", "--max-n", "5"]).exit_code == 3


class TestVerify:
    def test_small_level_passes(self, runner, config_file):
        path = config_file(
            '{"verify": {"quick": {"exhaustive_max_n": 2, "sampled_levels": [4], "samples": 10,'
            ' "detection_samples": 2, "shannon_max_n": 5, "equivalence_levels": [5], "equivalence_samples": 10}}}'
        )
        result = runner.invoke(main, ["verify", "--level", "quick"], env={"ARNOLD_COMPLEXITY_CONFIG": str(path)})
        assert result.exit_code == 0
        assert "all 18 properties hold" in result.output

    def test_unknown_level(self, runner):
        assert runner.invoke(main, ["verify", "--level", "huge"]).exit_code == 1

    def test_failure_exits_2(self, runner, monkeypatch):
        failing = PropertyResult(name="oracle", status=CheckStatus.FAIL, checked=1, witnesses=["0b01 fast=2 naive=3"])
        monkeypatch.setattr("src.commands.verify.run_verification", lambda settings, seed: [failing])
        result = runner.invoke(main, ["verify"])
        assert result.exit_code == 2
        assert "1 of 1 properties failed" in result.output
        assert "0b01 fast=2 naive=3" in result.output


class TestBench:
    def test_report(self, runner):
        result = runner.invoke(main, ["bench", "--bits", "4", "--samples", "3", "--seed", "2"])
        assert result.exit_code == 0
        assert "A range: 13..16" in result.output
        assert "speedup:" in result.output

    def test_json_always_timed(self, runner):
        result = runner.invoke(main, ["bench", "--bits", "3", "--samples", "2", "--json"])
        record = _json(result.output)
        assert record["timing_ns"] is not None
        assert record["results"][0]["samples"] == 2

    def test_zero_samples(self, runner):
        assert runner.invoke(main, ["bench", "--bits", "4", "--samples", "0"]).exit_code == 3


class TestConfig:
    def test_invalid_config_is_input_error(self, runner, config_file):
        path = config_file("{broken")
        result = runner.invoke(main, ["--config", str(path), "plan", "--value", "5", "--bits", "3"])
        assert result.exit_code == 3


class TestSynthFormat:
    def test_hex(self, runner):
        hex_word = runner.invoke(main, ["synth", "--bits", "4", "--value", "11", "--seed", "2", "--format", "hex"])
        bin_word = runner.invoke(main, ["synth", "--bits", "4", "--value", "11", "--seed", "2"])
        assert hex_word.output.startswith("0x")
        assert int(hex_word.output, 16) == int(bin_word.output, 2)
