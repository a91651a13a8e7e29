"""End-to-end command-line driver tests."""

import json

import pytest

from nablaqt.cli import main
from nablaqt.macdonald import cache_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_macdonald_plain(self, capsys):
        code, out, _ = run(capsys, "macdonald", "--mu", "2", "--format", "plain")
        assert code == 0
        assert out.strip() == "s[2] + q*s[1,1]"

    def test_macdonald_latex(self, capsys):
        code, out, _ = run(capsys, "--format", "latex", "macdonald", "--mu", "1,1")
        assert code == 0
        assert out.strip() == "s_{2} + t\\,s_{1,1}"

    def test_nabla_signed_p(self, capsys):
        code, out, _ = run(capsys, "nabla", "--target", "p", "--n", "2")
        assert code == 0
        assert out.strip() == "s[2] + (t + q + q*t)*s[1,1]"

    def test_nabla_rejects_zero(self, capsys):
        code, _, err = run(capsys, "nabla", "--target", "p", "--n", "0")
        assert code == 2
        assert "positive" in err

    def test_invalid_partition(self, capsys):
        code, _, err = run(capsys, "macdonald", "--mu", "1,2")
        assert code == 2
        assert "invalid partition" in err

    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


class TestVerificationCommands:
    def test_formulas(self, capsys):
        code, out, _ = run(capsys, "formulas", "--n", "2", "--check", "all")
        assert code == 0
        assert out.count("pass") == 4

    def test_localize_both_variants(self, capsys):
        for variant in ("F", "Fprime"):
            code, out, _ = run(capsys, "localize", "--n", "2", "--variant", variant)
            assert code == 0
            assert "matches" in out

    def test_localize_residue_override(self, capsys):
        code, out, _ = run(
            capsys, "localize", "--n", "2", "--variant", "F", "--residue-factor", "1"
        )
        assert code == 0
        # with residue factor 1 the F sum equals the Fprime sum
        assert out.strip() == "s[2] + (t + q + q*t)*s[1,1]"

    def test_positivity(self, capsys):
        code, out, _ = run(capsys, "positivity", "--n", "3")
        assert code == 0
        assert "Schur-positive" in out

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "2")
        assert code == 0
        lines = [line for line in out.splitlines() if line]
        assert all(line.endswith("pass") for line in lines)
        assert len(lines) == 9


class TestJsonOutput:
    def test_round_trip_byte_identical(self, capsys):
        for argv in (
            ["macdonald", "--mu", "2", "--format", "json"],
            ["verify", "--n", "2", "--format", "json"],
            ["positivity", "--n", "2", "--format", "json"],
        ):
            code, out, _ = run(capsys, *argv)
            assert code == 0
            reserialized = json.dumps(json.loads(out), sort_keys=True, indent=1) + "\n"
            assert reserialized == out

    def test_macdonald_payload(self, capsys):
        _, out, _ = run(capsys, "macdonald", "--mu", "2", "--format", "json")
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["value"]["coeffs"] == {"2": "1", "1,1": "q"}


class TestCache:
    def test_rebuild_and_reuse(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "cache", "rebuild", "--max-n", "2", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert cache_path(1, tmp_path).exists()
        assert cache_path(2, tmp_path).exists()
        code, out, _ = run(
            capsys, "macdonald", "--mu", "2", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert out.strip() == "s[2] + q*s[1,1]"

    def test_corrupt_cache_exits_1(self, capsys, tmp_path):
        run(capsys, "cache", "rebuild", "--max-n", "2", "--cache-dir", str(tmp_path))
        path = cache_path(2, tmp_path)
        payload = json.loads(path.read_text())
        payload["entries"]["2"]["1,1"] = "t"
        path.write_text(json.dumps(payload))
        code, _, err = run(capsys, "macdonald", "--mu", "2", "--cache-dir", str(tmp_path))
        assert code == 1
        assert "cache" in err.lower()
