import json
import os
import subprocess
import sys

import pytest

from congruence_workbench.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeffs:
    def test_partition_values(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--alpha", "-1", "--n", "5")
        assert code == 0
        assert out.splitlines() == ["0\t1/1", "1\t1/1", "2\t2/1", "3\t3/1", "4\t5/1", "5\t7/1"]

    def test_known_tail_value(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--alpha", "-1/8", "--n", "5")
        assert code == 0
        assert out.splitlines()[-1] == "5\t55615/262144"

    def test_mod_reduction(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--alpha", "-1", "--n", "9", "--mod", "5^1")
        assert code == 0
        assert out.splitlines()[4] == "4\t0"
        assert out.splitlines()[9] == "9\t0"

    def test_not_l_integral_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "coeffs", "--alpha", "1/5", "--n", "3", "--mod", "5^1")
        assert code == 2
        assert "integral" in err

    def test_jsonl_mode(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--output", "jsonl", "--alpha", "-1", "--n", "2")
        assert code == 0
        assert [json.loads(line) for line in out.splitlines()] == [
            {"n": 0, "value": "1/1"},
            {"n": 1, "value": "1/1"},
            {"n": 2, "value": "2/1"},
        ]


class TestEta:
    def test_weight_one_values(self, capsys):
        code, out, _ = run_cli(capsys, "eta", "--d", "2", "--n", "13")
        assert code == 0
        assert out.splitlines() == ["1\t1/1", "13\t-2/1"]

    def test_support_mod_6(self, capsys):
        code, out, _ = run_cli(capsys, "eta", "--d", "4", "--n", "6")
        assert code == 0
        for line in out.splitlines():
            n = int(line.split("\t")[0])
            assert n % 6 == 1

    def test_rejects_nonpositive_d(self, capsys):
        code, _, err = run_cli(capsys, "eta", "--d", "0", "--n", "5")
        assert code == 2
        assert err.startswith("error:")

    def test_matches_library_expansion(self, capsys):
        from congruence_workbench.backend import format_rational
        from congruence_workbench.forms import eta_power

        code, out, _ = run_cli(capsys, "eta", "--d", "10", "--n", "50")
        assert code == 0
        expected = [
            f"{n}\t{format_rational(c)}" for n, c in eta_power(10, 51).nonzero_items()
        ]
        assert out.splitlines() == expected


class TestVerify:
    def test_t1_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--family", "t1", "--alpha", "-1/8",
            "--d", "6", "--ell", "7", "--r", "5", "--nmax", "10",
        )
        assert code == 0
        record = json.loads(out)
        assert record["status"] == "VERIFIED_IN_RANGE"
        assert record["modulus_power"] == 2
        assert record["alpha"] == "-1/8"

    def test_t2_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--family", "t2", "--alpha", "1/13",
            "--ell", "5", "--r", "7", "--nmax", "10",
        )
        assert code == 0
        assert json.loads(out)["modulus_power"] == 1

    def test_unsatisfactory_prime_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--family", "t1", "--alpha", "-1/8",
            "--d", "6", "--ell", "13", "--r", "5", "--nmax", "10",
        )
        assert code == 2
        assert "6-satisfactory" in err

    def test_t3_builder_roundtrip_with_expressions(self, capsys):
        # hypothesis checks pass; the verification itself is beyond any
        # sane precision cap, so the run must refuse rather than attempt it
        code, _, err = run_cli(
            capsys, "verify", "--family", "t3", "--alpha", "2/(13^13+1)",
            "--ell", "13", "--v", "1", "--r", "(13^12-1)/12", "--nmax", "0",
        )
        assert code == 2
        assert "precision" in err

    def test_missing_family_flag_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--family", "t1", "--alpha", "-1/8",
            "--ell", "7", "--r", "5",
        )
        assert code == 2
        assert "--d" in err

    def test_out_file_appends(self, capsys, tmp_path):
        target = tmp_path / "certs.jsonl"
        for _ in range(2):
            code, out, _ = run_cli(
                capsys, "verify", "--out", str(target), "--family", "cw",
                "--alpha", "-1", "--d", "4", "--ell", "5", "--r", "4", "--nmax", "3",
            )
            assert code == 0
            assert out == ""
        lines = target.read_text().splitlines()
        assert len(lines) == 2
        assert lines[0] == lines[1]
        assert json.loads(lines[0])["family"] == "cw"


class TestFindW:
    def test_known_value(self, capsys):
        code, out, _ = run_cli(capsys, "find-w", "--ell", "13", "--v", "1")
        assert code == 0
        assert out.strip() == "12"

    def test_support_zero(self, capsys):
        code, out, _ = run_cli(capsys, "find-w", "--ell", "5", "--v", "2")
        assert code == 0
        assert out.strip() == "1"

    def test_nonprime_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "find-w", "--ell", "4", "--v", "1")
        assert code == 2
        assert "not prime" in err


class TestSharpness:
    def test_t1_witness(self, capsys):
        code, out, _ = run_cli(
            capsys, "sharpness", "--family", "t1", "--alpha", "-1/8",
            "--d", "6", "--ell", "7", "--r", "5", "--nmax", "3",
        )
        assert code == 0
        assert out.splitlines()[0] == "0\t55615/262144\tord=2"

    def test_t2_witness_jsonl(self, capsys):
        code, out, _ = run_cli(
            capsys, "sharpness", "--output", "jsonl", "--family", "t2",
            "--alpha", "1/13", "--ell", "5", "--r", "7", "--nmax", "3",
        )
        assert code == 0
        record = json.loads(out)
        assert record == {
            "status": "witness",
            "n": 0,
            "value": "-3395395/62748517",
            "ord": 1,
        }

    def test_inconclusive_exits_1(self, capsys):
        code, out, _ = run_cli(
            capsys, "sharpness", "--family", "cw", "--alpha", "-1/8",
            "--d", "6", "--ell", "7", "--r", "5", "--nmax", "0",
        )
        assert code == 1
        assert out.strip() == "inconclusive"


class TestResidues:
    def test_examples(self, capsys):
        code, out, _ = run_cli(capsys, "residues", "--d", "6", "--ell", "7", "--ord", "1", "--count", "1")
        assert code == 0 and out.strip() == "5"
        code, out, _ = run_cli(capsys, "residues", "--d", "2", "--ell", "5", "--ord", "1", "--count", "1")
        assert code == 0 and out.strip() == "7"

    def test_t3_residue(self, capsys):
        code, out, _ = run_cli(capsys, "residues", "--d", "2", "--ell", "13", "--ord", "12", "--count", "1")
        assert code == 0
        assert out.strip() == str((13**12 - 1) // 12)


def _run_subprocess(args, env_update=None):
    env = dict(os.environ)
    env.update(env_update or {})
    return subprocess.run(
        [sys.executable, "-m", "congruence_workbench", *args],
        capture_output=True,
        env=env,
        check=False,
    )


class TestDeterminism:
    def test_seed_examples_byte_identical_across_thread_counts(self):
        outputs = set()
        for threads in ("1", "4"):
            proc = _run_subprocess(["seed-examples"], {"CONGRUENCE_WORKBENCH_THREADS": threads})
            assert proc.returncode == 0, proc.stderr
            outputs.add(proc.stdout)
        assert len(outputs) == 1

    def test_seed_examples_content(self):
        proc = _run_subprocess(["seed-examples"])
        records = [json.loads(line) for line in proc.stdout.decode().splitlines()]
        by_fixture = {r["fixture"]: r for r in records}
        assert by_fixture["p(-1/8)(5)"]["value"] == "55615/262144"
        assert by_fixture["p(1/13)(7)"]["value"] == "-3395395/62748517"
        assert by_fixture["find-w"]["w"] == 12
        assert by_fixture["t3-residue"]["r"] == (13**12 - 1) // 12
        assert by_fixture["ramanujan-mod-5"]["status"] == "VERIFIED_IN_RANGE"

    def test_invalid_thread_env_exits_2(self):
        proc = _run_subprocess(
            ["find-w", "--ell", "5", "--v", "1"],
            {"CONGRUENCE_WORKBENCH_THREADS": "zero"},
        )
        assert proc.returncode == 2

    def test_backends_agree(self):
        args = ["coeffs", "--alpha", "-1/8", "--n", "30"]
        outputs = set()
        for backend in ("gmpy2", "fractions"):
            proc = _run_subprocess(args, {"CONGRUENCE_WORKBENCH_BACKEND": backend})
            assert proc.returncode == 0, proc.stderr
            outputs.add(proc.stdout)
        assert len(outputs) == 1


def test_usage_error_exits_2(capsys):
    assert main(["verify"]) == 2
    capsys.readouterr()


def test_no_command_exits_2(capsys):
    assert main([]) == 2
    capsys.readouterr()
