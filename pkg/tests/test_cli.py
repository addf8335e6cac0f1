"""End-to-end command-line behavior: output text, JSON envelopes, exit codes."""

import json
import shutil
import subprocess

import pytest

from qshuffle import (
    LawReport,
    LawViolation,
    TensorElement,
    algebra_by_name,
    element_from_json,
    weight_letter,
)
from qshuffle.cli import (
    CommandConfig,
    cmd_axioms,
    cmd_coproduct,
    cmd_dims,
    cmd_egf,
    cmd_normalize,
    cmd_product,
    main,
)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestProductCommand:
    def test_stuffle_example(self, capsys):
        code, out, _ = run_cli(capsys, ["product", "--alg", "stuffle-y", "y1", "y2"])
        assert code == 0
        assert out == "y3 + y1.y2 + y2.y1\n"

    def test_shuffle_example(self, capsys):
        code, out, _ = run_cli(capsys, ["product", "--alg", "zero", "a", "b"])
        assert code == 0
        assert out == "a.b + b.a\n"

    def test_dot_example(self, capsys):
        code, out, _ = run_cli(
            capsys, ["product", "--alg", "sym2", "--op", "dot", "x1", "x2"]
        )
        assert code == 0
        assert out == "[x1 x2]\n"

    def test_compound_expressions(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["product", "--alg", "stuffle-y", "--op", "dot", "1 + y1", "y2"],
        )
        assert code == 0
        assert out == "y3\n"

    def test_json_envelope_round_trips(self, capsys):
        code, out, _ = run_cli(
            capsys, ["product", "--alg", "stuffle-y", "--json", "y1", "y1"]
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"command", "seed", "result"}
        assert payload["command"] == "product"
        alg = algebra_by_name("stuffle-y")
        element = element_from_json(alg, payload["result"])
        expected = TensorElement(
            [((weight_letter(2),), 1), ((weight_letter(1), weight_letter(1)), 2)]
        )
        assert element == expected

    def test_programmatic_layer(self):
        result = cmd_product("stuffle-y", "y1", "y2", "star")
        assert result == TensorElement(
            [
                ((weight_letter(3),), 1),
                ((weight_letter(1), weight_letter(2)), 1),
                ((weight_letter(2), weight_letter(1)), 1),
            ]
        )


class TestDimsCommand:
    def test_ctd_table(self, capsys):
        code, out, _ = run_cli(capsys, ["dims", "--flavor", "ctd", "--n", "6"])
        assert code == 0
        lines = out.splitlines()
        assert "6: 4683 4683 OK" in lines
        assert "1: 1 1 OK" in lines
        assert lines[-1] == "PASS"

    def test_itd_table(self, capsys):
        code, out, _ = run_cli(capsys, ["dims", "--flavor", "itd", "--n", "4"])
        assert code == 0
        assert "4: 192 192 OK" in out.splitlines()

    def test_out_of_range_is_a_usage_error(self, capsys):
        code, _, err = run_cli(capsys, ["dims", "--flavor", "ctd", "--n", "9"])
        assert code == 2
        assert "error:" in err

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr("qshuffle.cli.fubini", lambda n: 0)
        code, out, _ = run_cli(capsys, ["dims", "--flavor", "ctd", "--n", "2"])
        assert code == 1
        assert "MISMATCH" in out
        assert out.splitlines()[-1] == "FAIL"

    def test_programmatic_rows(self):
        rows, ok = cmd_dims(3, "ctd")
        assert ok
        assert [row["enumerated"] for row in rows] == [1, 3, 13]


class TestEgfCommand:
    def test_order_six_text(self, capsys):
        code, out, _ = run_cli(capsys, ["egf", "--order", "6"])
        assert code == 0
        lines = out.splitlines()
        assert "1: 1 (count 1)" in lines
        assert "6: 1561/240 (count 4683)" in lines
        assert lines[-1] == "PASS"

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(capsys, ["egf", "--order", "3", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "egf"
        rows = payload["result"]["rows"]
        assert rows[3] == {"k": 3, "coefficient": "13/6"}
        assert payload["result"]["ok"] is True

    def test_order_bound(self, capsys):
        code, _, err = run_cli(capsys, ["egf", "--order", "13"])
        assert code == 2
        assert "error:" in err

    def test_programmatic_layer(self):
        series, ok = cmd_egf(4)
        assert ok and len(series) == 5


class TestNormalizeCommand:
    def test_expansion_example(self, capsys):
        code, out, _ = run_cli(capsys, ["normalize", "((a<b)<c)"])
        assert code == 0
        assert out == "(v1)(v2)(v3) + (v1)(v2 v3) + (v1)(v3)(v2)\n"

    def test_already_normal_example(self, capsys):
        code, out, _ = run_cli(capsys, ["normalize", "((a.b)<c)"])
        assert code == 0
        assert out == "(v1 v2)(v3)\n"

    def test_dot_reordering(self, capsys):
        code, out, _ = run_cli(capsys, ["normalize", "(b.a)"])
        assert code == 0
        assert out == "(v1 v2)\n"

    def test_td_term_is_a_domain_error(self, capsys):
        code, _, err = run_cli(capsys, ["normalize", "(a>b)"])
        assert code == 2
        assert "error:" in err

    def test_parse_error_position(self, capsys):
        code, _, err = run_cli(capsys, ["normalize", "(a < b"])
        assert code == 2
        assert "parse error at position 6" in err

    def test_programmatic_layer(self):
        nf = cmd_normalize("(a<b)")
        assert list(nf.support()) == [((1,), (2,))]


class TestCoproductCommand:
    def test_prec_example(self, capsys):
        code, out, _ = run_cli(capsys, ["coproduct", "(a<b)"])
        assert code == 0
        assert out == "1 (x) x1.x2 + x1 (x) x2 + x1.x2 (x) 1\n"

    def test_dot_output_is_primitive(self, capsys):
        code, out, _ = run_cli(capsys, ["coproduct", "(a.a)"])
        assert code == 0
        assert out == "1 (x) [x1 x1] + [x1 x1] (x) 1\n"

    def test_programmatic_layer(self):
        square = cmd_coproduct("a")
        assert len(square) == 2


class TestAxiomsCommand:
    def test_seven_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["axioms", "--suite", "seven", "--alg", "word2", "--cases", "25",
             "--seed", "1"],
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "suite seven algebra word2 seed 1 cases 25"
        assert lines[-1] == "PASS"

    def test_suite_alias(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["axioms", "--suite", "seven-relations", "--alg", "zero",
             "--cases", "5", "--seed", "2"],
        )
        assert code == 0
        assert out.splitlines()[0].startswith("suite seven ")

    def test_ctd_three_on_shuffle(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["axioms", "--suite", "ctd-three", "--alg", "zero", "--cases", "20",
             "--seed", "1"],
        )
        assert code == 0
        assert out.splitlines()[-1] == "PASS"

    def test_zero_cases_warns_and_passes(self, capsys):
        code, out, err = run_cli(
            capsys,
            ["axioms", "--suite", "seven", "--cases", "0", "--seed", "1"],
        )
        assert code == 0
        assert "vacuously" in err
        assert out.splitlines()[-1] == "PASS"

    def test_violations_exit_one(self, capsys, monkeypatch):
        report = LawReport(
            suite="seven",
            algebra="word2",
            cases=1,
            seed=0,
            violations=[
                LawViolation(
                    law="(x.y).z = x.(y.z)",
                    case_index=0,
                    inputs=("x1", "x2", "x1"),
                    lhs="x1.x2",
                    rhs="x2.x1",
                )
            ],
        )
        monkeypatch.setattr("qshuffle.cli.run_suite", lambda *a, **k: report)
        code, out, _ = run_cli(
            capsys, ["axioms", "--suite", "seven", "--cases", "1"]
        )
        assert code == 1
        lines = out.splitlines()
        assert "FAIL case 0 (x.y).z = x.(y.z): x1.x2 != x2.x1" in lines
        assert lines[-1] == "FAIL (1 violations)"

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["axioms", "--suite", "involution", "--alg", "word2", "--cases", "10",
             "--seed", "3", "--json"],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "axioms"
        assert payload["seed"] == 3
        assert payload["result"]["ok"] is True
        assert payload["result"]["cases"] == 10

    def test_programmatic_config(self):
        config = CommandConfig(
            subcommand="axioms", algebra="sym2", seed=5, cases=6, suite="splitting"
        )
        report = cmd_axioms(config)
        assert report.ok and report.seed == 5


class TestDeterminism:
    def test_identical_configs_identical_bytes(self, capsys):
        argv = ["axioms", "--suite", "ctd-three", "--alg", "sym2", "--cases", "30",
                "--seed", "17"]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second

    def test_parallel_output_matches_serial(self, capsys):
        base = ["compat", "--alg", "stuffle-y", "--cases", "16", "--seed", "9",
                "--json"]
        _, serial, _ = run_cli(capsys, base)
        _, threaded, _ = run_cli(capsys, base + ["--parallel"])
        assert serial == threaded


class TestCompatAndSplitting:
    def test_compat_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, ["compat", "--alg", "sym2", "--cases", "15", "--seed", "7"]
        )
        assert code == 0
        assert out.splitlines()[-1] == "PASS"

    def test_splitting_passes(self, capsys):
        code, out, _ = run_cli(capsys, ["splitting", "--alg", "sym2", "--degree", "4"])
        assert code == 0
        assert "PASS" in out

    def test_splitting_json(self, capsys):
        code, out, _ = run_cli(
            capsys, ["splitting", "--alg", "word2", "--degree", "3", "--json"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["result"] == {
            "algebra": "word2",
            "max_word_length": 3,
            "ok": True,
        }


class TestRotaCommands:
    def test_verify_summation3(self, capsys):
        code, out, _ = run_cli(capsys, ["rota", "verify", "--example", "summation3"])
        assert code == 0
        lines = out.splitlines()
        assert "weight-one identity: PASS" in lines
        assert "star morphism: PASS" in lines
        assert lines[-1] == "PASS"

    def test_table_contains_disjoint_product(self, capsys):
        code, out, _ = run_cli(capsys, ["rota", "table", "--example", "summation3"])
        assert code == 0
        lines = out.splitlines()
        assert "e1 < e2 = 0" in lines
        assert "e1 > e2 = e2" in lines
        assert "e1 . e1 = e1" in lines

    def test_table_json_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, ["rota", "table", "--example", "summation4", "--json"]
        )
        assert code == 0
        payload = json.loads(out)
        tables = payload["result"]["tables"]
        assert set(tables) == {"<", ">", "."}
        assert len(tables["<"]) == 16

    def test_unknown_example(self, capsys):
        code, _, err = run_cli(capsys, ["rota", "verify", "--example", "trapezoid"])
        assert code == 2
        assert "error:" in err


class TestExitCodes:
    def test_parse_error_is_two(self, capsys):
        code, _, err = run_cli(capsys, ["product", "--alg", "stuffle-y", "y1 +", "y2"])
        assert code == 2
        assert "parse error at position" in err

    def test_unit_pairing_is_two(self, capsys):
        code, _, err = run_cli(
            capsys, ["product", "--alg", "stuffle-y", "--op", "left", "1", "1"]
        )
        assert code == 2
        assert "error:" in err

    def test_unknown_algebra_is_two(self, capsys):
        code, _, err = run_cli(capsys, ["product", "--alg", "tropical", "a", "b"])
        assert code == 2
        assert "error:" in err

    def test_usage_error_is_two(self, capsys):
        assert main(["definitely-not-a-command"]) == 2
        assert main(["axioms"]) == 2  # --suite is required
        capsys.readouterr()


def test_console_script_is_installed():
    exe = shutil.which("qshuffle")
    assert exe, "editable install should provide the qshuffle entry point"
    proc = subprocess.run(
        [exe, "product", "--alg", "stuffle-y", "y1", "y2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "y3 + y1.y2 + y2.y1\n"
