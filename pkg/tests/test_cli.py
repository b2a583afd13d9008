"""Command-line interface: flags, wire formats, exit codes."""

import json

import pytest

from revca import parse_rule
from revca.cli import main

FIG1_RULE = "201210210201210210201210210"
FIG2_RULE = "201012210201012210201012210"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_reversible(capsys):
    code, out, _ = run(
        capsys, "check", "--states", "3",
        "--rule", "000111222000111222000111222", "--cells", "100",
    )
    assert code == 0
    assert "Reversible" in out


def test_check_irreversible_with_witness(capsys):
    code, out, _ = run(
        capsys, "check", "--states", "3", "--rule", FIG2_RULE, "--cells", "4",
    )
    assert code == 1
    assert "Irreversible" in out
    assert "witness" in out


def test_check_range_alternating(capsys):
    code, out, _ = run(
        capsys, "check", "--states", "3",
        "--rule", "102221010102221010102221010", "--cells-range", "3:8",
    )
    assert code == 1  # only some n reversible
    lines = [l for l in out.splitlines() if l.startswith("n=")]
    assert len(lines) == 6
    for line in lines:
        n = int(line.split(":")[0][2:])
        expect = "Reversible" if n % 2 else "Irreversible"
        assert expect in line


def test_check_json_schema(capsys):
    code, out, _ = run(
        capsys, "check", "--states", "3", "--rule", FIG1_RULE,
        "--cells", "4", "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["schema"] == "revca/verdict:1"
    assert record["outcome"] == "reversible"
    assert record["rule"] == FIG1_RULE

    code, out, _ = run(
        capsys, "check", "--states", "3", "--rule", FIG1_RULE,
        "--cells-range", "3:5", "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["schema"] == "revca/verdict-range:1"
    assert [r["n"] for r in record["results"]] == [3, 4, 5]


def test_evolve_trace(capsys):
    code, out, _ = run(
        capsys, "evolve", "--states", "3", "--rule", FIG1_RULE,
        "--config", "1012", "--steps", "1",
    )
    assert code == 0
    assert out.splitlines() == ["0 1012", "1 1200"]


def test_evolve_zero_steps_echoes(capsys):
    code, out, _ = run(
        capsys, "evolve", "--states", "3", "--rule", FIG1_RULE,
        "--config", "1012", "--steps", "0",
    )
    assert code == 0
    assert out.splitlines() == ["0 1012"]


def test_gen_all_strategy_iii(capsys):
    code, out, _ = run(capsys, "gen", "--strategy", "III", "--states", "3", "--all")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 222
    # lossless: every emitted string parses back to a 3-state rule
    for line in lines[:10]:
        parse_rule(line, 3)


def test_gen_sample_is_seeded(capsys):
    _, out1, _ = run(
        capsys, "gen", "--strategy", "I", "--states", "3",
        "--sample", "5", "--seed", "9",
    )
    _, out2, _ = run(
        capsys, "gen", "--strategy", "I", "--states", "3",
        "--sample", "5", "--seed", "9",
    )
    assert out1 == out2
    assert len(out1.splitlines()) == 5


def test_gen_pipes_into_check(capsys):
    _, out, _ = run(capsys, "gen", "--strategy", "II", "--states", "2", "--all")
    rules = out.splitlines()
    assert len(rules) == 16
    for text in rules:
        code, _, _ = run(capsys, "check", "--states", "2", "--rule", text, "--cells", "4")
        assert code in (0, 1)


def test_oracle_output(capsys):
    code, out, _ = run(
        capsys, "oracle", "--states", "3", "--rule", FIG1_RULE, "--cells", "4",
    )
    assert code == 0
    assert "bijective: yes" in out
    assert "image=81/81" in out
    code, out, _ = run(
        capsys, "oracle", "--states", "3", "--rule", FIG1_RULE,
        "--cells", "4", "--format", "json",
    )
    record = json.loads(out)
    assert record["bijective"] is True


def test_infinite_output(capsys):
    code, out, _ = run(capsys, "infinite", "--states", "3", "--rule", FIG1_RULE)
    assert code == 0
    assert "injective: yes" in out
    code, out, _ = run(
        capsys, "infinite", "--states", "3",
        "--rule", "102221010102221010102221010", "--format", "json",
    )
    record = json.loads(out)
    assert record["injective"] is False
    assert record["witness"]["pairs"]


def test_dot_output(capsys):
    code, out, _ = run(capsys, "dot", "--states", "2", "--rule", "11001100")
    assert code == 0
    assert out.count("->") == 8
    assert '"010/1"' in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(
        capsys, "check", "--states", "3", "--rule", "201", "--cells", "4",
    )
    assert code == 2
    assert "error" in err
    code, _, err = run(
        capsys, "evolve", "--states", "2", "--rule", "11001100",
        "--config", "0102", "--steps", "1",
    )
    assert code == 2


def test_resource_errors_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("REVCA_ORACLE_BUDGET", "100")
    code, _, err = run(
        capsys, "oracle", "--states", "3", "--rule", FIG1_RULE, "--cells", "12",
    )
    assert code == 3
    assert "resource" in err


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["check", "--states", "3"])  # missing required --rule
    assert exc.value.code == 2
