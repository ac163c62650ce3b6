# tests/test_catcheck_cli.py
import json

import pytest

import catcheck


def test_passing_job_exits_zero(capsys, corpus_path):
    code = catcheck.main(["check-hopf", corpus_path("group_algebra_c2.json"), "--format", "json", "--no-timings"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "check-hopf"
    assert data["summary"]["failed"] == 0
    assert "timings" not in data


def test_failing_job_exits_one(capsys):
    assert catcheck.main(["check-hopf", "idempotent_monoid.json"]) == 1
    out = capsys.readouterr().out
    assert "CATCHECK REPORT: check-hopf" in out
    assert "✗" in out


def test_malformed_input_exits_two(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text('{\n  "schema": "catcheck/v1",\n  "kind": \n}')
    assert catcheck.main(["check-algebra", str(broken)]) == 2
    assert "broken.json:4" in capsys.readouterr().err


def test_bad_options_exit_two():
    assert catcheck.main(["nerve", "arrow.json", "--prime", "4"]) == 2


def test_report_goes_to_the_output_file(tmp_path):
    target = tmp_path / "report.json"
    assert catcheck.main(["nerve", "arrow.json", "--format", "json", "--output", str(target)]) == 0
    data = json.loads(target.read_text())
    assert data["artifacts"]["N([1]) simplices"] == [2, 3, 4, 5]


def test_no_command_prints_help(capsys):
    assert catcheck.main([]) == 2
    assert "Commands:" in capsys.readouterr().out


def test_version():
    with pytest.raises(SystemExit) as info:
        catcheck.main(["--version"])
    assert info.value.code == 0


def test_every_command_has_help():
    parser = catcheck.build_parser()
    for name in catcheck.COMMAND_HELP:
        assert parser.parse_args([name]).command == name
