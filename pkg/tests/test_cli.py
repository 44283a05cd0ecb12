import json
import subprocess
import sys

import pytest

from dworklines.cli import Certificate, UsageError, emit_report, main, run_suite


def _run(args):
    return subprocess.run([sys.executable, "-m", "dworklines.cli", *args],
                          capture_output=True, text=True, timeout=600)


def test_schubert_json(capsys):
    code = main(["schubert", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["pass"]
    values = {c["name"]: c.get("value") for c in out["cases"]}
    assert values["class_S"] == "375*s22 + 250*s31"
    assert values["degree_plucker"] == 625 and values["degree_threefold"] == 250


def test_census_contains_key_numbers(capsys):
    code = main(["census", "--format", "json"])
    text = capsys.readouterr().out
    out = json.loads(text)
    assert code == 0
    for needle in ("2875", "5000", "375", "50"):
        assert needle in text


def test_verify_named_case(capsys):
    assert main(["verify", "row_relation"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_failing_case_exit_code(capsys):
    assert main(["verify", "g_diag_derivative", "--format", "json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["pass"] is False


def test_usage_errors(capsys):
    assert main(["verify", "no_such_case"]) == 2
    assert main([]) == 2
    assert main(["fiber", "--w", "abc"]) == 2
    assert main(["census", "--precision-bits", "8"]) == 2
    capsys.readouterr()


def test_membership(capsys):
    assert main(["membership", "--line", "[[1,0,-1,0,0],[0,1,0,-1,0]]"]) == 0
    assert main(["membership", "--line", "[[1,2,3,4,5],[0,1,0,0,0]]", "--t", "1"]) == 1
    capsys.readouterr()


def test_fiber(capsys):
    assert main(["fiber", "--w", "1/3"]) == 0
    assert main(["fiber", "--w", "branch"]) == 0
    capsys.readouterr()


def test_round_trip_and_empty():
    cert = run_suite("schubert")
    data = emit_report(cert, "json")
    assert Certificate.from_json(data) == cert
    empty = Certificate("identities", [])
    assert empty.passed and json.loads(emit_report(empty))["pass"] is True
    with pytest.raises(UsageError):
        emit_report(cert, "yaml")


def test_output_is_byte_identical():
    a = _run(["deformation", "--format", "json"])
    b = _run(["deformation", "--format", "json"])
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout


def test_timings_only_on_request(capsys):
    main(["schubert", "--format", "json"])
    assert "seconds" not in capsys.readouterr().out
    main(["schubert", "--format", "json", "--timings"])
    assert "seconds" in capsys.readouterr().out
