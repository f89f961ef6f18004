"""Command-line interface: JSON/CSV reports, exit codes, config merging."""

import json

import pytest

from veronese_jets.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    run,
)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_character_json_report(capsys):
    code, out, _ = invoke(capsys, "character", "--l", "1", "--n", "2", "--qmax", "2")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["command"] == "character"
    assert report["params"] == {"l": 1, "n": 2, "qmax": 2}
    assert report["character"] == [
        {"q": [1, 1, 2], "weight": -2},
        {"q": [1, 2, 3], "weight": 0},
        {"q": [1, 1, 2], "weight": 2},
    ]
    assert report["checks"] == []
    assert "timing_ms" not in out


def test_output_is_deterministic(capsys):
    args = ("jet", "--l", "2", "--n", "2", "--qmax", "2", "--generators")
    code1, out1, _ = invoke(capsys, *args)
    code2, out2, _ = invoke(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    gens = json.loads(out1)["generators"]
    assert gens[0] == {
        "k": 0,
        "polynomial": "-x1[0]^2 + x0[0]*x2[0]",
        "r": 2,
        "s": 0,
        "w": 0,
    }


def test_jet_compare_matches_closed_forms(capsys):
    code, out, _ = invoke(
        capsys, "jet", "--l", "2", "--n", "2", "--qmax", "3", "--compare"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert names == ["quadratic_kernel_character_hilbert_agree"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_fiber_report(capsys):
    code, out, _ = invoke(
        capsys, "fiber", "--l", "1", "--n", "2", "--qmax", "2", "--point", "0,1"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["fiber"]["total"] == 4
    assert report["fiber"]["expected"] == 4
    assert report["fiber"]["by_weight"] == [
        {"dim": 1, "weight": -2},
        {"dim": 2, "weight": 0},
        {"dim": 1, "weight": 2},
    ]
    assert report["params"]["point"] == ["0", "1"]


def test_fiber_accepts_fractions(capsys):
    code, out, _ = invoke(
        capsys, "fiber", "--l", "1", "--n", "2", "--qmax", "2", "--point", "3/2,-1/3"
    )
    assert code == EXIT_OK
    assert json.loads(out)["fiber"]["total"] == 4


def test_fusion_inconclusive_truncation(capsys):
    code, out, _ = invoke(
        capsys, "fusion", "--levels", "1,1", "--points", "0,1", "--qmax", "0"
    )
    assert code == EXIT_INCONCLUSIVE
    report = json.loads(out)
    checks = {c["name"]: c["status"] for c in report["checks"]}
    assert checks["stabilization"] == "inconclusive"


def test_fusion_auto_qmax_and_match(capsys):
    code, out, _ = invoke(capsys, "fusion", "--levels", "1,1", "--points", "0,1")
    assert code == EXIT_OK
    report = json.loads(out)
    assert {c["weight"]: c["q"] for c in report["character"]} == {
        -2: [1, 0],
        0: [1, 1],
        2: [1, 0],
    }
    assert any(c["name"] == "matches_closed_form" for c in report["checks"])


def test_fusion_repeated_points_usage_error(capsys):
    code, _, err = invoke(
        capsys, "fusion", "--levels", "1,1", "--points", "2,2", "--qmax", "2"
    )
    assert code == EXIT_USAGE
    assert "distinct" in err


def test_usage_errors(capsys):
    assert invoke(capsys, "character", "--l", "1", "--n", "1", "--qmax", "1", "--nope")[0] == EXIT_USAGE
    assert invoke(capsys, "nonsense")[0] == EXIT_USAGE
    assert invoke(capsys, "accept", "--only", "not_a_criterion")[0] == EXIT_USAGE
    assert invoke(capsys, "character", "--l", "0", "--n", "1", "--qmax", "1")[0] == EXIT_USAGE


def test_qmax_cap(capsys):
    code, _, err = invoke(capsys, "character", "--l", "1", "--n", "1", "--qmax", "13")
    assert code == EXIT_USAGE
    assert "cap" in err
    code, out, _ = invoke(
        capsys,
        "character", "--l", "1", "--n", "1", "--qmax", "13", "--qmax-cap", "13",
    )
    assert code == EXIT_OK
    assert len(json.loads(out)["character"][0]["q"]) == 14


def test_config_file_merge(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("qmax=2\nformat=csv\n")
    code, out, _ = invoke(
        capsys, "character", "--l", "1", "--n", "1", "--config", str(cfg)
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "kind,weight_or_name,k_or_status,value_or_detail"

    # explicit flags win over config values
    code, out, _ = invoke(
        capsys,
        "character", "--l", "1", "--n", "1", "--qmax", "1",
        "--config", str(cfg), "--format", "json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["params"]["qmax"] == 1

    bad = tmp_path / "bad.cfg"
    bad.write_text("unknown_key=3\n")
    code, _, err = invoke(
        capsys, "character", "--l", "1", "--n", "1", "--qmax", "1", "--config", str(bad)
    )
    assert code == EXIT_USAGE
    assert "unknown_key" in err


def test_csv_report_shape(capsys):
    code, out, _ = invoke(
        capsys,
        "supernomial", "--l", "1", "--n", "2", "--qmax", "1", "--format", "csv",
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "kind,weight_or_name,k_or_status,value_or_detail"
    assert "character,-2,0,1" in lines
    assert all(len(line.split(",")) == 4 for line in lines)


def test_timing_flag(capsys):
    code, out, _ = invoke(
        capsys, "character", "--l", "1", "--n", "1", "--qmax", "1", "--timing"
    )
    assert code == EXIT_OK
    assert "timing_ms" in json.loads(out)


def test_identities_command(capsys):
    code, out, _ = invoke(capsys, "identities", "--l", "2", "--n", "2", "--qmax", "3")
    assert code == EXIT_OK
    report = json.loads(out)
    statuses = {c["name"]: c["status"] for c in report["checks"]}
    assert statuses and all(s == "pass" for s in statuses.values())


def test_accept_single_criterion(capsys):
    code, out, _ = invoke(
        capsys, "accept", "--only", "supernomial_specialization"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["checks"] == [
        {
            "detail": report["checks"][0]["detail"],
            "name": "supernomial_specialization",
            "status": "pass",
        }
    ]
