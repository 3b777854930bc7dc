import json
import os
import subprocess
import sys

import pytest

from sigmagroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_c5s3_json(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "builder:paper_example",
                       "--sigma", "3,5|*", "--json")
    assert code == 0
    r = json.loads(out)
    assert r["schema_version"] == 1
    assert r["residual"]["order"] == 3
    assert r["special_psigmat"]["D"]["order"] == 3
    assert r["psigmat"]["bruteforce"]["value"] and r["psigmat"]["subnormal"]["value"]
    assert r["status"] == "OK"


def test_analyze_cyclic_text(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "builder:cyclic(12)", "--sigma", "*")
    assert code == 0
    assert "sigma-primary yes" in out
    assert "PsigmaT (brute force): yes" in out


def test_analyze_s4_witness(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "builder:symmetric(4)",
                       "--sigma", "2|3|*", "--json")
    assert code == 0
    bf = json.loads(out)["psigmat"]["bruteforce"]
    assert bf["value"] is False and bf["witness_replays"] is True
    assert bf["witness"]["K"]["order"] == 2 and bf["witness"]["H"]["order"] == 4


def test_analyze_group_file(capsys, tmp_path):
    f = tmp_path / "v4.grp"
    f.write_text("# Klein four\ndegree: 4\ngen: (1 2)(3 4)\ngen: (1 3)(2 4)\n")
    code, out, _ = run(capsys, "analyze", "--group", str(f), "--sigma", "2|*", "--json")
    assert code == 0 and json.loads(out)["group"]["order"] == 4


def test_report_is_deterministic(capsys):
    args = ("analyze", "--group", "builder:SL(2,3)", "--sigma", "2|3|*", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


@pytest.mark.parametrize("argv", [
    ["analyze", "--group", "builder:S4"],
    ["analyze", "--group", "builder:nope", "--sigma", "*"],
    ["analyze", "--group", "builder:S4", "--sigma", "2,3|3|*"],
    ["verify", "--only", "S4,ZZ"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as e:   # argparse rejects before dispatch
        code = e.code
    assert code == 2


def test_bad_group_file_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.grp"
    f.write_text("degree: 3\ngen: (1 5)\n")
    code, _, err = run(capsys, "analyze", "--group", str(f), "--sigma", "*")
    assert code == 2 and "line 2" in err


def test_cap_exit_3(capsys):
    code, _, err = run(capsys, "analyze", "--group", "builder:A5", "--sigma", "*", "--cap", "30")
    assert code == 3 and "cap" in err


def test_cap_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("SIGMAGROUPS_ORDER_CAP", "20")
    code, _, _ = run(capsys, "analyze", "--group", "builder:symmetric(4)", "--sigma", "*")
    assert code == 3


def test_verify_selection(capsys, tmp_path):
    specs = tmp_path / "specs.txt"
    specs.write_text("# one spec\n2,3|5|*\n")
    code, out, _ = run(capsys, "verify", "--only", "A5", "--sigma-list", str(specs), "--json")
    assert code == 0
    res = json.loads(out)
    (cell,) = res["cells"]
    assert cell["theorem_c_applicable"] is False
    assert res["summary"]["theorem_C_applicable"] == 0


def test_verify_empty_selection(capsys):
    code, out, _ = run(capsys, "verify", "--only", "", "--json")
    assert code == 0
    assert json.loads(out)["summary"]["cells"] == 0


def test_verify_passing_cells(capsys):
    code, out, _ = run(capsys, "verify", "--only", "S4,C5xS3,Q8")
    assert code == 0
    assert "falsifications: 0" in out


def test_verify_reports_falsification(capsys, tmp_path):
    specs = tmp_path / "specs.txt"
    specs.write_text("2|*\n")
    code, out, _ = run(capsys, "verify", "--only", "A5", "--sigma-list", str(specs), "--json")
    assert code == 1
    (f,) = json.loads(out)["cells"][0]["falsifications"]
    assert f["check"] == "route_agreement" and f["witness_replays"] is True


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=os.pathsep.join(sys.path))
    proc = subprocess.run([sys.executable, "-m", "sigmagroups", "analyze", "--group",
                           "builder:S3", "--sigma", "2|*"], capture_output=True, text=True,
                          env=env)
    assert proc.returncode == 0 and "status: OK" in proc.stdout
