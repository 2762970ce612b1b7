from __future__ import annotations

import json

from racklab.cli import main
from racklab.lattice import load_lattice_export


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_group_info(capsys):
    rc, out, _ = run(capsys, ["group", "S3"])
    assert rc == 0
    data = json.loads(out)
    assert data["class_sizes"] == [1, 2, 3]
    assert data["properties"]["solvable"] is True


def test_group_info_sl23(capsys):
    rc, out, _ = run(capsys, ["group", "SL(2,3)"])
    assert rc == 0
    assert json.loads(out)["class_sizes"] == [1, 1, 4, 4, 4, 4, 6]


def test_parse_error_exit_code(capsys):
    rc, _, err = run(capsys, ["group", "Zoo"])
    assert rc == 2
    assert "Zoo" in err


def test_order_cap_exit_code(capsys):
    rc, _, err = run(capsys, ["group", "S6"])
    assert rc == 2
    assert "cap" in err


def test_lattice_z4(capsys):
    rc, out, _ = run(capsys, ["lattice", "Z4"])
    data = json.loads(out)
    assert rc == 0
    assert data["nodes"] == 16
    assert data["graded"] is True
    assert data["chain_lengths"] == [4]


def test_lattice_four_cycles(capsys):
    rc, out, _ = run(capsys, ["lattice", "S4:cycles(4)"])
    data = json.loads(out)
    assert data["nodes"] == 11 and data["coatoms"] == 3


def test_lattice_five_cycles(capsys):
    rc, out, _ = run(capsys, ["lattice", "A5:cycles(5)"])
    data = json.loads(out)
    assert data["nodes"] == 94
    assert data["graded"] is False


def test_lattice_export(tmp_path, capsys):
    path = tmp_path / "lat.txt"
    rc, out, _ = run(capsys, ["lattice", "S4:cycles(4)", "--export", str(path)])
    assert rc == 0
    loaded = load_lattice_export(path.read_text())
    assert loaded.n == 11


def test_homology_s3_and_d8(capsys):
    rc, out, _ = run(capsys, ["homology", "S3"])
    data = json.loads(out)
    assert data["sphere_dimension"] == 1
    assert data["dims"]["1"] == {"rank": 1, "torsion": []}
    rc, out, _ = run(capsys, ["homology", "D8"])
    assert json.loads(out)["sphere_dimension"] == 3


def test_homology_no_collapse_same_output(capsys):
    _, a, _ = run(capsys, ["homology", "S4:cycles(4)"])
    _, b, _ = run(capsys, ["homology", "S4:cycles(4)", "--no-collapse"])
    assert a == b


def test_verify_single_check(capsys):
    rc, out, _ = run(capsys, ["verify", "--check", "d8-q8-rack-iso"])
    assert rc == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert [c["id"] for c in data["checks"]] == ["d8-q8-rack-iso"]
    assert data["checks"][0]["seconds"] is None


def test_verify_unknown_check(capsys):
    rc, _, err = run(capsys, ["verify", "--check", "nope"])
    assert rc == 2


def test_verify_deterministic_output(capsys):
    argv = ["verify", "--check", "fourcycle-rack", "--check", "closure-laws"]
    _, a, _ = run(capsys, argv)
    _, b, _ = run(capsys, argv)
    assert a == b


def test_verify_csv_format(capsys):
    rc, out, _ = run(capsys, ["verify", "--check", "d8-q8-rack-iso", "--format", "csv"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("id,status")
    assert lines[1].startswith("d8-q8-rack-iso,pass")


def test_verify_max_order_skips(capsys):
    rc, out, _ = run(capsys, ["verify", "--check", "kequal-fibers", "--max-order", "12"])
    assert rc == 0
    data = json.loads(out)
    assert data["checks"][0]["status"] == "skipped"
    assert data["checks"][0]["skip_reason"]


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("RACKLAB_BUDGET_NODES", "5")
    rc, _, err = run(capsys, ["lattice", "D8"])
    assert rc == 2
    assert "budget" in err


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("RACKLAB_BUDGET_NODES", "5")
    rc, out, _ = run(capsys, ["lattice", "D8", "--budget-nodes", "100000"])
    assert rc == 0
    assert json.loads(out)["nodes"] == 56


def test_verify_workers_output_identical(capsys):
    argv = ["verify", "--check", "d8-q8-rack-iso", "--check", "fourcycle-rack"]
    _, a, _ = run(capsys, argv)
    _, b, _ = run(capsys, argv + ["--workers", "2"])
    assert a == b


def test_verify_bytes_identical_across_processes():
    # fresh interpreters with different hash seeds must emit identical reports
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "racklab.cli", "verify",
           "--check", "fourcycle-rack", "--check", "homology-consistency"]
    outs = []
    for seed in ("0", "12345"):
        env = dict(__import__("os").environ, PYTHONHASHSEED=seed)
        outs.append(subprocess.run(cmd, capture_output=True, env=env).stdout)
    assert outs[0] == outs[1] and outs[0]
