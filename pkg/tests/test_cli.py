import json
import subprocess
import sys

import pytest

from dscayley import algebra
from dscayley.cli import main


@pytest.fixture(autouse=True)
def restore_guard():
    saved = algebra.DEFAULT_MAX_ORDER
    yield
    algebra.DEFAULT_MAX_ORDER = saved


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_neofield(tmp_path, capsys):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "build", "--construction", "neofield", "--q", "4", "--out", str(cert))
    assert code == 0
    assert "order: 225" in out and "diameter: 2" in out
    assert json.loads(cert.read_text())["order"] == 225


def test_build_rds4(tmp_path, capsys):
    edges = tmp_path / "e.txt"
    code, out, _ = run(capsys, "build", "--construction", "rds4", "--m", "3", "--edges", str(edges))
    assert code == 0 and "order: 256" in out and "degree: 24" in out
    assert len(edges.read_text().splitlines()) == 256 * 24 // 2


def test_build_rds4_even_fails(capsys):
    code, _, err = run(capsys, "build", "--construction", "rds4", "--m", "2")
    assert code != 0 and "defect" in err


def test_build_missing_parameter(capsys):
    code, _, err = run(capsys, "build", "--construction", "neofield")
    assert code == 2 and "--q" in err


def test_build_literal_config(capsys):
    code, out, err = run(capsys, "build", "--construction", "neofield", "--q", "3",
                         "--use-literal-paper-config")
    assert code != 0
    assert "covers=False" in out
    assert "uncovered" in err


def test_build_example31(capsys):
    code, out, _ = run(capsys, "build", "--construction", "example31", "--q", "5")
    assert code == 0 and "order: 120" in out and "degree: 18" in out


def test_verify_inline(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--group", "z7", "--set", "1,2,4", "--claim", "7,3,1")
    assert code == 0 and out.startswith("ok")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--group", "z7", "--set", "1,2,3", "--claim", "7,3,1",
                       "--report", str(report))
    assert code == 1 and "witness" in out
    assert json.loads(report.read_text())["ok"] is False


def test_verify_type_equation(capsys):
    code, out, _ = run(capsys, "verify", "--group", "z8", "--set", "0,1,3", "--claim", "8,3,1",
                       "--subgroup", "0,4", "--type", "III")
    assert code == 0 and "|M| = 2" in out


def test_verify_needs_input(capsys):
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_verify_certificate(tmp_path, capsys):
    cert = tmp_path / "c.json"
    run(capsys, "build", "--construction", "rds4", "--m", "1", "--out", str(cert))
    code, out, _ = run(capsys, "verify", "--cert", str(cert))
    assert code == 0 and "ok" in out
    data = json.loads(cert.read_text())
    data["diameter"] = 1
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--cert", str(cert))
    assert code == 1 and "FAILED" in out


def test_search(tmp_path, capsys):
    out_file = tmp_path / "s.tsv"
    code, out, _ = run(capsys, "search", "--max-order", "25", "--k", "3", "--psi", "1",
                       "--theta", "2", "--out", str(out_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H\tpsi\tlambdas\ts\tscore"
    assert lines[1].startswith("Z5xZ5\t") and lines[1].endswith("\t25/64")
    assert out_file.read_text() == out


def test_bounds_with_certs(tmp_path, capsys):
    run(capsys, "build", "--construction", "rds4", "--m", "1", "--out", str(tmp_path / "a.json"))
    run(capsys, "build", "--construction", "rds4", "--m", "3", "--out", str(tmp_path / "b.json"))
    code, out, _ = run(capsys, "bounds", "--d", "6:30", "--certs", str(tmp_path))
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines()]
    assert rows[0][0] == "d" and len(rows) == 26
    assert rows[1][:6] == ["6", "2", "37", "25", "25", "16"]
    assert rows[19][5] == "256"


def test_pad(tmp_path, capsys):
    cert = tmp_path / "c.json"
    run(capsys, "build", "--construction", "rds4", "--m", "1", "--out", str(cert))
    padded = tmp_path / "p.json"
    code, out, _ = run(capsys, "pad", "--cert", str(cert), "--d", "8", "--out", str(padded))
    assert code == 0 and "degree: 8" in out and "diameter: 2" in out
    code, _, err = run(capsys, "pad", "--cert", str(cert), "--d", "16")
    assert code == 2 and "outside" in err


def test_export_deterministic(tmp_path, capsys):
    cert = tmp_path / "c.json"
    run(capsys, "build", "--construction", "neofield", "--q", "3", "--out", str(cert),
        "--edges", str(tmp_path / "e1.txt"))
    first = cert.read_text()
    run(capsys, "build", "--construction", "neofield", "--q", "3", "--out", str(cert))
    assert cert.read_text() == first
    code, _, _ = run(capsys, "export", "--cert", str(cert), "--edges", str(tmp_path / "e2.txt"))
    assert code == 0
    assert (tmp_path / "e1.txt").read_bytes() == (tmp_path / "e2.txt").read_bytes()


def test_size_guard(capsys):
    code, _, err = run(capsys, "--max-group-order", "100", "build", "--construction", "rds4",
                       "--m", "3")
    assert code != 0 and err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "dscayley.cli", "verify", "--group", "z7",
                           "--set", "1,2,4", "--claim", "7,3,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ok")
