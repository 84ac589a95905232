from __future__ import annotations

import io
import json
import math
from pathlib import Path
import subprocess
import sys

import pytest

from baryon_entanglement import cli

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["sectors"], "sectors.json"),
        (["check", "--sector", "0,-2", "--phases", "equal:0.3"], "check_0_-2_equal.json"),
        (["lattice"], "lattice.json"),
        (["eft", "couplings", "--su6", "0,81"], "eft_couplings_su6.json"),
    ],
)
def test_golden_outputs(argv, golden):
    code, out, _ = run(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_sectors_listing():
    data = json.loads(run("sectors")[1])
    assert len(data) == 19
    np_sector = next(s for s in data if (s["Q"], s["S"]) == (1, 0))
    assert np_sector == {"Q": 1, "S": 0, "kind": "1-dim distinct", "pairs": ["np"], "irreps": ["27", "10bar"]}


def test_epower_sector_example():
    code, out, _ = run("epower", "--sector", "1,0", "--d27", "0.785398", "--d10bar", "0", "--seed", "7", "--samples", "20000")
    data = json.loads(out)
    assert code == 0
    assert abs(data["mean"] - 1 / 6) < 3 * data["std_error"] + 1e-9
    assert data["samples"] == 20000


def test_epower_two_qubit_form():
    data = json.loads(run("epower", "--delta0", "0", "--delta1", "0.4", "--samples", "20000")[1])
    assert abs(data["mean"] - data["closed_form"]) < 3 * data["std_error"]


def test_check_verdict():
    data = json.loads(run("check", "--sector", "0,-2", "--phases", "equal:0.3")[1])
    assert data["gate"] == "Identity"
    data = json.loads(run("check", "--sector", "0,-1", "--phases", "swap:0.3")[1])
    assert data["gate"] == "SWAP"
    all_sectors = json.loads(run("check", "--phases", "equal:1.0")[1])
    assert len(all_sectors) == 19 and {d["gate"] for d in all_sectors} == {"Identity"}


def test_smatrix_json_layout():
    data = json.loads(run("smatrix", "--sector", "1,0", "--phases", "27=0.2,10bar=0.5")[1])
    assert data["dim"] == 8
    assert len(data["matrix"]) == 8 and all(len(row) == 8 for row in data["matrix"])
    assert all(len(z) == 2 for row in data["matrix"] for z in row)
    assert data["basis"][0] == "uu n p"


def test_basis_command():
    data = json.loads(run("basis", "--sector", "0,-1")[1])
    assert data["ordered_pairs"][:3] == ["Sigma0 n", "Sigma- p", "Lambda n"]
    assert [s["irrep"] for s in data["states"]] == ["27", "27", "8S", "10", "10bar", "8A"]


def test_scan_csv_to_file(tmp_path):
    out = tmp_path / "scan.csv"
    code, stdout, _ = run("scan", "--sector", "1,0", "--grid", "d10bar=0:1.5707963267948966:3", "--out", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "d10bar,residual_I,residual_SWAP,gate"
    assert [ln.split(",")[-1] for ln in lines[1:]] == ["Identity", "none", "SWAP"]
    assert list(tmp_path.iterdir()) == [out]


def test_eft_subcommands():
    data = json.loads(run("eft", "couplings", "--c5", "2.0")[1])
    assert set(data["couplings"].values()) == {2.0}
    data = json.loads(run("eft", "resum", "--a", "5.4", "--r0", "1.7", "--mu", "138", "--p", "10", "--p", "90")[1])
    for row in data["rows"]:
        assert row["pcotdelta"] == pytest.approx(row["ere_pcotdelta"], rel=1e-10)
    u = 2 * math.pi / (938.9187 * 138.0)
    data = json.loads(run("eft", "check-symmetry", f"--c5={-u!r}", f"--c6={u!r}", "--mu", "138")[1])
    assert data["SU(8)+Schrodinger"] is True
    data = json.loads(run("eft", "phases", f"--c5={-u!r}", f"--c6={u!r}", "--mu", "138", "--p", "40")[1])
    assert data["phases"]["27"] == pytest.approx(math.pi / 2)


def test_lattice_text_report():
    code, out, _ = run("lattice", "--report", "text")
    assert code == 0
    assert "27-10bar: 1.2298" in out


def test_exit_codes():
    assert run("check", "--sector", "5,5")[0] == 1
    code, _, err = run("check", "--sector", "5,5")
    assert "flavor_sectors" in err
    assert run("frobnicate")[0] == 2
    assert run("check", "--d27", "30deg")[0] == 2
    assert run("check", "--phases", "equal:0.5°")[0] == 2
    assert run("scan", "--sector", "1,0")[0] == 2
    assert run("eft", "phases", "--c1", "1")[0] == 2
    assert run("lattice", "--in", "/nonexistent/file.txt")[0] == 2


def test_lattice_parse_error_exit(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("[x] scheme=natural mpi=1\n27 1 1\n")
    code, _, err = run("lattice", "--in", str(f))
    assert code == 1 and "line 2" in err


def test_config_wins_with_warning(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"phases": {"27": 0.3, "10bar": 0.3}}))
    code, out, err = run("check", "--sector", "1,0", "--d27", "0.9", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["gate"] == "Identity"
    assert "overrides" in err
    yml = tmp_path / "cfg.yaml"
    yml.write_text("phases: swap:0.2\n")
    assert json.loads(run("check", "--sector", "0,-1", "--config", str(yml))[1])["gate"] == "SWAP"
    bad = tmp_path / "bad.yaml"
    bad.write_text("bogus: 1\n")
    assert run("check", "--sector", "0,-1", "--config", str(bad))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "baryon_entanglement", "sectors", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Q: 0" in proc.stdout
