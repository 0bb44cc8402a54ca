import json
import subprocess
import sys

import pytest

from sparsedft.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeta_table(capsys):
    code, out, _ = run_cli(capsys, "--command", "zeta")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    row2 = [l for l in lines if l.split()[0] == "2"][0].split()
    assert row2[1:4] == ["1.6449", "1.6449", "0.0000"]
    row14 = [l for l in lines if l.split()[0] == "1.4"][0].split()
    assert row14[3] == "-0.0007"
    assert "1272553509" in row2


def test_zeta_is_deterministic(capsys):
    first = run_cli(capsys, "--command", "zeta", "--format", "csv")[1]
    second = run_cli(capsys, "--command", "zeta", "--format", "csv")[1]
    assert first == second


def test_csv_and_json_agree(capsys):
    csv_text = run_cli(capsys, "--command", "example2", "--a", "1", "--x-count", "5",
                       "--format", "csv")[1]
    js = json.loads(run_cli(capsys, "--command", "example2", "--a", "1", "--x-count", "5",
                            "--format", "json")[1])
    header, *rows = csv_text.strip().splitlines()
    cols = header.split(",")
    assert len(rows) == len(js) == 5
    for line, obj in zip(rows, js):
        assert [float(v) for v in line.split(",")] == [obj[c] for c in cols]


def test_example3_with_brute_force(capsys):
    code, out, _ = run_cli(capsys, "--command", "example3", "--a", str(1.5 * 3.141592653589793),
                           "--x-min", "0.1", "--x-max", "1.9", "--x-count", "3",
                           "--brute-force", "--format", "json")
    assert code == 0
    for row in json.loads(out):
        assert abs(row["approx"] - row["brute_force"]) < 1e-3


def test_brute_force_guard(capsys):
    code, _, err = run_cli(capsys, "--command", "example3", "--a", str(1e5 * 3.141592653589793 + 1.5),
                           "--x-count", "1", "--brute-force")
    assert code == 1 and "--force" in err


def test_nodes_q(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--command", "nodes", "--q", "2", "--M", "5")
    assert code == 0 and out == "1\n2\n4\n8\n16\n"
    target = tmp_path / "n.txt"
    assert main(["--command", "nodes", "--out", str(target)]) == 0
    lines = target.read_text().split()
    assert len(lines) == 151 and lines[-1] == "1272553509"


def test_nodes_hybrid(capsys):
    code, out, _ = run_cli(capsys, "--command", "nodes", "--strategy", "hybrid", "--a", "1")
    vals = [int(v) for v in out.split()]
    assert code == 0 and vals[:3] == [1, 2, 3] and vals[-1] == 300
    code, _, err = run_cli(capsys, "--command", "nodes", "--strategy", "hybrid")
    assert code == 1 and "error" in err


def test_user_samples(capsys, tmp_path):
    samples = tmp_path / "f.txt"
    samples.write_text("".join(f"{n} {n * n} 0\n" for n in range(0, 11)))
    code, out, _ = run_cli(capsys, "--command", "sum", "--samples-file", str(samples),
                           "--format", "json")
    row = json.loads(out)[0]
    assert code == 0 and row["re"] == pytest.approx(385.0, rel=1e-12) and row["M"] == 11
    nodes = tmp_path / "nodes.txt"
    nodes.write_text("0\n4\n10\n")
    code, out, _ = run_cli(capsys, "--command", "sum", "--samples-file", str(samples),
                           "--nodes-file", str(nodes), "--format", "json")
    assert json.loads(out)[0]["re"] == pytest.approx(385.0, rel=1e-12)
    assert json.loads(out)[0]["M"] == 3


def test_dft_sin_cos(capsys, tmp_path):
    samples = tmp_path / "f.txt"
    samples.write_text("".join(f"{n} 1\n" for n in range(0, 11)))
    code, out, _ = run_cli(capsys, "--command", "dft", "--samples-file", str(samples),
                           "--k", "0,3.141592653589793", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows[0]["re"] == pytest.approx(11.0) and rows[1]["re"] == pytest.approx(1.0)
    for cmd in ("sin", "cos"):
        code, out, _ = run_cli(capsys, "--command", cmd, "--samples-file", str(samples),
                               "--k", "0.5", "--format", "csv")
        assert code == 0 and out.startswith("k,re,im,M,cutoff,efficiency\n")


def test_missing_sample_reported(capsys, tmp_path):
    samples = tmp_path / "f.txt"
    samples.write_text("0 1\n1 1\n3 1\n")
    nodes = tmp_path / "nodes.txt"
    nodes.write_text("0\n2\n3\n")
    code, _, err = run_cli(capsys, "--command", "sum", "--samples-file", str(samples),
                           "--nodes-file", str(nodes))
    assert code == 1 and "n=2" in err


@pytest.mark.parametrize("args", [
    ["--command", "zeta", "--p", "0.5"],
    ["--command", "example2"],
    ["--command", "example3", "--a", str(2 * 3.141592653589793)],
    ["--command", "example2", "--a", "1", "--x-min", "1", "--x-max", "0.5"],
    ["--command", "nodes", "--M", "150"],
    ["--command", "sum"],
])
def test_invalid_input_exit_one(capsys, args):
    code, out, err = run_cli(capsys, *args)
    assert code == 1 and out == "" and err.startswith("error:")


def test_verify_reports_failure_code(capsys):
    code, out, _ = run_cli(capsys, "--command", "verify")
    # path continuity cannot meet its tolerance in double precision
    assert code == 2
    assert "FAIL  small-k path continuity" in out
    assert out.count("PASS") >= 10


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sparsedft", "--command", "nodes", "--q", "2", "--M", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n2\n4\n"
