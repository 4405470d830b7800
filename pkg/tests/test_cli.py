import subprocess
import sys

import pytest

from qheap import cli
from qheap.algorithms import OracleSpec, grover


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fmt():
    assert cli.fmt(1.0) == "1.0"
    assert cli.fmt(0.9453125000000001) == "0.9453125"
    assert cli.fmt(-0.0) == "0.0"
    assert cli.fmt(1 / 3) == "0.333333333333"


def test_deutsch_rows(capsys):
    code, out, _ = run(capsys, "deutsch", "--oracle", "1")
    assert code == 0
    assert "0, 0, 1.0" in out.splitlines()
    code, out, _ = run(capsys, "deutsch", "--oracle", "3")
    assert "1, 1, 1.0" in out.splitlines()


def test_deutsch_bad_oracle(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["deutsch", "--oracle", "9"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_grover_summary(capsys):
    code, out, _ = run(capsys, "grover", "--qubits", "3", "--target", "5")
    assert code == 0
    assert out.splitlines()[0] == "index,bitstring,probability"
    assert "success_prob=0.945312" in out or "success_prob=0.945313" in out
    code, out, _ = run(capsys, "grover", "--qubits", "3", "--target", "5", "--channel", "depolarizing", "--p", "1")
    assert "success_prob=0.125000" in out


def test_grover_zero_noise_identical(capsys):
    _, clean, _ = run(capsys, "grover", "--qubits", "3", "--target", "2")
    _, noisy, _ = run(capsys, "grover", "--qubits", "3", "--target", "2", "--channel", "bitflip", "--p", "0")
    assert clean == noisy


def test_grover_errors(capsys):
    code, _, err = run(capsys, "grover", "--qubits", "3", "--target", "8")
    assert code == 2 and "target" in err
    code, _, _ = run(capsys, "grover", "--qubits", "3", "--target", "1", "--p", "0.1")
    assert code == 2


def test_grover_samples_seeded(capsys):
    argv = ["grover", "--qubits", "2", "--target", "1", "--channel", "depolarizing", "--p", "0.5",
            "--samples", "50", "--seed", "4"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    counts = first.split("index,bitstring,count\n")[1].splitlines()
    assert sum(int(row.split(",")[2]) for row in counts) == 50


def test_sparse_flag_matches_dense(capsys):
    _, dense, _ = run(capsys, "grover", "--qubits", "3", "--target", "6", "--channel", "amplitudedamping", "--p", "0.2")
    _, sparse, _ = run(capsys, "--sparse", "grover", "--qubits", "3", "--target", "6", "--channel", "amplitudedamping", "--p", "0.2")
    assert dense == sparse


def test_sweep_single_point(tmp_path, capsys):
    out = tmp_path / "one.csv"
    code, _, _ = run(capsys, "sweep", "--qubits", "3", "--p-start", "0", "--p-end", "0", "--steps", "1", "--out", str(out))
    assert code == 0
    header, row = out.read_text().splitlines()
    assert header == "qubits,p,success_prob"
    n, p, prob = row.split(",")
    assert (n, p) == ("3", "0.0")
    assert float(prob) == pytest.approx(grover(OracleSpec(0, 3))[0], abs=1e-11)


def test_sweep_rows_ordered_and_monotone(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--qubits", "4,3", "--steps", "6", "--out", str(out))
    assert code == 0
    text = out.read_bytes()
    assert b"\r" not in text
    rows = [line.split(",") for line in text.decode().splitlines()[1:]]
    assert [int(r[0]) for r in rows] == [3] * 6 + [4] * 6
    for n in (3, 4):
        probs = [float(r[2]) for r in rows if r[0] == str(n)]
        assert all(b <= a + 1e-9 for a, b in zip(probs, probs[1:]))


def test_sweep_validation(tmp_path, capsys):
    out = str(tmp_path / "x.csv")
    assert run(capsys, "sweep", "--qubits", "3", "--steps", "2", "--p-start", "0", "--p-end", "0", "--out", out)[0] == 2
    assert run(capsys, "sweep", "--qubits", "9", "--steps", "2", "--out", out)[0] == 2
    assert run(capsys, "sweep", "--qubits", "3", "--p-end", "1.5", "--out", out)[0] == 2


def test_sweep_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "--qubits", "2", "--steps", "2", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 1 and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qheap", "deutsch", "--oracle", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "0, 0, 1.0" in proc.stdout
