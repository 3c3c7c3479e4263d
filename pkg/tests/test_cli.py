import subprocess
import sys

import pytest

from ussp.cli import main
from ussp.model import Instance, parse_instance


@pytest.fixture
def write(tmp_path):
    def _write(text, name="inst.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_solve_exit_codes(write, capsys):
    assert main(["solve", "--instance", write("120\n6 10 15\n")]) == 0
    assert capsys.readouterr().out == "SOLVED chain\n20 0 0\n"
    assert main(["solve", "--instance", write("120\n6 10 15\n"), "--spread"]) == 0
    assert capsys.readouterr().out == "SOLVED chain\n0 0 8\n"
    assert main(["solve", "--instance", write("7\n4 6\n")]) == 1
    assert capsys.readouterr().out == "INFEASIBLE gcd=2\n"
    assert main(["solve", "--instance", write("7\n3 5\n"), "--method", "multi"]) == 2
    assert capsys.readouterr().out == "NOTFOUND\n"
    assert main(["solve", "--instance", write("5\n6 6 10\n")]) == 3
    assert main(["solve", "--instance", write(f"{1 << 127}\n3 5\n")]) == 4
    assert main(["solve", "--instance", write("20000000\n3 5\n"), "--method", "dp"]) == 4


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 3
    assert main(["frobenius", "--weights", "4,6"]) == 3


def test_frobenius(capsys):
    assert main(["frobenius", "--weights", "11,13"]) == 0
    assert capsys.readouterr().out == "119\n"


def test_gen_deterministic(capsys):
    args = ["gen", "--n", "5", "--max-weight", "50", "--strategy", "uniform:10:100", "--seed", "42"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    inst = parse_instance(first)
    assert isinstance(inst, Instance) and inst.n == 5
    assert main(["gen", "--n", "5", "--max-weight", "5", "--strategy", "above", "--seed", "1"]) == 3


def test_coverage_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ["coverage", "--weights", "4,7,9", "--s-min", "0", "--s-max", "200"]
    assert main(base + ["--out", str(out1)]) == 0
    assert main(base + ["--out", str(out2), "--jobs", "2"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_example1_and_audit(tmp_path, capsys):
    out = tmp_path / "ex1.csv"
    assert main(["example1", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert "paper_estimate_printed_ratios" in printed and "0.80" in printed
    assert out.read_text().startswith("s,oracle_feasible,alg3,alg4,agree\n")
    audit = tmp_path / "audit.csv"
    assert main(["audit", "--max-weight", "7", "--out", str(audit)]) == 0
    assert "3,5,7,4,4,0" in audit.read_text()


def test_bench_command(capsys):
    assert main(["bench", "--seed", "1", "--cases", "1", "--sizes", "10,20"]) == 0
    assert capsys.readouterr().out.startswith("n,cases,mean_seconds")


def test_console_script_exit_code(tmp_path):
    path = tmp_path / "i.txt"
    path.write_text("7\n3 5\n")
    proc = subprocess.run(
        [sys.executable, "-m", "ussp.cli", "solve", "--instance", str(path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout == "INFEASIBLE exhaustive\n"
