import pytest

from cherednik.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_table(capsys):
    code, out = run(capsys, "classify", "--type", "G2")
    assert code == 0
    assert "phi{2,2}" in out and "cs/cl in {1}" in out
    assert "cs/cl in {-1}" in out


def test_classify_at_point(capsys):
    code, out = run(capsys, "classify", "--type", "B", "--rank", "6",
                    "--equal")
    assert code == 0
    assert "(0)x(3,3)" in out
    assert "(2,2,2)x(0)" in out


def test_classify_ratio_flag(capsys):
    code, out = run(capsys, "classify", "--type", "B", "--rank", "4",
                    "--ratio", "3/1")
    assert code == 0
    assert "(1,1,1,1)x(0)" in out and "(0)x(4)" in out


def test_classify_records_format(capsys):
    code, out = run(capsys, "classify", "--type", "G2", "--format",
                    "records")
    assert code == 0
    for line in out.splitlines():
        if line.strip():
            assert "\t" in line


def test_decompose(capsys):
    code, out = run(capsys, "decompose", "--type", "G2", "--rep",
                    "phi{2,2}")
    assert code == 0
    assert "phi{2,2} (x) wedge*(h) = " in out
    assert "dimension check: 8 = 2 * 4" in out


def test_decompose_single_wedge(capsys):
    code, out = run(capsys, "decompose", "--type", "G2", "--rep",
                    "trivial", "--wedge", "0")
    assert code == 0
    assert "phi{1,0}" in out


def test_cells(capsys):
    code, out = run(capsys, "cells", "--type", "G2")
    assert code == 0
    assert "equality" in out
    code, out = run(capsys, "cells", "--type", "A", "--rank", "4")
    assert code == 0
    assert "no cuspidal family" in out


def test_table_output(capsys):
    code, out = run(capsys, "table", "--type", "A", "--rank", "2")
    assert code == 0
    assert "(3)" in out and "(1,1,1)" in out


def test_deterministic_output(capsys):
    _, out1 = run(capsys, "classify", "--type", "F4")
    _, out2 = run(capsys, "classify", "--type", "F4")
    assert out1 == out2


def test_check_data(capsys):
    code, out = run(capsys, "check-data")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_paper_counts(capsys):
    code, out = run(capsys, "verify-paper", "--only", "commutator-counts")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("[PASS]")]
    assert len(lines) == 10
    assert not any(l.startswith("[FAIL]") for l in out.splitlines())


def test_unavailable_table_exit_code(capsys, tmp_path):
    code = main(["table", "--type", "E8", "--data-dir", str(tmp_path)])
    capsys.readouterr()
    assert code == 2
