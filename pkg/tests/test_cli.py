"""End-to-end command line tests: outputs, stats, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from symgraver import read_matrix, write_matrix, write_symmetry
from symgraver.cli import cli_main
from symgraver.symmetry import Permutation, PermutationGroup

from data import GRAVER_3X3_UP_TO_SIGN, TABLE_3X3_MATRIX


@pytest.fixture()
def table_files(tmp_path):
    """Matrix and symmetry files for the 3x3 table, via gen-table."""
    mat = tmp_path / "table.mat"
    sym = tmp_path / "table.sym"
    assert cli_main(["gen-table", "3", "3", "--matrix-out", str(mat), "--sym-out", str(sym)]) == 0
    return mat, sym


def test_gen_table_writes_frozen_matrix(table_files):
    mat, sym = table_files
    rows, n = read_matrix(str(mat))
    assert (rows, n) == (TABLE_3X3_MATRIX, 9)
    header = sym.read_text().splitlines()[0].split()
    assert header[1] == "9"


def test_kernel_command(table_files, tmp_path):
    mat, _ = table_files
    out = tmp_path / "kernel.lat"
    assert cli_main(["kernel", "--matrix", str(mat), "--output", str(out)]) == 0
    rows, n = read_matrix(str(out))
    assert n == 9 and len(rows) == 4
    for g in rows:
        assert all(sum(a * x for a, x in zip(row, g)) == 0 for row in TABLE_3X3_MATRIX)


def test_graver_both_algorithms_agree(table_files, tmp_path):
    mat, _ = table_files
    outputs = {}
    for algo in ("pottier", "fast"):
        out = tmp_path / f"{algo}.gra"
        code = cli_main(
            ["graver", "--matrix", str(mat), "--algorithm", algo, "--output", str(out)]
        )
        assert code == 0
        outputs[algo] = out.read_text()
    assert outputs["pottier"] == outputs["fast"]
    rows, n = read_matrix(str(tmp_path / "fast.gra"))
    assert (rows, n) == (GRAVER_3X3_UP_TO_SIGN, 9)


def test_graver_signed_and_stats(table_files, tmp_path):
    mat, _ = table_files
    out = tmp_path / "signed.gra"
    stats_path = tmp_path / "run.json"
    code = cli_main(
        [
            "graver",
            "--matrix",
            str(mat),
            "--output",
            str(out),
            "--signed",
            "--stats",
            str(stats_path),
        ]
    )
    assert code == 0
    rows, _ = read_matrix(str(out))
    assert len(rows) == 30
    assert {tuple(-x for x in v) for v in rows} == set(rows)
    stats = json.loads(stats_path.read_text())
    assert stats["graver_size_up_to_sign"] == 15
    assert stats["algorithm"] == "fast"
    assert stats["runtime_ms"] >= 0


def test_graver_sym_end_to_end(table_files, tmp_path):
    mat, sym = table_files
    for algo in ("fast", "pottier"):
        out = tmp_path / f"{algo}.gra"
        reps = tmp_path / f"{algo}.rep"
        stats_path = tmp_path / f"{algo}.json"
        code = cli_main(
            [
                "graver-sym",
                "--matrix",
                str(mat),
                "--symmetry",
                str(sym),
                "--algorithm",
                algo,
                "--output",
                str(out),
                "--reps",
                str(reps),
                "--stats",
                str(stats_path),
            ]
        )
        assert code == 0
        stats = json.loads(stats_path.read_text())
        assert stats["graver_size_up_to_sign"] == 15
        assert stats["num_representatives"] == 2
        assert stats["group_order"] == 72
        assert sorted(stats["orbit_sizes"]) == [12, 18]
        assert stats["algorithm"] == "sym-" + algo
        rep_rows, _ = read_matrix(str(reps))
        assert len(rep_rows) == 2
        # representatives are sign-canonical rows drawn from the output set
        gra_rows, _ = read_matrix(str(out))
        assert set(rep_rows) <= set(gra_rows)
    assert (tmp_path / "fast.gra").read_text() == (tmp_path / "pottier.gra").read_text()
    assert (tmp_path / "fast.rep").read_text() == (tmp_path / "pottier.rep").read_text()


def test_orbits_command_matches_graver_sym(table_files, tmp_path):
    mat, sym = table_files
    gra = tmp_path / "t.gra"
    rep = tmp_path / "t.rep"
    assert (
        cli_main(
            ["graver-sym", "--matrix", str(mat), "--symmetry", str(sym), "--output", str(gra), "--reps", str(rep)]
        )
        == 0
    )
    rep2 = tmp_path / "again.rep"
    stats_path = tmp_path / "orbits.json"
    code = cli_main(
        [
            "orbits",
            "--vectors",
            str(gra),
            "--symmetry",
            str(sym),
            "--reps-out",
            str(rep2),
            "--stats",
            str(stats_path),
        ]
    )
    assert code == 0
    assert rep2.read_text() == rep.read_text()
    stats = json.loads(stats_path.read_text())
    assert stats["num_representatives"] == 2
    assert sorted(stats["orbit_sizes"]) == [12, 18]


def test_check_certifies_good_output(table_files, tmp_path, capsys):
    mat, _ = table_files
    gra = tmp_path / "t.gra"
    assert cli_main(["graver", "--matrix", str(mat), "--output", str(gra)]) == 0
    code = cli_main(["check", "--graver", str(gra), "--matrix", str(mat), "--bound", "1"])
    assert code == 0
    assert "certified 15 vectors" in capsys.readouterr().out


def test_check_rejects_bad_files(table_files, tmp_path, capsys):
    mat, _ = table_files
    cases = {
        "zero": [(0,) * 9],
        "nonmember": [(1, 0, 0, 0, 0, 0, 0, 0, 0)],
        "reducible": [tuple(2 * x for x in GRAVER_3X3_UP_TO_SIGN[0])],
    }
    for name, rows in cases.items():
        path = tmp_path / f"{name}.gra"
        write_matrix(str(path), rows, 9)
        assert cli_main(["check", "--graver", str(path), "--matrix", str(mat)]) == 4, name
    # an incomplete set fails only under --bound comparison
    partial = tmp_path / "partial.gra"
    write_matrix(str(partial), GRAVER_3X3_UP_TO_SIGN[:-1], 9)
    assert cli_main(["check", "--graver", str(partial), "--matrix", str(mat)]) == 0
    assert cli_main(["check", "--graver", str(partial), "--matrix", str(mat), "--bound", "1"]) == 4
    assert "missing" in capsys.readouterr().err


def test_usage_errors_exit_one(capsys):
    assert cli_main([]) == 1
    assert cli_main(["graver"]) == 1  # --output and an input source are required
    assert cli_main(["graver", "--bogus"]) == 1
    capsys.readouterr()


def test_invalid_input_exits_two(table_files, tmp_path, capsys):
    mat, sym = table_files
    missing = tmp_path / "nope.mat"
    out = tmp_path / "o.gra"
    assert cli_main(["graver", "--matrix", str(missing), "--output", str(out)]) == 2
    garbled = tmp_path / "garbled.mat"
    garbled.write_text("2 2\n1 2 x\n")
    assert cli_main(["graver", "--matrix", str(garbled), "--output", str(out)]) == 2
    # wrong degree symmetry
    small = tmp_path / "small.sym"
    write_symmetry(str(small), PermutationGroup(4, [Permutation((2, 1, 3, 4))]))
    assert (
        cli_main(
            ["graver-sym", "--matrix", str(mat), "--symmetry", str(small), "--output", str(out), "--reps", str(out) + ".rep"]
        )
        == 2
    )
    # right degree but the group does not preserve the lattice
    cyc = tmp_path / "cycle.sym"
    write_symmetry(str(cyc), PermutationGroup(9, [Permutation((2, 3, 4, 5, 6, 7, 8, 9, 1))]))
    assert (
        cli_main(
            ["graver-sym", "--matrix", str(mat), "--symmetry", str(cyc), "--output", str(out), "--reps", str(out) + ".rep"]
        )
        == 2
    )
    capsys.readouterr()


def test_resource_cap_exits_three(tmp_path, capsys):
    code = cli_main(
        [
            "gen-table",
            "1000",
            "1000",
            "1000",
            "--matrix-out",
            str(tmp_path / "m"),
            "--sym-out",
            str(tmp_path / "s"),
        ]
    )
    assert code == 3
    assert "error:" in capsys.readouterr().err


def test_lattice_input_and_rank_zero(tmp_path):
    lat = tmp_path / "line.lat"
    write_matrix(str(lat), [(1, 1)], 2)
    out = tmp_path / "line.gra"
    assert cli_main(["graver", "--lattice", str(lat), "--output", str(out)]) == 0
    assert read_matrix(str(out)) == ([(1, 1)], 2)
    empty = tmp_path / "empty.lat"
    write_matrix(str(empty), [], 3)
    out2 = tmp_path / "empty.gra"
    assert cli_main(["graver", "--lattice", str(empty), "--output", str(out2)]) == 0
    assert read_matrix(str(out2)) == ([], 3)


def test_repeated_runs_are_byte_identical(table_files, tmp_path):
    mat, sym = table_files
    texts = []
    for tag in ("a", "b"):
        out = tmp_path / f"{tag}.gra"
        rep = tmp_path / f"{tag}.rep"
        threads = "1" if tag == "a" else "4"
        code = cli_main(
            [
                "graver-sym",
                "--matrix",
                str(mat),
                "--symmetry",
                str(sym),
                "--output",
                str(out),
                "--reps",
                str(rep),
                "--threads",
                threads,
            ]
        )
        assert code == 0
        texts.append(out.read_text() + rep.read_text())
    assert texts[0] == texts[1]


def test_console_entry_point(tmp_path):
    mat = tmp_path / "m.mat"
    proc = subprocess.run(
        [sys.executable, "-m", "symgraver.cli", "gen-table", "2", "2", "--matrix-out", str(mat), "--sym-out", str(tmp_path / "s.sym")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert read_matrix(str(mat))[1] == 4
    proc = subprocess.run(
        [sys.executable, "-m", "symgraver.cli", "graver"], capture_output=True, text=True
    )
    assert proc.returncode == 1
