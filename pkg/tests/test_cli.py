import csv
import io
import json
import subprocess
import sys
from dataclasses import replace

import pytest

from conftest import DATA
from sparsecolor import cli
from sparsecolor.cli import REPORT_KEYS, main

WEST = str(DATA / "west0067.mtx")
ADLITTLE = str(DATA / "lp_adlittle.mtx")


@pytest.fixture
def identity(tmp_path):
    path = tmp_path / "identity.mtx"
    path.write_text("%%MatrixMarket matrix coordinate pattern general\n3 3 3\n1 1\n2 2\n3 3\n")
    return str(path)


@pytest.fixture
def symmetric(tmp_path):
    path = tmp_path / "sym.mtx"
    path.write_text("%%MatrixMarket matrix coordinate real symmetric\n4 4 4\n"
                    "2 1 1\n3 2 2\n4 3 3\n4 4 4\n")
    return str(path)


def run_json(capsys, argv):
    status = main(argv + ["--json"])
    return status, json.loads(capsys.readouterr().out)


def test_color_json_schema(capsys):
    status, report = run_json(capsys, ["color", WEST, "--mode", "star-bicoloring",
                                       "--order", "natural", "--verify"])
    assert status == 0
    assert set(REPORT_KEYS) <= set(report)
    assert report["matrix"] == "west0067"
    assert (report["m"], report["n"], report["nnz"]) == (67, 67, 294)
    assert report["num_colors"] == 14
    assert report["num_colors"] == report["num_row_colors"] + report["num_col_colors"]
    assert report["verified"] is True
    assert report["seed"] == 0
    assert json.loads(json.dumps(report)) == report


def test_color_identity_column(capsys, identity):
    status, report = run_json(capsys, ["color", identity, "--mode", "column"])
    assert status == 0
    assert report["num_colors"] == 1
    assert report["verified"] is None


def test_color_includes_colors(capsys, identity, symmetric):
    _, report = run_json(capsys, ["color", identity, "--mode", "row", "--colors"])
    assert report["colors"] == [1, 1, 1]
    _, report = run_json(capsys, ["color", symmetric, "--mode", "acyclic-bicoloring", "--colors"])
    assert len(report["row_colors"]) == len(report["col_colors"]) == 4


def test_text_output(capsys):
    assert main(["color", ADLITTLE, "--mode", "acyclic-bicoloring"]) == 0
    out = capsys.readouterr().out
    assert "lp_adlittle 56x138" in out
    assert "11 colors" in out


def test_symmetric_mode_on_unsymmetric_matrix(capsys):
    assert main(["color", ADLITTLE, "--mode", "star"]) == 1
    assert "symmetric" in capsys.readouterr().err


@pytest.mark.parametrize("mode", ["star", "acyclic"])
def test_symmetric_modes(capsys, symmetric, mode):
    status, report = run_json(capsys, ["color", symmetric, "--mode", mode,
                                       "--order", "smallest-last", "--verify"])
    assert status == 0
    assert report["verified"] is True
    assert report["order"] == "smallest_last"


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("%%MatrixMarket matrix array real general\n1 1\n1\n")
    assert main(["color", str(bad)]) == 1
    assert main(["color", str(tmp_path / "absent.mtx")]) == 1
    err = capsys.readouterr().err
    assert err.count("sparsecolor: error:") == 2


def test_verify_many(capsys, identity):
    status, reports = run_json(capsys, ["verify", WEST, ADLITTLE, identity,
                                        "--mode", "acyclic-bicoloring", "--order", "random",
                                        "--seed", "3"])
    assert status == 0
    assert [r["verified"] for r in reports] == [True] * 3
    assert all(r["seed"] == 3 for r in reports)


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    from sparsecolor.verify import Violation

    monkeypatch.setattr(cli, "verify_result", lambda result, rng=0: Violation("x", (0,), "boom"))
    status, reports = run_json(capsys, ["verify", WEST])
    assert status == 1
    assert reports[0]["verified"] is False
    assert "boom" in reports[0]["violation"]


@pytest.mark.parametrize("prefer", ["first", "rows", "columns"])
def test_prefer_neutral(capsys, prefer):
    status, report = run_json(capsys, ["color", WEST, "--prefer-neutral", prefer, "--verify"])
    assert status == 0 and report["verified"]


def test_bench_single_row(capsys):
    assert main(["bench", WEST, "--mode", "column", "--repeat", "1", "--csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 1
    assert list(rows[0]) == list(REPORT_KEYS)
    assert rows[0]["mode"] == "column"


def test_bench_grid(capsys):
    status, reports = run_json(capsys, ["bench", WEST, ADLITTLE,
                                        "--mode", "star-bicoloring", "--mode", "acyclic-bicoloring",
                                        "--order", "natural", "--order", "largest-first",
                                        "--repeat", "2", "--verify"])
    assert status == 0
    assert len(reports) == 8
    assert all(r["verified"] for r in reports)
    natural = {(r["matrix"], r["mode"]): r["num_colors"] for r in reports if r["order"] == "natural"}
    assert natural == {
        ("west0067", "star-bicoloring"): 14,
        ("west0067", "acyclic-bicoloring"): 8,
        ("lp_adlittle", "star-bicoloring"): 11,
        ("lp_adlittle", "acyclic-bicoloring"): 11,
    }


def test_bench_keeps_minimum_time(capsys, monkeypatch):
    times = iter([(50, 500), (20, 900), (40, 100), (30, 300), (60, 600)])
    real = cli.color_graph

    def fake(*args, **kwargs):
        t_order, t_color = next(times)
        return replace(real(*args, **kwargs), timings={"order": t_order, "color": t_color})

    monkeypatch.setattr(cli, "color_graph", fake)
    _, reports = run_json(capsys, ["bench", WEST, "--repeat", "5"])
    assert (reports[0]["t_order_ns"], reports[0]["t_color_ns"]) == (20, 100)


def test_module_entry_point(identity):
    out = subprocess.run([sys.executable, "-m", "sparsecolor", "color", identity,
                          "--mode", "column", "--json"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["num_colors"] == 1


def test_unknown_mode_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["color", WEST, "--mode", "diagonal"])
    assert exc.value.code == 2
