import json

import pytest

from scrollgraver import cli, cpi, table
from scrollgraver.matrixio import parse_matrix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_bound_example(capsys):
    assert run(capsys, "bound", "--scroll", "5,6") == (0, "sharp=11 naive=11 witness=(7,6)", "")


def test_bound_curve_fallback(capsys):
    code, out, _ = run(capsys, "bound", "--scroll", "4")
    assert code == 0 and "empirical for curves" in out and "naive=4" in out


def test_bound_general(capsys):
    code, out, _ = run(capsys, "bound", "--scroll", "2,2", "--general")
    assert out.splitlines()[1] == "scroll_degree=4 general=12"


def test_table_single_scroll(capsys):
    assert run(capsys, "table", "--scroll", "3,2")[:2] == (0, "{2:12, 3:16, 4:4, 5:1}")


def test_statedim(capsys):
    assert run(capsys, "statedim", "--scroll", "5,6")[:2] == (0, "10")


@pytest.mark.parametrize("argv", [
    ["bound", "--scroll", "0,3"],
    ["bound", "--scroll", "a,b"],
    ["bound", "--blocks", "0,2"],
    ["graver"],
    ["project", "--scroll", "3,2", "--keep", "2,3,4;1,3"],
    ["project", "--scroll", "3,2", "--keep", "1,4"],
    ["gb", "--scroll", "2,2", "--weights", "1,2"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    assert code == 2


def test_blocks_of_size_one(capsys):
    code, out, _ = run(capsys, "graver", "--blocks", "3,1")
    assert code == 0 and out.endswith("elements=1 degrees={2:1}")


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--scroll", "3,2")
    assert code == 0 and "agree on 33 elements" in out


def test_oracle_mismatch_exit_3(capsys, monkeypatch):
    real = cpi.enumerate_pcpi_vectors
    monkeypatch.setattr(cpi, "enumerate_pcpi_vectors", lambda s, k: real(s, k)[1:])
    code, _, err = run(capsys, "oracle-check", "--scroll", "3,2")
    assert code == 3 and "engine only" in err
    code, _, _ = run(capsys, "graver", "--scroll", "3,2", "--check")
    assert code == 3


def test_table_mismatch_exit_3(capsys, monkeypatch):
    monkeypatch.setitem(table.PUBLISHED, (2, 2), {2: 7, 3: 5})
    monkeypatch.setattr(table, "CORE_ROWS", [(2, 2), (3, 2)])
    code, _, err = run(capsys, "table", "--rows", "core")
    assert code == 3 and "deg 3: expected 5, got 4" in err


def test_matrix_round_trip(tmp_path, capsys):
    out = tmp_path / "s32.mat"
    assert run(capsys, "matrix", "--scroll", "3,2", "--output", str(out))[0] == 0
    assert out.read_text().splitlines()[0] == "3 7"
    side = (tmp_path / "s32.mat.labels").read_text().splitlines()
    assert side == ["colors: 1 1 1 1 2 2 2", "exponents: 1 2 3 4 1 2 3"]
    a = run(capsys, "graver", "--matrix-file", str(out))
    b = run(capsys, "graver", "--scroll", "3,2")
    assert a == b and a[1].endswith("elements=33 degrees={2:12, 3:16, 4:4, 5:1}")


def test_graver_file_output(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "graver", "--scroll", "2,2", "--output", "sub/g.mat")
    assert code == 0 and out == "elements=11 degrees={2:7, 3:4}"
    rows = parse_matrix((tmp_path / "sub" / "g.mat").read_text())
    assert len(rows) == 11 and rows[0] == [1, 0, -1, -1, 0, 1]


def test_graver_json(capsys):
    code, out, _ = run(capsys, "graver", "--scroll", "2,2", "--format", "json")
    data = json.loads(out)
    assert len(data["elements"]) == 11 and data["degrees"] == {"2": 7, "3": 4}


def test_circuits(capsys):
    code, out, _ = run(capsys, "circuits", "--scroll", "5,6", "--format", "json")
    degrees = {sum(x for x in v if x > 0) for v in json.loads(out)}
    assert degrees == set(range(2, 12)) - {10}


def test_cpi_listing(capsys):
    code, out, _ = run(capsys, "cpi", "--blocks", "3,3")
    assert code == 0 and len(out.splitlines()) == 11 and "1:1+1:3=1:2+1:2" in out
    code, out, _ = run(capsys, "cpi", "--blocks", "3,3", "--format", "json", "--max-degree", "2")
    assert len(out.splitlines()) == 7
    code, out, _ = run(capsys, "cpi", "--blocks", "4,5", "--check", "1:1+1:4+2:3=2:5+2:1+1:2")
    assert json.loads(out) == {"cpi": "1:1+1:4+2:3=1:2+2:1+2:5", "homogeneous": True,
                               "color_homogeneous": False, "primitive": False}


def test_gb_with_weights(tmp_path, capsys):
    out = tmp_path / "gb.mat"
    code, text, _ = run(capsys, "gb", "--scroll", "2,2", "--weights", "1,2,3,4,5,6", "--output", str(out))
    assert code == 0 and text == "elements=6 max_degree=2"
    assert len(parse_matrix(out.read_text())) == 6
    assert (tmp_path / "gb.mat.leading").read_text().startswith("leading: ")


def test_gb_coverage_is_seeded(capsys):
    a = run(capsys, "gb", "--scroll", "3,2", "--trials", "10", "--seed", "4")
    b = run(capsys, "gb", "--scroll", "3,2", "--trials", "10", "--seed", "4")
    assert a == b
    data = json.loads(a[1])
    assert data["outside_graver"] == 0 and data["graver"] == 33


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--scroll", "3,2", "--keep", "1,3,4;1,2,3", "--trials", "5")
    lines = out.splitlines()
    assert lines[0] == "3 6" and lines[3] == "1 3 4 1 2 3"
    assert "parent_bound=5" in lines[-1]
    code, out, _ = run(capsys, "project", "--scroll", "4,3", "--seed", "3")
    assert code == 0
