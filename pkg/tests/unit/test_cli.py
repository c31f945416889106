import json

import pytest

from starturan.cli import main, parse_pattern
from starturan.hypergraph import complete_uniform, load_hypergraph, save_hypergraph
from starturan.patterns import matching, star, star_forest
from starturan.types import Hypergraph


@pytest.fixture(autouse=True)
def clear_budget(monkeypatch):
    monkeypatch.delenv("TURAN_BUDGET", raising=False)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_formula_llp(capsys):
    code, out = run(capsys, ["formula", "llp", "--n", "7", "--degrees", "2,2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["value"] == "9/1"
    assert payload["argmax_index"] == 2


def test_formula_scalar_and_text_format(capsys):
    code, out = run(
        capsys,
        ["formula", "berge-star", "--n", "10", "--r", "3", "--l", "2", "--format", "text"],
    )
    assert code == 0
    assert "value: 10/3" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["formula", "llp", "--n", "7", "--degrees", "2,3"],
        ["formula", "llp", "--n", "7"],
        ["formula", "linear", "--n", "7", "--r", "1", "--degrees", "2"],
        ["exact", "--n", "5"],
        ["construct", "linear", "--n", "7", "--r", "3", "--degrees", "2", "--i", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, argv)
    assert code == 2


def test_argparse_errors_exit_with_two():
    with pytest.raises(SystemExit) as info:
        main(["formula", "nonsense"])
    assert info.value.code == 2


def test_construct_with_verification(capsys):
    code, out = run(
        capsys,
        [
            "construct", "berge-block", "--n", "9", "--r", "3",
            "--degrees", "3,3", "--i", "2", "--verify",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["num_edges"] == 9
    assert payload["claimed_count"] == 9
    assert payload["verified_free"] is True
    assert payload["hypergraph"].startswith("h 9 9\n")


def test_construct_writes_file(capsys, tmp_path):
    path = str(tmp_path / "witness.txt")
    code, out = run(
        capsys,
        [
            "construct", "expansion", "--n", "7", "--r", "2",
            "--degrees", "2,2", "--i", "2", "--out", path,
        ],
    )
    assert code == 0
    assert json.loads(out)["output"] == path
    assert load_hypergraph(path).m == 9


def test_construct_lattice(capsys):
    code, out = run(capsys, ["construct", "lattice", "--r", "3", "--d", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["num_vertices"] == 9
    assert payload["num_edges"] == 6
    assert payload["linear"] is True
    assert payload["regular"] is True


def test_detect(capsys, tmp_path):
    full = str(tmp_path / "full.txt")
    sparse = str(tmp_path / "sparse.txt")
    save_hypergraph(complete_uniform(6, 3), full)
    save_hypergraph(Hypergraph(6, [(0, 1, 2), (3, 4, 5)]), sparse)

    code, out = run(capsys, ["detect", "--in", full, "--pattern", "star:2"])
    assert code == 0
    assert json.loads(out)["found"] is True

    code, out = run(capsys, ["detect", "--in", sparse, "--pattern", "star:2"])
    assert code == 1
    assert json.loads(out)["found"] is False

    code, out = run(
        capsys,
        ["detect", "--in", sparse, "--pattern", "matching:2", "--mode", "expansion"],
    )
    assert code == 0


def test_detect_bad_input(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("h 3 2\ne 0 1\n")
    code, _ = run(capsys, ["detect", "--in", str(path), "--pattern", "star:1"])
    assert code == 2
    code, _ = run(
        capsys, ["detect", "--in", str(tmp_path / "none.txt"), "--pattern", "star:1"]
    )
    assert code == 2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("star:3", star(3)),
        ("forest:2,1", star_forest([2, 1])),
        ("matching:2", matching(2)),
    ],
)
def test_parse_pattern(text, expected):
    assert parse_pattern(text) == expected


@pytest.mark.parametrize("text", ["star", "star:x", "cycle:4", "forest:1,2"])
def test_parse_pattern_rejects(text):
    with pytest.raises(ValueError):
        parse_pattern(text)


def test_exact(capsys, tmp_path):
    path = str(tmp_path / "extremal.txt")
    code, out = run(
        capsys,
        [
            "exact", "--n", "6", "--r", "3", "--degrees", "2",
            "--mode", "berge", "--out", path,
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 2
    assert payload["mode"] == "berge"
    assert load_hypergraph(path).m == 2


def test_exact_budget(capsys, monkeypatch):
    args = ["exact", "--n", "10", "--r", "3", "--degrees", "2", "--mode", "berge"]
    code, _ = run(capsys, args)
    assert code == 3
    monkeypatch.setenv("TURAN_BUDGET", "bad")
    code, _ = run(capsys, args)
    assert code == 2


def test_table_is_identical_across_threads(capsys):
    args = [
        "table", "--n-min", "4", "--n-max", "6", "--r", "2",
        "--degrees", "2,1", "--format", "csv",
    ]
    code, serial = run(capsys, args)
    assert code == 0
    code, parallel = run(capsys, args + ["--threads", "2"])
    assert code == 0
    assert serial == parallel
    lines = serial.strip().split("\n")
    assert lines[0].startswith("n,witness_expansion")
    assert [line.split(",")[0] for line in lines[1:]] == ["4", "5", "6"]


def test_table_json_and_empty_grid(capsys):
    code, out = run(
        capsys,
        ["table", "--n-min", "5", "--n-max", "4", "--r", "2", "--degrees", "2"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == []
    assert "exact" in payload["columns"]


def test_local(capsys):
    code, out = run(
        capsys,
        [
            "local", "--n", "6", "--r", "2", "--degrees", "2", "--mode", "sub",
            "--iterations", "100", "--seed", "1",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] <= 3


def test_table_names_the_fixed_pair_column(capsys):
    code, out = run(
        capsys,
        ["table", "--n-min", "5", "--n-max", "5", "--r", "3", "--degrees", "2"],
    )
    assert code == 0
    payload = json.loads(out)
    assert "expansion_rhs_fixed_pair" in payload["columns"]
    assert "bound_expansion" not in payload["columns"]
    assert str(payload["rows"][0]["expansion_rhs_fixed_pair"]) == "3"


def test_exact_two_cherries(capsys):
    code, out = run(
        capsys,
        ["exact", "--n", "7", "--r", "2", "--degrees", "2,2", "--mode", "berge"],
    )
    assert code == 0
    assert json.loads(out)["value"] == 11
