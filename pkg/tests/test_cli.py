from __future__ import annotations

import io
import json

from misbench.cli import (
    EXIT_FORMAT,
    EXIT_GUARD,
    EXIT_OK,
    EXIT_PRECONDITION,
    main,
)

import pytest

DIAMOND = "4 5\n0 1\n0 2\n0 3\n1 3\n2 3\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text: str, name: str = "input.g6"):
        path = tmp_path / name
        path.write_text(text, encoding="ascii")
        return str(path)

    return write


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_mis(capsys, graph_file):
    code, out = run(capsys, "mis", graph_file("Bw\n"), "--k", "1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["mis"] == 3
    assert data["profile"] == [0, 3, 0, 0]
    assert data["sets"] == [[0], [1], [2]]
    assert data["mis_at_most_k"] == 3
    assert data["violations"] == []


def test_mis_several_graphs(capsys, graph_file):
    code, out = run(capsys, "mis", graph_file("Bw\nC~\n"))
    assert code == EXIT_OK
    assert [item["mis"] for item in json.loads(out)] == [3, 4]


def test_mis_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    code, out = run(capsys, "mis", "-")
    assert code == EXIT_OK
    assert json.loads(out)["mis"] == 4


def test_mibs(capsys, graph_file):
    code, out = run(capsys, "mibs", graph_file("C~\n"))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["distinct"] == 6
    assert data["ordered_pairs"] == 12
    assert data["records_without_witness"] == 0
    assert data["a_size_histogram"] == {"1": 6}


def test_edge_list_input(capsys, graph_file):
    code, out = run(
        capsys, "mis", graph_file(DIAMOND, "diamond.txt"), "--format", "edgelist"
    )
    assert code == EXIT_OK
    assert json.loads(out)["profile"] == [0, 2, 1, 0, 0]


def test_bounds(capsys):
    code, out = run(capsys, "bounds", "--n", "4", "--k", "1", "--eta", "0.4")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["eppstein"]["exact"] == "4"
    assert data["corollary1"]["value"] == pytest.approx(3.97086, rel=1e-5)
    assert data["identity_holds"]


def test_curves_csv(capsys):
    code, out = run(capsys, "curves", "--output", "csv", "--resolution", "3")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "x,eppstein,nielsen,interp,corollary1_eta"
    assert len(lines) == 4


def test_solve(capsys):
    code, out = run(capsys, "solve", "--xi", "0.05")
    data = json.loads(out)
    assert data["solve"]["f_eps"] < 1
    assert data["custom_witness"]["xi"] == 0.05
    assert code == (EXIT_OK if data["witness"]["holds"] else 1)


def test_pipeline(capsys, graph_file):
    path = graph_file(DIAMOND, "diamond.txt")
    code, out = run(capsys, "pipeline", path)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["I0"] == [0]
    assert data["census"]["p_good"] == "1/2"
    assert data["violations"] == []
    inequalities = {check["name"]: check for check in data["inequalities"]}
    assert inequalities["j1_size"]["slack"] >= 0
    assert all(check["slack"] >= 0 for check in data["inequalities"] if check["holds"])

    code, out = run(capsys, "pipeline", path, "--I0", "3", "--S", "0")
    assert code == EXIT_OK
    assert json.loads(out)["S"] == [0]


def test_pipeline_sampled(capsys, graph_file):
    path = graph_file(DIAMOND, "diamond.txt")
    code, out = run(
        capsys, "pipeline", path, "--census-max-space", "1", "--samples", "50"
    )
    assert code == EXIT_OK
    census = json.loads(out)["census"]
    assert not census["exact"]
    assert census["total"] == 50


def test_pipeline_corpus(capsys):
    code, out = run(capsys, "pipeline", "--corpus", "2", "--seed", "5")
    assert code == EXIT_OK
    assert len(json.loads(out)["instances"]) == 2


def test_search(capsys, tmp_path):
    store = str(tmp_path / "store.jsonl")
    code, out = run(capsys, "search", "--n", "4", "--store", store)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["ok"]
    assert data["classes"] == 11
    assert data["tightness"]["rows"][1]["attainer"] == "C~"

    code, out = run(capsys, "search", "--n", "4", "--store", store, "--resume")
    assert code == EXIT_OK
    assert json.loads(out)["resumed"]


def test_verify_theorem2(capsys):
    code, out = run(capsys, "verify-theorem2", "--max-n", "4")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["ok"]
    assert [order["classes"] for order in data["orders"]] == [1, 1, 2, 4, 11]
    assert data["orders"][4]["attainers"] == {"1": ["C~"]}


def test_malformed_input(capsys, graph_file, tmp_path):
    assert run(capsys, "mis", graph_file("B w\n"))[0] == EXIT_FORMAT
    path = tmp_path / "binary.g6"
    path.write_bytes(b"C\xff\n")
    assert run(capsys, "mis", str(path))[0] == EXIT_FORMAT


def test_guard(capsys, graph_file):
    assert run(capsys, "mis", graph_file("~?@@\n"))[0] == EXIT_GUARD


def test_precondition(capsys, graph_file):
    assert run(capsys, "pipeline", graph_file("C~\n"))[0] == EXIT_PRECONDITION
    diamond = graph_file(DIAMOND, "diamond.txt")
    assert run(capsys, "pipeline", diamond, "--I0", "7")[0] == EXIT_PRECONDITION
    assert run(capsys, "bounds", "--n", "3", "--k", "4")[0] == EXIT_PRECONDITION


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["search", "--n", "4", "--resume"], id="resume-without-store"),
        pytest.param(["bounds", "--n", "4", "--k", "1", "--eta", "2"], id="eta"),
        pytest.param(["pipeline"], id="no-input"),
        pytest.param(["pipeline", "g.txt", "--I0", "0,-1"], id="negative-vertex"),
        pytest.param(["curves", "--resolution", "1"], id="resolution"),
    ],
)
def test_invalid_configuration(argv: list[str]):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2
