import json

import pytest

from bookramsey.cli import main
from bookramsey.graph import complete_graph, complete_multipartite, cycle_graph, petersen_graph
from bookramsey.graph6 import parse_graph6, serialize_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, json.loads(out.out) if out.out.strip() else None, out.err


def g6(g):
    return "g6:" + serialize_graph6(g)


def test_construct_burr(capsys):
    code, doc, _ = run(capsys, "construct", "--family", "burr", "--chi", "3", "--s", "1", "--h-order", "5")
    assert code == 0
    assert parse_graph6(doc["graph6"]) == complete_multipartite([4, 4])
    assert set(doc) == {"construction", "params", "seed", "graph6", "audit"}


@pytest.mark.parametrize("argv", [
    ["construct", "--family", "book-only-if", "--p", "3", "--k", "2", "--n", "8", "--a", "1,2,2", "--seed", "3"],
    ["construct", "--family", "c4free", "--m", "9", "--a-deg", "2", "--seed", "1"],
    ["construct", "--family", "threshold", "--p", "3", "--k", "2", "--C", "0.5", "--n", "10", "--seed", "5"],
    ["search-ramsey", "--G", "clique:3", "--H", "book:1,3"],
    ["count", "--input", "g6:Dhc", "--p", "3"],
])
def test_reports_are_reproducible(capsys, argv):
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a[0] == b[0] == 0
    da, db = dict(a[1]), dict(b[1])
    da.pop("wall_ms", None), db.pop("wall_ms", None)
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)


def test_search_ramsey(capsys):
    code, doc, _ = run(capsys, "search-ramsey", "--G", "clique:3", "--H", "book:2,4")
    assert code == 0 and doc["r"] == 7
    assert parse_graph6(doc["witness_graph6"]).n == 6
    assert {"G", "H", "r", "witness_graph6", "nodes_explored", "wall_ms"} <= set(doc)


def test_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("RGL_THREADS", "3")
    _, doc, _ = run(capsys, "search-ramsey", "--G", "clique:3", "--H", "book:1,2")
    assert doc["workers"] == 3


def test_goodness_gap_and_arrowing(capsys):
    _, doc, _ = run(capsys, "goodness-gap", "--G", "clique:3", "--H", "book:2,3")
    assert doc["gap"] == 1 and not doc["good"]
    _, doc, _ = run(capsys, "check-arrowing", "--N", "5", "--G", "clique:3", "--H", "clique:3")
    assert doc["arrows"] is False
    _, doc, _ = run(capsys, "check-arrowing", "--N", "5", "--G", "clique:3", "--H", "clique:3",
                    "--colouring", "g6:Dhc")
    assert doc["arrows"] is False and doc["witness"] is None


def test_book_partition_round_trip(capsys, tmp_path):
    path = tmp_path / "trace.json"
    code, doc, _ = run(capsys, "run-lemma", "--name", "book-partition", "--input", g6(cycle_graph(5)),
                       "--p", "3", "--k", "1", "--parts", "0;1", "-o", str(path))
    assert code == 0 and doc["witness"]["kind"] == "books"
    code, doc, _ = run(capsys, "validate", str(path))
    assert code == 0 and doc["valid"]


def test_book_partition_finds_parts_itself(capsys, tmp_path):
    g = complete_multipartite([2, 3])
    path = tmp_path / "t.json"
    code, doc, _ = run(capsys, "run-lemma", "--name", "book-partition", "--input", g6(g), "--p", "3",
                       "--k", "2", "-o", str(path))
    assert code == 0
    assert run(capsys, "validate", str(path))[1]["valid"]


def test_violation_exit_code(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, doc, _ = run(capsys, "run-lemma", "--name", "book-partition", "--input", g6(complete_graph(3)),
                       "--p", "3", "--k", "1", "--parts", "0;1", "-o", str(path))
    assert code == 2 and doc["branch"] == "hypothesis-violated"
    assert run(capsys, "validate", str(path))[1]["valid"]


@pytest.mark.parametrize("argv", [
    ["run-lemma", "--name", "removal", "--input", g6(complete_graph(5)), "--p", "3", "--beta", "1/2"],
    ["run-lemma", "--name", "greedy", "--input", g6(complete_multipartite([16, 16, 16])), "--r", "2",
     "--t", "16", "--s", "2", "--parts", ",".join(map(str, range(16))) + ";" + ",".join(map(str, range(16, 32)))],
    ["run-lemma", "--name", "blowup", "--input", g6(complete_multipartite([8, 8])), "--p", "3", "--k", "1",
     "--x", "1", "--n", "20", "--s-set", "0,1,2,3,4,5,6,7"],
    ["run-lemma", "--name", "stability", "--input", g6(complete_multipartite([3, 3, 3])), "--p", "4"],
    ["empty-pair", "--input", g6(petersen_graph())],
])
def test_emitted_witnesses_validate(capsys, tmp_path, argv):
    path = tmp_path / "w.json"
    code, doc, _ = run(capsys, *argv, "-o", str(path))
    assert code in (0, 2)
    code, res, _ = run(capsys, "validate", str(path))
    assert code == 0 and res["valid"]


def test_tampered_trace_is_rejected(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "run-lemma", "--name", "book-partition", "--input", g6(cycle_graph(5)), "--p", "3", "--k", "1",
        "--parts", "0;1", "-o", str(path))
    doc = json.loads(path.read_text())
    doc["witness"]["books"][0]["pages"] = [1, 2]
    path.write_text(json.dumps(doc))
    code, res, _ = run(capsys, "validate", str(path))
    assert code == 2 and not res["valid"]


def test_audit_partition(capsys):
    code, doc, _ = run(capsys, "audit-partition", "--input", g6(complete_multipartite([3, 3, 3])),
                       "--parts", "0,1,2;3,4,5;6,7,8")
    assert code == 0 and doc["min_density"] in ("1", 1)


def test_empty_pair_triangle(capsys):
    code, doc, _ = run(capsys, "empty-pair", "--input", g6(complete_graph(3)))
    assert code == 2 and doc["triangle"] == [0, 1, 2]


@pytest.mark.parametrize("argv", [
    ["construct", "--bogus"],
    ["nope"],
    ["count", "--input", "g6:D?", "--p", "3"],
    ["search-ramsey", "--G", "wheel:5", "--H", "clique:3"],
    ["search-ramsey", "--G", "clique:4", "--H", "clique:4", "--max-n", "9"],
    ["construct", "--family", "book-only-if", "--p", "3", "--k", "1", "--n", "5"],
])
def test_usage_errors_exit_one(capsys, argv):
    assert main(argv) == 1
    capsys.readouterr()


def test_graph_from_file(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(cycle_graph(5).to_json())
    code, doc, _ = run(capsys, "count", "--input", "@" + str(f), "--p", "2")
    assert code == 0 and doc["total"] == 5
