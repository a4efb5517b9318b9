"""Command-line interface: exit codes, first-line verdicts, file outputs."""

import json

import pytest

from proxigraph import build_graph, build_space
from proxigraph.cli import main
from proxigraph.fileio import (
    graph_to_obj,
    load_partition,
    load_space,
    partition_to_obj,
    save_json,
    space_to_obj,
)
from proxigraph.instances import (
    TruncationParams,
    example_3_1,
    example_3_2,
    example_3_7,
    example_3_12_truncation,
)
from proxigraph.path_proximinal import build_threshold_graph, verify_path_proximinal


@pytest.fixture
def bundle(tmp_path):
    """Write the worked-example files once per test."""
    paths = {}

    def write(name, obj):
        path = tmp_path / f"{name}.json"
        save_json(path, obj)
        paths[name] = str(path)
        return paths[name]

    graph31, parts31 = example_3_1()
    write("g31", graph_to_obj(graph31))
    write("p31", partition_to_obj(parts31))
    space32, parts32 = example_3_2()
    write("s32", space_to_obj(space32))
    write("g32", graph_to_obj(build_threshold_graph(space32, parts32)))
    graph37, parts37 = example_3_7()
    write("g37", graph_to_obj(graph37))
    write("p37", partition_to_obj(parts37))
    paths["dir"] = str(tmp_path)
    return paths


def first_line(capsys):
    out = capsys.readouterr().out
    return out.splitlines()[0] if out else "", out


def test_classify_metric(bundle, capsys):
    assert main(["classify", bundle["s32"]]) == 0
    line, _ = first_line(capsys)
    assert line == "Metric"


def test_classify_ultrametric(tmp_path, capsys):
    path = tmp_path / "eq.json"
    save_json(path, space_to_obj(build_space(["a", "b", "c"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])))
    assert main(["classify", str(path)]) == 0
    line, _ = first_line(capsys)
    assert line == "Ultrametric"


def test_classify_malformed_space_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    save_json(path, {"points": ["a", "b"], "distances": [[0, 1], [2, 0]]})
    assert main(["classify", str(path)]) == 2
    err = capsys.readouterr().err
    assert "asymmetric" in err and "(a, b)" in err


def test_check_path_bipartite_true(bundle, capsys):
    assert main(["check", "path-bipartite", bundle["g31"], bundle["p31"]]) == 0
    line, _ = first_line(capsys)
    assert line == "true"


def test_check_path_complete_false_with_reason(bundle, capsys):
    assert main(["check", "path-complete", bundle["g37"], bundle["p37"]]) == 1
    line, out = first_line(capsys)
    assert line == "false"
    assert "('a1', 'b2')" in out


def test_check_path_proximinal_true(bundle, capsys):
    assert main(["check", "path-proximinal", bundle["g32"], bundle["p31"], bundle["s32"]]) == 0
    line, _ = first_line(capsys)
    assert line == "true"


def test_check_proximinal_requires_space(bundle, capsys):
    assert main(["check", "proximinal", bundle["g31"], bundle["p31"]]) == 2
    assert "requires a space file" in capsys.readouterr().err


def test_check_vertex_mismatch_exits_2(bundle, tmp_path, capsys):
    other = tmp_path / "k2.json"
    save_json(other, graph_to_obj(build_graph(["a", "b"], [["a", "b"]])))
    assert main(["check", "path-proximinal", str(other), bundle["p31"], bundle["s32"]]) == 2
    assert "mismatch" in capsys.readouterr().err


def test_bpath_pair_list(bundle, capsys):
    assert main(["bpath", bundle["g37"], bundle["p37"]]) == 0
    line, _ = first_line(capsys)
    assert json.loads(line) == [["a1", "b1"], ["a2", "b1"], ["a2", "b2"]]


def test_bpath_witness_found(bundle, capsys):
    assert main(["bpath", bundle["g31"], bundle["p31"], "--witness", "x4", "x15"]) == 0
    line, out = first_line(capsys)
    path = json.loads(line)
    assert path[0] == "x4" and path[-1] == "x15"
    assert "crossing-edge" in out


def test_bpath_witness_excluded_pair_exits_1(bundle, capsys):
    assert main(["bpath", bundle["g37"], bundle["p37"], "--witness", "a1", "b2"]) == 1
    line, out = first_line(capsys)
    assert line == "false"
    assert "not joined" in out


def test_bpath_witness_wrong_side_exits_2(bundle, capsys):
    assert main(["bpath", bundle["g37"], bundle["p37"], "--witness", "b1", "b2"]) == 2
    assert "in A" in capsys.readouterr().err


def test_bpath_quotient_dot(bundle, capsys):
    assert main(["bpath", bundle["g37"], bundle["p37"], "--quotient"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph Q {")
    assert out.count("--") == 3


def test_witness_metric_writes_and_verifies(bundle, tmp_path, capsys):
    prefix = tmp_path / "w"
    assert main(["witness", "metric", bundle["g37"], bundle["p37"], "-o", str(prefix)]) == 0
    line, out = first_line(capsys)
    assert line == "true"
    space = load_space(f"{prefix}.space.json")
    graph, parts = example_3_7()
    assert verify_path_proximinal(graph, parts, space)


def test_witness_metric_non_path_bipartite_exits_1(tmp_path, capsys):
    graph = build_graph(["a", "b", "c"], [["a", "b"]])
    gpath, ppath = tmp_path / "g.json", tmp_path / "p.json"
    save_json(gpath, graph_to_obj(graph))
    save_json(ppath, {"A": ["a"], "B": ["b", "c"]})
    assert main(["witness", "metric", str(gpath), str(ppath)]) == 1
    line, out = first_line(capsys)
    assert line == "false"
    assert "not-path-bipartite" in out


def test_witness_ultrametric_writes_partition(tmp_path, capsys):
    graph = build_graph(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
    gpath = tmp_path / "m.json"
    save_json(gpath, graph_to_obj(graph))
    prefix = tmp_path / "u"
    assert main(["witness", "ultrametric", str(gpath), "-o", str(prefix)]) == 0
    parts = load_partition(f"{prefix}.partition.json")
    space = load_space(f"{prefix}.space.json")
    assert parts.a == {"a", "c"}
    assert space.d("a", "b") == 1


def test_witness_ultrametric_rejects_p3(tmp_path, capsys):
    graph = build_graph(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    gpath = tmp_path / "p3.json"
    save_json(gpath, graph_to_obj(graph))
    assert main(["witness", "ultrametric", str(gpath)]) == 1
    line, out = first_line(capsys)
    assert line == "false"
    assert "not-degree-one" in out


def test_witness_proximinal_metric(tmp_path, capsys):
    graph = build_graph(["a", "b"], [["a", "b"]])
    gpath, ppath = tmp_path / "g.json", tmp_path / "p.json"
    save_json(gpath, graph_to_obj(graph))
    save_json(ppath, {"A": ["a"], "B": ["b"]})
    assert main(["witness", "proximinal-metric", str(gpath), str(ppath), "-o", str(tmp_path / "x")]) == 0
    space = load_space(tmp_path / "x.space.json")
    assert space.d("a", "b") == 1


def test_witness_proximinal_metric_empty_graph_exits_1(tmp_path, capsys):
    gpath, ppath = tmp_path / "g.json", tmp_path / "p.json"
    save_json(gpath, {"vertices": ["a", "b"], "edges": []})
    save_json(ppath, {"A": ["a"], "B": ["b"]})
    assert main(["witness", "proximinal-metric", str(gpath), str(ppath)]) == 1
    line, out = first_line(capsys)
    assert line == "false"
    assert "empty-graph" in out


def test_verify_small_sweep(capsys):
    assert main(["verify", "t3.9", "--max-n", "3"]) == 0
    line, out = first_line(capsys)
    assert line == "true"
    assert "counterexamples: 0" in out


def test_verify_randomized_flags(capsys):
    assert main(["verify", "t2.1", "--count", "20", "--seed", "9"]) == 0
    line, _ = first_line(capsys)
    assert line == "true"


def test_verify_unknown_theorem_exits_2(capsys):
    assert main(["verify", "t9.9"]) == 2


def test_verify_bound_cap(capsys):
    assert main(["verify", "t3.9", "--max-n", "9"]) == 2
    assert "outside 1..7" in capsys.readouterr().err


def test_verify_env_override(monkeypatch, capsys):
    monkeypatch.setenv("PROXIGRAPH_MAX_N", "3")
    assert main(["verify", "t3.9"]) == 0
    out = capsys.readouterr().out
    assert "checked 52 instances" in out  # 4 + 48


def test_verify_env_invalid(monkeypatch, capsys):
    monkeypatch.setenv("PROXIGRAPH_MAX_N", "many")
    assert main(["verify", "t3.9"]) == 2


def test_example_bundles(tmp_path, capsys):
    for name in ("ex3.1", "ex3.2", "ex3.7", "ex3.16"):
        assert main(["example", name, "--out-dir", str(tmp_path)]) == 0
        line, _ = first_line(capsys)
        assert line == "true"
    assert (tmp_path / "ex3.1.graph.json").exists()
    assert (tmp_path / "ex3.2.space.json").exists()


def test_example_truncation_with_params(tmp_path, capsys):
    assert main(["example", "ex3.12", "--out-dir", str(tmp_path), "--N", "3", "--M", "2", "--K", "2"]) == 0
    line, out = first_line(capsys)
    assert line == "true"
    assert "dist(A, B) = 2: True" in out
    space = load_space(tmp_path / "ex3.12.space.json")
    params_space, _ = example_3_12_truncation(TruncationParams(3, 2, 2))
    assert space == params_space


def test_example_reports_erratum(tmp_path, capsys):
    assert main(["example", "ex3.2", "--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "46" in out and "64" in out
    assert "witness be-path for omitted pair (x2, x5)" in out


def test_export_dot_stdout(bundle, capsys):
    assert main(["export-dot", bundle["g37"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph G {")
    assert '"a1" -- "b1";' in out


def test_export_dot_to_file(bundle, tmp_path, capsys):
    target = tmp_path / "out.dot"
    assert main(["export-dot", bundle["g37"], "-o", str(target)]) == 0
    assert target.read_text().startswith("graph G {")


def test_missing_file_exits_2(capsys):
    assert main(["classify", "/nonexistent/space.json"]) == 2
