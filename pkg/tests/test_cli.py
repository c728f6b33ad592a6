import io
import json
import subprocess
import sys

import pytest

import graphdot
from graphdot import Coordinates, write_graph6
from graphdot.cli import COMMANDS, OPERATIONS, build_parser, emit_report, run
from graphdot.graph import complete, cycle, path

from conftest import E4, K3, K3_K1, K4, P3, TWO_K2


def write(tmp_path, name, *graphs):
    p = tmp_path / name
    p.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    return str(p)


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_dot_example(tmp_path):
    code, text = call("dot", "--solver", "exhaustive", write(tmp_path, "a.g6", K4), write(tmp_path, "b.g6", E4))
    doc = json.loads(text)
    assert code == 0
    assert (doc["value"], doc["phase"]) == (-12, 24)
    assert doc["schema_version"] == 1


def test_metric_example(tmp_path):
    code, text = call("metric", write(tmp_path, "a.g6", P3), write(tmp_path, "b.g6", K3))
    assert code == 0 and json.loads(text)["d"] == 8


def test_ortho_example(tmp_path):
    code, text = call("ortho", write(tmp_path, "a.g6", TWO_K2), write(tmp_path, "b.g6", K3_K1))
    doc = json.loads(text)
    assert code == 0 and doc["orthogonal"] is True and doc["phase"] == 24


def test_norm_dot_is_an_exact_rational(tmp_path):
    _, text = call("norm-dot", write(tmp_path, "a.g6", P3), write(tmp_path, "b.g6", K3))
    assert json.loads(text)["norm_dot"] == "1/3"


def test_pairs_can_share_one_file(tmp_path):
    _, text = call("phase", write(tmp_path, "ab.g6", K4, E4))
    assert json.loads(text)["phase"] == 24


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    code, text = call("dot", str(bad), str(bad))
    assert code == 2 and json.loads(text)["error"]["kind"] == "parse"
    assert call("dot", str(tmp_path / "missing.g6"), str(bad))[0] == 2

    big = write(tmp_path, "big.g6", path(11), path(11))
    code, text = call("dot", "--solver", "exhaustive", big)
    assert code == 3 and json.loads(text)["error"]["kind"] == "guard"

    code, text = call("metric", write(tmp_path, "k4.g6", K4), write(tmp_path, "k3.g6", K3))
    assert code == 4 and json.loads(text)["error"]["kind"] == "order"


def test_empty_cluster_input(tmp_path):
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, text = call("cluster", "--catalog-basis", "4", str(empty))
    assert code == 0
    assert json.loads(text)["groups"] == []


def test_cluster_groups_relabelings(tmp_path):
    graphs = [cycle(5), cycle(5).relabel([2, 0, 4, 1, 3]), path(5)]
    _, text = call("cluster", "--catalog-basis", "5", write(tmp_path, "c.g6", *graphs))
    groups = [g["members"] for g in json.loads(text)["groups"]]
    assert sorted(groups) == [[0, 1], [2]]


def test_coords_roundtrip_through_schema(tmp_path):
    _, text = call("coords", "--catalog-basis", "3", write(tmp_path, "k4.g6", K4))
    doc = json.loads(text)
    record = doc["results"][0]
    coords = Coordinates.from_json(record)
    assert coords.to_json() == {k: record[k] for k in ("basis_ids", "entries")}
    assert coords.entries == ((-6, 24), (-2, 24), (2, 24), (6, 24))


@pytest.mark.parametrize("fmt, sep", [("csv", ","), ("tsv", "\t")])
def test_tabular_output(tmp_path, fmt, sep):
    _, text = call("ortho", "--output", fmt, write(tmp_path, "a.g6", TWO_K2), write(tmp_path, "b.g6", K3_K1))
    header, row = text.splitlines()
    cols = header.split(sep)
    assert cols == sorted(cols)
    assert dict(zip(cols, row.split(sep)))["orthogonal"] == "true"


def test_emit_report_is_deterministic():
    a = emit_report({"b": 1, "a": [2, 3]})
    b = emit_report({"a": [2, 3], "b": 1})
    assert a == b == '{"a": [2, 3], "b": 1, "schema_version": 1}\n'
    assert emit_report([]) == '{"results": [], "schema_version": 1}\n'


def test_repeated_invocations_are_byte_identical(tmp_path):
    src = write(tmp_path, "g.g6", cycle(5), path(5), complete(5))
    argv = [sys.executable, "-m", "graphdot", "coords", "--catalog-basis", "4", src]
    outs = {subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(3)}
    assert len(outs) == 1
    corpus = [sys.executable, "-m", "graphdot", "corpus", "--seed", "7", "--copies", "5", src]
    outs = {subprocess.run(corpus, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_convert_roundtrip(tmp_path):
    src = write(tmp_path, "g.g6", cycle(5), K3)
    code, edges = call("convert", "--to", "edgelist", src)
    assert code == 0
    el = tmp_path / "g.txt"
    el.write_text(edges)
    code, back = call("convert", "--to", "graph6", str(el))
    assert back == (tmp_path / "g.g6").read_text()


def test_every_operation_maps_to_one_subcommand():
    parser = build_parser()
    subcommands = set(parser._subparsers._group_actions[0].choices)
    assert subcommands == set(COMMANDS)
    for op, command in OPERATIONS.items():
        assert isinstance(command, str) and command in subcommands
        assert callable(getattr(graphdot, op, None)) or op in ("dot_star", "dot_clique_split", "dot_bounded_order")
    required = {
        "sign_matrix", "complement", "parse_graph6", "write_graph6", "canonical_form", "is_isomorphic",
        "automorphism_count", "enumerate_iso_classes", "dot_exhaustive", "dot_bnb", "dot_cross_order",
        "dot_star", "dot_clique_split", "dot_bounded_order", "phase", "norm", "norm_dot", "metric",
        "is_orthogonal", "quasi_orthogonality_scan", "contains_induced", "count_induced", "coordinates",
        "verify_basis", "greedy_basis", "cluster", "subgraph_census_coords", "similarity_rank",
    }
    assert required <= set(OPERATIONS)


def test_misc_commands(tmp_path):
    src = write(tmp_path, "g.g6", cycle(5))
    assert json.loads(call("aut", src)[1])["results"][0]["automorphisms"] == 10
    code, text = call("iso", write(tmp_path, "two.g6", cycle(5), cycle(5).relabel([1, 3, 0, 4, 2])))
    assert code == 0 and json.loads(text)["isomorphic"] is True
    code, text = call("enumerate", "--order", "4")
    assert code == 0 and json.loads(text)["count"] == 11
    code, text = call("census", "-k", "3", src)
    assert code == 0
    code, text = call("quasi-ortho", "--order", "4")
    assert code == 0 and json.loads(text)["minimum"] == 0
    code, text = call("sign", "-r", "1/2", write(tmp_path, "p3.g6", P3))
    assert code == 0 and "1/2" in text
    code, text = call("induced", write(tmp_path, "k4.g6", K4), write(tmp_path, "k3.g6", K3))
    assert code == 0
    code, text = call("rank", write(tmp_path, "r.g6", cycle(5), path(5), cycle(5).relabel([4, 3, 2, 1, 0])))
    assert code == 0
    code, text = call("basis-verify", "--order", "4", "--catalog-basis", "4")
    assert code == 0 and json.loads(text)["is_basis"] is True
