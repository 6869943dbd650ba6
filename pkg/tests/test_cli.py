"""Command-line surface: payloads, exit codes, round trips."""

from __future__ import annotations

import json

import pytest

from nlcoloring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_gen_cycle(capsys):
    code, payload, _ = run_json(capsys, "gen", "--family", "cycle", "--n", "3")
    assert code == 0
    assert payload == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_gen_bad_family(capsys):
    code, _, err = run(capsys, "gen", "--family", "hypercube", "--n", "3")
    assert code == 2 and "error" in err


def test_gen_out_of_range(capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "2")
    assert code == 2


def test_chi_family(capsys):
    code, payload, _ = run_json(capsys, "chi", "--family", "cycle", "--n", "23")
    assert code == 0 and payload == {"chi": 5}


def test_color_then_verify_roundtrip(tmp_path, capsys):
    code, payload, _ = run_json(capsys, "color", "--family", "cycle", "--n", "9")
    assert code == 0
    graph_file = tmp_path / "g.json"
    cert_file = tmp_path / "c.json"
    graph_file.write_text(json.dumps(payload["graph"]))
    cert_file.write_text(json.dumps(payload["certificate"]))
    code, verdict, _ = run_json(capsys, "verify", "--graph", str(graph_file),
                                "--certificate", str(cert_file))
    assert code == 0 and verdict == {"ok": True}


def test_verify_bad_certificate_exits_1(tmp_path, capsys):
    graph_file = tmp_path / "c4.json"
    cert_file = tmp_path / "cert.json"
    graph_file.write_text('{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}')
    cert_file.write_text('{"n":4,"k":3,"colors":[1,2,1,3]}')
    code, verdict, _ = run_json(capsys, "verify", "--graph", str(graph_file),
                                "--certificate", str(cert_file))
    assert code == 1
    assert verdict["ok"] is False
    assert verdict["reason"] == "DuplicateSignature"
    assert len(verdict["witness"]) == 2


def test_verify_rejects_disconnected(tmp_path, capsys):
    graph_file = tmp_path / "bad.json"
    cert_file = tmp_path / "cert.json"
    graph_file.write_text('{"n":4,"edges":[[0,1]]}')
    cert_file.write_text('{"n":4,"k":4,"colors":[1,2,3,4]}')
    code, _, err = run(capsys, "verify", "--graph", str(graph_file),
                       "--certificate", str(cert_file))
    assert code == 2 and "connected" in err


def test_chi_exact_graph(tmp_path, capsys):
    graph_file = tmp_path / "c8.json"
    graph_file.write_text(
        json.dumps({"n": 8, "edges": [[i, (i + 1) % 8] for i in range(8)]}))
    code, payload, _ = run_json(capsys, "chi", "--graph", str(graph_file), "--exact")
    assert code == 0
    assert payload["chi"] == 4 and payload["status"] == "Exact"
    assert payload["certificate"]["k"] == 4


def test_chi_exact_capped_exits_1(tmp_path, capsys):
    graph_file = tmp_path / "star.json"
    graph_file.write_text(json.dumps({"n": 6, "edges": [[i, 5] for i in range(5)]}))
    code, payload, _ = run_json(capsys, "chi", "--graph", str(graph_file),
                                "--exact", "--max-k", "4")
    assert code == 1 and payload["status"] == "CappedOut"


def test_bounds_payload(capsys):
    code, payload, _ = run_json(capsys, "bounds", "--k", "6", "--class", "tree")
    assert code == 0
    assert payload["generalMaxOrder"] == 186
    assert payload["ell"] == 90
    assert payload["classBound"] == 118


def test_bounds_rejects_large_delta(capsys):
    code, _, err = run(capsys, "bounds", "--k", "4", "--delta", "4")
    assert code == 2


def test_export_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--family", "comb", "--m", "4")
    graph_file = tmp_path / "comb.json"
    graph_file.write_text(out)
    code, edgelist, _ = run(capsys, "export", "--input", str(graph_file),
                            "--to", "edgelist")
    assert code == 0
    edge_file = tmp_path / "comb.txt"
    edge_file.write_text(edgelist)
    code, back, _ = run(capsys, "export", "--input", str(edge_file), "--to", "json")
    assert code == 0
    assert json.loads(back) == json.loads(out)


def test_identical_invocations_are_byte_identical(capsys):
    _, first, _ = run(capsys, "color", "--family", "wheel", "--n", "12")
    _, second, _ = run(capsys, "color", "--family", "wheel", "--n", "12")
    assert first == second


def test_color_dot_output(tmp_path, capsys):
    dot_file = tmp_path / "c9.dot"
    code, payload, _ = run_json(capsys, "color", "--family", "cycle", "--n", "9",
                                "--dot", str(dot_file))
    assert code == 0
    text = dot_file.read_text()
    assert text.startswith("graph nl {")
    assert '0 [label="0:1"' in text
    assert "0 -- 1;" in text


def test_color_tree_input(tmp_path, capsys):
    graph_file = tmp_path / "p5.txt"
    graph_file.write_text("0 1\n1 2\n2 3\n3 4\n")
    code, payload, _ = run_json(capsys, "color", "--graph", str(graph_file))
    assert code == 0 and payload["certificate"]["k"] == 3


def test_color_rejects_cycle_graph_input(tmp_path, capsys):
    graph_file = tmp_path / "c5.txt"
    graph_file.write_text("0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, _, err = run(capsys, "color", "--graph", str(graph_file))
    assert code == 2


def test_color_comb_requires_constructible_size(capsys):
    code, _, err = run(capsys, "color", "--family", "comb", "--m", "7")
    assert code == 2 and "k(k-1)" in err
    code, payload, _ = run_json(capsys, "color", "--family", "comb", "--m", "20")
    assert code == 0 and payload["certificate"]["k"] == 5


def test_sweep_writes_report(tmp_path, capsys):
    report_file = tmp_path / "delta.json"
    code, summary, _ = run_json(capsys, "sweep", "--conjecture", "delta",
                                "--max-n", "5", "--report", str(report_file))
    assert code == 0 and summary["holds"] is True
    report = json.loads(report_file.read_text())
    assert {"canonical", "n", "chi", "delta", "verdict"} <= set(report["instances"][0])


def test_path2_certificate_payload(capsys):
    code, payload, _ = run_json(capsys, "color", "--family", "path", "--n", "2")
    assert code == 0
    assert payload["certificate"] == {"n": 2, "k": 2, "colors": [1, 2]}


FAMILY_SAMPLES = [
    ("--family", "path", "--n", "14"),
    ("--family", "cycle", "--n", "24"),
    ("--family", "fan", "--n", "11"),
    ("--family", "wheel", "--n", "25"),
    ("--family", "comb", "--m", "20"),
    ("--family", "star", "--n", "6"),
    ("--family", "double-star", "--r", "2", "--s", "3"),
    ("--family", "unicyclic", "--k", "5"),
    ("--family", "caterpillar", "--k", "6"),
]


@pytest.mark.parametrize("family_args", FAMILY_SAMPLES, ids=lambda a: a[1])
def test_color_then_verify_all_families(family_args, tmp_path, capsys):
    code, payload, _ = run_json(capsys, "color", *family_args)
    assert code == 0
    graph_file = tmp_path / "g.json"
    cert_file = tmp_path / "c.json"
    graph_file.write_text(json.dumps(payload["graph"]))
    cert_file.write_text(json.dumps(payload["certificate"]))
    code, verdict, _ = run_json(capsys, "verify", "--graph", str(graph_file),
                                "--certificate", str(cert_file))
    assert code == 0 and verdict == {"ok": True}


def test_pretty_output_is_line_based(capsys):
    code, out, _ = run(capsys, "--pretty", "chi", "--family", "path", "--n", "10")
    assert code == 0 and out == "chi: 4\n"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
