import json

import pytest

from tropicone.cli import main

C3_ARGS = ["--type", "C3", "--word", "2,3,2,1,2,3,2,3,1"]
F4_WORD = "1,2,1,3,2,1,3,2,3,4,3,2,1,3,2,3,4,3,2,1,3,2,3,4"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_graph_dot(capsys):
    rc, out, _ = run(capsys, "graph", *C3_ARGS, "--i", "2", "--format", "dot")
    assert rc == 0
    assert out.startswith('digraph "C3_i2"')
    assert out.count("->") == 14


def test_graph_json(capsys):
    rc, out, _ = run(capsys, "graph", *C3_ARGS, "--i", "2", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["meta"]["vertex_count"] == 12


def test_graph_bundle_without_i(capsys):
    rc, out, _ = run(capsys, "graph", *C3_ARGS, "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["type"] == "C3"
    assert [g["meta"]["i"] for g in doc["graphs"]] == [1, 2, 3]


def test_graph_dot_requires_i(capsys):
    rc, _, err = run(capsys, "graph", *C3_ARGS, "--format", "dot")
    assert rc == 1
    assert "--i" in err


def test_graph_fast_path(capsys):
    rc, out, _ = run(capsys, "graph", "--type", "C3", "--word", "2,3,2,1,2,3,2,3,1", "--i", "1", "--fast-path", "--format", "json")
    assert rc == 0
    assert json.loads(out)["meta"]["rule"] == "minuscule"


def test_graph_unsupported_exit_code(capsys):
    rc, _, err = run(capsys, "graph", "--type", "F4", "--word", F4_WORD, "--i", "2")
    assert rc == 2
    assert "force" in err
    rc, out, _ = run(capsys, "graph", "--type", "F4", "--word", F4_WORD, "--i", "2", "--force", "--format", "json")
    assert rc == 0
    assert json.loads(out)["meta"]["forced"] is True


def test_bad_input_exit_codes(capsys):
    assert run(capsys, "graph", "--type", "Q9", "--word", "1", "--i", "1")[0] == 1
    assert run(capsys, "graph", "--type", "C3", "--word", "2,2,2,1,2,3,2,3,1", "--i", "2")[0] == 1
    assert run(capsys, "graph", "--type", "C3", "--word", "2,3,2", "--i", "2")[0] == 1
    assert run(capsys, "cone", "--type", "C3", "--word", "2,3,2,1,2,3,2,3,x")[0] == 1


def test_cone_text(capsys):
    rc, out, _ = run(capsys, "cone", *C3_ARGS)
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) == 14
    assert lines[0] == "z_9 >= 0"
    assert all(line.endswith(">= 0") for line in lines)


def test_cone_latex_and_json(capsys):
    rc, out, _ = run(capsys, "cone", *C3_ARGS, "--format", "latex")
    assert rc == 0 and "\\begin{align*}" in out
    rc, out, _ = run(capsys, "cone", *C3_ARGS, "--format", "json")
    assert rc == 0 and len(json.loads(out)["rows"]) == 14


def test_check_passes(capsys):
    rc, out, _ = run(capsys, "check", *C3_ARGS)
    assert rc == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert [g["i"] for g in doc["graphs"]] == [1, 2, 3]


def test_check_single_index(capsys):
    rc, out, _ = run(capsys, "check", "--type", "F4", "--word", F4_WORD, "--i", "1")
    assert rc == 0
    assert json.loads(out)["status"] == "pass"


def test_check_unsupported_without_force(capsys):
    rc, _, _ = run(capsys, "check", "--type", "F4", "--word", F4_WORD)
    assert rc == 2


def test_oracle_a2(capsys):
    rc, out, _ = run(capsys, "oracle", "--type", "A2", "--all-words")
    assert rc == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert len(doc["agreement"]) == 4
    assert doc["census_failures"] == []
    assert doc["census_checked"] > 0


def test_oracle_single_word_g2(capsys):
    rc, out, _ = run(capsys, "oracle", "--type", "G2", "--word", "1,2,1,2,1,2")
    assert rc == 0
    doc = json.loads(out)
    assert doc["agreement"] == []  # no symbolic minors outside family A
    assert doc["status"] == "pass"


def test_oracle_needs_word_flag(capsys):
    rc, _, err = run(capsys, "oracle", "--type", "A2")
    assert rc == 1
    assert "word" in err


def test_deterministic_output(capsys):
    one = run(capsys, "graph", *C3_ARGS, "--i", "2", "--format", "json")
    two = run(capsys, "graph", *C3_ARGS, "--i", "2", "--format", "json")
    assert one == two


def test_out_file(capsys, tmp_path):
    target = tmp_path / "cone.txt"
    rc, out, _ = run(capsys, "cone", *C3_ARGS, "--out", str(target))
    assert rc == 0 and out == ""
    assert target.read_text().count(">= 0") == 14


def test_outdir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TROPICONE_OUTDIR", str(tmp_path))
    rc, _, _ = run(capsys, "cone", *C3_ARGS, "--out", "sub/cone.txt")
    assert rc == 0
    assert (tmp_path / "sub" / "cone.txt").exists()


def test_argparse_rejects_unknown_format(capsys):
    with pytest.raises(SystemExit):
        main(["cone", *C3_ARGS, "--format", "pdf"])
