import json

import pytest

from wordnerve import formats
from wordnerve.cli import main
from wordnerve.graphs import from_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


W5_WORD = " ".join("156216326436546")
W5_EDGES = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5"),
            ("1", "6"), ("2", "6"), ("3", "6"), ("4", "6"), ("5", "6")]


def test_induce_observation_word(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "1 2 1 2 1\n")
    out_path = str(tmp_path / "g.json")
    code, out, err = run(capsys, "induce", wf, "--dim", "3", "--output", out_path)
    assert code == 0
    doc = json.loads((tmp_path / "g.json").read_text())
    assert doc["edges"] == [["1", "2"]]
    assert "1: 2" in out


def test_induce_wheel(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", W5_WORD + "\n")
    code, out, _ = run(capsys, "induce", wf, "--dim", "2")
    assert code == 0
    doc = json.loads(out)
    assert formats.graph_from_doc(doc) == from_edge_list(W5_EDGES)


def test_induce_bad_file(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "# no words here\n")
    code, _, err = run(capsys, "induce", wf, "--dim", "2")
    assert code == 2
    assert "error" in err


def test_encode_any_p3(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "a b\nb c\n")
    code, out, err = run(capsys, "encode", gf, "--mode", "any")
    assert code == 0
    assert out == "a b a b c b\n"
    assert "d=1" in err


def test_encode_bipartite_k22(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "v1 u1\nv1 u2\nv2 u1\nv2 u2\n")
    code, out, err = run(capsys, "encode", gf, "--mode", "bipartite")
    assert code == 0
    assert len(out.split()) == 16
    assert "d=2" in err


def test_encode_bipartite_rejects_triangle(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "a b\nb c\na c\n")
    code, _, err = run(capsys, "encode", gf, "--mode", "bipartite")
    assert code == 2
    assert "bipartite" in err


def test_encode_chords(tmp_path, capsys):
    doc = formats.dump_json({"kind": "chord-diagram", "slots": ["a", "b", "a", "b"]})
    cf = write(tmp_path, "d.json", doc)
    code, out, _ = run(capsys, "encode", cf, "--mode", "chords")
    assert code == 0
    assert out == "a b a b\n"


def test_realize_with_svg(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "a b a b\n")
    svg_path = tmp_path / "out.svg"
    cfg_path = tmp_path / "cfg.json"
    code, out, _ = run(
        capsys, "realize", wf, "--dim", "2",
        "--svg", str(svg_path), "--output", str(cfg_path),
    )
    assert code == 0
    svg = svg_path.read_text()
    assert svg.startswith("<?xml") and "<polygon" not in svg and "<line" in svg
    cfg = formats.config_from_doc(json.loads(cfg_path.read_text()))
    assert cfg.colors == ("a", "b", "a", "b")
    assert "a: b" in out  # adjacency summary goes to stdout when --output is set


def test_realize_svg_requires_2d(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "1 2 1 2 1\n")
    code, _, err = run(capsys, "realize", wf, "--dim", "4", "--svg", str(tmp_path / "x.svg"))
    assert code == 2
    assert not (tmp_path / "x.svg").exists()
    # without --svg the same word realizes fine in R^4
    code, out, err = run(capsys, "realize", wf, "--dim", "4")
    assert code == 0
    assert json.loads(out)["dimension"] == 4
    assert "nerve 1-skeleton" in err


def test_realize_svg_deterministic(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", W5_WORD + "\n")
    p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "realize", wf, "--dim", "2", "--svg", str(p1))[0] == 0
    assert run(capsys, "realize", wf, "--dim", "2", "--svg", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_search_c4(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "1 2\n2 3\n3 4\n1 4\n")
    out_path = tmp_path / "v.json"
    code, out, _ = run(
        capsys, "search", gf, "--dim", "2", "--max-copies", "3",
        "--max-len", "12", "--output", str(out_path),
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["outcome"] == "found"
    assert doc["budget"]["max_copies_per_letter"] == 3


def test_search_node_limit(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(
        capsys, "search", gf, "--dim", "2", "--node-limit", "1",
    )
    assert code == 3
    assert json.loads(out)["outcome"] == "node_limit_exceeded"


def test_search_jobs_byte_identical(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "\n".join(f"{u} {v}" for u, v in W5_EDGES) + "\n")
    paths = []
    for tag in ("a", "b"):
        out_path = tmp_path / f"{tag}.json"
        code, _, _ = run(
            capsys, "search", gf, "--dim", "2", "--max-copies", "5",
            "--max-len", "15", "--jobs", "4", "--output", str(out_path),
        )
        assert code == 0
        paths.append(out_path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_facets(tmp_path, capsys):
    code, out, _ = run(capsys, "facets", "6", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["facets"] == [[1, 2], [1, 6], [2, 3], [3, 4], [4, 5], [5, 6]]
    code, out, _ = run(capsys, "facets", "5", "3")
    assert json.loads(out)["facets"] == [
        [1, 2, 3], [1, 2, 5], [1, 3, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]
    ]
    code, _, err = run(capsys, "facets", "3", "3")
    assert code == 2


def test_extend_planar(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "1 4 2 1 3 2 4 3\n")
    cfg_path = tmp_path / "cfg.json"
    assert run(capsys, "realize", wf, "--dim", "2", "--output", str(cfg_path))[0] == 0
    extras = formats.dump_json(
        {"dimension": 2, "points": [["-2", "3"], ["10", "91"], ["9/2", "11"]]}
    )
    ef = write(tmp_path, "extras.json", extras)
    out_path = tmp_path / "ext.json"
    code, out, _ = run(
        capsys, "extend", str(cfg_path), ef, "--mode", "planar", "--output", str(out_path),
    )
    assert code == 0
    assert "nerve preserved" in out
    ext = formats.config_from_doc(json.loads(out_path.read_text()))
    assert len(ext.points) == 8 + 3


def test_extend_bipartite_cli(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "v1 u1\nv1 u2\nv2 u1\nv2 u2\n")
    word_path = tmp_path / "w.txt"
    assert run(capsys, "encode", gf, "--mode", "bipartite", "--output", str(word_path))[0] == 0
    cfg_path = tmp_path / "cfg.json"
    assert run(capsys, "realize", str(word_path), "--dim", "2", "--output", str(cfg_path))[0] == 0
    extras = formats.dump_json({"dimension": 2, "points": [["-3", "1"], ["40", "300"]]})
    ef = write(tmp_path, "extras.json", extras)
    code, out, _ = run(
        capsys, "extend", str(cfg_path), ef, "--mode", "bipartite", "--graph", gf,
    )
    assert code == 0


def test_extend_bipartite_on_hyperplane_extra(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "v1 u1\nv1 u2\n")
    word_path = tmp_path / "w.txt"
    run(capsys, "encode", gf, "--mode", "bipartite", "--output", str(word_path))
    cfg_path = tmp_path / "cfg.json"
    run(capsys, "realize", str(word_path), "--dim", "1", "--output", str(cfg_path))
    ef = write(
        tmp_path, "extras.json",
        formats.dump_json({"dimension": 1, "points": [["7/2"]]}),
    )
    code, _, err = run(
        capsys, "extend", str(cfg_path), ef, "--mode", "bipartite", "--graph", gf,
    )
    assert code == 2
    assert "separator" in err


def test_extend_dimension_mismatch(tmp_path, capsys):
    wf = write(tmp_path, "w.txt", "a b a b\n")
    cfg_path = tmp_path / "cfg.json"
    run(capsys, "realize", wf, "--dim", "2", "--output", str(cfg_path))
    ef = write(
        tmp_path, "extras.json",
        formats.dump_json({"dimension": 3, "points": [["1", "2", "3"]]}),
    )
    code, _, _ = run(capsys, "extend", str(cfg_path), ef, "--mode", "planar")
    assert code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "0")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_output_byte_determinism(tmp_path, capsys):
    gf = write(tmp_path, "g.txt", "a b\nb c\n")
    outs = []
    for tag in ("x", "y"):
        out_path = tmp_path / f"{tag}.json"
        code, _, _ = run(
            capsys, "search", gf, "--dim", "1", "--output", str(out_path),
        )
        assert code == 0
        outs.append(out_path.read_bytes())
    assert outs[0] == outs[1]
