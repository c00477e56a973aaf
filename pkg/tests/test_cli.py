"""End-to-end runs of the command line interface."""
import pytest

from bicaut.cli import (
    EX_BUDGET,
    EX_FAMILY,
    EX_INPUT,
    EX_MISMATCH,
    EX_OK,
    EX_OUTSIDE,
    run,
)
from bicaut.graphs import from_edgelist, make_graph, to_edgelist, to_graph6
from bicaut.oracle import automorphism_count

DIAMOND = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _write(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(to_edgelist(g), encoding="ascii")
    return str(p)


def test_aut_report(tmp_path, capsys):
    path = _write(tmp_path, DIAMOND)
    assert run(["aut", path]) == EX_OK
    got = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert got["family"] == "bicyclic"
    assert got["kind"] == "theta"
    assert got["lengths"] == "1,2,2"
    assert got["case"] == "lem2"
    assert got["expr"] == "S2*S2"
    assert got["order"] == "4"
    assert got["class"] == "T"
    assert got["closure"] == "ok"


def test_aut_structured_single_line(tmp_path, capsys):
    path = _write(tmp_path, DIAMOND)
    assert run(["aut", "--structured", path]) == EX_OK
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    assert "order=4" in out[0] and "class=T" in out[0]


def test_aut_tree_and_unicyclic(tmp_path, capsys):
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert run(["aut", _write(tmp_path, star)]) == EX_OK
    got = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert got["family"] == "tree" and got["order"] == "6" and got["kind"] == "-"

    c5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert run(["aut", _write(tmp_path, c5)]) == EX_OK
    got = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert got["family"] == "unicyclic" and got["expr"] == "dih(5)"
    assert got["class"] == "OutsideS"


def test_aut_reads_stdin_graph6(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(DIAMOND) + "\n"))
    assert run(["aut", "--format", "graph6"]) == EX_OK
    assert "order=4" in capsys.readouterr().out


def test_aut_rejects_unsupported_family(tmp_path, capsys):
    k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert run(["aut", _write(tmp_path, k4)]) == EX_FAMILY
    assert "unsupported graph" in capsys.readouterr().err


def test_aut_bad_file_and_bad_text(tmp_path, capsys):
    assert run(["aut", str(tmp_path / "missing.txt")]) == EX_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("not an edge list\n", encoding="ascii")
    assert run(["aut", str(bad)]) == EX_INPUT
    capsys.readouterr()


def test_verify_ok_and_corrupt(tmp_path, capsys, monkeypatch):
    path = _write(tmp_path, DIAMOND)
    assert run(["verify", path]) == EX_OK
    assert capsys.readouterr().out.strip() == "formula=4 oracle=4 OK"

    monkeypatch.setenv("BICAUT_CORRUPT", "1")
    assert run(["verify", path]) == EX_MISMATCH
    assert capsys.readouterr().out.strip() == "formula=5 oracle=4 MISMATCH"


def test_verify_respects_oracle_bound(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BICAUT_ORACLE_BOUND", "3")
    assert run(["verify", _write(tmp_path, DIAMOND)]) == EX_INPUT
    assert "oracle bound" in capsys.readouterr().err


def test_realize_roundtrip(tmp_path, capsys):
    out = tmp_path / "graph.txt"
    # the degenerate Klein factor collapses: S2*b2(1,1,1) normalizes to S2^3
    code = run(["realize", "S2*b2(1,1,1)", "--output", str(out), "--check"])
    assert code == EX_OK
    captured = capsys.readouterr()
    assert "order=8" in captured.out and "class=T" in captured.out
    assert "expr=S2*S2*S2" in captured.out
    assert "OK" in captured.err

    g = from_edgelist(out.read_text(encoding="ascii"))
    assert automorphism_count(g) == 8

    manifest = (out.parent / "graph.txt.manifest").read_text(encoding="ascii")
    rows = [line.split("\t") for line in manifest.splitlines()]
    assert rows[0][0] == "core"
    # attachment vertices are shared between a term and the core
    covered = {int(v) for _, verts in rows for v in verts.split(",") if verts}
    assert covered == set(range(g.n))


def test_realize_stdout_pipe(tmp_path, capsys):
    assert run(["realize", "S3", "--format", "graph6"]) == EX_OK
    line = capsys.readouterr().out.strip()
    from bicaut.graphs import from_graph6

    assert automorphism_count(from_graph6(line)) == 6


def test_realize_error_codes(capsys):
    assert run(["realize", "wr(S2("]) == EX_INPUT
    assert "expression error" in capsys.readouterr().err
    assert run(["realize", "dih(5)"]) == EX_OUTSIDE
    assert "not realizable" in capsys.readouterr().err
    assert run(["realize", "wr(wr(S5,S6),S6)"]) == EX_BUDGET
    assert "too large" in capsys.readouterr().err


def test_fuzz_small_run(capsys):
    assert run(["fuzz", "--count", "30", "--max-n", "9", "--seed", "7"]) == EX_OK
    out = capsys.readouterr().out
    assert out.strip().splitlines()[-1].startswith("checked=30 mismatches=0")


def test_fuzz_exhaustive(capsys):
    assert run(["fuzz", "--exhaustive", "--max-n", "6"]) == EX_OK
    out = capsys.readouterr().out
    assert "checked=25 mismatches=0" in out
