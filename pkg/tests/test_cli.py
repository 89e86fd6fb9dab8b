import io
import json
import subprocess
import sys

import pytest

from conftest import FIG2_EDGES, SQUARE_TEXT
from tgreach.cli import run
from tgreach.core import TemporalGraph, parse_temporal_graph, serialize_temporal_graph
from tgreach.reductions import GadgetMeta


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "square.tg").write_text(SQUARE_TEXT + "\n")
    (tmp_path / "fig2.tg").write_text(serialize_temporal_graph(TemporalGraph(6, FIG2_EDGES)) + "\n")
    (tmp_path / "sat.cnf").write_text("p cnf 2 2\n1 2 0\n-1 2 0\n")
    (tmp_path / "unsat.cnf").write_text("p cnf 1 2\n1 0\n-1 0\n")
    (tmp_path / "cover.txt").write_text("2 3\n1\n2\n1 2\n")
    (tmp_path / "bad.tg").write_text("n 2\n0 0 1\n")
    return tmp_path


def test_tst_strict_square(files):
    code, out, err = invoke("tst", "--strict", files / "square.tg")
    assert code == 1
    assert "not-exists" in out and "not-exists" in err


def test_biconnected(files):
    assert invoke("biconnected", files / "fig2.tg")[0] == 0
    assert invoke("biconnected", files / "square.tg")[0] == 1


def test_connected_and_pivots(files):
    assert invoke("connected", files / "square.tg")[0] == 0
    code, out, _ = invoke("pivots", files / "fig2.tg")
    assert code == 0 and "pivot 3 6" in out.splitlines()
    code, out, _ = invoke("pivots", files / "fig2.tg", "--format", "jsonl")
    assert {"pivot": 3, "time": 6} in [json.loads(l) for l in out.splitlines()]


def test_classify(files):
    code, out, _ = invoke("classify", files / "fig2.tg")
    assert code == 0 and out.strip() == "simple=false proper=true happy=false"


def test_bipaths_jsonl(files):
    code, out, _ = invoke("bipaths", files / "fig2.tg", 0, "--format", "jsonl")
    assert code == 0
    records = [json.loads(l) for l in out.splitlines()]
    assert [r["vertex"] for r in records] == list(range(6))
    assert records[0]["triplets"] == [[None, None, None]]
    assert records[5]["triplets"] == [[1, 4, 4]]
    code, out, _ = invoke("bipaths", files / "fig2.tg", 0)
    assert out.splitlines()[0] == "0: (-,-inf,inf)"
    assert out.splitlines()[3] == "3: (2,3,7)"
    assert invoke("bipaths", files / "fig2.tg", 9)[0] == 2


def test_bispanner_and_min(files):
    code, out, _ = invoke("bispanner", files / "fig2.tg")
    assert code == 0 and parse_temporal_graph(out).num_edges() == 6
    code, out, _ = invoke("min-bispanner", files / "fig2.tg")
    assert code == 0 and out.splitlines()[0] == "k 6"
    assert invoke("min-bispanner", files / "fig2.tg", "-k", 5)[0] == 1
    assert invoke("min-bispanner", files / "square.tg")[0] == 1
    assert invoke("bispanner", files / "square.tg")[0] == 1


def test_critical_edges(files):
    code, out, _ = invoke("critical-edges", files / "fig2.tg")
    assert code == 0 and len(out.splitlines()) == 6
    assert invoke("critical-edges", files / "square.tg")[0] == 1


def test_dot(files):
    code, out, _ = invoke("dot", files / "square.tg")
    assert code == 0 and out.count(" -- ") == 4
    code, out, _ = invoke("bispanner", files / "fig2.tg", "--format", "dot")
    assert out.startswith("graph G {")


def test_errors_and_guards(files):
    assert invoke("connected", files / "bad.tg")[0] == 2
    assert invoke("connected", files / "missing.tg")[0] == 2
    assert invoke("frobnicate")[0] == 2
    assert invoke("connected", "--strict", "--non-strict", files / "square.tg")[0] == 2
    code, _, err = invoke("tst", files / "fig2.tg", "--max-n", 3)
    assert code == 3 and "refused" in err


def test_sat_pipeline(files):
    for name, sat in (("sat.cnf", True), ("unsat.cnf", False)):
        gadget = files / (name + ".tg")
        assert invoke("gen-sat-gadget", files / name, "-o", gadget)[0] == 0
        meta = GadgetMeta.from_text((files / (name + ".tg.meta")).read_text())
        assert meta.kind == "sat-tst" and meta.names["B"] == 0
        tst_code = invoke("tst", gadget)[0]
        code, out, _ = invoke("verify-sat-reduction", files / name)
        assert code == 0
        assert f"satisfiable={str(sat).lower()}" in out
        assert ("satisfiable=true" in out) == (tst_code == 0)


def test_setcover_pipeline(files):
    gadget = files / "cover.tg"
    assert invoke("gen-setcover-gadget", files / "cover.txt", "-o", gadget)[0] == 0
    assert parse_temporal_graph(gadget.read_text()).n == 8
    assert "size_offset=15" in (files / "cover.tg.meta").read_text()
    code, out, _ = invoke("verify-setcover-reduction", files / "cover.txt")
    assert code == 0 and "bispanner=16" in out


def test_settings_only_matter_off_proper(files):
    for cmd in ("connected", "biconnected", "tst"):
        assert invoke(cmd, "--strict", files / "fig2.tg")[0] == invoke(cmd, files / "fig2.tg")[0]


def test_output_is_deterministic(files):
    for argv in (("bipaths", files / "fig2.tg", 0, "--format", "jsonl"), ("bispanner", files / "fig2.tg")):
        assert invoke(*argv) == invoke(*argv)


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "tgreach", "biconnected", str(files / "fig2.tg")], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "bidirectionally connected"
