import json
import shutil
import subprocess
import sys

import pytest

from symcrys.cli import main
from symcrys.crystal.graph import build_graph
from symcrys.export import GraphDocument, export_dot, graph_document, parse_dot_edges
from symcrys.rootdata import lambda_zero, make_odd_window
from symcrys.vtheta import VThetaCarrier


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_crystal_b_dot_figure(capsys):
    code, out, _ = run(capsys, "--command", "crystal-b", "--radius", "3", "--depth", "2", "--format", "dot")
    assert code == 0
    edges = parse_dot_edges(out)
    from_vac = {c: t for s, c, t in edges if s == "n0"}
    assert from_vac[1] == from_vac[-1]
    child = from_vac[1]
    grand = {c: t for s, c, t in edges if s == child}
    assert grand[1] != grand[-1]


def test_depth_zero_dot_single_node(capsys):
    code, out, _ = run(capsys, "--command", "crystal-b", "--depth", "0", "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 1
    assert 'n0 [label="vac"]' in out
    assert "->" not in out


def test_depth_one_dot_edges(capsys):
    code, out, _ = run(capsys, "--command", "crystal-b", "--radius", "1", "--depth", "1", "--format", "dot")
    assert code == 0
    assert sorted(parse_dot_edges(out)) == [("n0", -1, "n1"), ("n0", 1, "n1")]


def test_verify_hecke(capsys):
    code, out, _ = run(capsys, "--command", "verify-hecke", "--n", "2", "--degree", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"] and all(r["status"] == "pass" for r in doc["report"])


def test_lambda_not_theta_invariant(capsys):
    code, _, err = run(capsys, "--command", "crystal-b", "--lambda", "1:1", "--depth", "1")
    assert code == 2
    assert "index -1" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["--command", "crystal-b", "--radius", "2"],
        ["--command", "crystal-b", "--depth", "-1"],
        ["--command", "crystal-b", "--lambda", "1:x"],
        ["--command", "crystal-b", "--kind", "affine"],
        ["--command", "verify-hecke", "--n", "0"],
        ["--command", "binfty", "--labels", "1,7"],
        ["--command", "crystal-b", "--config", "/nonexistent/symcrys.cfg"],
    ],
)
def test_config_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_missing_command_exits_2(capsys):
    code, _, err = run(capsys, "--depth", "1")
    assert code == 2 and "--command" in err


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "--command", "crystal-b", "--depth", "2")
    assert code == 0
    doc = GraphDocument.from_json(out)
    assert doc.to_json() == out
    assert doc.metadata["depth"] == 2
    assert {a["color"] for a in doc.arrows} == {-3, -1, 1, 3}


def test_graph_document_matches_graph():
    rd = make_odd_window(3)
    g = build_graph(VThetaCarrier(rd, lambda_zero()), 2)
    doc = GraphDocument.from_json(graph_document(g).to_json())
    assert [n["id"] for n in doc.nodes] == [n.name for n in g.nodes]
    assert [(a["source"], a["color"], a["target"]) for a in doc.arrows] == sorted(
        (f"n{s}", c, f"n{t}") for s, c, t in g.arrows
    )


def test_determinism(capsys):
    argv = ["--command", "crystal-b", "--depth", "3", "--format"]
    outs = [run(capsys, *argv, fmt)[1] for fmt in ("dot", "json", "dot", "json")]
    assert outs[0] == outs[2] and outs[1] == outs[3]


def test_config_file_flag_wins(capsys, tmp_path):
    cfg = tmp_path / "job.cfg"
    cfg.write_text("# a crystal job\ncommand = crystal-b\ndepth = 1\nformat = text\n")
    code, out, _ = run(capsys, "--config", str(cfg))
    assert code == 0 and "depth 1" in out
    code, out, _ = run(capsys, "--config", str(cfg), "--depth", "2")
    assert code == 0 and "depth 2" in out


def test_bad_config_line(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("command crystal-b\n")
    code, _, _ = run(capsys, "--config", str(cfg))
    assert code == 2


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "g.dot"
    code, out, _ = run(capsys, "--command", "crystal-b", "--depth", "1", "--format", "dot", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("digraph vtheta")


def test_dot_edge_attributes():
    g = build_graph(VThetaCarrier(make_odd_window(1), lambda_zero()), 1)
    dot = export_dot(g)
    assert 'n0 -> n1 [label="-1", color=' in dot


def test_binfty_sub_window(capsys):
    code, out, _ = run(capsys, "--command", "binfty", "--labels", "1,3", "--depth", "2", "--format", "text")
    assert code == 0
    assert "7 nodes" in out


def test_global_basis_json(capsys):
    code, out, _ = run(capsys, "--command", "global-basis", "--depth", "2")
    assert code == 0
    doc = json.loads(out)
    assert [b["block"] for b in doc["blocks"]][:3] == [[0, 0], [0, 1], [1, 0]]
    assert all(r["status"] == "pass" for r in doc["report"])


def test_dim_formula_json(capsys):
    code, out, _ = run(capsys, "--command", "dim-formula", "--depth", "1")
    assert code == 0
    doc = json.loads(out)
    vals = {(r["node"], tuple(r["word"])): r["value"] for r in doc["values"]}
    level1 = [k for k in vals if k[1] in ((1,), (-1,))]
    assert level1 and all(vals[k] == "1/1" for k in level1)


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "--command", "verify-uq", "--samples", "20", "--format", "text")
    assert code == 0 and "PASS q-boson" in out
    code, out, _ = run(capsys, "--command", "verify-vtheta", "--samples", "20", "--depth", "2")
    assert code == 0
    assert {r["check"] for r in json.loads(out)["report"]} >= {"v-commutation", "psi-crosscheck"}


def test_affine_and_doubled_kinds(capsys):
    code, _, _ = run(capsys, "--command", "crystal-b", "--kind", "affine", "--ell", "4", "--depth", "2")
    assert code == 0
    code, _, _ = run(capsys, "--command", "crystal-b", "--kind", "doubled", "--lambda", "doubled", "--depth", "2")
    assert code == 0


@pytest.mark.skipif(shutil.which("symcrys") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["symcrys", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("symcrys")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "symcrys.cli", "--command", "verify-hecke", "--n", "1",
                          "--degree", "1", "--format", "text"], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
