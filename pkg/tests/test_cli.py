"""Tests for the command front end."""

import subprocess
import sys

import pytest

from knotgraph import catalog
from knotgraph.cli import main
from knotgraph.diagram import serialize


@pytest.fixture
def dg(tmp_path):
    def write(name):
        p = tmp_path / (name.replace("+", "p").replace("-", "m") + ".dg")
        p.write_text(serialize(catalog.named_diagram(name), "d"))
        return str(p)
    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_verb(dg, capsys):
    code, out, _ = run(capsys, ["eval", dg("trefoil+")])
    assert code == 0
    assert out.strip() == "A^5 + A^-3 + -1*A^-7"


def test_jones_verb(dg, capsys):
    code, out, _ = run(capsys, ["jones", dg("trefoil+")])
    assert code == 0
    assert out.strip() == "A^-4 + A^-12 + -1*A^-16"


def test_graph_eval_verb(dg, capsys):
    code, out, _ = run(capsys, ["graph-eval", dg("G_b_vertex"),
                                "--scheme", "casimir", "--level", "z"])
    assert code == 0
    assert out.strip() == "A^3 + A^-3"


def test_graph_eval_custom_scheme(dg, capsys):
    code, out, _ = run(capsys, ["graph-eval", dg("G_b_vertex"),
                                "--scheme", "1,-1,0"])
    vas_code, vas_out, _ = run(capsys, ["graph-eval", dg("G_b_vertex"),
                                        "--scheme", "vassiliev"])
    assert code == vas_code == 0
    assert out == vas_out


def test_resolve_verb(dg, capsys):
    code, out, _ = run(capsys, ["resolve", dg("G_b_vertex")])
    assert code == 0
    assert out.startswith("terms: 2")
    assert "coefficient" in out and "node" in out


def test_vassiliev_verb(dg, capsys):
    code, out, _ = run(capsys, ["vassiliev", dg("gb_2vert"), "--order", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0 + 0*h + 48*h^2 + 0*h^3 + 320*h^4"
    assert lines[1] == "vanishing order: 2"


def test_vassiliev_none_order(dg, capsys):
    code, out, _ = run(capsys, ["vassiliev", dg("G_a_vertex")])
    assert code == 0
    assert out.strip().splitlines()[1] == "vanishing order: none"


def test_check_spinor(dg, capsys):
    code, out, _ = run(capsys, ["check", "spinor", dg("gb_2vert")])
    assert code == 0
    assert out.count("PASS") == 2 and "FAIL" not in out


def test_check_four_term(capsys):
    code, out, _ = run(capsys, ["check", "four-term"])
    assert code == 0
    assert out.count("PASS") == 3


def test_check_four_term_from_dir(tmp_path, capsys):
    quad = catalog.four_term_quadruple("clasp")
    for label, d in quad.items():
        (tmp_path / ("quad_%s.dg" % label)).write_text(serialize(d, label))
    code, out, _ = run(capsys, ["check", "four-term", str(tmp_path)])
    assert code == 0 and "PASS" in out


def test_check_fierz_and_projector(capsys):
    assert run(capsys, ["check", "fierz"])[0] == 0
    code, out, _ = run(capsys, ["check", "projector"])
    assert code == 0
    assert out.count("PASS") == 4


def test_check_reidemeister_on_file(dg, capsys):
    code, out, _ = run(capsys, ["check", "reidemeister", dg("trefoil+")])
    assert code == 0 and "PASS" in out


def test_corpus_verb_passes_and_is_deterministic(capsys):
    code1, out1, _ = run(capsys, ["corpus"])
    code2, out2, _ = run(capsys, ["corpus"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "corpus entries passed" in out1
    assert "FAIL" not in out1


def test_corpus_verb_output_is_stable_across_processes():
    cmd = [sys.executable, "-c",
           "from knotgraph.cli import main; raise SystemExit(main(['corpus']))"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_missing_file_exits_nonzero(capsys):
    code, _, err = run(capsys, ["eval", "/nonexistent/file.dg"])
    assert code == 1
    assert "error:" in err


def test_bad_scheme_exits_nonzero(dg, capsys):
    code, _, err = run(capsys, ["graph-eval", dg("G_b_vertex"),
                                "--scheme", "1,2"])
    assert code == 1
    assert "error:" in err


def test_vertex_diagram_rejected_by_eval(dg, capsys):
    code, _, err = run(capsys, ["eval", dg("G_b_vertex")])
    assert code == 1
    assert "error:" in err
