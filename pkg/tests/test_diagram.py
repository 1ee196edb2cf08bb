"""Tests for the diagram model, codec and local surgery."""

import random

import pytest

from conftest import random_braid_link
from knotgraph import catalog
from knotgraph.diagram import (Diagram, DiagramError, disjoint_union, parse,
                               parse_diagram, replace_kind, serialize,
                               splice_node, vertex_ports)


def test_validate_accepts_all_catalog_diagrams():
    for name in catalog.NAMES:
        assert catalog.named_diagram(name).validate() == []


def test_validate_rejects_duplicate_port_use():
    d = Diagram.make({"n": "XPos"},
                     [(("n", 2), ("n", 1)), (("n", 2), ("n", 0))])
    assert any("duplicate port" in msg for msg in d.validate())


def test_validate_rejects_broken_orientation():
    # both ports of the 0-2 strand used as heads
    d = Diagram.make({"n": "XPos", "m": "XPos"},
                     [(("m", 2), ("n", 0)), (("m", 3), ("n", 2)),
                      (("n", 1), ("m", 0)), (("n", 3), ("m", 1))])
    assert any("orientation" in msg for msg in d.validate())


def test_validate_rejects_unknown_kind_and_bad_port():
    d = Diagram.make({"n": "Weird"}, [])
    assert any("unknown kind" in m for m in d.validate())
    d2 = Diagram.make({"n": "XPos"}, [(("n", 5), ("n", 0)),
                                      (("n", 2), ("n", 1)),
                                      (("n", 3), ("n", 4))])
    assert any("out of range" in m for m in d2.validate())


def test_component_counts():
    assert catalog.named_diagram("unknot").components() == 1
    assert catalog.named_diagram("two-circles").components() == 2
    assert catalog.named_diagram("trefoil+").components() == 1
    assert catalog.named_diagram("hopf+").components() == 2
    assert catalog.named_diagram("figure-eight").components() == 1


def test_writhe_values():
    assert catalog.named_diagram("trefoil+").writhe() == 3
    assert catalog.named_diagram("trefoil-").writhe() == -3
    assert catalog.named_diagram("figure-eight").writhe() == 0
    assert catalog.named_diagram("kink+").writhe() == 1
    assert catalog.named_diagram("kink-").writhe() == -1
    assert catalog.named_diagram("hopf+").writhe() == 2
    assert catalog.named_diagram("hopf-").writhe() == -2


def test_mirror_flips_writhe_and_is_involutive():
    for name in ("trefoil+", "figure-eight", "hopf-"):
        d = catalog.named_diagram(name)
        assert d.mirror().writhe() == -d.writhe()
        assert d.mirror().mirror() == d


def test_serialize_parse_roundtrip():
    for name in catalog.NAMES:
        d = catalog.named_diagram(name)
        got_name, got = parse(serialize(d, name))
        assert got_name == name
        assert got == d


def test_parse_reports_bad_lines():
    with pytest.raises(DiagramError):
        parse_diagram("node a XPos\nwhat is this\n")
    with pytest.raises(DiagramError):
        parse_diagram("arc a.0 -> b.1\n")          # undefined nodes
    with pytest.raises(DiagramError):
        parse_diagram("node a Quux\n")


def test_canonical_form_ignores_node_names():
    rng = random.Random(7)
    for _ in range(10):
        d = random_braid_link(rng)
        names = d.node_ids()
        rng.shuffle(names)
        rename = {n: "q%d" % i for i, n in enumerate(names)}
        renamed = Diagram.make(
            {rename[i]: k for i, k in d.nodes},
            [((rename[a], p), (rename[b], q)) for (a, p), (b, q) in d.arcs],
            d.free_loops)
        assert renamed.same_as(d)


def test_canonical_form_separates_distinct_diagrams():
    names = ("unknot", "kink+", "kink-", "hopf+", "trefoil+", "trefoil-",
             "figure-eight", "G_a_vertex", "G_b_vertex", "G_b_cvert")
    forms = {catalog.named_diagram(n).canonical_form() for n in names}
    assert len(forms) == len(names)


def test_trefoil_presentations_differ_as_diagrams():
    # same knot, different diagrams: canonical forms must not collide
    a = catalog.named_diagram("trefoil+")
    b = catalog.named_diagram("trefoil+_alt")
    assert not a.same_as(b)


def test_replace_kind():
    d = catalog.named_diagram("hopf+")
    g = replace_kind(d, "n0", "Vert")
    assert g.kind_of("n0") == "Vert"
    assert g.kind_of("n1") == "XPos"
    with pytest.raises(DiagramError):
        replace_kind(d, "zz", "Vert")


def test_splice_node_oriented_smoothing():
    # unfolding one crossing of the positive Hopf link merges the circles
    d = catalog.named_diagram("hopf+")
    p = vertex_ports(d, "n0")
    out = splice_node(d, "n0", {p["in_a"]: p["out_b"], p["in_b"]: p["out_a"]})
    assert out.validate() == []
    assert out.components() == 1


def test_splice_node_can_create_free_loops():
    d = catalog.named_diagram("kink+")
    p = vertex_ports(d, "n")
    out = splice_node(d, "n", {p["in_a"]: p["out_b"], p["in_b"]: p["out_a"]})
    assert out.nodes == ()
    assert out.components() == out.free_loops == 2


def test_splice_node_checks_port_cover():
    d = catalog.named_diagram("kink+")
    with pytest.raises(DiagramError):
        splice_node(d, "n", {0: 0})


def test_reverse_component_keeps_validity():
    d = catalog.named_diagram("hopf+")
    r = d.reverse_component(0)
    assert r.validate() == []
    assert r.components() == 2


def test_disjoint_union_renames_clashes():
    d = catalog.named_diagram("kink+")
    u = disjoint_union(d, d)
    assert u.validate() == []
    assert len(u.nodes) == 2
    assert u.components() == 2


def test_vertex_ports_roles():
    g = catalog.named_diagram("G_b_vertex")
    p = vertex_ports(g, "n0")
    assert sorted((p["in_a"], p["out_a"])) in ([0, 2],)
    assert sorted((p["in_b"], p["out_b"])) in ([1, 3],)
