"""Named diagrams used throughout the tests and the shipped corpus.

Port convention reminder: ports run 0,1,2,3 counterclockwise; the 0-2
strand passes over at an XPos crossing.  A useful compass reading is
0 = south, 1 = east, 2 = north, 3 = west.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .diagram import Diagram, DiagramError


def braid_closure(strands: int, word: Sequence[Tuple[int, int]]) -> Diagram:
    """Closure of a braid word on the given number of strands.

    Each letter is (position, sign): position i in 1..strands-1 crosses
    strands i and i+1, sign +1 for the positive generator.  Crossing
    nodes take the lower strands in at ports 0 (left) and 1 (right) and
    put them out at 3 (left) and 2 (right).
    """
    nodes: Dict[str, str] = {}
    arcs = []
    bottom_in: Dict[int, Tuple[str, int]] = {}
    cur: Dict[int, Tuple[str, int]] = {}
    for idx, (i, s) in enumerate(word):
        if not 1 <= i < strands:
            raise DiagramError("braid position %d out of range" % i)
        nid = "c%d" % idx
        nodes[nid] = "XPos" if s > 0 else "XNeg"
        for pos, inport in ((i, 0), (i + 1, 1)):
            if pos in cur:
                arcs.append((cur[pos], (nid, inport)))
            else:
                bottom_in[pos] = (nid, inport)
        cur[i] = (nid, 3)
        cur[i + 1] = (nid, 2)
    loops = 0
    for pos in range(1, strands + 1):
        if pos in cur:
            arcs.append((cur[pos], bottom_in[pos]))
        else:
            loops += 1
    return Diagram.make(nodes, arcs, loops)


def _kink(kind: str) -> Diagram:
    return Diagram.make({"n": kind}, [(("n", 2), ("n", 1)),
                                      (("n", 3), ("n", 0))])


def _hopf(kind0: str, kind1: str) -> Diagram:
    return Diagram.make(
        {"n0": kind0, "n1": kind1},
        [(("n0", 2), ("n1", 0)), (("n1", 2), ("n0", 0)),
         (("n0", 3), ("n1", 1)), (("n1", 3), ("n0", 1))])


def _petal_chain(count: int, kind: str = "Vert") -> Diagram:
    """A single loop visiting `count` vertices, each carrying a small
    petal (the one-vertex case is the composite loop with a
    self-intersection)."""
    nodes = {"v%d" % i: kind for i in range(count)}
    arcs = []
    for i in range(count):
        v = "v%d" % i
        w = "v%d" % ((i + 1) % count)
        arcs.append(((v, 2), (v, 1)))
        arcs.append(((v, 3), (w, 0)))
    return Diagram.make(nodes, arcs)


def _with_free_loops(d: Diagram, extra: int) -> Diagram:
    return Diagram.make(d.node_map(), d.arcs, d.free_loops + extra)


# --- triple-point quadruples -----------------------------------------------


def _triple_core(vertex_on: str, c_pos: str,
                 clasps: Sequence[Tuple[str, str]]) -> Diagram:
    """Two strands a and b meeting at a rigid vertex Z0, crossed by a
    third strand c that passes entirely below or above the vertex.

    c meets one of a, b at a rigid vertex and the other at a genuine
    crossing; with the vertex on a, c passes over b, and with the vertex
    on b it passes under a (the mixed choice produced by telescoping the
    crossing flips between the two slide routes).  Below, c visits the a
    leg then the b leg; above, the visiting order reverses, exactly as a
    strand slid over the vertex disk would.

    Each entry of clasps links the closures of two of the strands with a
    pair of positive crossings, breaking the below/above symmetry.
    """
    assert vertex_on in ("a", "b") and c_pos in ("below", "above")
    nodes = {"Z0": "Vert",
             "Na": "Vert" if vertex_on == "a" else "XPos",
             "Nb": "Vert" if vertex_on == "b" else "XNeg"}
    arcs: List[Tuple[Tuple[str, int], Tuple[str, int]]] = []
    ends: Dict[str, List[Tuple[str, int]]] = {}
    if c_pos == "below":
        arcs.append((("Na", 2), ("Z0", 0)))
        ends["a"] = [("Z0", 2), ("Na", 0)]
        arcs.append((("Nb", 2), ("Z0", 1)))
        ends["b"] = [("Z0", 3), ("Nb", 0)]
        arcs.append((("Na", 1), ("Nb", 3)))
        ends["c"] = [("Nb", 1), ("Na", 3)]
    else:
        arcs.append((("Z0", 2), ("Na", 0)))
        ends["a"] = [("Na", 2), ("Z0", 0)]
        arcs.append((("Z0", 3), ("Nb", 0)))
        ends["b"] = [("Nb", 2), ("Z0", 1)]
        arcs.append((("Nb", 1), ("Na", 3)))
        ends["c"] = [("Na", 1), ("Nb", 3)]
    for ci, (u, v) in enumerate(clasps):
        h1, h2 = "H%da" % ci, "H%db" % ci
        nodes[h1] = "XPos"
        nodes[h2] = "XPos"
        uo, ui = ends[u]
        vo, vi = ends[v]
        arcs += [(uo, (h1, 0)), ((h1, 2), (h2, 0)),
                 (vo, (h1, 1)), ((h1, 3), (h2, 1))]
        ends[u] = [(h2, 2), ui]
        ends[v] = [(h2, 3), vi]
    for s in ("a", "b", "c"):
        arcs.append((ends[s][0], ends[s][1]))
    return Diagram.make(nodes, arcs)


_CLOSURES = {
    "plain": (),
    "clasp": (("a", "c"), ("b", "c")),
    "clasp2": (("a", "b"), ("a", "c")),
}


def four_term_quadruple(closure: str = "clasp") -> Dict[str, Diagram]:
    """Four graphs differing only in how the third strand passes the
    central vertex; they satisfy P(N) - P(S) + P(E) - P(W) = 0."""
    if closure not in _CLOSURES:
        raise DiagramError("unknown closure %r" % closure)
    clasps = _CLOSURES[closure]
    return {
        "N": _triple_core("a", "above", clasps),
        "S": _triple_core("a", "below", clasps),
        "E": _triple_core("b", "above", clasps),
        "W": _triple_core("b", "below", clasps),
    }


NAMES = (
    "unknot", "two-circles", "kink+", "kink-", "hopf+", "hopf-",
    "trefoil+", "trefoil-", "trefoil+_alt", "figure-eight",
    "G_a_vertex", "G_a_composite", "G_b_vertex", "G_b_cvert",
    "case1_vertex", "case2_vertex",
    "ga_2vert", "gb_2vert", "flower3",
    "ft_N", "ft_S", "ft_E", "ft_W",
    "ft_plain_N", "ft_plain_S", "ft_plain_E", "ft_plain_W",
    "ft_clasp2_N", "ft_clasp2_S", "ft_clasp2_E", "ft_clasp2_W",
)


def named_diagram(name: str) -> Diagram:
    if name == "unknot":
        return Diagram.make({}, [], 1)
    if name == "two-circles":
        return Diagram.make({}, [], 2)
    if name == "kink+":
        return _kink("XPos")
    if name == "kink-":
        return _kink("XNeg")
    if name == "hopf+":
        return _hopf("XPos", "XPos")
    if name == "hopf-":
        return _hopf("XNeg", "XNeg")
    if name == "trefoil+":
        return braid_closure(2, [(1, 1)] * 3)
    if name == "trefoil-":
        return braid_closure(2, [(1, -1)] * 3)
    if name == "trefoil+_alt":
        # same knot presented on three strands
        return braid_closure(3, [(1, 1), (2, 1), (1, 1), (2, 1)])
    if name == "figure-eight":
        return braid_closure(3, [(1, 1), (2, -1), (1, 1), (2, -1)])
    if name in ("G_a_vertex", "case1_vertex"):
        return _petal_chain(1)
    if name == "G_a_composite":
        return _with_free_loops(_petal_chain(1), 1)
    if name in ("G_b_vertex", "case2_vertex"):
        return _hopf("Vert", "XPos")
    if name == "G_b_cvert":
        return _hopf("CVert", "XPos")
    if name == "ga_2vert":
        return _petal_chain(2)
    if name == "gb_2vert":
        return _hopf("Vert", "Vert")
    if name == "flower3":
        return _petal_chain(3)
    if name.startswith("ft_"):
        tag = name[3:]
        closure = "clasp"
        for cl in _CLOSURES:
            if tag.startswith(cl + "_"):
                closure = cl
                tag = tag[len(cl) + 1:]
                break
        quad = four_term_quadruple(closure)
        if tag in quad:
            return quad[tag]
    raise DiagramError("unknown diagram name %r" % name)
