"""Graph invariants by vertex resolution.

A rigid vertex is replaced by a weighted combination of a positive
crossing, a negative crossing, and the oriented smoothing (the unfold).
Evaluating the resulting formal sum of link diagrams extends the bracket
to graphs; different weight triples give the Vassiliev extension, the
plain Casimir extension, and the marked Casimir extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import catalog
from .bracket import p_eval, z_eval
from .diagram import (Diagram, DiagramError, path_to_reentry, replace_kind,
                      reverse_arcs, splice_node, vertex_ports)
from .ring import (A, A_INV, ONE, LaurentPoly, RationalFunc, RF_ONE, RF_ZERO,
                   rf)


@dataclass(frozen=True)
class ResolutionScheme:
    a: RationalFunc   # weight of the positive-crossing replacement
    b: RationalFunc   # weight of the negative-crossing replacement
    c: RationalFunc   # weight of the unfold replacement


VASSILIEV = ResolutionScheme(RF_ONE, RationalFunc.const(-1), RF_ZERO)

_APA = A + A_INV          # A + A^-1
_AMA = A - A_INV          # A - A^-1
CASIMIR_PLAIN = ResolutionScheme(rf(ONE, _APA), rf(ONE, _APA), RF_ZERO)
CASIMIR_MARKED = ResolutionScheme(rf(ONE, _AMA.scale(4)),
                                  rf(-ONE, _AMA.scale(4)), RF_ZERO)


class FormalSum:
    """Finite linear combination of diagrams with rational-function
    coefficients; equal diagrams (up to renumbering) are merged."""

    def __init__(self, terms=()):
        self._terms: Dict[str, Tuple[RationalFunc, Diagram]] = {}
        for coeff, d in terms:
            self.add(coeff, d)

    def add(self, coeff: RationalFunc, d: Diagram) -> None:
        key = d.canonical_form()
        if key in self._terms:
            old, _ = self._terms[key]
            coeff = old + coeff
        if coeff.is_zero():
            self._terms.pop(key, None)
        else:
            self._terms[key] = (coeff, d)

    def terms(self) -> List[Tuple[RationalFunc, Diagram]]:
        return [self._terms[k] for k in sorted(self._terms)]

    def __len__(self) -> int:
        return len(self._terms)

    def same_as(self, other: "FormalSum") -> bool:
        if set(self._terms) != set(other._terms):
            return False
        return all(self._terms[k][0] == other._terms[k][0]
                   for k in self._terms)

    def evaluate(self, value_fn) -> RationalFunc:
        total = RF_ZERO
        for coeff, d in self.terms():
            total = total + coeff * RationalFunc.from_poly(value_fn(d))
        return total


# --- single-vertex surgeries ------------------------------------------------


def vertex_to_crossing(g: Diagram, v: str, sign: int) -> Diagram:
    """Replace a vertex by the crossing of the given sign (the local
    strands keep their roles; only the over/under choice is made)."""
    ports = vertex_ports(g, v)
    base = 1 if (ports["in_a"], ports["in_b"]) in ((0, 1), (2, 3)) else -1
    kind = "XPos" if sign == base else "XNeg"
    return replace_kind(g, v, kind)


def vertex_unfold(g: Diagram, v: str) -> Diagram:
    """Replace a vertex by the oriented smoothing: each incoming strand
    continues along the other strand's outgoing port."""
    p = vertex_ports(g, v)
    return splice_node(g, v, {p["in_a"]: p["out_b"], p["in_b"]: p["out_a"]})


def vertex_case(g: Diagram, v: str) -> int:
    """1 if both strands through the vertex lie on one closed loop
    (a self-intersection), 2 if they lie on two different loops."""
    p = vertex_ports(g, v)
    _, reentry = path_to_reentry(g, v, p["out_b"])
    return 1 if reentry == p["in_a"] else 2

def vertex_reversed_unfold(g: Diagram, v: str) -> Diagram:
    """The other unfolding: reverse the strand piece leaving the vertex's
    1-3 strand until it re-enters the vertex, then smooth.  For a
    self-intersection this reverses a sub-arc of the loop; for two loops
    it reverses the whole second loop."""
    p = vertex_ports(g, v)
    path, reentry = path_to_reentry(g, v, p["out_b"])
    if reentry not in (p["in_a"], p["in_b"]):
        raise DiagramError("strand from vertex %s does not re-enter cleanly" % v)
    h = reverse_arcs(g, path)
    other_in = p["in_b"] if reentry == p["in_a"] else p["in_a"]
    return splice_node(h, v, {other_in: reentry, p["out_b"]: p["out_a"]})


# --- resolution and evaluation ----------------------------------------------


def resolve_vertices(g: Diagram, s: ResolutionScheme) -> FormalSum:
    g.require_valid()
    if any(k == "CVert" for _, k in g.nodes):
        raise DiagramError(
            "marked vertices present; use the marked evaluation instead")
    out = FormalSum()
    _expand(g, RF_ONE, s, out)
    return out


def _expand(g: Diagram, coeff: RationalFunc, s: ResolutionScheme,
            out: FormalSum) -> None:
    vs = g.vertices()
    if not vs:
        out.add(coeff, g)
        return
    v = vs[0]
    kind = g.kind_of(v)
    if kind == "Vert":
        a, b, c = s.a, s.b, s.c
    else:
        a, b, c = (CASIMIR_MARKED.a, CASIMIR_MARKED.b, CASIMIR_MARKED.c)
    if not a.is_zero():
        _expand(vertex_to_crossing(g, v, +1), coeff * a, s, out)
    if not b.is_zero():
        _expand(vertex_to_crossing(g, v, -1), coeff * b, s, out)
    if not c.is_zero():
        _expand(vertex_unfold(g, v), coeff * c, s, out)


def _resolve_mixed(g: Diagram, plain: ResolutionScheme) -> FormalSum:
    out = FormalSum()
    _expand(g, RF_ONE, plain, out)
    return out


def eval_graph(g: Diagram, s: ResolutionScheme = VASSILIEV,
               level: str = "p") -> RationalFunc:
    """Sum of coeff * bracket over the full resolution.  Level 'p' uses
    the writhe-normalised bracket of each resolved diagram (the move
    invariant); level 'z' uses the raw bracket."""
    fn = p_eval if level == "p" else z_eval
    return resolve_vertices(g, s).evaluate(fn)


def eval_with_casimir_marks(g: Diagram, normalized: bool = False) -> RationalFunc:
    """Evaluate a graph whose vertices may carry the mark: plain vertices
    resolve with weights (1, 1, 0)/(A + A^-1), marked ones with
    (1, -1, 0)/(4(A - A^-1)).  Plain result is at bracket (Z) level; the
    normalized flag divides by A^(3*writhe) of the input graph."""
    g.require_valid()
    total = _resolve_mixed(g, CASIMIR_PLAIN).evaluate(z_eval)
    if normalized:
        total = total * rf(LaurentPoly.monomial(-3 * g.writhe()))
    return total


# --- identity checks --------------------------------------------------------


def check_spinor(g: Diagram, vertex: Optional[str] = None) -> dict:
    """Trace-identity check at one vertex: the graph value equals the
    unfold value plus (two loops) or minus (self-intersection) the
    reversed-unfold value.  All values at bracket (Z) level with any
    remaining vertices resolved plainly."""
    g.require_valid()
    vs = [v for v in g.vertices() if g.kind_of(v) == "Vert"]
    if vertex is None:
        if not vs:
            raise DiagramError("no plain vertex to check")
        vertex = vs[0]
    case = vertex_case(g, vertex)
    val_g = eval_with_casimir_marks(g)
    val_u = eval_with_casimir_marks(vertex_unfold(g, vertex))
    val_r = eval_with_casimir_marks(vertex_reversed_unfold(g, vertex))
    rhs = val_u - val_r if case == 1 else val_u + val_r
    return {
        "vertex": vertex,
        "case": case,
        "graph": val_g,
        "unfold": val_u,
        "reversed_unfold": val_r,
        "residual": val_g - rhs,
    }


# constants of the vertex decomposition
_X = LaurentPoly.from_dict({2: Fraction(1), -2: Fraction(1)})     # A^2 + A^-2
_Y = LaurentPoly.from_dict({2: Fraction(1), -2: Fraction(-1)})    # A^2 - A^-2
C1 = rf((_Y * (_X + ONE)).scale(Fraction(-1, 2)))
C2 = rf((_Y * (_X - ONE)).scale(2))


def casimir_decompose(g: Diagram) -> dict:
    """For a one-vertex graph, compare the Vassiliev-scheme value with
    its expression through the plain and marked evaluations, and check
    that the crossing values are recovered from the two evaluations."""
    g.require_valid()
    vs = g.vertices()
    if len(vs) != 1 or g.kind_of(vs[0]) != "Vert":
        raise DiagramError("expected exactly one plain vertex")
    v = vs[0]
    lhs = eval_graph(g, VASSILIEV, level="p")
    f_plain = eval_with_casimir_marks(g)
    f_marked = eval_with_casimir_marks(replace_kind(g, v, "CVert"))
    x = rf(_X)
    y = rf(_Y)
    alpha_w = rf(LaurentPoly.monomial(-3 * g.writhe()))
    bracket = f_marked.scale(2) - (x + RF_ONE) / (x - RF_ONE) * f_plain.scale(Fraction(1, 2))
    rhs = alpha_w * (x - RF_ONE) * y * bracket
    # recover the crossing brackets from the two evaluations
    z_pos = z_eval(vertex_to_crossing(g, v, +1))
    z_neg = z_eval(vertex_to_crossing(g, v, -1))
    apa = rf(_APA)
    ama = rf(_AMA)
    rec_pos = apa.scale(Fraction(1, 2)) * f_plain + ama.scale(2) * f_marked
    rec_neg = apa.scale(Fraction(1, 2)) * f_plain - ama.scale(2) * f_marked
    return {
        "vertex": v,
        "lhs": lhs,
        "rhs": rhs,
        "difference": lhs - rhs,
        "C1": C1,
        "C2": C2,
        "plain": f_plain,
        "marked": f_marked,
        "pos_residual": rec_pos - RationalFunc.from_poly(z_pos),
        "neg_residual": rec_neg - RationalFunc.from_poly(z_neg),
    }


def check_four_term(n: Diagram, s: Diagram, e: Diagram, w: Diagram,
                    scheme: ResolutionScheme = VASSILIEV) -> RationalFunc:
    """P(N) - P(S) + P(E) - P(W); zero for matched quadruples."""
    return (eval_graph(n, scheme) - eval_graph(s, scheme)
            + eval_graph(e, scheme) - eval_graph(w, scheme))


def six_valent_eval(quad: Dict[str, Diagram],
                    scheme: ResolutionScheme = VASSILIEV) -> dict:
    """Invariant of a triple point from its four two-vertex resolutions;
    the two routes must agree (that equality is the four-term relation)."""
    for k in ("N", "S", "E", "W"):
        if k not in quad:
            raise DiagramError("quadruple is missing diagram %r" % k)
    route1 = eval_graph(quad["N"], scheme) - eval_graph(quad["S"], scheme)
    route2 = eval_graph(quad["W"], scheme) - eval_graph(quad["E"], scheme)
    return {
        "route1": route1,
        "route2": route2,
        "residual": route1 - route2,
        "value": route1,
    }


def derive_prop31() -> Tuple[RationalFunc, RationalFunc]:
    """Solve for the two resolution coefficients from the two reference
    graphs: A*Z(+) + A^-1*Z(-) = x*Z(vertex) + y*Z(unfold) with
    x = a2 - a1/4 and y = a1/2."""
    rows = []
    for name in ("G_a_vertex", "G_b_vertex"):
        g = catalog.named_diagram(name)
        v = g.vertices()[0]
        zp = RationalFunc.from_poly(z_eval(vertex_to_crossing(g, v, +1)))
        zn = RationalFunc.from_poly(z_eval(vertex_to_crossing(g, v, -1)))
        zv = eval_with_casimir_marks(g)
        zu = RationalFunc.from_poly(z_eval(vertex_unfold(g, v)))
        lhs = rf(A) * zp + rf(A_INV) * zn
        rows.append((zv, zu, lhs))
    (m11, m12, r1), (m21, m22, r2) = rows
    det = m11 * m22 - m12 * m21
    if det.is_zero():
        raise DiagramError("reference system is singular")
    x = (r1 * m22 - r2 * m12) / det
    y = (m11 * r2 - m21 * r1) / det
    a1 = y.scale(2)
    a2 = x + y.scale(Fraction(1, 2))
    return a1, a2
