"""A first tour of the exact bracket engine.

Builds a few small diagrams, evaluates the framed value Z and the
writhe-corrected value P, and shows the defining local relations holding
with exact Laurent-polynomial arithmetic.
"""

from knotgraph import catalog
from knotgraph.bracket import p_eval, z_eval
from knotgraph.diagram import Diagram, replace_kind, serialize
from knotgraph.graphinv import vertex_to_crossing, vertex_unfold
from knotgraph.ring import DELTA_POS, parse_poly


def main():
    print("== values of the standard diagrams ==")
    for name in ("unknot", "kink+", "kink-", "hopf+", "trefoil+",
                 "trefoil-", "figure-eight"):
        d = catalog.named_diagram(name)
        print("%-14s Z = %-36s P = %s"
              % (name, z_eval(d).render(), p_eval(d).render()))

    print()
    print("== the writhe correction removes curls ==")
    from knotgraph.moves import r1_plus
    d = catalog.named_diagram("trefoil+")
    kinked = r1_plus(d, d.arcs[0], "+a")
    print("Z changes:  %s  ->  %s" % (z_eval(d), z_eval(kinked)))
    print("P does not: %s  ==  %s" % (p_eval(d), p_eval(kinked)))

    print()
    print("== same knot, different presentations ==")
    a = catalog.named_diagram("trefoil+")
    b = catalog.named_diagram("trefoil+_alt")
    print("2-strand closure: P =", p_eval(a).render())
    print("3-strand closure: P =", p_eval(b).render())

    print()
    print("== an extra circle multiplies by the loop value ==")
    d = catalog.named_diagram("hopf+")
    plus = Diagram.make(d.node_map(), d.arcs, d.free_loops + 1)
    print("Z(hopf+)          =", z_eval(d).render())
    print("Z(hopf+ o circle) =", z_eval(plus).render())
    print("loop value        =", DELTA_POS.render())

    print()
    print("== crossing replacement at one site ==")
    g = replace_kind(d, d.crossings()[0], "Vert")
    for label, h in (("positive", vertex_to_crossing(g, "n0", +1)),
                     ("negative", vertex_to_crossing(g, "n0", -1)),
                     ("smoothed", vertex_unfold(g, "n0"))):
        print("%-8s Z = %s" % (label, z_eval(h).render()))

    print()
    print("== the diagram text format ==")
    print(serialize(catalog.named_diagram("hopf+"), "hopf+"), end="")


if __name__ == "__main__":
    main()
