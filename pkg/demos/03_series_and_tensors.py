"""Series expansions, finite-type vanishing, and the tensor identities.

Substituting A = exp(h) turns the writhe-corrected graph invariant into
an exact power series in h; a graph with j rigid vertices kills every
coefficient below h^j.  The same algebra appears entrywise in small
matrix identities, checked here over exact complex rationals.
"""

from knotgraph import catalog
from knotgraph.spinnet import (TensorDiagram, antisymmetrizer, check_fierz,
                               check_projector, check_spinor_tensor_identity,
                               eval_tensor_diagram, symmetrizer)
from knotgraph.vassiliev import vanishing_order_check, vassiliev_series


def main():
    print("== series of links start at 1 ==")
    for name in ("unknot", "hopf+", "trefoil+", "figure-eight"):
        rep = vassiliev_series(catalog.named_diagram(name), 4)
        print("%-14s %s" % (name, rep.series.render()))

    print()
    print("== graphs with j vertices vanish below h^j ==")
    for name, j in (("G_b_vertex", 1), ("gb_2vert", 2), ("flower3", 3)):
        rep = vassiliev_series(catalog.named_diagram(name), 4)
        order = ("all zero" if rep.vanishing_order is None
                 else "first nonzero at h^%d" % rep.vanishing_order)
        print("%-12s (%d vertices): %s;  series %s"
              % (name, j, order, rep.series.render()))
    for j in (1, 2, 3):
        out = vanishing_order_check(j)
        print("systematic check j=%d: %d graphs, failures: %r"
              % (j, len(out["reports"]), out["failures"]))

    print()
    print("== closed tensor diagrams over a 2-dimensional index space ==")
    loop = TensorDiagram.make([("delta", "i", "i")])
    pair = TensorDiagram.make([("epsU", "a", "b"), ("epsL", "a", "b")])
    print("delta loop      =", eval_tensor_diagram(loop).render())
    print("epsilon pairing =", eval_tensor_diagram(pair).render())

    print()
    print("== matrix identities, entry by entry ==")
    fz = check_fierz()
    print("generator rearrangement ok: %s, coefficients %s"
          % (fz["ok"], fz["fierz_coefficients"]))
    print("strand identity ok:", check_spinor_tensor_identity()["ok"])
    for n in range(2, 5):
        rep = check_projector(n)
        print("projectors on %d strands: idempotent ok=%s, "
              "skew vanishes on dim 2: %s"
              % (n, rep["ok"], rep["skew_vanishes"]))
    print("skew-symmetrizer(3) as a tensor:",
          "zero" if antisymmetrizer(3).is_zero_tensor() else "nonzero")
    print("symmetrizer(2) =", symmetrizer(2).render())


if __name__ == "__main__":
    main()
