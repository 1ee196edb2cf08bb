"""Exact invariants of knot, link and rigid-vertex graph diagrams.

The package computes the bracket state sum and its writhe-corrected
form over exact Laurent polynomials, evaluates 4-valent rigid-vertex
graphs under configurable vertex resolution schemes, expands the result
as an exponential-parameter series whose truncations are finite-type
invariants, and mechanically verifies the algebraic identities relating
these constructions (skein and curl relations, vertex unfolding, the
generator-insertion identity, the four-term relation, and the matrix
identities behind them).
"""

from .bracket import bracket_naive, max_crossings, p_eval, z_eval
from .corpus import (CorpusEntry, EntryResult, corpus_diagrams,
                     load_manifest, run_corpus)
from .diagram import Diagram, DiagramError, parse_diagram, serialize
from .graphinv import (CASIMIR_MARKED, CASIMIR_PLAIN, VASSILIEV,
                       FormalSum, ResolutionScheme, casimir_decompose,
                       check_four_term, check_spinor, derive_prop31,
                       eval_graph, eval_with_casimir_marks,
                       resolve_vertices, six_valent_eval,
                       vertex_to_crossing, vertex_unfold)
from .moves import MoveError, MoveSpec, applicable_moves, apply_move
from .ring import (LOOP, LaurentPoly, RationalFunc, RingError, Series,
                   parse_poly, rf, series_at_exp)
from .spinnet import (GaussianRational, PermElement, SpinNetError,
                      TensorDiagram, antisymmetrizer, check_fierz,
                      check_projector, check_spinor_tensor_identity,
                      eval_tensor_diagram, parse_tensor_diagram,
                      symmetrizer)
from .vassiliev import VassilievReport, vanishing_order_check, vassiliev_series

__version__ = "0.1.0"

__all__ = [
    "bracket_naive", "max_crossings", "p_eval", "z_eval",
    "CorpusEntry", "EntryResult", "corpus_diagrams", "load_manifest",
    "run_corpus",
    "Diagram", "DiagramError", "parse_diagram", "serialize",
    "CASIMIR_MARKED", "CASIMIR_PLAIN", "VASSILIEV", "FormalSum",
    "ResolutionScheme", "casimir_decompose", "check_four_term",
    "check_spinor", "derive_prop31", "eval_graph",
    "eval_with_casimir_marks", "resolve_vertices", "six_valent_eval",
    "vertex_to_crossing", "vertex_unfold",
    "MoveError", "MoveSpec", "applicable_moves", "apply_move",
    "LOOP", "LaurentPoly", "RationalFunc", "RingError", "Series",
    "parse_poly", "rf", "series_at_exp",
    "GaussianRational", "PermElement", "SpinNetError", "TensorDiagram",
    "antisymmetrizer", "check_fierz", "check_projector",
    "check_spinor_tensor_identity", "eval_tensor_diagram",
    "parse_tensor_diagram", "symmetrizer",
    "VassilievReport", "vanishing_order_check", "vassiliev_series",
]
