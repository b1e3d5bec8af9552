"""Desk-scale laboratory for crossing numbers.

Exact solving with verifiable drawing certificates, class-closed graph
operations, drawing-level constructions (splitting, cloning, random
induced subsampling), and a minimum-crossing table harness with
inequality audits.
"""

from .classes import (ClassSpec, all_graphs, bipartite, contains,
                      intersection, kt_free, l_colorable, max_edges,
                      odd_girth_at_least, parse_class_spec)
from .constructions import (BlowupParams, SampleStats, blow_up,
                            chebyshev_bounds, exact_expectations,
                            sample_induced, split_to_max_degree)
from .enumeration import (are_isomorphic, canonical_key, count_graphs,
                          enumerate_graphs)
from .errors import (BudgetExceeded, CeilingExceeded, CertificateError,
                     ClassEmpty, CrosslabError, EmptyGrid, InputError,
                     InputTooLarge, InternalError, InvalidPlan,
                     InvalidProbability, ParseError, PreconditionFailed,
                     VertexNotFound)
from .graphs import (Graph, complete_bipartite, complete_graph, cycle_graph,
                     empty_graph, from_graph6, path_graph, petersen_graph,
                     to_graph6)
from .harness import (DEstimate, GammaSeries, KappaRecord, SandwichReport,
                      build_table, convexity_probe, crossing_lemma_audit,
                      d_estimate, gamma_series, kappa, sandwich_audit,
                      subadditivity_audit)
from .planarity import is_planar, planar_embedding
from .pst_ops import (SplitPlan, bipartite_subgraph, clone_vertex,
                      closure_check, disjoint_union, split_vertex)
from .solver import (DrawingCertificate, build_certificate, crossing_number,
                     crossing_number_lower_bound, verify_certificate)

__version__ = "0.1.0"

__all__ = [
    "BlowupParams", "BudgetExceeded", "CeilingExceeded", "CertificateError",
    "ClassEmpty", "ClassSpec", "CrosslabError", "DEstimate",
    "DrawingCertificate", "EmptyGrid", "GammaSeries", "Graph", "InputError",
    "InputTooLarge", "InternalError", "InvalidPlan", "InvalidProbability",
    "KappaRecord", "ParseError", "PreconditionFailed", "SampleStats",
    "SandwichReport", "SplitPlan", "VertexNotFound", "all_graphs",
    "are_isomorphic", "bipartite", "bipartite_subgraph", "blow_up",
    "build_certificate", "build_table", "canonical_key", "chebyshev_bounds",
    "clone_vertex", "closure_check", "complete_bipartite", "complete_graph",
    "contains", "convexity_probe", "count_graphs", "crossing_lemma_audit",
    "crossing_number", "crossing_number_lower_bound", "cycle_graph",
    "d_estimate", "disjoint_union", "empty_graph", "enumerate_graphs",
    "exact_expectations", "from_graph6", "gamma_series", "intersection",
    "is_planar", "kappa", "kt_free", "l_colorable", "max_edges",
    "odd_girth_at_least", "parse_class_spec", "path_graph", "petersen_graph",
    "planar_embedding", "sample_induced", "sandwich_audit",
    "split_to_max_degree", "split_vertex", "subadditivity_audit",
    "to_graph6", "verify_certificate",
]
