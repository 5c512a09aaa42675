"""Exact two-variable characteristic polynomials of graphs and bundles.

The central object is the polynomial det(lambda*I - A + mu*D) of a
finite simple graph, computed exactly over the integers.  For graph
bundles with an abelian voltage and a Cayley-graph fiber the package
also computes it as a product over the group's characters, one modest
determinant per character, and certifies that the product matches the
brute-force answer.  Spanning tree counts and a two-variable zeta
reciprocal fall out of specialisations.
"""

from .bivar import BivarPoly
from .bundles import (CayleyFiber, ExplicitFiber, PermutationVoltage,
                      VoltageAssignment, build_bundle, cartesian_product)
from .characters import Character, all_characters, weighted_arc_matrix
from .closed_forms import (gcp_complete_bipartite, gcp_star_times_complete,
                           tree_count_star_times_complete)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .factor import (FactoredGcp, gcp_bundle_factored, gcp_cartesian,
                     gcp_covering, gcp_times_complete, gcp_weighted)
from .fileformat import (ParseError, format_graph, format_voltage, load_graph,
                         load_voltage, parse_graph, parse_voltage)
from .graphs import (Graph, complete, complete_bipartite, cycle, edgeless,
                     named_graph, path, star)
from .groups import AbelianGroup
from .pencil import PencilMatrix, det_pencil, gcp_direct
from .zeta import (ZetaReciprocal, bartholdi_direct, bartholdi_from_gcp,
                   complexity_gcp, complexity_kirchhoff, ihara_core_direct,
                   northshield_check, northshield_value)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "CayleyFiber",
    "Character",
    "CyclotomicNumber",
    "ExplicitFiber",
    "FactoredGcp",
    "Graph",
    "AbelianGroup",
    "ParseError",
    "PencilMatrix",
    "PermutationVoltage",
    "VoltageAssignment",
    "ZetaReciprocal",
    "all_characters",
    "bartholdi_direct",
    "bartholdi_from_gcp",
    "build_bundle",
    "cartesian_product",
    "complete",
    "complete_bipartite",
    "complexity_gcp",
    "complexity_kirchhoff",
    "cycle",
    "cyclotomic_polynomial",
    "det_pencil",
    "edgeless",
    "format_graph",
    "format_voltage",
    "gcp_bundle_factored",
    "gcp_cartesian",
    "gcp_complete_bipartite",
    "gcp_covering",
    "gcp_direct",
    "gcp_star_times_complete",
    "gcp_times_complete",
    "gcp_weighted",
    "ihara_core_direct",
    "load_graph",
    "load_voltage",
    "named_graph",
    "northshield_check",
    "northshield_value",
    "parse_graph",
    "parse_voltage",
    "path",
    "star",
    "tree_count_star_times_complete",
    "weighted_arc_matrix",
]
