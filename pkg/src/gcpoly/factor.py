"""Character-indexed factorisations of bundle characteristic polynomials.

For a base graph G with an abelian voltage assignment and a Cayley fiber
Cay(A, S), the two-variable characteristic polynomial of the bundle
splits into one factor per character chi of A:

    det( (x + |S|*y - chi(S)) I  -  W_chi  +  y * D(G) )

where W_chi is the character-weighted arc matrix.  The principal
character gives the base polynomial shifted by |S|*(y - 1); the empty
connecting set recovers coverings; the trivial voltage recovers the
Cartesian product.  Factors are listed in character order (principal
first); their product always assembles back to integer coefficients,
which is asserted, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivar import LM, BivarPoly
from .bundles import CayleyFiber, VoltageAssignment
from .characters import Character, all_characters, weighted_arc_matrix
from .cyclotomic import CyclotomicNumber
from .graphs import Graph
from .pencil import PencilMatrix, det_pencil


@dataclass(frozen=True)
class FactoredGcp:
    """One factor per character, plus their assembled integer product."""

    factors: tuple
    product: BivarPoly
    conductor: int

    def __iter__(self):
        return iter(self.factors)


def _coefficient_to_int(c):
    if isinstance(c, CyclotomicNumber):
        c = c.rational_value()
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {c} in product")
        return int(c)
    if isinstance(c, int):
        return c
    raise ArithmeticError(f"unexpected coefficient type {type(c).__name__}")


def assemble_product(factors, variables=LM) -> BivarPoly:
    """Multiply factors and certify the result has integer coefficients."""
    acc = BivarPoly.constant(1, variables)
    for f in factors:
        acc = acc * f
    try:
        return acc.map_coefficients(_coefficient_to_int)
    except ValueError as exc:
        raise ArithmeticError(
            f"factor product is not rational: {exc}") from exc


def gcp_weighted(graph: Graph, voltage: VoltageAssignment, chi: Character,
                 mu_shift: int = 0, const_shift=0) -> BivarPoly:
    """det( (x + mu_shift*y + const_shift) I - W_chi + y * D(G) ).

    The lambda-shift is folded into the pencil diagonal before the
    determinant is taken, so the entries stay degree <= 1 per variable.
    """
    w = weighted_arc_matrix(graph, voltage, chi)
    deg = graph.degrees()
    n = graph.vertex_count
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(BivarPoly(
                    {(1, 0): 1, (0, 1): deg[i] + mu_shift,
                     (0, 0): const_shift}, LM))
            else:
                row.append(BivarPoly({(0, 0): -w[i][j]}, LM))
        rows.append(tuple(row))
    return det_pencil(PencilMatrix(tuple(rows), LM))


def gcp_bundle_factored(graph: Graph, fiber: CayleyFiber,
                        voltage: VoltageAssignment) -> FactoredGcp:
    """Factorised polynomial of the bundle of graph and Cayley fiber."""
    if voltage.group != fiber.group:
        raise ValueError("voltage group and fiber group differ")
    r = fiber.degree
    chars = all_characters(fiber.group)
    factors = []
    for chi in chars:
        shift = -chi.sum_over(fiber.connecting)
        factors.append(gcp_weighted(graph, voltage, chi,
                                    mu_shift=r, const_shift=shift))
    product = assemble_product(factors)
    return FactoredGcp(tuple(factors), product, fiber.group.exponent)


def gcp_covering(graph: Graph, voltage: VoltageAssignment) -> FactoredGcp:
    """Factorised polynomial of the abelian covering given by the voltage."""
    return gcp_bundle_factored(graph, CayleyFiber.empty(voltage.group), voltage)


def gcp_times_complete(graph: Graph, voltage: VoltageAssignment) -> FactoredGcp:
    """Bundle with the complete graph on the voltage group as fiber.

    Every non-principal character sums to -1 over the connecting set, so
    the non-principal factors all use the shift x + (n-1)*y + 1."""
    if voltage.group.order < 2:
        raise ValueError("the complete fiber needs a group of order >= 2")
    return gcp_bundle_factored(graph, CayleyFiber.complete(voltage.group),
                               voltage)


def gcp_cartesian(graph: Graph, fiber: CayleyFiber) -> FactoredGcp:
    """Cartesian product as the trivial-voltage bundle.

    Each factor is the base polynomial with x shifted by r*y - e for a
    fiber eigenvalue e = chi(S); the pencil route below and the direct
    substitution into gcp_direct(graph) agree, which the tests check.
    """
    return gcp_bundle_factored(
        graph, fiber, VoltageAssignment.trivial(graph, fiber.group))
