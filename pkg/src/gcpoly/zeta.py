"""Bartholdi zeta reciprocals and spanning tree counts.

The reciprocal of the two-parameter (bump-counting) zeta function of a
graph is kept in factored shape

    (1 - (1-u)^2 t^2)^(eps - nu)  *  core(u, t)

with core = det[ I - A t + (1-u)(D - (1-u)I) t^2 ], nu the vertex count
and eps the edge count.  The exponent may be negative (forests), so the
prefactor stays symbolic.  Isolated vertices are handled by following the
determinant literally: an edgeless graph has core equal to the prefactor
base raised to nu, and the reduced reciprocal collapses to 1.

The same core also falls out of the two-variable characteristic
polynomial by the substitution

    core = t^nu * F(1/t - (1-u)^2 t, (1-u) t)

which is implemented with explicit Laurent bookkeeping; negative powers
of t must cancel exactly and this is asserted.  Spanning tree counts come
from the mu-derivative of F at (0, 1) divided by twice the edge count,
cross-checked against the Kirchhoff cofactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bivar import UT, BivarPoly
from .graphs import Graph
from .pencil import det_int_rows, det_poly_matrix, gcp_direct, newton_interpolate


def prefactor_base() -> BivarPoly:
    """1 - (1-u)^2 t^2 in the (u, t) variables."""
    return BivarPoly({(0, 0): 1, (0, 2): -1, (1, 2): 2, (2, 2): -1}, UT)


@dataclass(frozen=True)
class ZetaReciprocal:
    base: BivarPoly
    exponent: int
    core: BivarPoly

    def ihara_core(self) -> BivarPoly:
        """The core with u set to 0 (plain backtracking-free counting)."""
        return self.core.substitute(first=0)

    def evaluate(self, u0, t0):
        b = self.base.evaluate(u0, t0)
        c = self.core.evaluate(u0, t0)
        if self.exponent >= 0:
            return b ** self.exponent * c
        from fractions import Fraction
        return c * Fraction(1) / (b ** (-self.exponent))


def bartholdi_direct(graph: Graph) -> ZetaReciprocal:
    """Reciprocal zeta straight from the defining determinant."""
    n = graph.vertex_count
    a = graph.adjacency_matrix()
    deg = graph.degrees()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                # 1 + ((1-u) d - (1-u)^2) t^2
                d = deg[i]
                row.append(BivarPoly({(0, 0): 1, (0, 2): d - 1,
                                      (1, 2): 2 - d, (2, 2): -1}, UT))
            else:
                row.append(BivarPoly({(0, 1): -a[i][j]}, UT))
        rows.append(row)
    core = det_poly_matrix(rows)
    return ZetaReciprocal(prefactor_base(), graph.edge_count - n, core)


def ihara_core_direct(graph: Graph) -> BivarPoly:
    """det[ I - A t + (D - I) t^2 ] built with no u in sight.

    Returned in the (u, t) variables with u-degree 0, so it compares
    directly against ZetaReciprocal.ihara_core()."""
    n = graph.vertex_count
    a = graph.adjacency_matrix()
    deg = graph.degrees()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(BivarPoly({(0, 0): 1, (0, 2): deg[i] - 1}, UT))
            else:
                row.append(BivarPoly({(0, 1): -a[i][j]}, UT))
        rows.append(row)
    return det_poly_matrix(rows)


def bartholdi_from_gcp(graph: Graph, gcp: BivarPoly | None = None) -> ZetaReciprocal:
    """Reciprocal zeta recovered from the two-variable characteristic
    polynomial by substitution."""
    if gcp is None:
        gcp = gcp_direct(graph)
    nu = graph.vertex_count
    one_minus_u = BivarPoly({(0, 0): 1, (1, 0): -1}, UT)
    pw = {0: BivarPoly.constant(1, UT)}

    def one_minus_u_power(e):
        while e not in pw:
            top = max(pw)
            pw[top + 1] = pw[top] * one_minus_u
        return pw[e]

    terms: dict = {}
    for (i, j), c in gcp.terms.items():
        for k in range(i + 1):
            t_exp = nu + 2 * k - i + j
            if t_exp < 0:
                raise ArithmeticError(
                    "negative power of t survived the substitution")
            scale = c * comb(i, k) * (-1 if k % 2 else 1)
            for (ue, te), cc in one_minus_u_power(2 * k + j).terms.items():
                key = (ue, te + t_exp)
                s = terms.get(key, 0) + scale * cc
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
    core = BivarPoly(terms, UT)
    return ZetaReciprocal(prefactor_base(), graph.edge_count - nu, core)


def complexity_kirchhoff(graph: Graph) -> int:
    """Spanning tree count as a cofactor of the Laplacian."""
    n = graph.vertex_count
    if n == 1:
        return 1
    a = graph.adjacency_matrix()
    deg = graph.degrees()
    rows = [[deg[i] if i == j else -a[i][j] for j in range(1, n)]
            for i in range(1, n)]
    return det_int_rows(rows)


def complexity_gcp(graph: Graph, gcp: BivarPoly | None = None) -> int:
    """Spanning tree count from the mu-derivative of the characteristic
    polynomial at (0, 1).

    The derivative must be divisible by twice the edge count; if it is
    not, something upstream broke and this raises rather than rounding.
    Edgeless graphs are handled directly: one tree for a single vertex,
    none otherwise.
    """
    eps = graph.edge_count
    if eps == 0:
        return 1 if graph.vertex_count == 1 else 0
    if gcp is None:
        gcp = gcp_direct(graph)
    d = gcp.partial(1).evaluate(0, 1)
    q, r = divmod(d, 2 * eps)
    if r:
        raise ArithmeticError(
            f"mu-derivative {d} is not divisible by 2*edge_count {2 * eps}")
    return q


def northshield_value(graph: Graph) -> BivarPoly:
    """f(u) = det[ I - u A + u^2 (D - I) ] as a univariate polynomial,
    stored over the (u, t) variables with t-degree 0."""
    n = graph.vertex_count
    a = graph.adjacency_matrix()
    deg = graph.degrees()

    def evaluate(u0):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(1 + u0 * u0 * (deg[i] - 1))
                else:
                    row.append(-u0 * a[i][j])
            rows.append(row)
        return det_int_rows(rows)

    xs = list(range(2 * n + 1))
    coeffs = newton_interpolate(xs, [evaluate(x) for x in xs])
    terms = {}
    for e, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError("non-integer coefficient in f(u)")
        if c:
            terms[(e, 0)] = int(c)
    return BivarPoly(terms, UT)


def northshield_check(graph: Graph) -> tuple[int, bool]:
    """f'(1) against 2 (eps - nu) * tree_count, for connected graphs.

    Returns the derivative value and whether the identity holds.
    """
    if not graph.is_connected():
        raise ValueError("the derivative identity needs a connected graph")
    f = northshield_value(graph)
    value = f.partial(0).evaluate(1, 0)
    expected = 2 * (graph.edge_count - graph.vertex_count) \
        * complexity_kirchhoff(graph)
    return value, value == expected
