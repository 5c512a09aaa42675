"""Exact determinants of polynomial matrices by evaluation and interpolation.

The determinant of a matrix of bivariate polynomials is found by
evaluating the matrix on an integer grid, taking exact scalar
determinants there, and interpolating back.  Scalar determinants over the
integers use fraction-free (Bareiss) elimination; matrices whose entries
carry Fraction or cyclotomic coefficients fall back to exact field
elimination (cofactor expansion for very small sizes).  Interpolation is
iterated univariate Newton with exact rationals; when the inputs are
integral the result is asserted integral, never rounded.

The grid for a degree bound (d0, d1) is {0..d0} x {0..d1}, shifted by an
optional offset; the result is independent of the offset, which the test
suite exercises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivar import LM, BivarPoly, as_integer_poly
from .cyclotomic import CyclotomicNumber
from .graphs import Graph


def det_int_rows(rows: list[list[int]]) -> int:
    """Fraction-free elimination; consumes its argument."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            if rik:
                ri[k + 1:] = [(piv * a - rik * b) // prev
                              for a, b in zip(ri[k + 1:], rk[k + 1:])]
            elif prev != 1:
                ri[k + 1:] = [(piv * a) // prev for a in ri[k + 1:]]
            else:
                ri[k + 1:] = [piv * a for a in ri[k + 1:]]
        prev = piv
    return sign * rows[n - 1][n - 1]


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = 0
    for j in range(n):
        c = rows[0][j]
        if not c:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = c * _det_cofactor(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def det_ring_rows(rows):
    """Exact determinant over Fraction or cyclotomic entries.

    Small matrices go through division-free cofactor expansion; larger
    ones through ordinary elimination with exact division.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n <= 4:
        return _det_cofactor(rows)
    rows = [list(r) for r in rows]
    sign = 1
    det = 1
    for k in range(n):
        piv_row = None
        for i in range(k, n):
            if rows[i][k]:
                piv_row = i
                break
        if piv_row is None:
            return 0
        if piv_row != k:
            rows[k], rows[piv_row] = rows[piv_row], rows[k]
            sign = -sign
        piv = rows[k][k]
        det = det * piv
        for i in range(k + 1, n):
            if rows[i][k]:
                f = rows[i][k] / piv
                ri, rk = rows[i], rows[k]
                for j in range(k, n):
                    ri[j] = ri[j] - f * rk[j]
    return det if sign == 1 else -det


def newton_interpolate(xs: list[int], ys: list):
    """Coefficients, lowest first, of the polynomial through (xs[i], ys[i]).

    The nodes must be distinct integers.  Values may be ints (promoted to
    Fraction), Fractions, or cyclotomic numbers.
    """
    k = len(xs)
    table = [Fraction(y) if isinstance(y, int) else y for y in ys]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) * Fraction(1, xs[i] - xs[i - level])
    coeffs = [table[k - 1]]
    for i in range(k - 2, -1, -1):
        a = xs[i]
        nxt = [None] * (len(coeffs) + 1)
        nxt[0] = table[i] + (-a) * coeffs[0]
        for j in range(1, len(coeffs)):
            nxt[j] = coeffs[j - 1] + (-a) * coeffs[j]
        nxt[len(coeffs)] = coeffs[-1]
        coeffs = nxt
    return coeffs


def interpolate_determinant(evaluate, deg0: int, deg1: int, variables,
                            offset: int = 0, integer: bool = False) -> BivarPoly:
    """Reconstruct a bivariate polynomial from exact samples of evaluate.

    evaluate(x, y) must return the exact value at integer (x, y); deg0 and
    deg1 are degree bounds per variable.
    """
    xs0 = list(range(offset, offset + deg0 + 1))
    xs1 = list(range(offset, offset + deg1 + 1))
    per_row = []
    for y in xs1:
        vals = [evaluate(x, y) for x in xs0]
        per_row.append(newton_interpolate(xs0, vals))
    terms = {}
    for i in range(deg0 + 1):
        seq = [row[i] for row in per_row]
        for j, c in enumerate(newton_interpolate(xs1, seq)):
            if c:
                terms[(i, j)] = c
    poly = BivarPoly(terms, variables)
    if integer:
        poly = as_integer_poly(poly)
    return poly


def _entry_domain(entries) -> str:
    for row in entries:
        for e in row:
            for c in e.terms.values():
                if isinstance(c, CyclotomicNumber):
                    return "ring"
                if isinstance(c, Fraction) and c.denominator != 1:
                    return "ring"
                if not isinstance(c, (int, Fraction)):
                    return "ring"
    return "int"


def det_poly_matrix(entries, grid_offset: int = 0) -> BivarPoly:
    """Determinant of a square matrix of BivarPoly entries.

    Degree bounds come from row-wise maxima, so they are tight for the
    matrices built in this package (pencils, zeta cores).
    """
    n = len(entries)
    for row in entries:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    variables = entries[0][0].variables
    for row in entries:
        for e in row:
            if e.variables != variables:
                raise ValueError("mixed variable names in matrix entries")
    deg0 = sum(max(0, max((e.degree_in(0) for e in row), default=0))
               for row in entries)
    deg1 = sum(max(0, max((e.degree_in(1) for e in row), default=0))
               for row in entries)
    domain = _entry_domain(entries)

    if domain == "int":
        def evaluate(x, y):
            rows = [[e.evaluate(x, y) for e in row] for row in entries]
            return det_int_rows(rows)
        return interpolate_determinant(evaluate, deg0, deg1, variables,
                                       offset=grid_offset, integer=True)

    def evaluate(x, y):
        rows = [[e.evaluate(x, y) for e in row] for row in entries]
        return det_ring_rows(rows)
    return interpolate_determinant(evaluate, deg0, deg1, variables,
                                   offset=grid_offset, integer=False)


@dataclass(frozen=True)
class PencilMatrix:
    """A square matrix whose entries have degree at most one in each
    variable; the shape det_pencil consumes."""

    entries: tuple
    variables: tuple = LM

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise ValueError("empty pencil")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("pencil is not square")
            for e in row:
                if not isinstance(e, BivarPoly):
                    raise ValueError("pencil entries must be BivarPoly")
                if e.variables != self.variables:
                    raise ValueError("pencil entry variable mismatch")
                if e.degree_in(0) > 1 or e.degree_in(1) > 1:
                    raise ValueError(
                        "pencil entries must have degree <= 1 per variable")

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows, variables=LM) -> PencilMatrix:
        ents = tuple(tuple(r) for r in rows)
        return cls(ents, variables)

    @classmethod
    def from_graph(cls, graph: Graph, variables=LM) -> PencilMatrix:
        """The pencil x*I - (A - y*D) for the graph's adjacency A and
        degree matrix D."""
        a = graph.adjacency_matrix()
        deg = graph.degrees()
        n = graph.vertex_count
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(BivarPoly({(1, 0): 1, (0, 1): deg[i]}, variables))
                else:
                    row.append(BivarPoly({(0, 0): -a[i][j]}, variables))
            rows.append(tuple(row))
        return cls(tuple(rows), variables)


def det_pencil(pencil: PencilMatrix, grid_offset: int = 0) -> BivarPoly:
    return det_poly_matrix([list(r) for r in pencil.entries],
                           grid_offset=grid_offset)


def gcp_direct(graph: Graph, grid_offset: int = 0) -> BivarPoly:
    """det(x*I - (A - y*D)) as an exact integer polynomial.

    Equivalent to det_pencil(PencilMatrix.from_graph(graph)) but with the
    grid evaluation specialised to integer rows, which is what every
    brute-force oracle path in this package runs through.
    """
    a = graph.adjacency_matrix()
    deg = graph.degrees()
    n = graph.vertex_count
    neg = [[-x for x in row] for row in a]

    def evaluate(x, y):
        rows = [r[:] for r in neg]
        for i in range(n):
            rows[i][i] = x + y * deg[i]
        return det_int_rows(rows)

    return interpolate_determinant(evaluate, n, n, LM,
                                   offset=grid_offset, integer=True)
