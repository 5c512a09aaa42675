"""Closed-form polynomials and tree counts for two reference families.

Everything here is assembled from explicit products, so these serve as
independent cross-checks for the determinant and factorisation routes.
"""

from __future__ import annotations

from typing import NamedTuple

from .bivar import LM, BivarPoly


def _affine(l_coeff: int, m_coeff: int, const: int) -> BivarPoly:
    return BivarPoly({(1, 0): l_coeff, (0, 1): m_coeff, (0, 0): const}, LM)


def gcp_complete_bipartite(s: int, t: int) -> BivarPoly:
    """Characteristic polynomial of K_{s,t}:

        (x + t y)^(s-1) (x + s y)^(t-1) [ (x + s y)(x + t y) - s t ]
    """
    if s < 1 or t < 1:
        raise ValueError("both sides of K_{s,t} must be nonempty")
    a = _affine(1, t, 0)
    b = _affine(1, s, 0)
    return a ** (s - 1) * b ** (t - 1) * (a * b - s * t)


def gcp_star_times_complete(m: int, n: int) -> BivarPoly:
    """Characteristic polynomial of the product of the star K_{1,m} with
    the complete graph K_n, assembled from the closed form:

        [x + n y - (n-1)]^(m-1)
        { [x + n y - (n-1)] [x + (m+n-1) y - (n-1)] - m }
        [x + n y + 1]^((m-1)(n-1))
        { [x + n y + 1] [x + (m+n-1) y + 1] - m }^(n-1)
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 leaves and n >= 1 fiber vertices")
    a1 = _affine(1, n, -(n - 1))
    b1 = _affine(1, m + n - 1, -(n - 1))
    a2 = _affine(1, n, 1)
    b2 = _affine(1, m + n - 1, 1)
    return (a1 ** (m - 1) * (a1 * b1 - m)
            * a2 ** ((m - 1) * (n - 1)) * (a2 * b2 - m) ** (n - 1))


class StarTreeCount(NamedTuple):
    """Two competing closed forms for the spanning tree count of
    K_{1,m} x K_n.

    corrected: n^(n-2) (m+n+1)^(n-1) (n+1)^((m-1)(n-1)), the value that
    agrees with the Kirchhoff cofactor and with the mu-derivative of the
    product polynomial.

    quoted: the same expression with middle exponent n+1 instead of n-1.
    This variant circulates in print but overcounts whenever n >= 2
    (already at m=1, n=2 it gives 64 where the 4-cycle has 4 spanning
    trees); it is kept so the discrepancy stays pinned by a test.
    """

    corrected: int
    quoted: int


def tree_count_star_times_complete(m: int, n: int) -> StarTreeCount:
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 leaves and n >= 1 fiber vertices")
    base = (n + 1) ** ((m - 1) * (n - 1))
    if n == 1:
        # n^(n-2) = 1 for the single-vertex fiber; the product is a star
        corrected = base
        quoted = (m + n + 1) ** 2 * base
        return StarTreeCount(corrected, quoted)
    corrected = n ** (n - 2) * (m + n + 1) ** (n - 1) * base
    quoted = n ** (n - 2) * (m + n + 1) ** (n + 1) * base
    return StarTreeCount(corrected, quoted)
