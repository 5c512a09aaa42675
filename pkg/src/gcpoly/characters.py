"""Characters of finite abelian groups, with exact cyclotomic values.

All characters of one group live in a single cyclotomic field: the one
whose conductor is the group exponent.  The character with index tuple
(a_1, ..., a_k) sends (g_1, ..., g_k) to zeta^(sum a_j g_j N/n_j), with
N the exponent and n_j the cyclic factor orders.  Characters are listed
in lexicographic index order, so the principal character always comes
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bundles import VoltageAssignment
from .cyclotomic import CyclotomicNumber
from .graphs import Graph
from .groups import AbelianGroup


@dataclass(frozen=True)
class Character:
    group: AbelianGroup
    index: tuple

    def __post_init__(self):
        self.group.check(self.index)

    @property
    def conductor(self) -> int:
        return self.group.exponent

    def is_principal(self) -> bool:
        return self.index == self.group.identity

    def value(self, g) -> CyclotomicNumber:
        g = self.group.check(g)
        n = self.conductor
        e = sum(a * x * (n // o)
                for a, x, o in zip(self.index, g, self.group.orders))
        return CyclotomicNumber.zeta(n, e % n)

    def sum_over(self, elements) -> CyclotomicNumber:
        acc = CyclotomicNumber.zero(self.conductor)
        for g in elements:
            acc = acc + self.value(g)
        return acc

    def conjugate(self) -> Character:
        return Character(self.group, self.group.neg(self.index))


def all_characters(group: AbelianGroup) -> list[Character]:
    return [Character(group, idx)
            for idx in product(*(range(n) for n in group.orders))]


def weighted_arc_matrix(graph: Graph, voltage: VoltageAssignment,
                        chi: Character) -> list[list[CyclotomicNumber]]:
    """Adjacency-shaped matrix with entry (u, v) the character value of
    the voltage on the arc u -> v; zero where there is no edge.

    Summing this over all characters of the group, divided by the group
    order, would project back onto the identity-voltage arcs; its defining
    property here is that entry (v, u) is the complex conjugate of entry
    (u, v)."""
    if voltage.group != chi.group:
        raise ValueError("voltage group and character group differ")
    n = graph.vertex_count
    zero = CyclotomicNumber.zero(chi.conductor)
    mat = [[zero] * n for _ in range(n)]
    for i, j in graph.edges:
        mat[i][j] = chi.value(voltage.on_arc(i, j))
        mat[j][i] = chi.value(voltage.on_arc(j, i))
    return mat
