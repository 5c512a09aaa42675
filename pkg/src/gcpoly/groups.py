"""Finite abelian groups given as products of cyclic factors, plus the
small permutation helpers used by explicit fiber voltages."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm, prod


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{n1} x Z_{n2} x ... with elements stored as coordinate tuples.

    Element order is the lexicographic product order, so the identity is
    always element 0; everything downstream (fiber vertex numbering,
    character tables) relies on that ordering being stable.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise ValueError("at least one cyclic factor is required")
        if any(not isinstance(n, int) or n < 1 for n in self.orders):
            raise ValueError("cyclic factor orders must be positive integers")

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    @cached_property
    def _elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(product(*(range(n) for n in self.orders)))

    def elements(self) -> tuple[tuple[int, ...], ...]:
        return self._elements

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self._elements)}

    def element_index(self, g) -> int:
        return self._index[self.check(g)]

    def check(self, g) -> tuple[int, ...]:
        g = tuple(g)
        if len(g) != len(self.orders) or any(
                not (0 <= x < n) for x, n in zip(g, self.orders)):
            raise ValueError(f"{g!r} is not an element of {self}")
        return g

    def add(self, g, h) -> tuple[int, ...]:
        g, h = self.check(g), self.check(h)
        return tuple((x + y) % n for x, y, n in zip(g, h, self.orders))

    def neg(self, g) -> tuple[int, ...]:
        g = self.check(g)
        return tuple((-x) % n for x, n in zip(g, self.orders))

    def canonical_generator(self) -> tuple[int, ...]:
        """A fixed non-identity element: 1 in the first nontrivial factor.

        For the trivial group this is the identity.  It need not generate
        the whole group; it only has to be a deterministic choice.
        """
        g = list(self.identity)
        for i, n in enumerate(self.orders):
            if n > 1:
                g[i] = 1
                break
        return tuple(g)

    def random_element(self, rng) -> tuple[int, ...]:
        return tuple(rng.randrange(n) for n in self.orders)

    def format_element(self, g) -> str:
        return ",".join(str(x) for x in self.check(g))

    def parse_element(self, text: str) -> tuple[int, ...]:
        try:
            g = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse group element {text!r}") from None
        return self.check(g)

    def __str__(self):
        return " x ".join(f"Z{n}" for n in self.orders)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def check_perm(p, n: int) -> tuple[int, ...]:
    p = tuple(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"{p!r} is not a permutation of 0..{n - 1}")
    return p


def perm_inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_automorphism(p, graph) -> bool:
    """Does the permutation p preserve the edge set of graph?"""
    return all(graph.has_edge(p[u], p[v]) for u, v in graph.edges)
