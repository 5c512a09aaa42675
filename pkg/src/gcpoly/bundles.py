"""Voltage assignments, fiber descriptions, and bundle construction.

A voltage assignment stores one value per canonical arc (low vertex ->
high vertex) of the base graph; the value on the reversed arc is derived
as the inverse, never stored.  Bundles are built edge by edge from the
incidence rule: a base edge {u, w} with voltage g lifts to edges joining
(u, v) to (w, g.v) for every fiber vertex v, and every fiber edge is
copied over each base vertex.  The vertex (u_i, v_k) of a bundle gets
index k * base_vertex_count + i, so adjacency matrices of bundles line
up blockwise with the fiber-indexed Kronecker expansion.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .graphs import Graph
from .groups import (AbelianGroup, check_perm, identity_perm, is_automorphism,
                     perm_inverse)


def _check_arc_cover(graph: Graph, values: dict) -> None:
    want = set(graph.edges)
    got = set(values)
    for a in got:
        i, j = a
        if not (0 <= i < j):
            raise ValueError(f"voltage arc {a!r} is not in canonical order")
    if got != want:
        missing = sorted(want - got)
        extra = sorted(got - want)
        parts = []
        if missing:
            parts.append(f"missing arcs {missing}")
        if extra:
            parts.append(f"arcs not in the graph {extra}")
        raise ValueError("voltage does not match the base edge set: "
                         + "; ".join(parts))


@dataclass(frozen=True, eq=False)
class VoltageAssignment:
    """Voltages in a finite abelian group, one per canonical arc."""

    base: Graph
    group: AbelianGroup
    values: dict

    def __post_init__(self):
        _check_arc_cover(self.base, self.values)
        for a, g in self.values.items():
            self.group.check(g)

    @classmethod
    def from_values(cls, base: Graph, group: AbelianGroup, mapping) -> VoltageAssignment:
        return cls(base, group, {a: tuple(g) for a, g in dict(mapping).items()})

    @classmethod
    def trivial(cls, base: Graph, group: AbelianGroup) -> VoltageAssignment:
        e = group.identity
        return cls(base, group, {a: e for a in base.edges})

    @classmethod
    def generator(cls, base: Graph, group: AbelianGroup) -> VoltageAssignment:
        """The group's canonical generator on every canonical arc."""
        g = group.canonical_generator()
        return cls(base, group, {a: g for a in base.edges})

    @classmethod
    def seeded_random(cls, base: Graph, group: AbelianGroup, seed: int) -> VoltageAssignment:
        rng = random.Random(seed)
        return cls(base, group,
                   {a: group.random_element(rng) for a in sorted(base.edges)})

    def on_arc(self, u: int, v: int):
        """Voltage on the directed arc u -> v."""
        if u < v:
            return self.values[(u, v)]
        return self.group.neg(self.values[(v, u)])

    def arcs(self):
        """All 2*edge_count directed arcs with their voltages."""
        for (i, j), g in sorted(self.values.items()):
            yield (i, j, g)
            yield (j, i, self.group.neg(g))

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(("group " + " ".join(map(str, self.group.orders))).encode())
        for (i, j), g in sorted(self.values.items()):
            h.update(f"\nw {i} {j} {self.group.format_element(g)}".encode())
        return h.hexdigest()[:12]


@dataclass(frozen=True, eq=False)
class PermutationVoltage:
    """Explicit permutation voltages for an arbitrary fiber graph.

    Every permutation must be an automorphism of the fiber; violations
    are rejected at construction.
    """

    base: Graph
    fiber: Graph
    values: dict

    def __post_init__(self):
        _check_arc_cover(self.base, self.values)
        n = self.fiber.vertex_count
        for a, p in self.values.items():
            p = check_perm(p, n)
            if not is_automorphism(p, self.fiber):
                raise ValueError(
                    f"voltage on arc {a!r} is not a fiber automorphism: {p!r}")

    @classmethod
    def from_values(cls, base: Graph, fiber: Graph, mapping) -> PermutationVoltage:
        return cls(base, fiber, {a: tuple(p) for a, p in dict(mapping).items()})

    @classmethod
    def trivial(cls, base: Graph, fiber: Graph) -> PermutationVoltage:
        e = identity_perm(fiber.vertex_count)
        return cls(base, fiber, {a: e for a in base.edges})

    def on_arc(self, u: int, v: int):
        if u < v:
            return self.values[(u, v)]
        return perm_inverse(self.values[(v, u)])

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(f"perm {self.fiber.vertex_count}".encode())
        for (i, j), p in sorted(self.values.items()):
            h.update(f"\nw {i} {j} {' '.join(map(str, p))}".encode())
        return h.hexdigest()[:12]


@dataclass(frozen=True)
class CayleyFiber:
    """The Cayley graph of a finite abelian group over a connecting set.

    The connecting set must be inverse-closed and must not contain the
    identity.  An empty set gives the edgeless fiber, i.e. the covering
    case.  Fiber vertex k is the k-th group element in product order.
    """

    group: AbelianGroup
    connecting: frozenset

    def __post_init__(self):
        for s in self.connecting:
            self.group.check(s)
            if s == self.group.identity:
                raise ValueError("the connecting set may not contain the identity")
            if self.group.neg(s) not in self.connecting:
                raise ValueError(
                    f"connecting set is not inverse-closed: missing {self.group.neg(s)}")

    @classmethod
    def from_elements(cls, group: AbelianGroup, elements) -> CayleyFiber:
        return cls(group, frozenset(tuple(s) for s in elements))

    @classmethod
    def empty(cls, group: AbelianGroup) -> CayleyFiber:
        return cls(group, frozenset())

    @classmethod
    def complete(cls, group: AbelianGroup) -> CayleyFiber:
        return cls(group, frozenset(g for g in group.elements()
                                    if g != group.identity))

    @property
    def degree(self) -> int:
        return len(self.connecting)

    def graph(self) -> Graph:
        els = self.group.elements()
        idx = {g: k for k, g in enumerate(els)}
        edges = set()
        for k, g in enumerate(els):
            for s in self.connecting:
                other = idx[self.group.add(g, s)]
                if other != k:
                    edges.add((k, other) if k < other else (other, k))
        return Graph(len(els), frozenset(edges))

    def describe(self) -> str:
        els = ";".join(self.group.format_element(s)
                       for s in sorted(self.connecting))
        return f"cayley({self.group}; {{{els}}})"


@dataclass(frozen=True)
class ExplicitFiber:
    """An arbitrary fiber graph, acted on through explicit permutations."""

    fiber_graph: Graph

    def graph(self) -> Graph:
        return self.fiber_graph

    def describe(self) -> str:
        return (f"explicit({self.fiber_graph.vertex_count} vertices, "
                f"{self.fiber_graph.edge_count} edges)")


def bundle_index(base_count: int, i: int, k: int) -> int:
    """Index of the bundle vertex over base vertex i and fiber vertex k."""
    return k * base_count + i


def arc_partition(graph: Graph, voltage, gamma) -> list[list[int]]:
    """0/1 matrix of the arcs carrying voltage gamma.

    Entry (u, v) is 1 exactly when {u, v} is an edge and the arc u -> v
    has voltage gamma.  Summed over the whole group this recovers the
    adjacency matrix; transposing swaps gamma and its inverse.
    """
    if isinstance(voltage, VoltageAssignment):
        gamma = voltage.group.check(gamma)
    elif isinstance(voltage, PermutationVoltage):
        gamma = check_perm(gamma, voltage.fiber.vertex_count)
    else:
        raise TypeError("unsupported voltage type")
    n = graph.vertex_count
    mat = [[0] * n for _ in range(n)]
    for i, j in graph.edges:
        if voltage.on_arc(i, j) == gamma:
            mat[i][j] = 1
        if voltage.on_arc(j, i) == gamma:
            mat[j][i] = 1
    return mat


def _fiber_action(fiber, voltage):
    """Return (fiber_graph, apply) where apply(voltage_value, k) moves
    fiber vertex k."""
    if isinstance(fiber, CayleyFiber):
        if not isinstance(voltage, VoltageAssignment):
            raise TypeError("a Cayley fiber needs an abelian voltage assignment")
        if voltage.group != fiber.group:
            raise ValueError("voltage group and fiber group differ")
        els = fiber.group.elements()
        idx = {g: k for k, g in enumerate(els)}

        def apply(value, k):
            return idx[fiber.group.add(els[k], value)]

        return fiber.graph(), apply
    if isinstance(fiber, ExplicitFiber):
        if not isinstance(voltage, PermutationVoltage):
            raise TypeError("an explicit fiber needs permutation voltages")
        if voltage.fiber != fiber.graph():
            raise ValueError("voltage was validated against a different fiber")

        def apply(value, k):
            return value[k]

        return fiber.graph(), apply
    raise TypeError("unsupported fiber type")


def build_bundle(base: Graph, fiber, voltage) -> Graph:
    """The graph bundle of base and fiber twisted by the voltage."""
    fg, apply = _fiber_action(fiber, voltage)
    nb = base.vertex_count
    nf = fg.vertex_count
    edges = []
    for k, kk in fg.edges:
        for i in range(nb):
            edges.append((bundle_index(nb, i, k), bundle_index(nb, i, kk)))
    for (i, j), g in sorted(voltage.values.items()):
        for k in range(nf):
            edges.append((bundle_index(nb, i, k),
                          bundle_index(nb, j, apply(g, k))))
    return Graph.from_edges(nb * nf, edges)


def cartesian_product(g: Graph, f: Graph) -> Graph:
    """Box product: same vertex indexing as a bundle with trivial voltage."""
    nb = g.vertex_count
    edges = []
    for k in range(f.vertex_count):
        for i, j in g.edges:
            edges.append((bundle_index(nb, i, k), bundle_index(nb, j, k)))
    for k, kk in f.edges:
        for i in range(nb):
            edges.append((bundle_index(nb, i, k), bundle_index(nb, i, kk)))
    return Graph.from_edges(nb * f.vertex_count, edges)
