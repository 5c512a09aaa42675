"""Finite simple undirected graphs and the matrices attached to them.

Vertices are always the integers 0..vertex_count-1.  Edges are stored as a
frozenset of pairs (i, j) normalised so that i < j; loops and parallel
edges are rejected at construction, never repaired.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


def normalise_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset
    labels: tuple | None = None

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, int) or n < 1:
            raise ValueError("vertex_count must be a positive integer")
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge {e!r} for vertex count {n}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count does not match vertex count")

    @staticmethod
    def from_edges(vertex_count: int, edges, labels=None) -> Graph:
        """Build a graph from an iterable of (u, v) pairs, normalising order.

        Duplicate edges (after normalisation) are an error: this library has
        no multigraph support.
        """
        seen = set()
        for u, v in edges:
            e = normalise_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e!r}")
            seen.add(e)
        return Graph(vertex_count, frozenset(seen),
                     None if labels is None else tuple(labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return normalise_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        d = [0] * self.vertex_count
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d

    def neighbours(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.vertex_count
        a = [[0] * n for _ in range(n)]
        for i, j in self.edges:
            a[i][j] = 1
            a[j][i] = 1
        return a

    def degree_matrix(self) -> list[list[int]]:
        n = self.vertex_count
        d = self.degrees()
        return [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]

    def canonical_arcs(self) -> list[tuple[int, int]]:
        """All edges as arcs oriented low vertex -> high vertex, sorted."""
        return sorted(self.edges)

    def is_connected(self) -> bool:
        n = self.vertex_count
        adj = [[] for _ in range(n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return all(seen)

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.vertex_count
        edges = list(self.edges) + [(i + off, j + off) for i, j in other.edges]
        return Graph.from_edges(off + other.vertex_count, edges)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(m: int) -> Graph:
    """K_{1,m} with the hub at vertex 0 and leaves 1..m."""
    if m < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: vertices 0..s-1 on one side, s..s+t-1 on the other."""
    if s < 1 or t < 1:
        raise ValueError("both sides of K_{s,t} must be nonempty")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


_NAME_RE = re.compile(r"^([A-Za-z]+)(\d+)(?:,(\d+))?$")


def named_graph(name: str) -> Graph:
    """Build a graph from a short name: K4, Kbar3, C5, P3, K1,3."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"unrecognised graph name {name!r}")
    kind, a, b = m.group(1).lower(), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "k":
            raise ValueError(f"unrecognised graph name {name!r}")
        s, t = a, int(b)
        if s == 1:
            return star(t)
        return complete_bipartite(s, t)
    if kind == "k":
        return complete(a)
    if kind == "kbar":
        return edgeless(a)
    if kind == "c":
        return cycle(a)
    if kind == "p":
        return path(a)
    raise ValueError(f"unrecognised graph name {name!r}")
