"""Text formats for graphs and voltage assignments.

Graph files:

    # comment lines and blank lines are ignored
    v 4
    e 0 1
    e 1 2

Voltage files start with a group header followed by one line per
canonical arc (low vertex first):

    group 3            # Z_3; multiple factors: group 2 2
    w 0 1 1            # arc 0 -> 1 carries element (1)

Explicit permutation voltages use a perm header instead; the line for an
arc lists the image of every fiber vertex:

    perm 3
    w 0 1 1 2 0

All tokens are whitespace separated.  Errors carry the 1-based line
number of the offending line.
"""

from __future__ import annotations

from .bundles import PermutationVoltage, VoltageAssignment
from .graphs import Graph
from .groups import AbelianGroup


class ParseError(Exception):
    def __init__(self, message: str, lineno: int | None = None):
        self.message = message
        self.lineno = lineno
        super().__init__(str(self))

    def __str__(self):
        if self.lineno is None:
            return self.message
        return f"line {self.lineno}: {self.message}"


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int_fields(fields, lineno, what):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"{what}: expected integers, got {fields}", lineno) from None


def parse_graph(text: str) -> Graph:
    vertex_count = None
    edges = []
    seen = set()
    for lineno, fields in _significant_lines(text):
        head, rest = fields[0], fields[1:]
        if head == "v":
            if vertex_count is not None:
                raise ParseError("duplicate v line", lineno)
            if len(rest) != 1:
                raise ParseError("v takes exactly one count", lineno)
            (vertex_count,) = _int_fields(rest, lineno, "v")
            if vertex_count < 1:
                raise ParseError("vertex count must be positive", lineno)
        elif head == "e":
            if vertex_count is None:
                raise ParseError("e before v", lineno)
            if len(rest) != 2:
                raise ParseError("e takes exactly two endpoints", lineno)
            i, j = _int_fields(rest, lineno, "e")
            if i == j:
                raise ParseError(f"loop at vertex {i}", lineno)
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ParseError(f"edge ({i}, {j}) out of range", lineno)
            e = (i, j) if i < j else (j, i)
            if e in seen:
                raise ParseError(f"duplicate edge ({i}, {j})", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if vertex_count is None:
        raise ParseError("missing v line")
    return Graph.from_edges(vertex_count, edges)


def parse_voltage(text: str, base: Graph, fiber: Graph | None = None):
    """Parse a voltage file against its base graph.

    group headers produce a VoltageAssignment; perm headers need the
    fiber graph the permutations act on and produce a PermutationVoltage.
    """
    kind = None
    group = None
    perm_size = None
    values = {}
    for lineno, fields in _significant_lines(text):
        head, rest = fields[0], fields[1:]
        if head == "group":
            if kind is not None:
                raise ParseError("duplicate header line", lineno)
            orders = _int_fields(rest, lineno, "group")
            if not orders or any(n < 1 for n in orders):
                raise ParseError("group needs positive cyclic orders", lineno)
            group = AbelianGroup(tuple(orders))
            kind = "group"
        elif head == "perm":
            if kind is not None:
                raise ParseError("duplicate header line", lineno)
            if len(rest) != 1:
                raise ParseError("perm takes exactly one fiber size", lineno)
            (perm_size,) = _int_fields(rest, lineno, "perm")
            if fiber is None:
                raise ParseError(
                    "perm voltages need an explicit fiber graph", lineno)
            if perm_size != fiber.vertex_count:
                raise ParseError(
                    f"perm size {perm_size} does not match the fiber "
                    f"({fiber.vertex_count} vertices)", lineno)
            kind = "perm"
        elif head == "w":
            if kind is None:
                raise ParseError("w before group/perm header", lineno)
            want = 2 + (len(group.orders) if kind == "group" else perm_size)
            if len(rest) != want:
                raise ParseError(
                    f"w takes {want} integers for this header", lineno)
            nums = _int_fields(rest, lineno, "w")
            i, j, val = nums[0], nums[1], tuple(nums[2:])
            if not i < j:
                raise ParseError(
                    f"arc ({i}, {j}) is not in canonical order (low first)",
                    lineno)
            if not base.has_edge(i, j):
                raise ParseError(f"({i}, {j}) is not an edge of the base",
                                 lineno)
            if (i, j) in values:
                raise ParseError(f"duplicate voltage for arc ({i}, {j})",
                                 lineno)
            if kind == "group":
                try:
                    group.check(val)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from None
            values[(i, j)] = val
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if kind is None:
        raise ParseError("missing group/perm header")
    missing = sorted(set(base.edges) - set(values))
    if missing:
        raise ParseError(f"missing voltages for arcs {missing}")
    try:
        if kind == "group":
            return VoltageAssignment.from_values(base, group, values)
        return PermutationVoltage.from_values(base, fiber, values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(graph: Graph) -> str:
    lines = [f"v {graph.vertex_count}"]
    lines += [f"e {i} {j}" for i, j in sorted(graph.edges)]
    return "\n".join(lines) + "\n"


def format_voltage(voltage) -> str:
    if isinstance(voltage, VoltageAssignment):
        lines = ["group " + " ".join(str(n) for n in voltage.group.orders)]
        for (i, j), g in sorted(voltage.values.items()):
            lines.append(f"w {i} {j} " + " ".join(str(x) for x in g))
    else:
        lines = [f"perm {voltage.fiber.vertex_count}"]
        for (i, j), p in sorted(voltage.values.items()):
            lines.append(f"w {i} {j} " + " ".join(str(x) for x in p))
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def load_voltage(path, base: Graph, fiber: Graph | None = None):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_voltage(fh.read(), base, fiber)
