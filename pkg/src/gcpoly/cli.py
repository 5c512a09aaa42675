"""Command line front end.

Subcommands: gcp, bundle, cover, trees, zeta, bench, dump-characters.
Exit codes: 0 on success, 2 for parse or validation problems, 3 for a
method the requested inputs do not support, 4 when a cross-check between
two routes that must agree fails (which would be an internal bug, and is
always worth a loud exit).

Output is deterministic for fixed inputs and flags, except for the
timing lines and fields, which exist to be different on every run.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .bivar import BivarPoly
from .bundles import (CayleyFiber, ExplicitFiber, PermutationVoltage,
                      VoltageAssignment, build_bundle)
from .characters import all_characters
from .factor import gcp_bundle_factored
from .fileformat import (ParseError, format_graph, format_voltage, load_graph,
                         parse_voltage)
from .graphs import edgeless, named_graph
from .groups import AbelianGroup
from .pencil import gcp_direct
from .zeta import (bartholdi_direct, bartholdi_from_gcp, complexity_gcp,
                   complexity_kirchhoff)

OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_IDENTITY = 0, 2, 3, 4

UNICODE_LM = ("λ", "μ")


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _poly_doc(poly: BivarPoly, names=None) -> dict:
    return {"canonical": poly.text(names), "terms": poly.terms_list()}


def _now_us() -> int:
    return time.perf_counter_ns() // 1000


def _print_doc(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _load_graph_arg(path):
    try:
        return load_graph(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _voltage_header(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return None


def _load_voltage_arg(path, base, fiber=None):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return text, parse_voltage(text, base, fiber)


def _parse_cayley_spec(spec: str, group: AbelianGroup) -> CayleyFiber:
    if spec == "empty":
        return CayleyFiber.empty(group)
    if spec == "complete":
        return CayleyFiber.complete(group)
    if spec.startswith("cayley:"):
        parts = [p for p in spec[len("cayley:"):].split(";") if p]
        if not parts:
            raise ParseError("empty connecting set; use 'empty' for coverings")
        els = [group.parse_element(p) for p in parts]
        return CayleyFiber.from_elements(group, els)
    raise ParseError(
        f"unrecognised fiber spec {spec!r}; expected empty, complete, "
        "cayley:ELEM;ELEM;... or file:PATH")


def cmd_gcp(args) -> int:
    graph = _load_graph_arg(args.graph)
    poly = gcp_direct(graph)
    names = UNICODE_LM if args.unicode else None
    if args.json:
        _print_doc({
            "command": "gcp",
            "inputs": {"graph": _digest(format_graph(graph))},
            "product": _poly_doc(poly, names),
        })
    else:
        print(poly.text(names))
    return OK


def _run_bundle(args, base, fiber, voltage, vtext) -> int:
    names = UNICODE_LM if args.unicode else None
    method = args.method
    factorable = isinstance(voltage, VoltageAssignment) \
        and isinstance(fiber, CayleyFiber)
    if method in ("factored", "both") and not factorable:
        print("factored needs an abelian voltage and a Cayley fiber; "
              "use --method direct", file=sys.stderr)
        return EXIT_UNSUPPORTED

    doc = {
        "command": "bundle",
        "method": method,
        "inputs": {
            "graph": _digest(format_graph(base)),
            "voltage": _digest(vtext),
            "fiber": fiber.describe(),
        },
    }
    lines = [f"method {method}"]
    timings = {}

    factored = direct = None
    if method in ("factored", "both"):
        t0 = _now_us()
        factored = gcp_bundle_factored(base, fiber, voltage)
        timings["factored"] = _now_us() - t0
        doc["conductor"] = factored.conductor
        doc["factors"] = [_poly_doc(f, names) for f in factored.factors]
        doc["product"] = _poly_doc(factored.product, names)
        lines.append(f"conductor {factored.conductor}")
        for k, f in enumerate(factored.factors):
            lines.append(f"factor {k} {f.text(names)}")
        lines.append(f"product {factored.product.text(names)}")
    if method in ("direct", "both"):
        bundle = build_bundle(base, fiber, voltage)
        t0 = _now_us()
        direct = gcp_direct(bundle)
        timings["direct"] = _now_us() - t0
        doc["direct" if method == "both" else "product"] = _poly_doc(direct, names)
        if method == "direct":
            lines.append(f"product {direct.text(names)}")
        else:
            lines.append(f"direct {direct.text(names)}")

    if method == "both":
        equal = factored.product == direct
        doc["equal"] = equal
        doc["timings_us"] = timings
        lines.append("equal " + ("OK" if equal else "MISMATCH"))
        lines.append(f"t_factored_us {timings['factored']}")
        lines.append(f"t_direct_us {timings['direct']}")
        if not equal:
            if args.json:
                _print_doc(doc)
            else:
                print("\n".join(lines))
            print("internal identity violation: factored and direct "
                  "polynomials differ", file=sys.stderr)
            return EXIT_IDENTITY
    if args.json:
        _print_doc(doc)
    else:
        print("\n".join(lines))
    return OK


def cmd_bundle(args) -> int:
    base = _load_graph_arg(args.graph)
    spec = args.fiber
    if spec.startswith("file:"):
        fiber_graph = _load_graph_arg(spec[len("file:"):])
        vtext, voltage = _load_voltage_arg(args.voltage, base, fiber_graph)
        if isinstance(voltage, VoltageAssignment):
            raise ParseError(
                "an explicit fiber graph needs perm voltages")
        fiber = ExplicitFiber(fiber_graph)
    else:
        vtext, voltage = _load_voltage_arg(args.voltage, base)
        fiber = _parse_cayley_spec(spec, voltage.group)
    return _run_bundle(args, base, fiber, voltage, vtext)


def cmd_cover(args) -> int:
    base = _load_graph_arg(args.graph)
    try:
        with open(args.voltage, "r", encoding="utf-8") as fh:
            vtext = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.voltage}: {exc.strerror}") from None
    head = _voltage_header(vtext)
    if head == "perm":
        # size checked against the fiber during the real parse
        fields = next(line.split("#", 1)[0].split()
                      for line in vtext.splitlines()
                      if line.split("#", 1)[0].strip())
        try:
            size = int(fields[1])
        except (IndexError, ValueError):
            raise ParseError("perm takes exactly one fiber size") from None
        fiber_graph = edgeless(max(size, 1))
        voltage = parse_voltage(vtext, base, fiber_graph)
        fiber = ExplicitFiber(fiber_graph)
    else:
        voltage = parse_voltage(vtext, base)
        fiber = CayleyFiber.empty(voltage.group)
    return _run_bundle(args, base, fiber, voltage, vtext)


def cmd_trees(args) -> int:
    graph = _load_graph_arg(args.graph)
    if args.method == "gcp":
        print(complexity_gcp(graph))
        return OK
    if args.method == "kirchhoff":
        print(complexity_kirchhoff(graph))
        return OK
    a = complexity_gcp(graph)
    b = complexity_kirchhoff(graph)
    ok = a == b
    print(f"{a} {b} " + ("OK" if ok else "MISMATCH"))
    if not ok:
        print("internal identity violation: derivative and cofactor "
              "tree counts differ", file=sys.stderr)
        return EXIT_IDENTITY
    return OK


def cmd_zeta(args) -> int:
    graph = _load_graph_arg(args.graph)
    method = args.method
    z_direct = z_subst = None
    if method in ("direct", "both"):
        z_direct = bartholdi_direct(graph)
    if method in ("substitution", "both"):
        z_subst = bartholdi_from_gcp(graph)
    z = z_direct if z_direct is not None else z_subst
    doc = {
        "command": "zeta",
        "method": method,
        "inputs": {"graph": _digest(format_graph(graph))},
        "exponent": z.exponent,
        "base": _poly_doc(z.base),
        "core": _poly_doc(z.core),
    }
    lines = [f"method {method}",
             f"exponent {z.exponent}",
             f"base {z.base.text()}",
             f"core {z.core.text()}"]
    if method == "both":
        equal = (z_direct.core == z_subst.core
                 and z_direct.exponent == z_subst.exponent)
        doc["equal"] = equal
        lines.append("equal " + ("OK" if equal else "MISMATCH"))
        if not equal:
            if args.json:
                _print_doc(doc)
            else:
                print("\n".join(lines))
            print("internal identity violation: determinant and "
                  "substitution cores differ", file=sys.stderr)
            return EXIT_IDENTITY
    if args.json:
        _print_doc(doc)
    else:
        print("\n".join(lines))
    return OK


def _parse_sizes(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise ParseError(f"bad size range {text!r}") from None
        if lo > hi:
            raise ParseError(f"empty size range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(p) for p in text.split(",") if p]
    except ValueError:
        raise ParseError(f"bad size list {text!r}") from None


def cmd_bench(args) -> int:
    try:
        base = named_graph(args.base)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    sizes = _parse_sizes(args.sizes)
    if any(n < 2 for n in sizes):
        raise ParseError("fiber sizes must be at least 2")
    rows = []
    for n in sizes:
        group = AbelianGroup((n,))
        if args.voltage == "trivial":
            voltage = VoltageAssignment.trivial(base, group)
        else:
            voltage = VoltageAssignment.generator(base, group)
        fiber = CayleyFiber.complete(group)
        t0 = time.perf_counter()
        factored = gcp_bundle_factored(base, fiber, voltage)
        t_factored = time.perf_counter() - t0
        bundle = build_bundle(base, fiber, voltage)
        t0 = time.perf_counter()
        direct = gcp_direct(bundle)
        t_direct = time.perf_counter() - t0
        if factored.product != direct:
            print("internal identity violation: factored and direct "
                  f"polynomials differ at n={n}", file=sys.stderr)
            return EXIT_IDENTITY
        rows.append((n, t_direct, t_factored))
    csv_lines = ["n,t_direct,t_factored"]
    csv_lines += [f"{n},{td:.6f},{tf:.6f}" for n, td, tf in rows]
    text = "\n".join(csv_lines) + "\n"
    sys.stdout.write(text)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.plot:
        from .plotting import render_bench_figure
        render_bench_figure(rows, args.plot, base_name=args.base)
    return OK


def cmd_dump_characters(args) -> int:
    try:
        group = AbelianGroup(tuple(args.group))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    chars = all_characters(group)
    els = group.elements()
    print("group " + " ".join(str(n) for n in group.orders))
    print(f"exponent {group.exponent}")
    print("elements " + " ".join(group.format_element(g) for g in els))
    for chi in chars:
        vals = " ".join(str(chi.value(g)) for g in els)
        print(f"chi {group.format_element(chi.index)} : {vals}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gcpoly",
        description="Exact two-variable characteristic polynomials of "
                    "graphs, coverings and bundles.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, unicode_flag=True, json_flag=True):
        if unicode_flag:
            sp.add_argument("--unicode", action="store_true",
                            help="render the variables as λ and μ")
        if json_flag:
            sp.add_argument("--json", action="store_true",
                            help="emit one JSON document instead of plain lines")

    sp = sub.add_parser("gcp", help="polynomial of a single graph")
    sp.add_argument("graph", help="graph file")
    add_common(sp)
    sp.set_defaults(fn=cmd_gcp)

    sp = sub.add_parser("bundle", help="polynomial of a graph bundle")
    sp.add_argument("graph", help="base graph file")
    sp.add_argument("--fiber", required=True,
                    help="empty | complete | cayley:ELEM;... | file:PATH")
    sp.add_argument("--voltage", required=True, help="voltage file")
    sp.add_argument("--method", choices=("direct", "factored", "both"),
                    default="both")
    add_common(sp)
    sp.set_defaults(fn=cmd_bundle)

    sp = sub.add_parser("cover", help="polynomial of a covering graph")
    sp.add_argument("graph", help="base graph file")
    sp.add_argument("--voltage", required=True, help="voltage file")
    sp.add_argument("--method", choices=("direct", "factored", "both"),
                    default="both")
    add_common(sp)
    sp.set_defaults(fn=cmd_cover)

    sp = sub.add_parser("trees", help="spanning tree count")
    sp.add_argument("graph", help="graph file")
    sp.add_argument("--method", choices=("gcp", "kirchhoff", "both"),
                    default="both")
    sp.set_defaults(fn=cmd_trees)

    sp = sub.add_parser("zeta", help="reciprocal zeta in factored shape")
    sp.add_argument("graph", help="graph file")
    sp.add_argument("--method", choices=("direct", "substitution", "both"),
                    default="both")
    add_common(sp, unicode_flag=False)
    sp.set_defaults(fn=cmd_zeta)

    sp = sub.add_parser("bench",
                        help="time direct vs factored over growing fibers")
    sp.add_argument("--base", default="K1,3", help="named base graph")
    sp.add_argument("--sizes", default="2:8", help="fiber sizes, LO:HI or list")
    sp.add_argument("--voltage", choices=("trivial", "generator"),
                    default="trivial")
    sp.add_argument("--csv", help="also write the CSV to this file")
    sp.add_argument("--plot", help="render a timing figure to this file")
    sp.set_defaults(fn=cmd_bench)

    sp = sub.add_parser("dump-characters", help="print a character table")
    sp.add_argument("--group", type=int, nargs="+", required=True,
                    metavar="ORDER")
    sp.set_defaults(fn=cmd_dump_characters)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
