"""Command-line front end.

Inputs are the literal formats of the library; the first header line picks
the parser. The word ``flat`` stands for flat initial data sized to the
requested point.

Exit codes: 2 parse errors, 3 point outside the data, 4 failed exact
division (a bug), 1 anything else that fails.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import a1, cubecorner, dimer, hexahedron, octahedron, surface
from .connection import build_network
from .errors import NotDivisible, OutOfCone, ParseError, TSystemError, WindowTooSmall
from .ring import LaurentPoly, canonical_text, to_laurent, values_equal

METHODS = ("recursion", "minor", "dimer")
KINDS = {
    a1.HEADER: "a1",
    surface.HEADER: "surface",
    cubecorner.HEADER: "cubecorner",
}
POINT_SIZE = {"a1": 2, "surface": 3, "cubecorner": 3}


def format_value(x) -> str:
    x = to_laurent(x)
    if isinstance(x, LaurentPoly):
        return canonical_text(x)
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# inputs


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from None


def _kind_of(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            kind = KINDS.get(line.strip())
            if kind is None:
                raise ParseError("unknown header %r" % line.strip())
            return kind
    raise ParseError("empty input")


def _flat(kind: str, point: tuple):
    if kind == "a1":
        j, k = point
        return a1.InitPathA1.flat(j - abs(k) - 1, j + abs(k) + 1)
    if kind == "surface":
        return octahedron.flat_surface_for(*point)
    return cubecorner.CubeCornerState.flat_for(*point)


def load(path: str, point: tuple | None, kind: str | None = None):
    """``(kind, data)`` from a literal file, or flat data of ``kind`` when ``path`` is ``flat``."""
    if path == "flat":
        if kind is None:
            raise ParseError("'flat' needs a command that fixes the data kind")
        return kind, _flat(kind, point)
    text = _read(path)
    found = _kind_of(text)
    if kind is not None and found != kind:
        raise ParseError("expected %s data, got %s" % (kind, found))
    parser = {"a1": a1.InitPathA1, "surface": surface.SteppedSurface, "cubecorner": cubecorner.CubeCornerState}
    return found, parser[found].from_text(text)


def _ones(kind: str, data):
    if kind == "a1":
        return data.with_values({j: 1 for j in range(data.j_min, data.j_max + 1)})
    if kind == "surface":
        return data.with_values({v: 1 for v in data.vertices()})
    return data.with_values({p: 1 for p in data.vertices()})


def _point(kind: str, coords) -> tuple:
    if len(coords) != POINT_SIZE[kind]:
        raise ParseError("%s data needs a point with %d coordinates" % (kind, POINT_SIZE[kind]))
    return tuple(coords)


# ---------------------------------------------------------------------------
# solving


def solve(kind: str, data, point: tuple, method: str):
    if kind == "a1":
        fn = {"recursion": a1.recurse_a1, "minor": a1.solve_a1, "dimer": a1.dimer_a1}[method]
        return fn(data, *point)
    if kind == "surface":
        return octahedron.solve_t(data, point, method).value
    fn = {
        "recursion": cubecorner.recurse_theta,
        "minor": cubecorner.solve_theta,
        "dimer": cubecorner.dimer_theta,
    }[method]
    return fn(data, *point)


def solve_all(kind: str, data, point: tuple) -> dict:
    methods = METHODS
    if kind == "cubecorner" and not data.is_flat():
        methods = ("recursion", "minor")
    return {m: solve(kind, data, point, m) for m in methods}


def graph_for(kind: str, data, point: tuple):
    if kind == "a1":
        j0, j1 = a1.light_cone_a1(data, *point)
        return a1.ladder_graph_a1(data, j0, j1)
    if kind == "surface":
        return dimer.build_468_dual(surface.shadow(data, point))
    return cubecorner.gamma_graph(data, *point)


def factor_product_for(kind: str, data, point: tuple):
    if kind == "a1":
        j0, j1 = a1.light_cone_a1(data, *point)
        return a1.a1_factor_product(data, j0, j1)
    if kind == "surface":
        return surface.shadow_lozenges(surface.shadow(data, point)).factor_product()
    return cubecorner.augmented_shadow(*point, state=data).factor_product(data)


# ---------------------------------------------------------------------------
# commands


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _prepare(args, kind: str | None):
    kind_guess = kind
    if kind is None:
        if args.input == "flat":
            kind = kind_guess = args.kind or ("a1" if len(args.point) == 2 else "surface")
        else:
            kind_guess = _kind_of(_read(args.input))
    point = _point(kind_guess, args.point) if kind_guess else tuple(args.point)
    kind, data = load(args.input, point, kind)
    if args.ones:
        data = _ones(kind, data)
    return kind, data, point


def cmd_solve(args, kind: str) -> int:
    kind, data, point = _prepare(args, kind)
    if args.method == "all":
        values = solve_all(kind, data, point)
        first = next(iter(values.values()))
        if not all(values_equal(v, first) for v in values.values()):
            raise ArithmeticError("methods disagree: %s" % ", ".join(values))
        value = first
    else:
        value = solve(kind, data, point, args.method)
    _emit(args, format_value(value) + "\n")
    return 0


def cmd_mutate(args) -> int:
    kind, data = load(args.input, None)
    x, y = args.site if kind != "a1" else (args.site[0], None)
    if kind == "a1":
        out = a1.mutate_a1(data, x)
    elif kind == "surface":
        out = surface.mutate_surface(data, x, y)
    elif args.evaporate:
        out = cubecorner.evaporate_cube(data, x, y)
    else:
        out = cubecorner.add_cube(data, x, y)
    _emit(args, out.to_text())
    return 0


def cmd_shadow(args) -> int:
    kind, data, point = _prepare(args, None)
    lines = []
    if kind == "a1":
        j0, j1 = a1.light_cone_a1(data, *point)
        lines.append("cone %d %d" % (j0, j1))
        lines.append("word %s" % a1.a1_factor_product(data, j0, j1).word())
    elif kind == "surface":
        sh = surface.shadow(data, point)
        seq = surface.shadow_lozenges(sh)
        lines.append("vertices %s" % " ".join("%d,%d" % v for v in sorted(sh.vertices)))
        lines.append("sw %s" % " ".join("%d,%d" % v for v in sh.sw))
        lines.append("se %s" % " ".join("%d,%d" % v for v in sh.se))
        lines.append("minor rows %s" % " ".join(str(r) for r in sh.minor_rows()))
        lines.append("word %s" % seq.word())
    else:
        sh = cubecorner.augmented_shadow(*point, state=data)
        lines.append("N %d" % sh.n)
        lines.append("west %s" % " ".join("%d,%d,%d" % p for p in sh.west))
        lines.append("east %s" % " ".join("%d,%d,%d" % p for p in sh.east))
        lines.append("word %s" % sh.compact_word())
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_dimers(args) -> int:
    kind, data, point = _prepare(args, None)
    g = graph_for(kind, data, point)
    if args.format == "graph":
        _emit(args, g.export_text())
        return 0
    lines = []
    for n, m in enumerate(dimer.enumerate_matchings(g)):
        edges = ",".join(str(e) for e in sorted(m))
        lines.append("matching %d edges=%s weight=%s" % (n, edges, format_value(dimer.matching_weight(g, m))))
    lines.append("total %s" % format_value(dimer.partition_function(g)))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_export(args) -> int:
    kind, data, point = _prepare(args, None)
    if args.format == "graph":
        text = graph_for(kind, data, point).export_text()
    else:
        text = build_network(factor_product_for(kind, data, point)).export_text()
    _emit(args, text)
    return 0


def cmd_verify(args) -> int:
    lines = []
    ok = True
    if args.identities:
        for name in hexahedron.IDENTITIES:
            passed = hexahedron.identity_suite(name, args.identities, args.seed)
            ok &= passed
            lines.append("%s %s" % ("PASS" if passed else "FAIL", name))
    if args.input is not None or not args.identities:
        if args.input is None:
            data, point = octahedron.random_instance(random.Random(args.seed))
            kind = "surface"
            lines.append("instance seed=%d point=%d,%d,%d" % (args.seed, *point))
        else:
            kind, data, point = _prepare(args, None)
        values = solve_all(kind, data, point)
        first = next(iter(values.values()))
        agree = all(values_equal(v, first) for v in values.values())
        ok &= agree
        for m, v in values.items():
            lines.append("%s %s" % (m, format_value(v)))
        lines.append("%s agreement" % ("PASS" if agree else "FAIL"))
    _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def _add_io(p, point_help: str, optional_input: bool = False) -> None:
    if optional_input:
        p.add_argument("input", nargs="?", help="literal file, '-' for stdin, or 'flat'")
    else:
        p.add_argument("input", help="literal file, '-' for stdin, or 'flat'")
    p.add_argument("point", nargs="*", type=int, help=point_help)
    p.add_argument("--ones", action="store_true", help="set every initial value to 1")
    p.add_argument("--kind", choices=tuple(POINT_SIZE), help="data kind for 'flat' (default from the point size)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tsysnet", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    parser.add_argument("--format", choices=("text", "graph"), default="text")
    parser.add_argument("--method", choices=METHODS + ("all",), default="minor")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, what in (("solve-a1", "J K"), ("solve-t", "I J K"), ("solve-theta", "A B C")):
        p = sub.add_parser(name, help="solve at one point (%s)" % what)
        _add_io(p, what)

    p = sub.add_parser("mutate", help="mutate a path or surface, or add/remove a cube")
    p.add_argument("input")
    p.add_argument("site", nargs="+", type=int, help="J for paths, X Y otherwise")
    p.add_argument("--evaporate", action="store_true", help="remove a cube instead of adding one")

    p = sub.add_parser("shadow", help="describe the domain that determines a point")
    _add_io(p, "point coordinates")
    p = sub.add_parser("dimers", help="list matchings and their weights")
    _add_io(p, "point coordinates")
    p = sub.add_parser("export", help="write the network or dimer graph of a point")
    _add_io(p, "point coordinates")
    p = sub.add_parser("verify", help="check that all methods agree")
    _add_io(p, "point coordinates", optional_input=True)
    p.add_argument("--identities", type=int, default=0, metavar="N", help="also run the local identities on N random points")
    return parser


def _global_opts(argv):
    # global options are accepted after the subcommand too
    glob = {"--seed", "--format", "--method", "--out"}
    head, tail = [], []
    it = iter(argv)
    for tok in it:
        key = tok.split("=", 1)[0]
        if key in glob:
            head.append(tok)
            if "=" not in tok:
                head.append(next(it, ""))
        else:
            tail.append(tok)
    return head + tail


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_global_opts(list(sys.argv[1:] if argv is None else argv)))
    kinds = {"solve-a1": "a1", "solve-t": "surface", "solve-theta": "cubecorner"}
    try:
        if args.command in kinds:
            return cmd_solve(args, kinds[args.command])
        if args.command == "mutate":
            return cmd_mutate(args)
        if args.command == "shadow":
            return cmd_shadow(args)
        if args.command == "dimers":
            return cmd_dimers(args)
        if args.command == "export":
            return cmd_export(args)
        return cmd_verify(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OutOfCone, WindowTooSmall) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except NotDivisible as exc:
        print("internal error: inexact division: %s" % exc, file=sys.stderr)
        return 4
    except (TSystemError, ValueError, ArithmeticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
