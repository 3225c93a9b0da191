"""Command-line front end.

Exit status: 0 success, 1 parse or usage error, 2 semantic negative (invalid
family or drawing, not st-planar, failed roundtrip). Negative results print a
``reason: <token>`` line on stdout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arrangement import region_family
from .drawing import assign_coordinates, check_dominance, compact, validate_upright_quad
from .family import (
    build_graph,
    check_union_closed,
    check_well_graded,
    families_isomorphic,
    validate_family,
    verify_accessibility_extension,
)
from .fileformats import (
    FormatError,
    format_arrangement,
    format_drawing,
    format_family,
    format_graph,
    parse_arrangement,
    parse_drawing,
    parse_family,
)
from .recognize import BRUTE_FORCE_MAX, CENSUS_MAX, brute_force_recognize, census, recognize
from .svg import SvgOptions, render_svg
from .zones import drawing_to_arrangement, extract_zones

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Negative(Exception):
    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        self.message = message
        super().__init__(reason)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_family(path):
    return parse_family(_read(path), path)


def _load_drawing(path):
    return parse_drawing(_read(path), path)


def _require_valid(F):
    report = validate_family(F)
    if not report.ok:
        raise Negative("invalid-family", report.format(F.universe))


def _require_valid_drawing(D, G):
    report = validate_upright_quad(D, G) + check_dominance(D, G)
    if not report.ok:
        raise Negative("invalid-drawing", report.format(G.universe))


def _recognizer(args):
    return brute_force_recognize if args.oracle else recognize


def _svg_options(args) -> SvgOptions:
    return SvgOptions(unit=args.unit, edge_labels=args.labels, state_labels=args.labels)


# ----------------------------------------------------------------- commands


def cmd_validate(args, out):
    F = _load_family(args.family)
    checks = [
        ("axioms", validate_family(F)),
        ("union-closed", check_union_closed(F)),
        ("well-graded", check_well_graded(F)),
        ("accessibility-extension", verify_accessibility_extension(F)),
    ]
    ok = True
    for name, report in checks:
        out.write(f"{name}: {'ok' if report.ok else 'FAIL'}\n")
        if not report.ok:
            ok = False
            for line in report.format(F.universe).splitlines():
                out.write(f"  {line}\n")
    if not ok:
        raise Negative("invalid-family")


def cmd_graph(args, out):
    F = _load_family(args.family)
    _require_valid(F)
    _write(args.output, format_graph(build_graph(F)), out)


def _recognize_or_fail(F, args):
    _require_valid(F)
    if args.oracle and F.n > BRUTE_FORCE_MAX:
        raise UsageError(f"--oracle supports at most {BRUTE_FORCE_MAX} elements")
    try:
        orders = _recognizer(args)(F)
    except ValueError as exc:
        raise Negative("not-st-planar", str(exc)) from None
    if orders is None:
        raise Negative("not-st-planar", "not st-planar")
    return orders


def cmd_recognize(args, out):
    F = _load_family(args.family)
    orders = _recognize_or_fail(F, args)
    out.write("x_order: " + " ".join(orders.x_order) + "\n")
    out.write("y_order: " + " ".join(orders.y_order) + "\n")
    out.write("permutation: " + " ".join(map(str, orders.permutation())) + "\n")


def cmd_draw(args, out):
    F = _load_family(args.family)
    orders = _recognize_or_fail(F, args)
    G = build_graph(F)
    D = assign_coordinates(F, orders)
    if args.compact:
        D = compact(D, G)
    if args.output is not None or args.svg is None:
        _write(args.output, format_drawing(D, G), out)
    if args.svg is not None:
        _write(args.svg, render_svg(D, G, _svg_options(args)), out)


def cmd_regions(args, out):
    A = parse_arrangement(_read(args.arrangement), args.arrangement)
    _write(args.output, format_family(region_family(A)), out)


def cmd_zones(args, out):
    D, G = _load_drawing(args.drawing)
    _require_valid_drawing(D, G)
    u = G.universe
    for z in extract_zones(D, G):
        label = u.elements[z.label] if z.label is not None else "?"
        kind = "bridge" if z.is_bridge else f"{len(z.faces)} faces"
        out.write(
            f"zone {label}: right {z.right_index} left {z.left_index} "
            f"edges {len(z.edges)} {kind}\n"
        )


def cmd_to_arrangement(args, out):
    D, G = _load_drawing(args.drawing)
    _require_valid_drawing(D, G)
    _write(args.output, format_arrangement(drawing_to_arrangement(D, G)), out)


def cmd_roundtrip(args, out):
    D, G = _load_drawing(args.drawing)
    _require_valid_drawing(D, G)
    A = drawing_to_arrangement(D, G)
    R = region_family(A)
    F = G.family
    labeled = R.relabel(F.universe) == F
    iso = families_isomorphic(R, F)
    out.write("permutation: " + " ".join(map(str, A.permutation)) + "\n")
    out.write(f"labeled-equal: {'yes' if labeled else 'no'}\n")
    out.write(f"isomorphic: {'yes' if iso else 'no'}\n")
    if not (labeled and iso):
        raise Negative("roundtrip-mismatch")


def cmd_census(args, out):
    if not 0 <= args.n <= CENSUS_MAX:
        raise UsageError(f"--n must be between 0 and {CENSUS_MAX}")
    report = census(args.n)
    out.write(report.table())


def cmd_render(args, out):
    D, G = _load_drawing(args.drawing)
    _write(args.svg, render_svg(D, G, _svg_options(args)), out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="learnspace", description="st-planar learning spaces and upright-quad drawings")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the learning-space axioms")
    s.add_argument("family")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("graph", help="print the learning graph")
    s.add_argument("family")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("recognize", help="find boundary orders of an st-planar family")
    s.add_argument("family")
    s.add_argument("--oracle", action="store_true", help="use the brute-force recognizer")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("draw", help="upright-quad drawing of an st-planar family")
    s.add_argument("family")
    s.add_argument("-o", "--output")
    s.add_argument("--compact", action="store_true")
    s.add_argument("--svg")
    s.add_argument("--labels", action="store_true")
    s.add_argument("--unit", type=int, default=48)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_draw)

    s = sub.add_parser("regions", help="region family of a quadrant arrangement")
    s.add_argument("arrangement")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_regions)

    s = sub.add_parser("zones", help="list the zones of a drawing")
    s.add_argument("drawing")
    s.set_defaults(func=cmd_zones)

    s = sub.add_parser("to-arrangement", help="quadrant arrangement of a drawing")
    s.add_argument("drawing")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_to_arrangement)

    s = sub.add_parser("roundtrip", help="drawing -> arrangement -> region graph check")
    s.add_argument("drawing")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("census", help="count st-planar learning spaces on n elements")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("render", help="SVG of a drawing file")
    s.add_argument("drawing")
    s.add_argument("--svg", default="-")
    s.add_argument("--labels", action="store_true")
    s.add_argument("--unit", type=int, default=48)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "unit", 1) <= 0:
            raise UsageError("--unit must be positive")
        args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except FormatError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except Negative as exc:
        if exc.message:
            out.write(exc.message.rstrip("\n") + "\n")
        out.write(f"reason: {exc.reason}\n")
        return EXIT_NEGATIVE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
