"""Command-line interface.

Subcommands: tables, gen (rot | hole | rows | spiral), validate, render.
Exit codes: 0 success, 2 usage or parse error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import builders
from .docio import DocumentError, atomic_write_text, read_document, serialize
from .pentagon import DomainError, spec_for_hole
from .svg import RenderStyle, render_svg
from .tables import format_table, hole_table, rotational_table
from .validator import hole_boundary, validate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _out(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


def _report_dict(report) -> dict:
    return {
        "valid": report.valid,
        "edge_to_edge": report.edge_to_edge,
        "planar": report.planar,
        "vertex_classes": [
            {"kind": vc.kind, "count": vc.count,
             **({"labels": vc.labels} if vc.labels else {})}
            for vc in report.vertex_classes],
        "overlaps": [list(p) for p in report.overlaps],
        "gaps": report.gaps,
        "symmetry": {"rotation_order": report.symmetry[0],
                     "reflection_axes": report.symmetry[1],
                     "center": [report.symmetry[2][0], report.symmetry[2][1]]},
        "hole": report.hole,
        "failures": report.failures,
    }


def _report_text(report) -> str:
    lines = [f"valid: {report.valid}",
             f"edge_to_edge: {report.edge_to_edge}",
             f"overlaps: {len(report.overlaps)}",
             f"gaps: {report.gaps}",
             f"symmetry: C{report.symmetry[0]}, "
             f"{report.symmetry[1]} reflection axes"]
    for vc in report.vertex_classes:
        extra = f" [{vc.labels}]" if vc.labels else ""
        lines.append(f"  concentration {vc.kind}{extra}: {vc.count}")
    if report.hole:
        lines.append(f"hole: regular {int(report.hole['m'])}-gon, "
                     f"side dev {report.hole['side_deviation']:.2e}, "
                     f"radius dev {report.hole['radius_deviation']:.2e}")
    for msg in report.failures:
        lines.append(f"failure: {msg}")
    return "\n".join(lines) + "\n"


def _cmd_tables(args) -> int:
    if args.kind == "rotational":
        rows = rotational_table(args.start or 3, args.stop or 13)
        text = format_table(rows, "n")
    else:
        rows = hole_table(args.start or 7, args.stop or 27)
        text = format_table(rows, "m", cross_ref_name="n")
    if args.format == "json":
        text = json.dumps([vars(r) for r in rows], indent=1,
                          sort_keys=True) + "\n"
    _out(text, args.out)
    return EXIT_OK


def _parse_flips(s: str) -> List[bool]:
    out = []
    for ch in s:
        if ch in "u0":
            out.append(False)
        elif ch in "f1":
            out.append(True)
        else:
            raise CliError(f"bad flips character {ch!r} (use u/f or 0/1)")
    if not out:
        raise CliError("flips must be non-empty")
    return out


def _cmd_gen(args) -> int:
    if args.kind == "rot":
        t = builders.assemble_rotational(args.n, args.depth)
    elif args.kind == "hole":
        t = builders.assemble_hole(args.m, args.depth)
    elif args.kind == "rows":
        t = builders.build_row_tiling(spec_for_hole(args.m),
                                      _parse_flips(args.flips),
                                      args.rows_len)
    else:
        t = builders.spiral_two_fold(args.m, args.belts)
    report = validate(t)
    if args.out:
        atomic_write_text(args.out, serialize(t))
    print(f"{t.count} tiles, mode {t.mode}, "
          f"{'valid' if report.valid else 'INVALID'}")
    if not report.valid:
        for msg in report.failures:
            print(f"failure: {msg}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _cmd_validate(args) -> int:
    t = read_document(args.path)
    report = validate(t)
    text = json.dumps(_report_dict(report), indent=1, sort_keys=True) + "\n" \
        if args.format == "json" else _report_text(report)
    _out(text, args.out)
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_render(args) -> int:
    t = read_document(args.path)
    style = RenderStyle(stroke_width=args.stroke_width)
    hole = None
    if t.mode == "hole":
        try:
            hole = hole_boundary(t)
        except ValueError:
            hole = None
    _out(render_svg(t, style, hole_polygon=hole), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pentarose",
        description="Construct and verify pentagon tilings of the "
                    "one-parameter convex family.")
    sub = p.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("tables", help="print the family parameter tables")
    pt.add_argument("kind", choices=("rotational", "hole"))
    pt.add_argument("--start", type=int, default=None)
    pt.add_argument("--stop", type=int, default=None)
    pt.add_argument("--format", choices=("text", "json"), default="text")
    pt.add_argument("--out", default=None)
    pt.set_defaults(func=_cmd_tables)

    pg = sub.add_parser("gen", help="build a patch and write its document")
    gsub = pg.add_subparsers(dest="kind", required=True)
    g_rot = gsub.add_parser("rot", help="n-fold rotationally symmetric patch")
    g_rot.add_argument("--n", type=int, required=True)
    g_rot.add_argument("--depth", type=int, default=1)
    g_hole = gsub.add_parser("hole", help="patch around a regular m-gon hole")
    g_hole.add_argument("--m", type=int, required=True)
    g_hole.add_argument("--depth", type=int, default=1)
    g_rows = gsub.add_parser("rows", help="row tiling with chosen seam flips")
    g_rows.add_argument("--m", type=int, required=True,
                        help="family parameter (B = 1080/m)")
    g_rows.add_argument("--flips", required=True,
                        help="row pattern, e.g. uffu or 0110")
    g_rows.add_argument("--rows-len", type=int, default=6)
    g_spiral = gsub.add_parser("spiral", help="two-fold spiral patch")
    g_spiral.add_argument("--m", type=int, required=True,
                          help="8, 10 or 14")
    g_spiral.add_argument("--belts", type=int, default=1)
    for g in (g_rot, g_hole, g_rows, g_spiral):
        g.add_argument("--out", default=None)
        g.set_defaults(func=_cmd_gen)

    pv = sub.add_parser("validate", help="certify a tiling document")
    pv.add_argument("path")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--out", default=None)
    pv.set_defaults(func=_cmd_validate)

    pr = sub.add_parser("render", help="render a tiling document to SVG")
    pr.add_argument("path")
    pr.add_argument("--out", default=None)
    pr.add_argument("--stroke-width", type=float, default=1.5)
    pr.set_defaults(func=_cmd_render)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, DocumentError, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return getattr(exc, "code", EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
