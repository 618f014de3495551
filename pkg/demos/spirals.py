"""Grow the three two-fold spiral tilings and render them.

Only three members of the pentagon family admit these spirals: the
ones with B = 135, B = 108, and B = 540/7 degrees.  Each tiling is
built from a concave octagon (a pentagon fused with its mirror image
across the odd edge) together with its half-turn twin, and grows
outward belt by belt.  The patches have exactly two-fold rotational
symmetry and no mirror axis, which the validator confirms.

Run from the repository root:

    python3 demos/spirals.py [belts] [output_dir]

Belt counts above 2 switch from the stored layouts to a live search
and take noticeably longer.
"""

import pathlib
import sys

from pentarose import RenderStyle, render_svg, spiral_two_fold, validate

PALETTE = {8: ("#d8e8d0", "#edd8ee"),
           10: ("#d0dce8", "#eee3d0"),
           14: ("#e8d0d4", "#d6eee6")}


def main(belts, out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for m in (8, 10, 14):
        t = spiral_two_fold(m, belts=belts)
        report = validate(t)
        order, axes = report.symmetry[:2]
        fill, fill_r = PALETTE[m]
        path = out / f"spiral_m{m}_belts{belts}.svg"
        path.write_text(render_svg(t, RenderStyle(fill=fill,
                                                  fill_reflected=fill_r)))
        kinds = sorted(vc.kind for vc in report.vertex_classes)
        print(f"spiral m={m:2d}: {t.count} tiles, symmetry "
              f"C{order} with {axes} mirror axes, "
              f"{'valid' if report.valid else 'INVALID'} -> {path}")
        print(f"  vertex classes: {', '.join(kinds)}")


if __name__ == "__main__":
    belts = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    main(belts, sys.argv[2] if len(sys.argv) > 2 else "demo_output")
