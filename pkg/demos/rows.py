"""Sample the row tilings of the B = 60 pentagon.

When B is exactly 60 degrees all five edges of the pentagon have unit
length, and strips of pentagons can be stacked into rows.  Each new
row is either a translate of the previous one or its mirror image, so
a row tiling is described by a sequence of flip flags.  Periodic flag
sequences give periodic tilings; an aperiodic sequence gives a tiling
that is edge-to-edge and gap-free but never repeats.

This script renders a few representative flag patterns and reports
what the validator finds at the interior vertices.

Run from the repository root:

    python3 demos/rows.py [output_dir]
"""

import pathlib
import sys

from pentarose import (build_row_tiling, render_svg, spec_for_rotational,
                       validate)

PATTERNS = {
    "translations_only": (False, False, False, False),
    "alternating": (False, True, False, True),
    "paired_flips": (False, True, True, False),
    "aperiodic_prefix": (False, False, True, False, True),
}


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    spec = spec_for_rotational(6)  # B = 60: the equilateral member
    for name, flips in PATTERNS.items():
        t = build_row_tiling(spec, flips, rows_len=6)
        report = validate(t)
        classes = ", ".join(f"{vc.kind} x{vc.count}"
                            for vc in report.vertex_classes)
        path = out / f"rows_{name}.svg"
        path.write_text(render_svg(t))
        print(f"{name}: rows={''.join('f' if f else 'u' for f in flips)}, "
              f"{t.count} tiles, "
              f"{'valid' if report.valid else 'INVALID'} -> {path}")
        print(f"  interior vertices: {classes}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
