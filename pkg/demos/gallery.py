"""Render a gallery of symmetric pentagon patches to SVG.

For each rotational order n we pick the pentagon whose B angle is
360/n degrees, assemble a patch of three wedges repeated n times
around the center, certify it, and write an SVG next to this script.
The same loop then runs the hole family: for each m the pentagon with
B = 1080/m leaves an exact regular m-gon hole in the middle of the
patch, which the renderer outlines.

Run from the repository root:

    python3 demos/gallery.py [output_dir]
"""

import pathlib
import sys

from pentarose import (RenderStyle, assemble_hole, assemble_rotational,
                       hole_boundary, render_svg, validate)


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    for n in range(3, 11):
        t = assemble_rotational(n, depth=2)
        report = validate(t)
        status = "ok" if report.valid else "INVALID"
        path = out / f"rotational_n{n}.svg"
        path.write_text(render_svg(t))
        print(f"rotational n={n:2d}: {t.count:3d} tiles, "
              f"symmetry C{report.symmetry[0]}, {status} -> {path}")

    style = RenderStyle(fill="#cfe3f5", fill_reflected="#f5d9cf")
    for m in (7, 9, 12, 18, 27):
        t = assemble_hole(m, depth=1)
        report = validate(t)
        status = "ok" if report.valid else "INVALID"
        path = out / f"hole_m{m}.svg"
        path.write_text(render_svg(t, style, hole_polygon=hole_boundary(t)))
        print(f"hole m={m:2d}: {t.count:3d} tiles around a regular "
              f"{m}-gon, {status} -> {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
