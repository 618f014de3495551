"""Reference tables of family pentagons, recomputed on demand.

One table lists the pentagons that tile with an n-fold rotation center
(B = 360/n), the other those that surround a regular m-gon hole
(B = 1080/m).  Values are never stored; each row is recomputed from the
angle relations and rounded for display with round-half-away-from-zero,
two decimals for angles and three for the odd edge length.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import List, Optional

from .pentagon import DomainError, PentagonSpec, spec_for_hole, spec_for_rotational

ANGLE_COLUMNS = ("A", "B", "C", "D", "E")


@dataclass(frozen=True)
class TableRow:
    index: int
    A: str
    B: str
    C: str
    D: str
    E: str
    e: str
    cross_ref: Optional[int] = None


def round_half_away(value, places: int) -> str:
    """Decimal-string rounding where .5 always moves away from zero."""
    if isinstance(value, Fraction):
        d = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        d = Decimal(repr(float(value)))
    q = Decimal(1).scaleb(-places)
    return str(d.quantize(q, rounding=ROUND_HALF_UP))


def _row(index: int, spec: PentagonSpec,
         cross_ref: Optional[int]) -> TableRow:
    vals = {lab: round_half_away(spec.angle(lab).degrees, 2)
            for lab in ANGLE_COLUMNS}
    return TableRow(index=index, e=round_half_away(spec.e, 3),
                    cross_ref=cross_ref, **vals)


def rotational_table(start: int = 3, stop: int = 13) -> List[TableRow]:
    if start < 3 or stop < start:
        raise DomainError(f"bad rotational range {start}..{stop}")
    return [_row(n, spec_for_rotational(n), None)
            for n in range(start, stop + 1)]


def hole_table(start: int = 7, stop: int = 27) -> List[TableRow]:
    if start < 7 or stop < start:
        raise DomainError(f"bad hole range {start}..{stop}")
    return [_row(m, spec_for_hole(m), m // 3 if m % 3 == 0 else None)
            for m in range(start, stop + 1)]


def format_table(rows: List[TableRow], index_name: str,
                 cross_ref_name: Optional[str] = None) -> str:
    headers = [index_name, "A", "B", "C", "D", "E", "e"]
    if cross_ref_name:
        headers.append(cross_ref_name)
    cells = []
    for r in rows:
        row = [str(r.index), r.A, r.B, r.C, r.D, r.E, r.e]
        if cross_ref_name:
            row.append("" if r.cross_ref is None else str(r.cross_ref))
        cells.append(row)
    widths = [max(len(h), *(len(c[i]) for c in cells))
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"
