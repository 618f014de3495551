"""Tiling document serialization.

A tiling travels as a versioned JSON document.  Rotations are stored as
exact rationals in degrees so the exactness contract survives the file
boundary; translations are stored as decimal reals that round-trip
bit for bit (shortest repr).  Serialization is deterministic: sorted
keys, fixed separators, no timestamps, so identical tilings produce
byte-identical files.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import List

from .angles import ExactAngle
from .pentagon import DomainError, angles_from_B
from .tiling import Tiling
from .transform import Isometry

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """A document that cannot be parsed into a tiling."""


def _angle_pair(a: ExactAngle) -> List[int]:
    return [a.num, a.den]


def serialize(t: Tiling) -> str:
    spec = t.spec
    doc = {
        "format_version": FORMAT_VERSION,
        "spec": {
            "B_num": spec.B.num,
            "B_den": spec.B.den,
            # informational; checked against recomputation on parse
            "angles": {lab: _angle_pair(spec.angle(lab))
                       for lab in "ACDE"},
            "e": spec.e,
        },
        "mode": t.mode,
        "params": {k: list(v) if isinstance(v, tuple) else v
                   for k, v in sorted(t.params.items())},
        "placements": [
            {"rot_num": p.rotation.num, "rot_den": p.rotation.den,
             "tx": p.tx, "ty": p.ty, "reflected": p.reflected}
            for p in t.placements
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ": "),
                      indent=1) + "\n"


def parse(text: str) -> Tiling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    try:
        if doc["format_version"] != FORMAT_VERSION:
            raise DocumentError(
                f"unsupported format version {doc['format_version']!r}")
        b = ExactAngle(int(doc["spec"]["B_num"]), int(doc["spec"]["B_den"]))
        try:
            spec = angles_from_B(b)
        except DomainError as exc:
            raise DocumentError(str(exc)) from None
        for lab, pair in doc["spec"].get("angles", {}).items():
            stored = Fraction(int(pair[0]), int(pair[1]))
            if stored != spec.angle(lab).degrees:
                raise DocumentError(
                    f"stored angle {lab} disagrees with recomputation")
        placements = []
        for rec in doc["placements"]:
            placements.append(Isometry(
                rotation=ExactAngle(int(rec["rot_num"]),
                                    int(rec["rot_den"])).mod360(),
                tx=float(rec["tx"]), ty=float(rec["ty"]),
                reflected=bool(rec["reflected"])))
        params = {k: tuple(v) if isinstance(v, list) else v
                  for k, v in doc.get("params", {}).items()}
        return Tiling(spec, placements, mode=doc.get("mode", "freeform"),
                      params=params)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"malformed document: {exc}") from None


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_document(t: Tiling, path: str) -> None:
    atomic_write_text(path, serialize(t))


def read_document(path: str) -> Tiling:
    try:
        with open(path) as f:
            text = f.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return parse(text)
