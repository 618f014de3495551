from fractions import Fraction

import pytest

from pentarose.pentagon import DomainError
from pentarose.tables import (format_table, hole_table, rotational_table,
                              round_half_away)


def test_round_half_away_from_zero():
    assert round_half_away(Fraction(145, 1000) * 1000, 2) == "145.00"
    assert round_half_away(Fraction(1445, 10), 1) == "144.5"
    assert round_half_away(Fraction(145), 2) == "145.00"
    # the interesting case: a tie must move away from zero, where
    # banker's rounding would go to the even neighbor
    assert round_half_away(Fraction(1125, 10000), 3) == "0.113"
    assert round_half_away(Fraction(1135, 10000), 3) == "0.114"
    assert round_half_away(0.5185, 3) == "0.519"


def test_rotational_rows_recompute_known_values():
    rows = {r.index: r for r in rotational_table(3, 7)}
    assert (rows[3].A, rows[3].B, rows[3].C, rows[3].D, rows[3].E) == \
        ("100.00", "120.00", "140.00", "70.00", "110.00")
    assert rows[3].e == "1.732"
    assert rows[6].e == "1.000"
    assert (rows[7].A, rows[7].C) == ("145.71", "162.86")
    assert all(r.cross_ref is None for r in rows.values())


def test_hole_rows_and_cross_references():
    rows = {r.index: r for r in hole_table(7, 27)}
    assert (rows[10].A, rows[10].B, rows[10].C, rows[10].D, rows[10].E) == \
        ("108.00", "108.00", "144.00", "72.00", "108.00")
    assert rows[10].e == "1.618"
    assert rows[10].cross_ref is None
    assert rows[9].cross_ref == 3
    assert rows[27].cross_ref == 9
    assert {m for m, r in rows.items() if r.cross_ref is not None} == \
        {9, 12, 15, 18, 21, 24, 27}


def test_domain_checks():
    with pytest.raises(DomainError):
        rotational_table(2, 5)
    with pytest.raises(DomainError):
        hole_table(7, 6)


def test_format_table_layout():
    text = format_table(hole_table(7, 9), "m", cross_ref_name="n")
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].split() == ["m", "A", "B", "C", "D", "E", "e", "n"]
    assert lines[3].split()[-1] == "3"  # m = 9 cross-references n = 3
