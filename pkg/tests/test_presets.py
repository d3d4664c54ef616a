from fractions import Fraction
from pathlib import Path

import pytest

from linemod.dsl import format_poly
from linemod.errors import UnknownPresetError
from linemod.liealg import table_consistent_with_presentation
from linemod.ncalg import NcPoly
from linemod.presets import PRESENTATION_NAMES, preset, sl2_pencil_quadric

DATA = Path(__file__).parent / "data"

EXPECTED_RELATION_COUNTS = {
    "sl2_A": 6,
    "sl2_U": 3,
    "sl11_U": 5,
    "sl11_Uhat": 3,
    "sl11_H": 8,
    "sl11_Hhat": 6,
    "slc_U": 3,
    "slc_H": 6,
    "sl21_Hhat": 36,
}


def test_relation_counts():
    for name, count in EXPECTED_RELATION_COUNTS.items():
        assert len(preset(name).relations) == count, name


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        preset("nope")


def test_hhat_contains_main_relation():
    p = preset("sl11_Hhat")
    rel = NcPoly({(0, 1): 1, (1, 0): 1, (2, 3): -1})
    assert rel in p.relations


def test_color_h_contains_main_relation():
    p = preset("slc_H")
    rel = NcPoly({(0, 1): 1, (1, 0): 1, (2, 3): -1})
    assert rel in p.relations
    central = NcPoly({(0, 3): 1, (3, 0): -1})
    assert central in p.relations


def _up_to_scale(a, b):
    if a.support() != b.support():
        return False
    w = next(iter(a.support()))
    return b == a.scale(b.coeff(w) / a.coeff(w))


def test_sl21_quoted_relations():
    p = preset("sl21_Hhat")
    quoted = [
        NcPoly({(2, 4): Fraction(1), (4, 2): Fraction(-1)}),
        NcPoly({(4, 6): Fraction(1), (6, 4): Fraction(1)}),
        NcPoly({(2, 6): Fraction(1), (6, 2): Fraction(-1), (4, 8): Fraction(-1)}),
    ]
    for q in quoted:
        assert any(_up_to_scale(q, r) for r in p.relations)


def test_sl21_square_relations_deleted():
    p = preset("sl21_Hhat")
    for i in range(4, 8):
        square = NcPoly.monomial((i, i))
        assert not any(_up_to_scale(square, r) for r in p.relations)


def test_sl21_golden_relations():
    p = preset("sl21_Hhat")
    names = p.generator_names()
    order = p.default_order()
    rendered = [format_poly(r, names, order) for r in p.relations]
    golden = (DATA / "sl21_relations.txt").read_text().splitlines()
    assert rendered == golden


def test_sl21_grading():
    p = preset("sl21_Hhat")
    labels = p.group_labels()
    assert labels[:4] == ((0,),) * 4
    assert labels[4:8] == ((1,),) * 4
    assert labels[8] == (0,)


def test_tables_match_presentations(sl21_system):
    for table_name in ("sl2_table", "sl11_table", "slc_table"):
        assert table_consistent_with_presentation(preset(table_name))
    assert table_consistent_with_presentation(
        preset("sl21_table"), system=sl21_system, homogenizer=8, strict_pairs=True
    )


def test_sl21_table_values():
    table = preset("sl21_table")
    # <x3, x4> = x1 - x2 and <y1, y2> = x1 from the matrix model
    assert table.table[2][3] == (1, -1, 0, 0, 0, 0, 0, 0)
    assert table.table[4][5] == (1, 0, 0, 0, 0, 0, 0, 0)


def test_pencil_quadric():
    q = sl2_pencil_quadric(Fraction(3))
    assert q.matrix[3][3] == 9
    assert q.matrix[0][1] == Fraction(-1, 2)
    assert q.matrix[2][2] == -1


def test_presentation_names_all_load():
    for name in PRESENTATION_NAMES:
        p = preset(name)
        assert p.name == name
