import pytest
import sympy

from qcox.cartan import CartanDatum, all_finite, cartan_matrix, make_cartan, parse_datum, symmetrize, validate

ALL = all_finite(4) + [make_cartan("D", 5), make_cartan("E", 6), make_cartan("E", 7), make_cartan("E", 8)]


def test_low_rank_matrices():
    assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))
    assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("G", 2) == ((2, -3), (-1, 2))
    assert make_cartan("C", 2) == make_cartan("B", 2)


@pytest.mark.parametrize("name,d", [("B2", (2, 1)), ("B3", (2, 2, 1)), ("C3", (1, 1, 2)), ("F4", (2, 2, 1, 1)), ("G2", (1, 3))])
def test_symmetrizers(name, d):
    assert parse_datum(name).d == d


def test_symmetrize_orientation():
    assert symmetrize(((2, -3), (-1, 2))) == (1, 3)
    assert symmetrize(((2, -1), (-3, 2))) == (3, 1)


@pytest.mark.parametrize("datum", ALL, ids=lambda d: d.name)
def test_b_is_positive_definite(datum):
    b = sympy.Matrix(datum.b)
    assert b.is_symmetric()
    assert all(b[:k, :k].det() > 0 for k in range(1, datum.rank + 1))


@pytest.mark.parametrize("datum", ALL, ids=lambda d: d.name)
def test_validate_accepts_constructed(datum):
    assert validate(datum).ok


def test_validate_reports_violations():
    bad = CartanDatum("X", 2, ((2, -1), (0, 2)), (1, 1), ((2, -1), (0, 2)))
    v = validate(bad)
    assert not v.ok
    assert "a_ij = 0 <=> a_ji = 0" in v.violations and "b symmetric" in v.violations


def test_rejects_unknown_types():
    for label in ("B1", "E5", "F3", "G3", "Q2", "A"):
        with pytest.raises(ValueError):
            parse_datum(label)


def test_symmetrize_rejects_non_symmetrizable():
    with pytest.raises(ValueError):
        symmetrize(((2, -1, -1), (-2, 2, -1), (-1, -1, 2)))


def test_sweep_contents():
    assert [d.name for d in all_finite(4)] == ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]


@pytest.mark.parametrize("name,h", [("A3", 4), ("B3", 6), ("C4", 8), ("D4", 6), ("E6", 12), ("E7", 18), ("E8", 30), ("F4", 12), ("G2", 6)])
def test_coxeter_numbers(name, h):
    assert parse_datum(name).coxeter_number == h
