from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qcox import linalg
from qcox.cartan import all_finite, parse_datum
from qcox.coxeter import (
    all_perms,
    c_from_n,
    cayley_pairing,
    check_perm,
    coxeter_matrix,
    epsilon_matrix,
    matrix_order,
    parse_perm,
    realization,
    reflection_matrix,
    render_perm,
    solve_n,
)

DATA = all_finite(4)
data_st = st.sampled_from(DATA)


@st.composite
def datum_and_perm(draw):
    datum = draw(data_st)
    return datum, tuple(draw(st.permutations(range(datum.rank))))


def sympy_cayley(datum, perm):
    """Independent route: reflections as linear maps on the root lattice, via sympy."""
    l = datum.rank
    b = sympy.Matrix(datum.b)

    def refl(i):
        # s_i(x) = x - 2 (x, alpha_i)/(alpha_i, alpha_i) alpha_i, in coordinates
        m = sympy.eye(l)
        for j in range(l):
            m[i, j] -= sympy.Rational(2 * datum.b[j][i], datum.b[i][i])
        return m

    s = sympy.eye(l)
    for i in perm:
        s = s * refl(i)
    cay = (sympy.eye(l) + s) * (sympy.eye(l) - s).inv()
    return cay.T * b


@given(datum_and_perm())
def test_cayley_matches_sympy(dp):
    datum, perm = dp
    ours = sympy.Matrix(cayley_pairing(datum, perm))
    assert ours == sympy_cayley(datum, perm)


@given(datum_and_perm())
def test_cayley_equals_signed_b(dp):
    datum, perm = dp
    eps = epsilon_matrix(perm, datum.rank)
    c = cayley_pairing(datum, perm)
    assert all(c[i][j] == eps[i][j] * datum.b[i][j] for i in range(datum.rank) for j in range(datum.rank))


@given(datum_and_perm())
def test_cayley_pairing_is_skew(dp):
    c = cayley_pairing(*dp)
    assert all(c[i][j] == -c[j][i] for i in range(len(c)) for j in range(len(c)))


@pytest.mark.parametrize("datum", DATA, ids=lambda d: d.name)
def test_reflections_preserve_the_form(datum):
    for i in range(datum.rank):
        s = reflection_matrix(datum, i)
        assert linalg.frozen(linalg.matmul(linalg.matmul(linalg.transpose(s), datum.b), s)) == datum.b
        assert linalg.frozen(linalg.matmul(s, s)) == linalg.frozen(linalg.identity(datum.rank))


@given(datum_and_perm())
def test_gauss_route_agrees_with_product(dp):
    assert coxeter_matrix(*dp, method="gauss") == coxeter_matrix(*dp)


@given(datum_and_perm())
def test_coxeter_order(dp):
    datum, perm = dp
    assert matrix_order(coxeter_matrix(datum, perm)) == datum.coxeter_number


def test_e8_order():
    e8 = parse_datum("E8")
    assert matrix_order(coxeter_matrix(e8, tuple(range(8)))) == 30


def test_a2_example():
    a2 = parse_datum("A2")
    assert coxeter_matrix(a2, (0, 1)) == ((0, -1), (1, -1))
    assert cayley_pairing(a2, (0, 1)) == ((0, 1), (-1, 0))
    assert solve_n(a2, (0, 1)) == ((1, -1), (0, 1))


@given(datum_and_perm())
def test_solve_n_realizes_the_pairing(dp):
    datum, perm = dp
    n = solve_n(datum, perm)
    c = cayley_pairing(datum, perm)
    assert [[Fraction(x) for x in row] for row in c_from_n(datum, n)] == [list(row) for row in c]


def test_solve_n_integrality_gate():
    b2 = parse_datum("B2")
    with pytest.raises(ValueError):
        solve_n(b2, (0, 1), s=((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        solve_n(b2, (0, 1), s=((4, -2), (-1, 2)))


def test_solve_n_with_other_symmetric_s():
    a2 = parse_datum("A2")
    n = solve_n(a2, (1, 0), s=((4, 1), (1, 4)))
    assert c_from_n(a2, n) == [[0, -1], [1, 0]]


def test_realization_bundle():
    r = realization(parse_datum("G2"), (1, 0))
    assert r.eps == ((0, 1), (-1, 0))
    assert r.n == solve_n(r.datum, r.perm)


def test_perm_parsing():
    assert parse_perm("2,1,3") == (1, 0, 2)
    assert render_perm((1, 0, 2)) == "2,1,3"
    with pytest.raises(ValueError):
        check_perm((0, 0, 2), 3)
    assert len(all_perms(4)) == 24


def test_bad_reflection_index():
    with pytest.raises(IndexError):
        reflection_matrix(parse_datum("A2"), 2)
