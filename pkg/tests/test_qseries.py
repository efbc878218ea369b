import random
from dataclasses import replace
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import SYMBOLIC
from qcox.cartan import parse_datum
from qcox.coxeter import all_perms, solve_n
from qcox.laurent import ONE, LaurentPoly, RatFunc, v_pow
from qcox.qnum import q_binomial
from qcox.qseries import (
    ZRational,
    F_table,
    affine_series_pack,
    build_F,
    check_fg_constraints,
    check_Kq,
    check_Kq_forms,
    closed_form_n_pos,
    g_series,
    generalized_character_check,
    has_constancy_dichotomy,
    jing_identity,
    qv,
    serre_series_identity,
    solve_Kq,
    taylor_solve_F,
)
from qcox.series import TruncSeries
from test_laurent import V, to_sympy

A2 = parse_datum("A2")
N_A2 = solve_n(A2, (0, 1))
Z, W = sympy.symbols("z w")
q = V**2


def sweep():
    for name in SYMBOLIC:
        datum = parse_datum(name)
        for perm in all_perms(datum.rank):
            yield datum, perm, solve_n(datum, perm)


def corrupt(n, i, j, delta=1):
    rows = [list(r) for r in n]
    rows[i][j] += delta
    return tuple(tuple(r) for r in rows)


def F_sympy(f: ZRational, x):
    num = sum(to_sympy(c) * x**k for k, c in enumerate(f.num))
    den = sum(to_sympy(c) * x**k for k, c in enumerate(f.den))
    return num / den


def test_a2_examples():
    assert N_A2 == ((1, -1), (0, 1))
    f21 = build_F(A2, N_A2, 1, 0)
    assert f21.is_constant() and f21.reduced().num == (ONE,)
    f12 = build_F(A2, N_A2, 0, 1)
    assert sympy.simplify(F_sympy(f12, Z) - (1 / q - Z) / (1 - Z / q)) == 0
    assert not f12.is_constant()


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_diagonal_F(name):
    datum = parse_datum(name)
    n = solve_n(datum, (0, 1))
    for i in range(2):
        qi = q ** datum.d[i]
        expect = qi ** n[i][i] * (1 - Z) / (1 - Z * qi**2)
        assert sympy.simplify(F_sympy(build_F(datum, n, i, i), Z) - expect) == 0


def test_taylor_examples():
    s = taylor_solve_F(A2, N_A2, 0, 1, 3)
    assert s == TruncSeries([v_pow(-2), v_pow(-4) - 1, v_pow(-6) - v_pow(-2), v_pow(-8) - v_pow(-4)])
    assert taylor_solve_F(A2, N_A2, 1, 0, 3) == TruncSeries([1, 0, 0, 0])
    with pytest.raises(ValueError):
        taylor_solve_F(parse_datum("A3"), solve_n(parse_datum("A3"), (0, 1, 2)), 0, 2, 3)


def test_taylor_solution_is_the_expansion_everywhere():
    for datum, perm, n in sweep():
        for i in range(datum.rank):
            for j in range(datum.rank):
                if datum.a[i][j]:
                    s = taylor_solve_F(datum, n, i, j, 8)
                    assert s[0] == RatFunc(qv(datum.d[j] * n[i][j]))
                    assert s == build_F(datum, n, i, j).series(8)


def test_two_point_constraint_by_sympy():
    """Independent route: rational-function identity checked by sympy."""
    for name in ("A2", "B2", "G2"):
        datum = parse_datum(name)
        for perm in all_perms(2):
            n = solve_n(datum, perm)
            for i, j in ((0, 1), (1, 0), (0, 0)):
                b = datum.b[i][j]
                lhs = (Z - q**b) * F_sympy(build_F(datum, n, j, i), 1 / Z)
                rhs = (q**b * Z - 1) * F_sympy(build_F(datum, n, i, j), Z)
                assert sympy.simplify(lhs - rhs) == 0


def test_fg_constraints_and_dichotomy_hold_on_the_sweep():
    for datum, perm, n in sweep():
        assert check_fg_constraints(datum, n).ok
        assert has_constancy_dichotomy(datum, n)


def test_fg_constraints_negative_controls():
    a3 = parse_datum("A3")
    n = solve_n(a3, (0, 1, 2))
    assert not check_fg_constraints(a3, corrupt(n, 0, 2)).ok      # a_13 = 0 entry
    assert not check_fg_constraints(A2, corrupt(N_A2, 0, 1)).ok   # both F nonconstant
    # diagonal entries are unconstrained: c_ii = 0 whatever n_ii is
    assert check_fg_constraints(A2, corrupt(N_A2, 0, 0)).ok


def test_pole_cancellation():
    f = build_F(A2, N_A2, 0, 1)
    assert len(f.pole_cleared(-1)) <= 2
    with pytest.raises(ArithmeticError):
        f.pole_cleared(1)


@pytest.mark.parametrize("m", [0, -1, -2])
def test_jing_identity(m):
    assert jing_identity(m).ok


def test_jing_rejects_positive_m():
    with pytest.raises(ValueError):
        jing_identity(1)


def test_serre_series_a2_by_sympy():
    """The cleared A2 Serre combination, expanded independently by sympy."""
    n = N_A2
    for i, j in ((0, 1), (1, 0)):
        fii = lambda x: F_sympy(build_F(A2, n, i, i), x)
        fij = lambda x: F_sympy(build_F(A2, n, i, j), x)
        fji = lambda x: F_sympy(build_F(A2, n, j, i), x)
        z = sympy.symbols("z1 z2")
        qb = q ** A2.b[i][j]
        total = 0
        for perm in ((0, 1), (1, 0)):
            za, zb = z[perm[0]], z[perm[1]]
            fz = fii(zb / za)
            for k in range(3):
                coeff = (-1) ** k * to_sympy(q_binomial(2, k))
                left = [za, zb][:k]
                right = [za, zb][k:]
                term = coeff * fz
                for x in left:
                    term *= fji(W / x)
                for x in right:
                    term *= fij(x / W)
                total += term
        clear = (1 - q**2 * z[1] / z[0]) * (1 - q**2 * z[0] / z[1])
        clear *= (1 - qb * z[0] / W) * (1 - qb * z[1] / W)
        assert sympy.simplify(sympy.cancel(total * clear)) == 0
        assert serre_series_identity(A2, n, i, j).ok


def test_serre_series_detects_a_wrong_pole():
    table = dict(F_table(A2, N_A2))
    f = table[(0, 1)]
    table[(0, 1)] = ZRational(f.num, (ONE, -v_pow(-4)))
    assert not serre_series_identity(A2, N_A2, 0, 1, table).ok


def test_serre_series_rejects_bad_pairs():
    with pytest.raises(ValueError):
        serre_series_identity(A2, N_A2, 0, 0)


# -- level-k twist ----------------------------------------------------------


def test_kq_a2_example():
    tw = solve_Kq(A2, (0, 1), N_A2, 0, 12)
    assert tw.n_pos[1][1][0] == RatFunc(v_pow(2) - v_pow(-2))
    # (2,1): c_21 = b_21, so n_12^r vanishes
    assert all(not tw.n_pos[r][0][1] for r in range(1, 13))


@pytest.mark.parametrize("k", [0, 1, 2])
def test_kq_diagonal_closed_form(k):
    b2 = parse_datum("B2")
    n = solve_n(b2, (1, 0))
    tw = solve_Kq(b2, (1, 0), n, k, 5)
    for i in range(2):
        for r in range(1, 6):
            expect = -RatFunc(qv(Fraction(k * r, 2))) * RatFunc((qv(2 * r * b2.d[i]) - 1) * Fraction(1, r))
            assert tw.n_pos[r][i][i] == expect == closed_form_n_pos(b2, n, k, i, i, r)


def test_kq_a_ij_zero_pair():
    a3 = parse_datum("A3")
    tw = solve_Kq(a3, (2, 0, 1), solve_n(a3, (2, 0, 1)), 1, 6)
    assert all(not tw.n_pos[r][0][2] and not tw.n_pos[r][2][0] for r in range(1, 7))


def perturbed(tw, i, j, r, delta):
    rows = [list(row) for row in tw.n_pos[r]]
    rows[i][j] = rows[i][j] + delta
    npos = dict(tw.n_pos)
    npos[r] = tuple(tuple(row) for row in rows)
    return replace(tw, n_pos=npos)


@given(st.sampled_from(["A2", "B2", "G2"]), st.integers(0, 1), st.integers(0, 1), st.integers(1, 6), st.integers(0, 2))
def test_kq_forms_agree_and_catch_perturbations(name, i, j, r, k):
    datum = parse_datum(name)
    tw = solve_Kq(datum, (0, 1), solve_n(datum, (0, 1)), k, 6)
    direct, logv = check_Kq_forms(tw)
    assert direct.ok and logv.ok
    bad = perturbed(tw, i, j, r, RatFunc(v_pow(1)))
    direct, logv = check_Kq_forms(bad)
    assert not direct.ok and not logv.ok
    assert f"({j + 1},{i + 1}) r={r}" in direct.witness


def test_kq_with_negative_modes():
    b2 = parse_datum("B2")
    n = solve_n(b2, (0, 1))
    rng = random.Random(7)
    n_neg = {r: [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)] for r in range(1, 4)}
    tw = solve_Kq(b2, (0, 1), n, 1, 3, n_neg=n_neg)
    assert check_Kq(tw).ok
    assert any(tw.n_pos[r] != solve_Kq(b2, (0, 1), n, 1, 3).n_pos[r] for r in range(1, 4))


def test_kq_corrupted_n_fails():
    tw = solve_Kq(A2, (0, 1), N_A2, 1, 4)
    assert not check_Kq(replace(tw, n=corrupt(tw.n, 0, 1))).ok


def test_kq_rejects_bad_rmax():
    with pytest.raises(ValueError):
        solve_Kq(A2, (0, 1), N_A2, 0, 0)


# -- affine pack and characters ---------------------------------------------


def test_g_series_against_sympy():
    b = -1
    g = g_series(A2, 0, 1, 6)
    ref = sympy.series((1 - q**b * Z) / (1 - q**-b * Z) * q**-b, Z, 0, 7).removeO()
    for k in range(7):
        assert sympy.simplify(to_sympy(g[k].num) / to_sympy(g[k].den) - ref.coeff(Z, k)) == 0


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_affine_pack_level_zero(name):
    datum = parse_datum(name)
    n = solve_n(datum, (1, 0))
    pack = affine_series_pack(datum, n, 0, 10)
    for key, g in pack["g"].items():
        i, j = key
        assert g[0] == RatFunc(qv(-datum.b[i][j]))
        assert pack["M"][key] == g.inverse()
        assert pack["G"][key] == TruncSeries.constant(1, 10)
        assert pack["F-"][key] == build_F(datum, n, i, j).series(10)


def test_affine_pack_level_two_constant_terms():
    pack = affine_series_pack(A2, N_A2, 2, 8)
    for (i, j), f in pack["F-"].items():
        assert f[0] == RatFunc(qv(A2.d[j] * N_A2[i][j]))
    assert not pack["G"][(0, 1)].is_constant()


def test_generalized_character():
    assert generalized_character_check(A2, N_A2, [{0: 1}, {0: 1}], 16).ok
    phis = [{-2: LaurentPoly({2: 3}), 1: 1}, {0: Fraction(1, 2), 3: -1}]
    assert generalized_character_check(A2, N_A2, phis, 16).ok


def test_generalized_character_negative_control():
    table = dict(F_table(A2, N_A2))
    table[(1, 0)] = ZRational((v_pow(2),))       # breaks the two-point constraint
    assert not generalized_character_check(A2, N_A2, [{0: 1}, {0: 1}], 16, table).ok
