import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcox.laurent import LaurentPoly
from qcox.mlpoly import MLRing, prod

RING = MLRing(("v", "x", "y"))


@st.composite
def mlpolys(draw):
    terms = draw(st.lists(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4)),
        max_size=4,
    ))
    out = RING.zero()
    for a, b, c, k in terms:
        out = out + RING.mono({"v": a, "x": b, "y": c}, k)
    return out


@given(mlpolys(), mlpolys(), mlpolys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert not (a - a)


@given(st.integers(-400, 400), st.integers(-400, 400), st.integers(-400, 400))
def test_packing_round_trip(a, b, c):
    assert RING.unpack(RING.key({"v": a, "x": b, "y": c})) == (a, b, c)


def test_monomial_inverse_and_power():
    x = RING.gen("x")
    assert x**-2 * x**2 == RING.const(1)
    with pytest.raises(ValueError):
        (x + 1) ** -1


def test_difference_of_squares():
    x, y = RING.gen("x"), RING.gen("y")
    assert (x - y) * (x + y) == x**2 - y**2
    assert prod([x, y, x], RING) == x**2 * y


def test_from_laurent_and_substitute():
    p = RING.from_laurent(LaurentPoly({-1: 2, 3: 1}), "v", {"x": 1})
    assert p == RING.mono({"v": -1, "x": 1}, 2) + RING.mono({"v": 3, "x": 1})
    target = MLRing(("v", "t"))
    img = p.substitute(target, {"v": target.gen("t"), "x": target.gen("v"), "y": target.const(1)})
    assert img == target.mono({"t": -1, "v": 1}, 2) + target.mono({"t": 3, "v": 1})


def test_render_is_deterministic():
    x, y = RING.gen("x"), RING.gen("y")
    a = x * y + 3 * x**2 - y
    b = -y + 3 * x**2 + y * x
    assert a.render() == b.render()
