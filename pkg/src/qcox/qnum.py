"""Balanced q-integers, q-binomials and the scalar character identities."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet

from .laurent import ONE, ZERO, LaurentPoly, Number, poly_exact_div, q_pow
from .mlpoly import MLRing
from .verdict import Verdict


@lru_cache(maxsize=None)
def q_int(nval: int, scale: int = 1) -> LaurentPoly:
    """``[n]`` in the variable ``q**scale``: ``(x^n - x^-n) / (x - x^-1)``."""
    if nval == 0:
        return ZERO
    if nval < 0:
        return -q_int(-nval, scale)
    return LaurentPoly({2 * scale * (nval - 1 - 2 * k): 1 for k in range(nval)})


@lru_cache(maxsize=None)
def q_factorial(nval: int, scale: int = 1) -> LaurentPoly:
    out = ONE
    for k in range(1, nval + 1):
        out = out * q_int(k, scale)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, k: int, scale: int = 1) -> LaurentPoly:
    if not 0 <= k <= m:
        raise ValueError(f"q_binomial needs 0 <= k <= m, got m={m}, k={k}")
    # q-Pascal: [m, k] = x^k [m-1, k] + x^(k-m) [m-1, k-1]
    if k == 0 or k == m:
        return ONE
    x = 2 * scale
    return q_binomial(m - 1, k, scale).shift(x * k) + q_binomial(m - 1, k - 1, scale).shift(x * (k - m))


def q_binomial_by_factorials(m: int, k: int, scale: int = 1) -> LaurentPoly:
    """Independent route: exact division of q-factorials."""
    return poly_exact_div(q_factorial(m, scale), q_factorial(k, scale) * q_factorial(m - k, scale))


def q_binomial_theorem_check(m: int) -> Verdict:
    """``sum_k (-z)^k [m,k]_t == prod_p (1 - t^(m-1-2p) z)`` in Z[t^+-1, z]."""
    ring = MLRing(("t", "z"))
    z = ring.gen("z")
    lhs = ring.zero()
    for k in range(m + 1):
        # q-binomials have even v-exponents; t plays the role of q
        coeff = LaurentPoly({e // 2: c for e, c in q_binomial(m, k).items()})
        lhs = lhs + ring.from_laurent(coeff, "t") * ((-z) ** k)
    rhs = ring.const(1)
    for p in range(m):
        rhs = rhs * (1 - ring.mono({"t": m - 1 - 2 * p, "z": 1}))
    res = lhs - rhs
    if res:
        return Verdict.failed(res.render())
    return Verdict.passed()


def lemma1_sum(m: int, c: Fraction) -> LaurentPoly:
    """``sum_k (-1)^k [m,k]_t t^(k c)`` with ``t = s^D`` for ``c = p/D``.

    The result is a Laurent polynomial in ``v`` with ``s = v**2``.
    """
    c = Fraction(c)
    p, big_d = c.numerator, c.denominator
    out = ZERO
    for k in range(m + 1):
        term = q_binomial(m, k, big_d).shift(2 * k * p)
        out = out + (term if k % 2 == 0 else -term)
    return out


def rational_solution_set(m: int, max_denominator: int = 4, bound: int | None = None) -> FrozenSet[Fraction]:
    """All ``c = p/D`` (``|c| <= bound``, ``D <= max_denominator``) solving the sum."""
    if m < 1:
        raise ValueError("m must be positive")
    if bound is None:
        bound = m + 2
    found = set()
    for big_d in range(1, max_denominator + 1):
        for p in range(-bound * big_d, bound * big_d + 1):
            c = Fraction(p, big_d)
            if c in found or c.denominator != big_d:
                continue
            if lemma1_sum(m, c).is_zero():
                found.add(c)
    return frozenset(found)


def serre_character_scalar(m: int, cexp: Number, scale: int = 1) -> LaurentPoly:
    """``sum_r (-1)^r q^(r cexp) [m, r]_(q^scale)``.

    ``cexp`` is a q-exponent (half-integers allowed).
    """
    step = Fraction(cexp) * 2
    if step.denominator != 1:
        raise ValueError(f"q-exponent {cexp} is not a half-integer")
    step = int(step)
    out = ZERO
    for r in range(m + 1):
        term = q_binomial(m, r, scale).shift(r * step)
        out = out + (term if r % 2 == 0 else -term)
    return out


def nogo_scalar(scale: int) -> LaurentPoly:
    """The untwisted character value for ``a_ij = -1``: ``2 - q_i - q_i^-1``."""
    return serre_character_scalar(2, 0, scale)


__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_by_factorials",
    "q_binomial_theorem_check",
    "lemma1_sum",
    "rational_solution_set",
    "serre_character_scalar",
    "nogo_scalar",
    "q_pow",
]
