"""Coxeter elements, their Cayley transforms, and integer twists ``n``.

Matrices act on coordinates in the simple-root basis and hold images of
basis vectors in their columns: ``m[k][i]`` is the ``alpha_k``-coordinate of
``s(alpha_i)``.  Permutations are 0-based tuples internally; ``perm[k]`` is
the index of the ``k``-th reflection in the product ``s_perm[0] ... s_perm[l-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple

from . import linalg
from .cartan import CartanDatum

Perm = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CoxeterRealizationData:
    datum: CartanDatum
    perm: Perm
    m: IntMatrix
    eps: IntMatrix
    c: Tuple[Tuple[Fraction, ...], ...]
    n: IntMatrix


def check_perm(perm: Sequence[int], rank: int) -> Perm:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(rank)):
        raise ValueError(f"{render_perm(perm)} is not a permutation of 1..{rank}")
    return perm


def parse_perm(text: str) -> Perm:
    """One-line notation ``"2,1,3"`` (1-based) -> ``(1, 0, 2)``."""
    return tuple(int(x) - 1 for x in text.split(","))


def render_perm(perm: Sequence[int]) -> str:
    return ",".join(str(p + 1) for p in perm)


def all_perms(rank: int) -> List[Perm]:
    return list(permutations(range(rank)))


def reflection_matrix(datum: CartanDatum, i: int) -> IntMatrix:
    """Matrix of ``s_i``: column ``j`` is ``alpha_j - a_ij alpha_i``."""
    l = datum.rank
    if not 0 <= i < l:
        raise IndexError(f"reflection index {i + 1} outside 1..{l}")
    m = linalg.identity(l)
    for j in range(l):
        m[i][j] -= datum.a[i][j]
    return linalg.frozen(m)


def coxeter_matrix(datum: CartanDatum, perm: Sequence[int], method: str = "product") -> IntMatrix:
    perm = check_perm(perm, datum.rank)
    l = datum.rank
    if method == "product":
        m = linalg.identity(l)
        for i in perm:
            m = linalg.matmul(m, reflection_matrix(datum, i))
        return linalg.frozen(m)
    if method == "gauss":
        # Gauss decomposition: with V (k >= i) and U (k < i) taken from the
        # Cartan matrix along the order perm, s_perm = (I + U)^-1 (I - V).
        a = datum.a
        u = [[0] * l for _ in range(l)]
        v = [[0] * l for _ in range(l)]
        for k in range(l):
            for i in range(l):
                target = v if k >= i else u
                target[perm[k]][perm[i]] = a[perm[k]][perm[i]]
        eye = linalg.identity(l)
        res = linalg.matmul(linalg.inverse(linalg.add(eye, u)), linalg.add(eye, v, -1))
        if any(x.denominator != 1 for row in res for x in row):
            raise AssertionError("Gauss route produced a non-integral matrix")
        return linalg.frozen([[int(x) for x in row] for row in res])
    raise ValueError(f"unknown method {method!r}; use 'product' or 'gauss'")


def matrix_order(m, limit: int = 1000) -> int:
    """Smallest ``h > 0`` with ``m**h = I``."""
    eye = linalg.frozen(linalg.identity(len(m)))
    p = m
    for h in range(1, limit + 1):
        if linalg.frozen(p) == eye:
            return h
        p = linalg.matmul(p, m)
    raise ValueError(f"matrix order exceeds {limit}")


def cayley_pairing(datum: CartanDatum, perm: Sequence[int]):
    """``c[i][j] = ((1 + s)/(1 - s) alpha_i, alpha_j)`` as exact rationals."""
    m = coxeter_matrix(datum, perm)
    l = datum.rank
    eye = linalg.identity(l)
    try:
        inv = linalg.inverse(linalg.add(eye, m, -1))
    except ZeroDivisionError:
        raise AssertionError("I - s is singular: not a Coxeter element") from None
    cay = linalg.matmul(linalg.add(eye, m), inv)
    # (C alpha_i, alpha_j) = sum_k C[k][i] b[k][j]
    return linalg.frozen(linalg.matmul(linalg.transpose(cay), datum.b))


def epsilon_matrix(perm: Sequence[int], rank: int) -> IntMatrix:
    perm = check_perm(perm, rank)
    pos = {p: k for k, p in enumerate(perm)}
    return tuple(
        tuple(0 if i == j else (-1 if pos[i] < pos[j] else 1) for j in range(rank))
        for i in range(rank)
    )


def eqpi_residual(datum: CartanDatum, n, c) -> List[List[Fraction]]:
    """``d_i n_ji - d_j n_ij - c_ij`` for all ``i, j``."""
    d, l = datum.d, datum.rank
    return [[d[i] * n[j][i] - d[j] * n[i][j] - c[i][j] for j in range(l)] for i in range(l)]


def solve_n(datum: CartanDatum, perm: Sequence[int], s=None) -> IntMatrix:
    """Integer solution of ``d_i n_ji - d_j n_ij = c_ij``.

    Uses ``n_ji = (eps_ij a_ij + s_ij / d_i) / 2`` for a symmetric ``s``
    (default ``s = b``) and then checks the result against the Cayley
    pairing by substitution.
    """
    l = datum.rank
    if s is None:
        s = datum.b
    if any(s[i][j] != s[j][i] for i in range(l) for j in range(l)):
        raise ValueError("s must be symmetric")
    eps = epsilon_matrix(perm, l)
    a, d = datum.a, datum.d
    n = [[0] * l for _ in range(l)]
    for i in range(l):
        for j in range(l):
            val = Fraction(eps[i][j] * a[i][j], 2) + Fraction(s[i][j], 2 * d[i])
            if val.denominator != 1:
                raise ValueError(f"non-integral n[{j + 1}][{i + 1}] = {val} for the given s")
            n[j][i] = int(val)
    c = cayley_pairing(datum, perm)
    res = eqpi_residual(datum, n, c)
    if any(x != 0 for row in res for x in row):
        raise AssertionError(f"solve_n output fails the (d, c) substitution check: {res}")
    return linalg.frozen(n)


def realization(datum: CartanDatum, perm: Sequence[int]) -> CoxeterRealizationData:
    perm = check_perm(perm, datum.rank)
    return CoxeterRealizationData(
        datum=datum,
        perm=perm,
        m=coxeter_matrix(datum, perm),
        eps=epsilon_matrix(perm, datum.rank),
        c=cayley_pairing(datum, perm),
        n=solve_n(datum, perm),
    )


def c_from_n(datum: CartanDatum, n) -> List[List[int]]:
    """The skew combination ``d_i n_ji - d_j n_ij`` that the twist realizes."""
    d, l = datum.d, datum.rank
    return [[d[i] * n[j][i] - d[j] * n[i][j] for j in range(l)] for i in range(l)]
