"""Finite-type Cartan data.

Convention: ``a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``, so that
``b[i][j] = d[i] * a[i][j]`` is the symmetric Gram matrix of the simple roots.
Nodes are numbered as in Bourbaki's plates (indices are 0-based internally,
1-based in rendered output):

======  ==========================================================
family  diagram / orientation
======  ==========================================================
A_l     chain 1-2-...-l
B_l     chain, alpha_l short:  a[l][l-1] = -2        (l >= 2)
C_l     chain, alpha_l long:   a[l-1][l] = -2        (l >= 3; C2 = B2)
D_l     chain 1-...-(l-2), node l-2 joined to l-1 and l    (l >= 3)
E_l     chain 1-3-4-...-l, node 2 joined to 4        (l = 6, 7, 8)
F_4     1-2 long, 3-4 short:   a[3][2] = -2
G_2     alpha_1 short:         a[1][2] = -3
======  ==========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from . import linalg
from .verdict import Verdict

Matrix = Tuple[Tuple[int, ...], ...]

COXETER_NUMBERS = {"E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    a: Matrix
    d: Tuple[int, ...]
    b: Matrix

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def coxeter_number(self) -> int:
        return coxeter_number(self.family, self.rank)

    def __str__(self):
        return self.name


def coxeter_number(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family in "BC":
        return 2 * rank
    if family == "D":
        return 2 * rank - 2
    return COXETER_NUMBERS[f"{family}{rank}"]


def _check_pair(family: str, rank: int) -> str:
    family = family.upper()
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if family not in ok:
        raise ValueError(f"unknown Cartan family {family!r}; expected one of A-G")
    if not ok[family]:
        raise ValueError(f"{family}{rank} is not a finite-type Cartan datum")
    return family


def _edges(family: str, l: int) -> List[Tuple[int, int]]:
    if family in "ABC":
        return [(i, i + 1) for i in range(l - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    if family == "E":
        return [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, l - 1)]
    if family == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def cartan_matrix(family: str, rank: int) -> Matrix:
    family = _check_pair(family, rank)
    if family == "C" and rank == 2:
        family = "B"
    l = rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    for i, j in _edges(family, l):
        a[i][j] = a[j][i] = -1
    if family == "B":
        a[l - 1][l - 2] = -2
    elif family == "C":
        a[l - 2][l - 1] = -2
    elif family == "F":
        a[2][1] = -2
    elif family == "G":
        a[0][1] = -3
    return tuple(tuple(r) for r in a)


def symmetrize(a) -> Tuple[int, ...]:
    """Coprime positive ``d`` with ``d[i] a[i][j] = d[j] a[j][i]``.

    Propagates ratios along the Dynkin graph; raises ``ValueError`` when the
    matrix is not symmetrizable or is decomposable (no unique answer).
    """
    l = len(a)
    d: List[Fraction | None] = [None] * l
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if j == i or a[i][j] == 0:
                continue
            if a[j][i] == 0:
                raise ValueError(f"a[{i}][{j}] != 0 but a[{j}][{i}] == 0")
            dj = d[i] * Fraction(a[i][j], a[j][i])
            if dj <= 0:
                raise ValueError("no positive symmetrizer")
            if d[j] is None:
                d[j] = dj
                stack.append(j)
            elif d[j] != dj:
                raise ValueError("matrix is not symmetrizable")
    if any(x is None for x in d):
        raise ValueError("decomposable matrix: symmetrizer is not unique")
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def make_cartan(family: str, rank: int) -> CartanDatum:
    """Build the canonical datum, e.g. ``make_cartan("G", 2)``."""
    a = cartan_matrix(family, rank)
    fam = family.upper()
    if fam == "C" and rank == 2:
        fam = "B"
    d = symmetrize(a)
    b = tuple(tuple(d[i] * a[i][j] for j in range(rank)) for i in range(rank))
    datum = CartanDatum(fam, rank, a, d, b)
    v = validate(datum)
    if not v.ok:
        raise AssertionError(f"constructed {datum.name} violates {v.violations}")
    return datum


def parse_datum(label: str) -> CartanDatum:
    """``"G2"`` -> ``make_cartan("G", 2)``."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise ValueError(f"bad Cartan label {label!r}")
    return make_cartan(label[0], int(label[1:]))


def validate(datum: CartanDatum) -> Verdict:
    bad = []
    a, d, b = datum.a, datum.d, datum.b
    l = len(a)
    if any(len(r) != l for r in a) or len(d) != l:
        return Verdict.failed("shape mismatch")
    if any(a[i][i] != 2 for i in range(l)):
        bad.append("a_ii = 2")
    if any(a[i][j] > 0 for i in range(l) for j in range(l) if i != j):
        bad.append("a_ij <= 0 for i != j")
    if any((a[i][j] == 0) != (a[j][i] == 0) for i in range(l) for j in range(l)):
        bad.append("a_ij = 0 <=> a_ji = 0")
    if any(b[i][j] != b[j][i] for i in range(l) for j in range(l)):
        bad.append("b symmetric")
    if any(b[i][j] != d[i] * a[i][j] for i in range(l) for j in range(l)):
        bad.append("b = diag(d) a")
    g = 0
    for x in d:
        g = gcd(g, x)
    if any(x <= 0 for x in d) or g != 1:
        bad.append("d positive and coprime")
    if linalg.det(a) == 0:
        bad.append("det(a) != 0")
    if bad:
        return Verdict.failed("; ".join(bad), bad)
    return Verdict.passed()


def all_finite(max_rank: int = 4) -> List[CartanDatum]:
    """Every indecomposable finite type of rank <= max_rank (C2 omitted as B2)."""
    out = []
    for fam, ranks in [
        ("A", range(1, max_rank + 1)),
        ("B", range(2, max_rank + 1)),
        ("C", range(3, max_rank + 1)),
        ("D", range(4, max_rank + 1)),
        ("E", [r for r in (6, 7, 8) if r <= max_rank]),
        ("F", [4] if max_rank >= 4 else []),
        ("G", [2] if max_rank >= 2 else []),
    ]:
        out.extend(make_cartan(fam, r) for r in ranks)
    return out
