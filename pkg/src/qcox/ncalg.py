"""Normal ordering in the algebra generated by ``X_i^+``, ``X_i^-`` and ``L^lam``.

Every element is stored as a sum of terms ``coeff * L^lam * X^-_{word} * X^+_{word}``.
Only two rule families are used:

* ``X_j^+ L^lam = q_j^(-lam_j) L^lam X_j^+`` and ``X_j^- L^lam = q_j^(lam_j) L^lam X_j^-``;
* ``X_i^+ X_j^- = X_j^- X_i^+ + delta_ij (K_i - K_i^-1) / (q_i - q_i^-1)`` with
  ``K_i = L^kappa_i``, ``(kappa_i)_p = a_pi``.

Words in ``X^+`` (and in ``X^-``) are free: no Serre rewriting happens, so a
deformed Serre combination is compared against the explicit Serre element
instead of being reduced to zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import coxeter
from .cartan import CartanDatum
from .laurent import ONE as LONE
from .laurent import LaurentPoly, RatFunc, v_pow
from .qnum import q_binomial
from .verdict import Verdict

Key = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


class NCAlgebra:
    """Rewriting engine for one Cartan datum.

    ``exchange_sign`` flips the sign of the lattice exchange rule; it exists
    only to build deliberately broken engines for negative controls.
    """

    def __init__(self, datum: CartanDatum, exchange_sign: int = 1):
        self.datum = datum
        self.rank = datum.rank
        self.exchange_sign = exchange_sign
        l = self.rank
        self.kappa = [tuple(datum.a[p][i] for p in range(l)) for i in range(l)]
        self._bracket = [
            RatFunc(LONE) / RatFunc(v_pow(2 * datum.d[i]) - v_pow(-2 * datum.d[i])) for i in range(l)
        ]
        self._zero_lattice = (0,) * l

    # -- constructors -------------------------------------------------------

    def element(self, terms: Dict[Key, RatFunc]) -> "NCExpr":
        return NCExpr(self, {k: c for k, c in terms.items() if c})

    def term(self, coeff=1, lattice=None, minus=(), plus=()) -> "NCExpr":
        lam = tuple(lattice) if lattice is not None else self._zero_lattice
        c = RatFunc.coerce(coeff)
        return self.element({(lam, tuple(minus), tuple(plus)): c})

    def one(self) -> "NCExpr":
        return self.term()

    def zero(self) -> "NCExpr":
        return NCExpr(self, {})

    def L(self, lam: Sequence[int]) -> "NCExpr":
        return self.term(lattice=lam)

    def unit_lattice(self, i: int, power: int = 1) -> "NCExpr":
        lam = [0] * self.rank
        lam[i] = power
        return self.L(lam)

    def Xp(self, i: int) -> "NCExpr":
        return self.term(plus=(i,))

    def Xm(self, i: int) -> "NCExpr":
        return self.term(minus=(i,))

    def K(self, i: int, power: int = 1) -> "NCExpr":
        return self.L(tuple(power * x for x in self.kappa[i]))

    # -- rewriting ----------------------------------------------------------

    def _move_exp(self, mu, minus, plus) -> int:
        """v-exponent picked up when ``L^mu`` moves left past ``X^-_minus X^+_plus``."""
        d = self.datum.d
        s = 0
        for x in minus:
            s += d[x] * mu[x]
        for x in plus:
            s -= d[x] * mu[x]
        return 2 * self.exchange_sign * s

    def _times_minus(self, lam, minus, plus, j) -> List[Tuple[RatFunc, Key]]:
        """``L^lam X^-_minus X^+_plus * X_j^-`` in normal form (unit coefficient)."""
        if not plus:
            return [(RatFunc.coerce(1), (lam, minus + (j,), ()))]
        p = plus[-1]
        head = plus[:-1]
        out = [(c, (l2, m2, p2 + (p,))) for c, (l2, m2, p2) in self._times_minus(lam, minus, head, j)]
        if p == j:
            for sign in (1, -1):
                mu = tuple(sign * x for x in self.kappa[p])
                e = self._move_exp(mu, minus, head)
                c = self._bracket[p] * RatFunc(LaurentPoly({e: sign}))
                out.append((c, (tuple(a + b for a, b in zip(lam, mu)), minus, head)))
        return out

    def mul(self, x: "NCExpr", y: "NCExpr") -> "NCExpr":
        out: Dict[Key, RatFunc] = {}
        for (lam2, minus2, plus2), c2 in y.terms.items():
            cur = x.terms
            if any(lam2):
                nxt: Dict[Key, RatFunc] = {}
                for (lam, mi, pl), c in cur.items():
                    e = self._move_exp(lam2, mi, pl)
                    key = (tuple(a + b for a, b in zip(lam, lam2)), mi, pl)
                    _accum(nxt, key, c * RatFunc(v_pow(e), _canonical=True))
                cur = nxt
            for j in minus2:
                nxt = {}
                for (lam, mi, pl), c in cur.items():
                    for cj, key in self._times_minus(lam, mi, pl, j):
                        _accum(nxt, key, c * cj)
                cur = nxt
            for (lam, mi, pl), c in cur.items():
                _accum(out, (lam, mi, pl + plus2), c * c2)
        return NCExpr(self, out)


def _accum(d: Dict, key, c: RatFunc) -> None:
    if key in d:
        s = d[key] + c
        if s:
            d[key] = s
        else:
            del d[key]
    elif c:
        d[key] = c


class NCExpr:
    """Normal-ordered element; immutable by convention."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: NCAlgebra, terms: Dict[Key, RatFunc]):
        self.alg = alg
        self.terms = terms

    def _coerce(self, other) -> "NCExpr":
        if isinstance(other, NCExpr):
            return other
        return self.alg.term(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _accum(t, k, c)
        return NCExpr(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return NCExpr(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "NCExpr":
        c = RatFunc.coerce(c)
        if not c:
            return self.alg.zero()
        return NCExpr(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCExpr):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCExpr):
            other = self._coerce(other)
        return self.terms == other.terms

    __hash__ = None

    def coeff(self, key: Key) -> RatFunc:
        return self.terms.get(key, RatFunc.coerce(0))

    def weight(self, key: Key) -> Tuple[int, ...]:
        w = [0] * self.alg.rank
        for x in key[2]:
            w[x] += 1
        for x in key[1]:
            w[x] -= 1
        return tuple(w)

    def weights(self) -> set:
        return {self.weight(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def omega(self) -> "NCExpr":
        """Swap the ``X^+`` and ``X^-`` words and invert lattice monomials.

        On elements whose terms carry only one kind of letter (all this is
        used for) this is the restriction of the Chevalley-type involution.
        """
        return NCExpr(
            self.alg,
            {(tuple(-x for x in lam), pl, mi): c for (lam, mi, pl), c in self.terms.items()},
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        rows = []
        for (lam, mi, pl), c in sorted(self.terms.items(), key=lambda kv: kv[0]):
            rows.append(
                f"({c.render()}) · L^({','.join(map(str, lam))})"
                f" · Xm({','.join(str(x + 1) for x in mi)})"
                f" · Xp({','.join(str(x + 1) for x in pl)})"
            )
        return " + ".join(rows)

    def __repr__(self):
        return f"NCExpr({self.render()})"


def nc_mul(x: NCExpr, y: NCExpr) -> NCExpr:
    return x.alg.mul(x, y)


# -- images of the Coxeter-realization generators ---------------------------


def psi_images(datum: CartanDatum, n, alg: NCAlgebra | None = None):
    """``e_i = q_i^(-n_ii) L^(n_i.) X_i^+``, ``f_i = L^(-n_i.) X_i^-``, ``K_i = L^kappa_i``."""
    alg = alg or NCAlgebra(datum)
    l = datum.rank
    e, f, k = [], [], []
    for i in range(l):
        row = tuple(n[i][p] for p in range(l))
        e.append(alg.term(v_pow(-2 * datum.d[i] * n[i][i]), lattice=row, plus=(i,)))
        f.append(alg.term(1, lattice=tuple(-x for x in row), minus=(i,)))
        k.append(alg.K(i))
    return {"e": e, "f": f, "K": k, "alg": alg}


def _c_matrix(datum: CartanDatum, perm):
    return coxeter.cayley_pairing(datum, perm)


def _qc(cij) -> RatFunc:
    c = Fraction(cij) * 2
    if c.denominator != 1:
        raise ValueError(f"c = {cij} is not a half-integer")
    return RatFunc(v_pow(int(c)))


def check_cross_relations(datum: CartanDatum, perm, n, alg: NCAlgebra | None = None) -> Verdict:
    """``e_i f_j - q^c_ij f_j e_i - delta_ij (K_i - K_i^-1)/(q_i - q_i^-1) = 0`` for all pairs."""
    img = psi_images(datum, n, alg)
    alg = img["alg"]
    c = _c_matrix(datum, perm)
    for i in range(datum.rank):
        for j in range(datum.rank):
            e, f = img["e"][i], img["f"][j]
            res = e * f - (f * e).scale(_qc(c[i][j]))
            if i == j:
                res = res - (alg.K(i) - alg.K(i, -1)).scale(alg._bracket[i])
            if res:
                return Verdict.failed(f"({i + 1},{j + 1}): {res.render()}")
    return Verdict.passed()


def check_torus_relations(datum: CartanDatum, n, alg: NCAlgebra | None = None) -> Verdict:
    """``L_i e_j L_i^-1 = q_i^delta_ij e_j`` and ``L_i f_j L_i^-1 = q_i^-delta_ij f_j``."""
    img = psi_images(datum, n, alg)
    alg = img["alg"]
    for i in range(datum.rank):
        li, li_inv = alg.unit_lattice(i), alg.unit_lattice(i, -1)
        for j in range(datum.rank):
            shift = 2 * datum.d[i] if i == j else 0
            for name, sgn in (("e", 1), ("f", -1)):
                x = img[name][j]
                res = li * x * li_inv - x.scale(RatFunc(v_pow(sgn * shift)))
                if res:
                    return Verdict.failed(f"L_{i + 1} {name}_{j + 1}: {res.render()}")
    return Verdict.passed()


def serre_element(alg: NCAlgebra, i: int, j: int, side: str = "e") -> NCExpr:
    """``sum_r (-1)^r [m, r]_(q_i) X_i^(m-r) X_j X_i^r`` on the chosen side."""
    m = 1 - alg.datum.a[i][j]
    di = alg.datum.d[i]
    out = alg.zero()
    for r in range(m + 1):
        word = (i,) * (m - r) + (j,) + (i,) * r
        coeff = q_binomial(m, r, di) * (-1) ** r
        if side == "e":
            out = out + alg.term(coeff, plus=word)
        else:
            out = out + alg.term(coeff, minus=word)
    return out


def deformed_serre(alg: NCAlgebra, gens, i: int, j: int, cexp, form: str = "ascending") -> NCExpr:
    """Twisted Serre combination of the generators ``gens`` (the e's or the f's).

    ``form="ascending"``: ``sum_k (-1)^k [m,k] q^(k c) g_i^k g_j g_i^(m-k)``.
    ``form="descending"``: ``sum_r (-1)^r [m,r] q^(r c) g_i^(m-r) g_j g_i^r``.
    ``cexp=None`` drops the twist factor entirely.
    """
    m = 1 - alg.datum.a[i][j]
    di = alg.datum.d[i]
    out = alg.zero()
    gi, gj = gens[i], gens[j]
    powers = [alg.one()]
    for _ in range(m):
        powers.append(powers[-1] * gi)
    step = 0 if cexp is None else int(Fraction(cexp) * 2)
    for k in range(m + 1):
        coeff = RatFunc(q_binomial(m, k, di).shift(k * step) * (-1) ** k)
        if form == "ascending":
            word = powers[k] * gj * powers[m - k]
        elif form == "descending":
            word = powers[m - k] * gj * powers[k]
        else:
            raise ValueError(f"unknown form {form!r}")
        out = out + word.scale(coeff)
    return out


def _match_unit_multiple(s: NCExpr, t: NCExpr):
    """Return ``u`` with ``s == u * t`` and ``u`` a unit monomial, else None."""
    if not t:
        return None
    key = min(t.terms)
    u = s.coeff(key) / t.terms[key]
    if not u.is_unit_monomial():
        return None
    if s - t.scale(u):
        return None
    return u


def check_deformed_serre_images(
    datum: CartanDatum,
    perm,
    n,
    pairs=None,
    side: str = "e",
    form: str = "ascending",
    twist: bool = True,
    alg: NCAlgebra | None = None,
) -> Verdict:
    """Deformed Serre combination of images equals unit * L^mu * ordinary Serre element.

    The twisted combination is built with ``q^(k c_ij)`` from the Cayley
    pairing; ``twist=False`` omits that factor (negative control).
    """
    img = psi_images(datum, n, alg)
    alg = img["alg"]
    c = _c_matrix(datum, perm)
    gens = img[side]
    l = datum.rank
    if pairs is None:
        pairs = [(i, j) for i in range(l) for j in range(l) if i != j and datum.a[i][j] != 0]
    for i, j in pairs:
        m = 1 - datum.a[i][j]
        s = deformed_serre(alg, gens, i, j, c[i][j] if twist else None, form)
        mu = tuple(m * n[i][p] + n[j][p] for p in range(l))
        if side == "f":
            mu = tuple(-x for x in mu)
        target = alg.L(mu) * serre_element(alg, i, j, side)
        if not s.is_homogeneous():
            return Verdict.failed(f"({i + 1},{j + 1}): inhomogeneous residual {s.render()}")
        if _match_unit_multiple(s, target) is None:
            return Verdict.failed(f"({i + 1},{j + 1}): {s.render()} is not a unit multiple of L^{mu} * Serre")
    return Verdict.passed()


def check_serre_mirror(datum: CartanDatum, perm, n, alg: NCAlgebra | None = None) -> Verdict:
    """The f-side certificate is the image of the e-side one under ``omega``."""
    img = psi_images(datum, n, alg)
    alg = img["alg"]
    c = _c_matrix(datum, perm)
    l = datum.rank
    for i in range(l):
        for j in range(l):
            if i == j or datum.a[i][j] == 0:
                continue
            se = deformed_serre(alg, img["e"], i, j, c[i][j])
            sf = deformed_serre(alg, img["f"], i, j, c[i][j])
            if _match_unit_multiple(se.omega(), sf) is None:
                return Verdict.failed(f"({i + 1},{j + 1}): omega(e-side) is not a unit multiple of the f-side")
            if serre_element(alg, i, j, "e").omega() != serre_element(alg, i, j, "f"):
                return Verdict.failed(f"({i + 1},{j + 1}): omega does not map Serre_+ to Serre_-")
    return Verdict.passed()


def check_theorem1(datum: CartanDatum, perm, n=None) -> Verdict:
    if n is None:
        n = coxeter.solve_n(datum, perm)
    alg = NCAlgebra(datum)
    return Verdict.combine(
        [
            check_torus_relations(datum, n, alg),
            check_cross_relations(datum, perm, n, alg),
            check_deformed_serre_images(datum, perm, n, side="e", alg=alg),
            check_deformed_serre_images(datum, perm, n, side="f", alg=alg),
            check_serre_mirror(datum, perm, n, alg),
        ]
    )
