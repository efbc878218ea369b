"""Sparse multivariate Laurent polynomials over Q.

A :class:`MLRing` fixes an ordered tuple of variable names; monomials are
packed into a single Python int (balanced base ``2**20`` digits, one per
variable), so that monomial multiplication is integer addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .laurent import LaurentPoly

_BASE = 1 << 20
_HALF = _BASE >> 1


class MLRing:
    def __init__(self, names: Sequence[str]):
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names: Tuple[str, ...] = tuple(names)
        self.index = {n: k for k, n in enumerate(self.names)}
        self._place = {n: _BASE ** k for k, n in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, MLRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"MLRing{self.names}"

    def key(self, exps: Mapping[str, int]) -> int:
        k = 0
        for name, e in exps.items():
            if e:
                if not -_HALF < e < _HALF:
                    raise OverflowError("exponent out of packing range")
                k += e * self._place[name]
        return k

    def unpack(self, key: int) -> Tuple[int, ...]:
        out = []
        for _ in self.names:
            r = key % _BASE
            if r >= _HALF:
                r -= _BASE
            out.append(r)
            key = (key - r) // _BASE
        return tuple(out)

    def gen(self, name: str) -> "MLPoly":
        return MLPoly(self, {self._place[name]: 1})

    def mono(self, exps: Mapping[str, int], coeff=1) -> "MLPoly":
        return MLPoly(self, {self.key(exps): coeff} if coeff else {})

    def const(self, c) -> "MLPoly":
        return MLPoly(self, {0: c} if c else {})

    def zero(self) -> "MLPoly":
        return MLPoly(self, {})

    def from_laurent(self, p: LaurentPoly, var: str = "v", extra: Mapping[str, int] | None = None) -> "MLPoly":
        """Embed a univariate Laurent polynomial, optionally times a monomial."""
        base = self.key(extra) if extra else 0
        place = self._place[var]
        return MLPoly(self, {base + e * place: c for e, c in p.items()})


class MLPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: MLRing, terms: Dict[int, object]):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if not isinstance(other, MLPoly):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MLPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MLPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return MLPoly(self.ring, {k: c * other for k, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: Dict[int, object] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MLPoly(self.ring, {k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (k, c), = self.terms.items()
            return MLPoly(self.ring, {-k * (-n): Fraction(1) / Fraction(c) ** (-n)})
        out = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    __hash__ = None

    def monomials(self) -> Iterable[Tuple[Tuple[int, ...], object]]:
        for k, c in self.terms.items():
            yield self.ring.unpack(k), c

    def degree_in(self, name: str) -> Tuple[int, int]:
        i = self.ring.index[name]
        exps = [m[i] for m, _ in self.monomials()]
        return min(exps), max(exps)

    def substitute(self, target: MLRing, images: Mapping[str, "MLPoly"]) -> "MLPoly":
        """Ring map sending each variable to an MLPoly in ``target``.

        Images of variables with negative exponents must be monomials.
        """
        out = target.zero()
        cache: Dict[Tuple[str, int], MLPoly] = {}
        for exps, c in self.monomials():
            term = target.const(c)
            for name, e in zip(self.ring.names, exps):
                if e:
                    p = cache.get((name, e))
                    if p is None:
                        p = images[name] ** e
                        cache[(name, e)] = p
                    term = term * p
            out = out + term
        return out

    def render(self) -> str:
        """Deterministic rendering: graded lexicographic by variable name."""
        if not self.terms:
            return "0"
        names = self.ring.names
        order = sorted(range(len(names)), key=lambda i: names[i])
        rows = []
        for exps, c in self.monomials():
            deg = sum(abs(e) for e in exps)
            rows.append(((-deg, tuple(-exps[i] for i in order)), exps, c))
        rows.sort(key=lambda r: r[0])
        parts = []
        for _, exps, c in rows:
            mono = "*".join(
                names[i] if exps[i] == 1 else f"{names[i]}^{exps[i]}" for i in order if exps[i]
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MLPoly({self.render()})"


def prod(polys: Iterable[MLPoly], ring: MLRing) -> MLPoly:
    out = ring.const(1)
    for p in polys:
        out = out * p
    return out
