"""Exact Laurent polynomials and rational functions in one formal variable.

Everything is expressed in the variable ``v`` with ``q = v**2``, so that
half-integer powers of ``q`` (needed for ``q**(k*r/2)``) stay inside the ring.
Coefficients are Python ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

Number = Union[int, Fraction]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_e v**e`` with exact coefficients.

    Instances are immutable and hashable; the zero polynomial has no terms.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        c = {}
        if coeffs:
            for e, x in coeffs.items():
                if x:
                    c[int(e)] = _norm(x)
        self._c: Dict[int, Number] = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Number]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q(cls, qexp: Number, coeff: Number = 1) -> "LaurentPoly":
        """``coeff * q**qexp``; ``qexp`` may be a half-integer."""
        e = Fraction(qexp) * 2
        if e.denominator != 1:
            raise ValueError(f"q-exponent {qexp} is not a half-integer")
        return cls({int(e): coeff})

    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, Number]:
        return dict(self._c)

    def items(self) -> List[Tuple[int, Number]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def leading(self) -> Number:
        return self._c[max(self._c)]

    def coeff(self, e: int) -> Number:
        return self._c.get(e, 0)

    def constant_value(self):
        """The scalar value if this is a constant, else ``None``."""
        if not self._c:
            return 0
        if len(self._c) == 1 and 0 in self._c:
            return self._c[0]
        return None

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly({0: x}) if x else LaurentPoly()
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, x in other._c.items():
            y = c.get(e, 0) + x
            if y:
                c[e] = _norm(y)
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -x for e, x in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: _norm(x * other) for e, x in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: Dict[int, Number] = {}
        for e1, x1 in self._c.items():
            for e2, x2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + x1 * x2
        return LaurentPoly({e: x for e, x in c.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, x), = self._c.items()
            return LaurentPoly({-e * (-n): Fraction(1, 1) / Fraction(x) ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        return LaurentPoly._raw({e + k: x for e, x in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``v -> 1/v``."""
        return LaurentPoly._raw({-e: x for e, x in self._c.items()})

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute ``v -> v**k``."""
        return LaurentPoly._raw({e * k: x for e, x in self._c.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Sorted sum, in q-units when every v-exponent is even."""
        if not self._c:
            return "0"
        even = all(e % 2 == 0 for e in self._c)
        sym, scale = ("q", 2) if even else ("v", 1)
        parts = []
        for e, x in sorted(self._c.items()):
            k = e // scale
            if k == 0:
                mono = ""
            elif k == 1:
                mono = sym
            else:
                mono = f"{sym}^{k}"
            if not mono:
                body = str(abs(x))
            elif abs(x) == 1:
                body = mono
            else:
                body = f"{abs(x)}*{mono}"
            parts.append((x < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def v_pow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({e: 1})


def q_pow(qexp: Number) -> LaurentPoly:
    return LaurentPoly.q(qexp)


# -- dense polynomial helpers (ascending coefficient lists over Q) ----------

def _to_dense(p: LaurentPoly) -> List[Fraction]:
    lo, hi = p.min_exp(), p.max_exp()
    out = [Fraction(0)] * (hi - lo + 1)
    for e, x in p._c.items():
        out[e - lo] = Fraction(x)
    return out


def _from_dense(c: Iterable[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly({i + shift: x for i, x in enumerate(c) if x})


def _trim(a: List[Fraction]) -> List[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _divmod(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(_trim(a)) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, x in enumerate(b):
            a[k + i] -= f * x
        a.pop()
    return q, a


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, _trim(r)
    lc = a[-1]
    return [x / lc for x in a]


def poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``a / b`` in the Laurent ring; raises if inexact."""
    if not a:
        return ZERO
    da, db = _to_dense(a), _to_dense(b)
    q, r = _divmod(da, db)
    if _trim(r):
        raise ArithmeticError("inexact Laurent division")
    return _from_dense(q, a.min_exp() - b.min_exp())


class RatFunc:
    """Quotient of Laurent polynomials in ``v`` in canonical form.

    The denominator is an ordinary polynomial with nonzero constant term and
    leading coefficient 1, coprime to the numerator.  Monomial factors are
    units of the Laurent ring and always live in the numerator, so two equal
    rational functions have identical representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical=False):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if not _canonical:
            num, den = self._canon(num, den)
        self.num: LaurentPoly = num
        self.den: LaurentPoly = den
        self._hash = None

    @staticmethod
    def _canon(num: LaurentPoly, den: LaurentPoly):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return ZERO, ONE
        lo = den.min_exp()
        if lo:
            num, den = num.shift(-lo), den.shift(-lo)
        if len(den._c) == 1:
            return num * (Fraction(1) / Fraction(den._c[0])), ONE
        nlo = num.min_exp()
        g = _gcd(_to_dense(num), _to_dense(den))
        if len(g) > 1:
            gp = _from_dense(g)
            num = poly_exact_div(num.shift(-nlo), gp).shift(nlo)
            den = poly_exact_div(den, gp)
        lc = Fraction(den.leading())
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        if len(den._c) == 1:
            return num * (Fraction(1) / Fraction(den._c[0])), ONE
        return num, den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x, ONE, _canonical=True)
        if isinstance(x, (int, Fraction)):
            return cls(LaurentPoly._coerce(x), ONE, _canonical=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def is_laurent(self) -> bool:
        return self.den == ONE

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_unit_monomial(self) -> bool:
        return self.is_laurent() and self.num.is_monomial()

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            if self.den == ONE:
                return RatFunc(self.num + other.num, ONE, _canonical=True)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RatFunc(self.num * other.num, ONE, _canonical=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _canonical=self.den == ONE)

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def render(self) -> str:
        if self.den == ONE:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatFunc({self.render()})"

