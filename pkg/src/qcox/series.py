"""Truncated power series ``c_0 + c_1 z + ... + c_N z^N`` over the field Q(v)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, RatFunc


def _rf(x) -> RatFunc:
    return RatFunc.coerce(x)


class TruncSeries:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence, var: str = "z"):
        if not coeffs:
            raise ValueError("a truncated series needs order >= 0")
        self.coeffs: tuple = tuple(_rf(c) for c in coeffs)
        self.var = var

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int, var: str = "z") -> "TruncSeries":
        return cls([c] + [0] * order, var)

    @classmethod
    def from_rational(cls, num: Sequence, den: Sequence, order: int, var: str = "z") -> "TruncSeries":
        """Expand ``num(z) / den(z)`` given ascending coefficient lists."""
        pad = lambda xs: [_rf(x) for x in xs[: order + 1]] + [_rf(0)] * max(0, order + 1 - len(xs))
        return cls(pad(list(num)), var) * cls(pad(list(den)), var).inverse()

    def __getitem__(self, k: int) -> RatFunc:
        return self.coeffs[k]

    def _check(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries.constant(other, self.order, self.var)
        if other.var != self.var:
            raise ValueError(f"series in {self.var} vs {other.var}")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = min(self.order, other.order) + 1
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            c = _rf(other)
            return TruncSeries([x * c for x in self.coeffs], self.var)
        other = self._check(other)
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            s = _rf(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return TruncSeries(out, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("constant term is not invertible")
        inv0 = a[0].inverse()
        out = [inv0]
        for k in range(1, len(a)):
            s = _rf(0)
            for i in range(1, k + 1):
                if a[i]:
                    s = s + a[i] * out[k - i]
            out.append(-s * inv0)
        return TruncSeries(out, self.var)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def scale(self, factor) -> "TruncSeries":
        """Substitute ``z -> factor * z``."""
        f = _rf(factor)
        out, p = [], _rf(1)
        for c in self.coeffs:
            out.append(c * p)
            p = p * f
        return TruncSeries(out, self.var)

    def derivative(self) -> "TruncSeries":
        out = [self.coeffs[k] * k for k in range(1, len(self.coeffs))] or [_rf(0)]
        return TruncSeries(out, self.var)

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term (order grows by one)."""
        return TruncSeries([_rf(0)] + [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)], self.var)

    def log(self) -> "TruncSeries":
        if self.coeffs[0] != _rf(1):
            raise ValueError("log needs constant term 1")
        if self.order == 0:
            return TruncSeries([0], self.var)
        q = self.derivative() * TruncSeries(self.coeffs[: self.order], self.var).inverse()
        return q.integral()

    def exp(self) -> "TruncSeries":
        if self.coeffs[0]:
            raise ValueError("exp needs constant term 0")
        # f' = g' f, solved coefficient by coefficient
        a = self.coeffs
        out = [_rf(1)]
        for k in range(1, len(a)):
            s = _rf(0)
            for i in range(1, k + 1):
                if a[i]:
                    s = s + a[i] * out[k - i] * i
            out.append(s * Fraction(1, k))
        return TruncSeries(out, self.var)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1], self.var)

    def is_constant(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            other = self._check(other)
        return self.var == other.var and self.coeffs == other.coeffs

    __hash__ = None

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append(f"({c.render()})" + (f"*{mono}" if mono else ""))
        return (" + ".join(parts) or "0") + f" + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncSeries({self.render()})"

