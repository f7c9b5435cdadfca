"""Truncated formal power series with coefficients in Q(r).

A Series holds exactly ``prec`` known coefficients c_0 .. c_{prec-1}; the
truncation order is the order of the O(x^prec) error.  The formal variable
is anonymous.  Coefficients are plain: when a series is read as an
exponential generating function the represented sequence is c_n * n!, and
that reinterpretation is performed by the transforms, never stored here.

Every operation returns the largest precision it can guarantee: binary
operations truncate to the smaller input precision, differentiation loses
one order, integration gains one.  Nothing is ever zero-padded silently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CompositionNeedsZeroConstant,
    NonUnitConstantTerm,
    NotReversible,
)
from .ratfun import ONE, ZERO, FieldElem, fe


def _coerce_coeffs(cs: Iterable) -> tuple:
    return tuple(fe(c) for c in cs)


class Series:
    """Truncated power series; immutable, exact, prec == len(coeffs)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = _coerce_coeffs(coeffs)

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> FieldElem:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series[" + ", ".join(str(c) for c in self.coeffs) + "]"

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c, prec: int) -> "Series":
        if prec < 1:
            return cls([])
        return cls([fe(c)] + [ZERO] * (prec - 1))

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls.constant(ZERO, prec)

    @classmethod
    def one(cls, prec: int) -> "Series":
        return cls.constant(ONE, prec)

    @classmethod
    def x(cls, prec: int) -> "Series":
        cs = [ZERO] * prec
        if prec >= 2:
            cs[1] = ONE
        return cls(cs)

    def truncate(self, prec: int) -> "Series":
        if prec >= self.prec:
            if prec == self.prec:
                return self
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:prec])

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _as_series(other, self.prec)
        n = min(self.prec, other.prec)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_series(other, self.prec))

    def __rsub__(self, other):
        return _as_series(other, self.prec) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            k = fe(other)
            return Series([c * k for c in self.coeffs])
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * n
        for i in range(n):
            ai = a[i]
            if ai.is_zero():
                continue
            for j in range(n - i):
                bj = b[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            k = fe(other)
            return Series([c / k for c in self.coeffs])
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(_as_series(other, self.prec), self)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise TypeError("use pow_rational for non-integer powers")
        acc = Series.one(self.prec)
        for _ in range(e):
            acc = acc * self
        return acc

    # -- calculus ------------------------------------------------------

    def derivative(self) -> "Series":
        """Termwise derivative; one fewer known coefficient."""
        return Series([self.coeffs[n] * n for n in range(1, self.prec)])

    def integrate(self) -> "Series":
        """Antiderivative with constant term 0; one extra known order."""
        out = [ZERO]
        for n, c in enumerate(self.coeffs):
            out.append(c / (n + 1))
        return Series(out)

    # -- composition and reversion --------------------------------------

    def compose(self, inner: "Series") -> "Series":
        if inner.prec and not inner.coeffs[0].is_zero():
            raise CompositionNeedsZeroConstant(
                "inner series of a composition must have constant term 0"
            )
        n = min(self.prec, inner.prec)
        if n == 0:
            return Series([])
        g = self.coeffs
        acc = Series.constant(g[n - 1], n)
        for k in range(n - 2, -1, -1):
            acc = acc * inner
            acc = Series([acc.coeffs[0] + g[k]] + list(acc.coeffs[1:]))
        return acc

    def revert(self) -> "Series":
        """Compositional inverse: the unique u with self(u) = u(self) = x."""
        if self.prec and not self.coeffs[0].is_zero():
            raise NotReversible("reversion needs constant term 0")
        if self.prec < 2 or self.coeffs[1].is_zero():
            raise NotReversible("reversion needs a nonzero linear coefficient")
        n = self.prec
        # Lagrange inversion: [x^k] u = (1/k) [x^{k-1}] (x/f)^k
        w = Series(self.coeffs[1:])  # f/x, unit constant term
        winv = divide(Series.one(n - 1), w)
        out = [ZERO] * n
        if n >= 2:
            power = winv
            out[1] = power.coeffs[0]
            for k in range(2, n):
                power = power * winv
                out[k] = power.coeffs[k - 1] / k
        return Series(out)

    def gf_revert(self) -> "Series":
        """Reversion of a unit-constant gf: solve u*self(u) = x, return u/x."""
        if not self.coeffs or self.coeffs[0].is_zero():
            raise NotReversible("gf reversion needs a nonzero constant term")
        xg = Series([ZERO] + list(self.coeffs))
        return Series(xg.revert().coeffs[1:])

    # -- exp / log family -----------------------------------------------

    def log(self) -> "Series":
        """Series L with exp(L) = self; needs constant term 1."""
        if not self.coeffs:
            return Series([])
        if not self.coeffs[0].is_one():
            raise NonUnitConstantTerm("log needs constant term 1")
        return self.log_derivative().integrate()

    def exp(self) -> "Series":
        """Series E with log(E) = self; needs constant term 0."""
        if not self.coeffs:
            return Series([])
        if not self.coeffs[0].is_zero():
            raise CompositionNeedsZeroConstant("exp needs constant term 0")
        n = self.prec
        f = self.coeffs
        out = [ONE] + [ZERO] * (n - 1)
        # E' = E * f'  =>  (n+1) E_{n+1} = sum_j E_j (n+1-j) f_{n+1-j}
        for m in range(1, n):
            s = ZERO
            for j in range(m):
                k = m - j
                if not f[k].is_zero():
                    s = s + out[j] * (f[k] * k)
            out[m] = s / m
        return Series(out)

    def log_derivative(self) -> "Series":
        """derivative(self)/self; loses one order of precision."""
        if not self.coeffs:
            return Series([])
        if self.coeffs[0].is_zero():
            raise NonUnitConstantTerm("logarithmic derivative needs f(0) != 0")
        return divide(self.derivative(), self)

    def pow_rational(self, e) -> "Series":
        """self**e for an exact rational exponent; needs constant term 1."""
        e = Fraction(e)
        if not self.coeffs:
            return Series([])
        if not self.coeffs[0].is_one():
            raise NonUnitConstantTerm("rational powers need constant term 1")
        return (self.log() * fe(e)).exp()

    # -- evaluation helpers ----------------------------------------------

    def substitute(self, value: Fraction) -> "Series":
        """Specialize the parameter r in every coefficient."""
        return Series([c.substitute(value) for c in self.coeffs])

    def agrees_with(self, other: "Series") -> bool:
        """Equality of the shared-precision truncations."""
        n = min(self.prec, other.prec)
        return self.coeffs[:n] == other.coeffs[:n]


def _as_series(v, prec: int) -> Series:
    if isinstance(v, Series):
        return v
    return Series.constant(fe(v), prec)


def divide(a: Series, b: Series) -> Series:
    """Quotient q with q*b = a to the shared precision; needs b(0) != 0."""
    n = min(a.prec, b.prec)
    if n == 0:
        return Series([])
    if b.coeffs[0].is_zero():
        raise NonUnitConstantTerm("series division needs a unit constant term")
    b0inv = b.coeffs[0].inverse()
    out = []
    for m in range(n):
        s = a.coeffs[m]
        for j in range(m):
            bk = b.coeffs[m - j]
            if not bk.is_zero():
                s = s - out[j] * bk
        out.append(s * b0inv)
    return Series(out)


def from_ratfun(num: Sequence, den: Sequence, prec: int) -> Series:
    """Expand num/den, polynomials in the formal variable, to prec terms."""
    num = _coerce_coeffs(num)
    den = _coerce_coeffs(den)
    if not den or den[0].is_zero():
        raise NonUnitConstantTerm("rational expansion needs den(0) != 0")
    d0inv = den[0].inverse()
    out = []
    for m in range(prec):
        s = num[m] if m < len(num) else ZERO
        for j in range(max(0, m - len(den) + 1), m):
            s = s - out[j] * den[m - j]
        out.append(s * d0inv)
    return Series(out)


def compose(g: Series, f: Series) -> Series:
    return g.compose(f)


def revert(f: Series) -> Series:
    return f.revert()


def gf_revert(g: Series) -> Series:
    return g.gf_revert()
