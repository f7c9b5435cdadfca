"""Exact arithmetic in Q(r), the field of rational functions in one parameter.

A value is a quotient of integer-coefficient polynomials in r, held in a
canonical normal form so that equal values have identical representations:

* numerator and denominator share no polynomial factor,
* the integer contents of the two polynomials are coprime,
* the denominator's leading coefficient is positive.

Polynomials are tuples of ints in ascending powers with no trailing zeros;
the zero polynomial is the empty tuple.  Coefficients are unbounded Python
ints, so every operation is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from .errors import EvaluationPole

Poly = tuple  # tuple[int, ...], ascending powers, trailing zeros trimmed

PZERO: Poly = ()
PONE: Poly = (1,)


def ptrim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pdeg(a: Poly) -> int:
    return len(a) - 1


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return PZERO
    if a == PONE:
        return b
    if b == PONE:
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return ptrim(out)


def pscale(a: Poly, k: int) -> Poly:
    if k == 0:
        return PZERO
    if k == 1:
        return a
    return tuple(c * k for c in a)


def pcontent(a: Poly) -> int:
    g = 0
    for c in a:
        g = _igcd(g, c)
    return g


def pprimitive(a: Poly) -> Poly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return PZERO
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Quotient a/b when b divides a exactly in Z[r]."""
    if not a:
        return PZERO
    if b == PONE:
        return a
    if len(b) == 1:
        d = b[0]
        return tuple(c // d for c in a)
    rem = list(a)
    db, lb = pdeg(b), b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        if c:
            qc = c // lb
            q[i] = qc
            for j, cb in enumerate(b):
                rem[i + j] -= qc * cb
    assert not any(rem), "inexact polynomial division"
    return ptrim(q)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (fraction-free)."""
    rem = list(a)
    db, lb = pdeg(b), b[-1]
    while len(rem) - 1 >= db and ptrim(rem):
        rem = ptrim(rem)
        if not rem or len(rem) - 1 < db:
            break
        lead = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, cb in enumerate(b):
            rem[shift + j] -= lead * cb
        rem = list(ptrim(rem))
    return ptrim(rem)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Gcd in Z[r], primitive x content, positive leading coefficient."""
    if not a:
        return _poscontent(b)
    if not b:
        return _poscontent(a)
    ca, cb = abs(pcontent(a)), abs(pcontent(b))
    c = _igcd(ca, cb)
    pa, pb = pprimitive(a), pprimitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    # primitive PRS keeps intermediate coefficients small
    while pb:
        if len(pb) == 1:
            pa = PONE
            break
        r = _prem(pa, pb)
        pa, pb = pb, pprimitive(r)
    g = pprimitive(pa)
    return pscale(g, c) if c != 1 else g


def _poscontent(a: Poly) -> Poly:
    g = pprimitive(a)
    c = abs(pcontent(a))
    return pscale(g, c) if c != 1 else g


def peval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pstr(a: Poly, var: str = "r") -> str:
    """Render in descending powers with explicit signs."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            v = var if k == 1 else f"{var}^{k}"
            body = v if mag == 1 else f"{mag}{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class FieldElem:
    """An element of Q(r) in canonical normal form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=PONE):
        num = ptrim(num)
        den = ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(r)")
        if not num:
            self.num, self.den = PZERO, PONE
            return
        g = pgcd(num, den)
        if g != PONE:
            num = pdiv_exact(num, g)
            den = pdiv_exact(den, g)
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        self.num, self.den = num, den

    @classmethod
    def from_int(cls, n: int) -> "FieldElem":
        return _INT_CACHE.get(n) or cls((n,) if n else PZERO)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "FieldElem":
        return cls((q.numerator,) if q.numerator else PZERO, (q.denominator,))

    @classmethod
    def coerce(cls, v) -> "FieldElem":
        if isinstance(v, FieldElem):
            return v
        if isinstance(v, int):
            return cls.from_int(v)
        if isinstance(v, Fraction):
            return cls.from_fraction(v)
        raise TypeError(f"cannot coerce {type(v).__name__} into Q(r)")

    _COERCIBLE = (int, Fraction)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == PONE and self.den == PONE

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            if not isinstance(other, self._COERCIBLE):
                return NotImplemented
            other = FieldElem.coerce(other)
        if self.den == other.den:
            return FieldElem(padd(self.num, other.num), self.den)
        return FieldElem(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(FieldElem)
        out.num, out.den = pneg(self.num), self.den
        return out

    def __sub__(self, other):
        if not isinstance(other, (FieldElem, *self._COERCIBLE)):
            return NotImplemented
        return self + (-FieldElem.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (FieldElem, *self._COERCIBLE)):
            return NotImplemented
        return FieldElem.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if not isinstance(other, self._COERCIBLE):
                return NotImplemented
            other = FieldElem.coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        # cross-cancel so the result needs only a sign fix
        g1 = pgcd(a, d) if d != PONE and a != PONE else PONE
        g2 = pgcd(c, b) if b != PONE and c != PONE else PONE
        if g1 != PONE:
            a, d = pdiv_exact(a, g1), pdiv_exact(d, g1)
        if g2 != PONE:
            c, b = pdiv_exact(c, g2), pdiv_exact(b, g2)
        num, den = pmul(a, c), pmul(b, d)
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        out = object.__new__(FieldElem)
        out.num, out.den = num, den
        return out

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in Q(r)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        out = object.__new__(FieldElem)
        out.num, out.den = num, den
        return out

    def __truediv__(self, other):
        if not isinstance(other, (FieldElem, *self._COERCIBLE)):
            return NotImplemented
        return self * FieldElem.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (FieldElem, *self._COERCIBLE)):
            return NotImplemented
        return FieldElem.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElem.coerce(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, value: Fraction) -> "FieldElem":
        """Specialize r to an exact rational; reports poles."""
        d = peval(self.den, value)
        if d == 0:
            raise EvaluationPole(f"denominator {pstr(self.den)} vanishes at r={value}")
        return FieldElem.from_fraction(peval(self.num, value) / d)

    def __str__(self):
        ns = pstr(self.num)
        if self.den == PONE:
            return ns
        ds = pstr(self.den)
        if " " in ns:
            ns = f"({ns})"
        if " " in ds or len(self.den) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"FieldElem({self})"


ZERO = FieldElem(PZERO)
ONE = FieldElem(PONE)
R = FieldElem((0, 1))

_INT_CACHE = {0: ZERO, 1: ONE}
for _n in (-1, 2, -2, 3, -3, 4, 6):
    _INT_CACHE[_n] = FieldElem((_n,))


def fe(v) -> FieldElem:
    """Shorthand coercion used throughout the package and its tests."""
    return FieldElem.coerce(v)
