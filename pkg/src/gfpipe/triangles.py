"""Triangle algebra, Riordan arrays, production matrices, and closed-form
oracles for the classical triangles the engine reproduces.

Triangles are dense lower-triangular arrays of Q(r) entries, built from
bivariate generating functions (the second variable riding on the
parameter r), from Riordan pairs, from continued fractions, or from the
closed forms in ``oracle``.  Oracles are deliberately computed from
binomial sums and explicit recurrences only, independent of any series
machinery, so they can confirm the generating-function routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .errors import (
    IndexRange,
    NonPolynomialRow,
    NotTridiagonal,
    PrecisionExhausted,
    SingularDiagonal,
    UnknownOracle,
)
from .ratfun import ONE, ZERO, FieldElem, fe
from .series import Series, divide


class Triangle:
    """Lower-triangular array; row n holds entries T(n,0) .. T(n,n)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(fe(v) for v in row) for row in rows)
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> FieldElem:
        if not (0 <= n < self.n_rows):
            raise IndexRange(f"row {n} outside 0..{self.n_rows - 1}")
        if not (0 <= k <= n):
            return ZERO
        return self.rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(v) for v in row) for row in self.rows[:5]
        )
        more = " ..." if self.n_rows > 5 else ""
        return f"Triangle[{body}{more}]"

    def truncate(self, rows: int) -> "Triangle":
        return Triangle(self.rows[:rows])

    def substitute(self, value: Fraction) -> "Triangle":
        return Triangle([[v.substitute(value) for v in row] for row in self.rows])


class SquareMatrix:
    """Dense square matrix of Q(r) entries (production-matrix truncations)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(fe(v) for v in row) for row in rows)
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> FieldElem:
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({self.size}x{self.size})"

    def apply(self, vec: Sequence) -> tuple:
        vec = [fe(v) for v in vec]
        if len(vec) != self.size:
            raise ValueError("vector length must match matrix size")
        out = []
        for row in self.rows:
            s = ZERO
            for a, v in zip(row, vec):
                if not a.is_zero():
                    s = s + a * v
            out.append(s)
        return tuple(out)

    def substitute(self, value: Fraction) -> "SquareMatrix":
        return SquareMatrix(
            [[v.substitute(value) for v in row] for row in self.rows]
        )


@dataclass(frozen=True)
class RiordanArray:
    """Pair (g, f) with g(0) != 0 and f(0) = 0.

    Proper group elements also have f'(0) != 0; stretched arrays such as
    (1, x^2/(1-2x)) are admitted because only reversion-based operations
    (production matrices) actually need the nonzero linear term, and those
    enforce it themselves.
    """

    g: Series
    f: Series
    kind: str = "ordinary"  # or "exponential"

    def __post_init__(self):
        if self.kind not in ("ordinary", "exponential"):
            raise ValueError("kind must be 'ordinary' or 'exponential'")
        if not self.g.coeffs or self.g.coeffs[0].is_zero():
            raise ValueError("Riordan g needs a nonzero constant term")
        if self.f.prec < 2 or not self.f.coeffs[0].is_zero():
            raise ValueError("Riordan f needs f(0) = 0")


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Three-term recurrence data read off a tridiagonal production matrix:
    alpha[n] = P[n][n], beta[n] = P[n+1][n]."""

    alpha: tuple
    beta: tuple

    def __init__(self, alpha: Sequence, beta: Sequence):
        object.__setattr__(self, "alpha", tuple(fe(v) for v in alpha))
        object.__setattr__(self, "beta", tuple(fe(v) for v in beta))


# -- construction ----------------------------------------------------------


def triangle_from_gf(gf: Series, rows: int, mode: str = "ogf") -> Triangle:
    """Row n collects the r-coefficients of [x^n] gf (times n! in egf mode).

    Entries must be polynomial in r of degree at most n.
    """
    if mode not in ("ogf", "egf"):
        raise ValueError("mode must be 'ogf' or 'egf'")
    if gf.prec < rows:
        raise ValueError(f"need {rows} coefficients, series has {gf.prec}")
    out = []
    f = 1
    for n in range(rows):
        c = gf.coeffs[n]
        if mode == "egf":
            if n:
                f *= n
            c = c * f
        if len(c.den) > 1:
            raise NonPolynomialRow(
                f"order-{n} coefficient {c} is not polynomial in r"
            )
        if len(c.num) > n + 1:
            raise NonPolynomialRow(
                f"order-{n} coefficient {c} has degree above {n}"
            )
        d = c.den[0]
        row = [
            fe(Fraction(c.num[k], d)) if k < len(c.num) else ZERO
            for k in range(n + 1)
        ]
        out.append(row)
    return Triangle(out)


def reversal(T: Triangle) -> Triangle:
    return Triangle([tuple(reversed(row)) for row in T.rows])


def matmul(A: Triangle, B: Triangle) -> Triangle:
    n = min(A.n_rows, B.n_rows)
    out = []
    for i in range(n):
        row = []
        for j in range(i + 1):
            s = ZERO
            for k in range(j, i + 1):
                a = A.rows[i][k]
                if not a.is_zero():
                    s = s + a * B.rows[k][j]
            row.append(s)
        out.append(row)
    return Triangle(out)


def identity_triangle(rows: int) -> Triangle:
    return Triangle([[ONE if k == n else ZERO for k in range(n + 1)] for n in range(rows)])


def tri_inverse(T: Triangle) -> Triangle:
    """Exact inverse of the truncation, by forward substitution."""
    for n in range(T.n_rows):
        if T.rows[n][n].is_zero():
            raise SingularDiagonal(f"zero diagonal entry in row {n}")
    n = T.n_rows
    inv = [[ZERO] * (i + 1) for i in range(n)]
    for i in range(n):
        inv[i][i] = T.rows[i][i].inverse()
        for j in range(i - 1, -1, -1):
            s = ZERO
            for k in range(j, i):
                a = T.rows[i][k]
                if not a.is_zero():
                    s = s + a * inv[k][j]
            inv[i][j] = -(s * inv[i][i]) if not s.is_zero() else ZERO
    return Triangle(inv)


def binomial_matrix(rows: int) -> Triangle:
    return Triangle([[comb(n, k) for k in range(n + 1)] for n in range(rows)])


def riordan_to_triangle(Rarr: RiordanArray, rows: int) -> Triangle:
    """Column k is g*f^k (ordinary) or the same scaled by n!/k! (exponential)."""
    need = rows
    g, f = Rarr.g, Rarr.f
    if min(g.prec, f.prec) < need:
        raise ValueError("Riordan pair not expanded far enough")
    col = g
    cols = [col]
    for _ in range(1, rows):
        col = col * f
        cols.append(col)
    out = []
    for n in range(rows):
        row = []
        for k in range(n + 1):
            c = cols[k].coeffs[n]
            if Rarr.kind == "exponential":
                c = c * Fraction(factorial(n), factorial(k))
            row.append(c)
        out.append(row)
    return Triangle(out)


def riordan_apply(Rarr: RiordanArray, h: Series) -> Series:
    """Action on a column vector of coefficients: g * h(f)."""
    if Rarr.kind != "ordinary":
        raise ValueError("riordan_apply acts through ordinary arrays")
    return Rarr.g * h.compose(Rarr.f)


# -- production matrices and orthogonal polynomials ------------------------


def production_matrix(Rarr: RiordanArray, size: int) -> SquareMatrix:
    """Production matrix of an exponential Riordan array.

    With A = f' o revert(f) and Z = (g' o revert(f)) / (g o revert(f)),
    entry (i, j) is (i!/j!) (z_{i-j} + j a_{i-j+1}), negative indices zero.
    """
    if Rarr.kind != "exponential":
        raise ValueError("production matrices are computed for exponential arrays")
    g, f = Rarr.g, Rarr.f
    fbar = f.revert()
    A = f.derivative().compose(fbar)
    Z = divide(g.derivative().compose(fbar), g.compose(fbar))
    if A.prec < size + 1 or Z.prec < size:
        raise ValueError("Riordan pair not expanded far enough for this size")

    def a(m: int) -> FieldElem:
        return A.coeffs[m] if 0 <= m < A.prec else ZERO

    def z(m: int) -> FieldElem:
        return Z.coeffs[m] if 0 <= m < Z.prec else ZERO

    rows = []
    for i in range(size):
        fi = factorial(i)
        row = []
        for j in range(size):
            if j > i + 1:
                row.append(ZERO)
                continue
            coef = z(i - j) + a(i - j + 1) * j
            row.append(coef * Fraction(fi, factorial(j)))
        rows.append(row)
    return SquareMatrix(rows)


def recurrence_from_production(P: SquareMatrix) -> RecurrenceCoeffs:
    """Read alpha (diagonal) and beta (subdiagonal) off a tridiagonal P
    whose superdiagonal is identically 1."""
    n = P.size
    for i in range(n):
        for j in range(n):
            if j > i + 1 and not P.rows[i][j].is_zero():
                raise NotTridiagonal(f"nonzero entry above the superdiagonal at {(i, j)}")
            if j == i + 1 and not P.rows[i][j].is_one():
                raise NotTridiagonal(f"superdiagonal entry at {(i, j)} is not 1")
            if j < i - 1 and not P.rows[i][j].is_zero():
                raise NotTridiagonal(f"nonzero entry below the subdiagonal at {(i, j)}")
    alpha = [P.rows[i][i] for i in range(n)]
    beta = [P.rows[i + 1][i] for i in range(n - 1)]
    return RecurrenceCoeffs(alpha, beta)


def orthopoly_triangle(rc: RecurrenceCoeffs, rows: int) -> Triangle:
    """Coefficient rows of the monic polynomials defined by
    P_n = (x - alpha[n-1]) P_{n-1} - beta[n-2] P_{n-2}, P_0 = 1."""
    if rows > len(rc.alpha) + 1 or (rows > 2 and rows > len(rc.beta) + 2):
        raise ValueError("not enough recurrence coefficients for that many rows")
    polys = []
    for n in range(rows):
        if n == 0:
            polys.append([ONE])
            continue
        prev = polys[n - 1]
        shifted = [ZERO] + list(prev)               # x * P_{n-1}
        scaled = [c * rc.alpha[n - 1] for c in prev]
        cur = [shifted[i] - (scaled[i] if i < len(scaled) else ZERO)
               for i in range(n + 1)]
        if n >= 2:
            for i, c in enumerate(polys[n - 2]):
                cur[i] = cur[i] - rc.beta[n - 2] * c
        polys.append(cur)
    return Triangle(polys)


def moment_functional(moments: Series, p: Sequence, q: Sequence) -> FieldElem:
    """L[p * q] where L[x^n] is the n-th moment coefficient."""
    p = [fe(v) for v in p]
    q = [fe(v) for v in q]
    deg = (len(p) - 1) + (len(q) - 1)
    if deg >= moments.prec:
        raise PrecisionExhausted(
            f"need moment {deg}, only {moments.prec} moments known"
        )
    out = ZERO
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            if not b.is_zero():
                out = out + a * b * moments.coeffs[i + j]
    return out


# -- closed-form oracles ----------------------------------------------------


def _comb(n: int, k: int) -> int:
    """Binomial with the empty-product convention C(-1, 0) = 1."""
    if k == 0:
        return 1
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _stirling2(n: int, k: int) -> Fraction:
    total = 0
    for j in range(k + 1):
        total += (-1) ** (k - j) * comb(k, j) * j**n
    return Fraction(total, factorial(k))


def _eulerian(n: int, k: int) -> int:
    """Permutations of n with k descents (A(0,0)=1)."""
    total = 0
    for j in range(k + 1):
        total += (-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n
    return total


def _narayana3(n: int, k: int) -> Fraction:
    return Fraction(_comb(n + 1, k) * _comb(n, k), k + 1)


def _a096078(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k < 0 or k > n or n < 0:
        return 0
    return (k + 1) * _a096078(n - 1, k) + (n - k + 1) * _a096078(n, k - 1)


def _double_factorial_odd(k: int) -> int:
    out = 1
    for m in range(1, 2 * k, 2):
        out *= m
    return out


_ORACLES: dict[str, Callable[[int, int], object]] = {
    "N1": lambda n, k: Fraction(_comb(n, k) * _comb(n - 1, k), k + 1)
    if n > 0 else Fraction(1 if k == 0 else 0),
    "N2": lambda n, k: Fraction(_comb(n - 1, n - k) * _comb(n, k), n - k + 1),
    "N3": _narayana3,
    "E1": _eulerian,
    "E2": lambda n, k: _eulerian(n, n - k),
    "E3": lambda n, k: _eulerian(n + 1, k),
    "stirling2": _stirling2,
    "A019538": lambda n, k: _stirling2(n, k) * factorial(k),
    "A086810": lambda n, k: Fraction(_comb(n - 1, n - k) * _comb(n + k, k), n + 1),
    "A028246ext": lambda n, k: _stirling2(n, k) * factorial(k - 1)
    if k >= 1 else Fraction(1 if n == 0 else 0),
    "A130850": lambda n, k: Fraction(
        sum(
            (-1) ** (n - i - k) * comb(n - k, i) * (i + 1) ** n
            for i in range(n - k + 1)
        )
    ),
    "A090582signed": lambda n, k: _stirling2(n, n - k)
    * ((-1) ** k * factorial(n - k)),
    "galton": lambda n, k: _stirling2(n, k)
    * (_double_factorial_odd(k) * 2 ** (n - k)),
    "A096078": _a096078,
    "etude2_seq": lambda n, k: Fraction(
        _comb(n - k - 1, n - 2 * k) * 2 ** (n - 2 * k)
    )
    if n >= 2 * k else Fraction(0),
}


def oracle(name: str, n: int, k: int) -> FieldElem:
    """Closed-form or recurrence value, independent of any series route."""
    fn = _ORACLES.get(name)
    if fn is None:
        raise UnknownOracle(f"no oracle named {name!r}")
    if n < 0 or k < 0 or k > n:
        raise IndexRange(f"indices ({n}, {k}) out of range for {name}")
    v = fn(n, k)
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise ValueError(f"oracle {name}({n},{k}) is not an integer: {v}")
        v = v.numerator
    return fe(v)


def oracle_triangle(name: str, rows: int) -> Triangle:
    return Triangle(
        [[oracle(name, n, k) for k in range(n + 1)] for n in range(rows)]
    )


ORACLE_NAMES = tuple(sorted(_ORACLES))
