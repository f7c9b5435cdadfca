"""Jacobi- and Stieltjes-type continued fractions over Q(r).

A Jacobi fraction J(b; lam) is

    1 / (1 - b0 x - lam1 x^2 / (1 - b1 x - lam2 x^2 / (1 - ...)))

and a Stieltjes fraction S(s) is

    1 / (1 - s1 x / (1 - s2 x / (1 - ...))).

A missing tail of lam (or of s) means the fraction terminates there: all
further partial numerators are zero, so the value is a rational function
and can be expanded to any precision.

The module also provides the two-sequence triangle construction (partial
numerators r_k x + s_k x y, with y carried by the parameter r), and the
pairing between fractions with constant tails (b0; c, c, ...; mu, mu, ...)
and fractions with affine diagonal b0 + n c and weights n^2 mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DegenerateCfrac, InsufficientDepth, NonUnitConstantTerm, PatternMismatch
from .ratfun import ZERO, R, FieldElem, fe
from .series import Series, divide


@dataclass(frozen=True)
class JFraction:
    b: tuple
    lam: tuple

    def __init__(self, b: Sequence, lam: Sequence):
        object.__setattr__(self, "b", tuple(fe(v) for v in b))
        object.__setattr__(self, "lam", tuple(fe(v) for v in lam))


@dataclass(frozen=True)
class SFraction:
    s: tuple

    def __init__(self, s: Sequence):
        object.__setattr__(self, "s", tuple(fe(v) for v in s))


def jfrac_to_series(J: JFraction, prec: int) -> Series:
    """Bottom-up evaluation of the truncated fraction, exact to prec.

    Coefficient x^n sees b_k for 2k+1 <= n and lam_k for 2k <= n, so prec
    coefficients need floor(prec/2) diagonal terms and floor((prec-1)/2)
    weights.  A short lam means the fraction terminates (rational value);
    a short b with weights still in play is an error.
    """
    if prec <= 0:
        return Series([])
    needed_b = prec // 2
    needed_l = (prec - 1) // 2
    if len(J.lam) >= needed_l:
        if len(J.b) < needed_b:
            raise InsufficientDepth(
                f"need {needed_b} diagonal terms for precision {prec}, "
                f"have {len(J.b)}"
            )
        depth = needed_l + 1
    else:
        depth = len(J.lam) + 1  # terminates; missing b treated as 0
    x = Series.x(prec)
    x2 = x * x
    tail = Series.one(prec)
    for k in range(depth - 1, -1, -1):
        bk = J.b[k] if k < len(J.b) else ZERO
        level = Series.one(prec) - x * bk
        if k < depth - 1 and k < len(J.lam):
            level = level - x2 * J.lam[k] * tail
        tail = divide(Series.one(prec), level)
    return tail


def sfrac_to_series(S: SFraction, prec: int) -> Series:
    """One fraction level per series order; a short s-list terminates."""
    if prec <= 0:
        return Series([])
    depth = min(len(S.s), prec - 1)
    x = Series.x(prec)
    tail = Series.one(prec)
    for k in range(depth - 1, -1, -1):
        tail = divide(Series.one(prec), Series.one(prec) - x * S.s[k] * tail)
    return tail


def series_to_jfrac(f: Series) -> JFraction:
    """Expand f as a Jacobi fraction by repeated reciprocal-and-strip.

    From N known coefficients the expansion determines floor(N/2) diagonal
    terms and floor((N-1)/2) weights.  A vanishing weight with a nonzero
    remainder is a degeneracy; with a zero remainder the fraction simply
    terminates (rational case).
    """
    if not f.coeffs or not f.coeffs[0].is_one():
        raise NonUnitConstantTerm("fraction expansion needs f(0) = 1")
    bs, lams = [], []
    cur = f
    while cur.prec >= 2:
        u = Series.one(cur.prec) - divide(Series.one(cur.prec), cur)
        bs.append(u.coeffs[1])
        if cur.prec < 3:
            break
        rest = u.coeffs[2:]  # u - b x, shifted down twice
        lam = rest[0]
        if lam.is_zero():
            if any(not c.is_zero() for c in rest):
                raise DegenerateCfrac(
                    "weight vanished while later coefficients are nonzero"
                )
            break
        lams.append(lam)
        cur = Series([c / lam for c in rest])
    return JFraction(bs, lams)


def series_to_sfrac(f: Series) -> SFraction:
    """Expand f as a Stieltjes fraction, one coefficient per order."""
    if not f.coeffs or not f.coeffs[0].is_one():
        raise NonUnitConstantTerm("fraction expansion needs f(0) = 1")
    ss = []
    cur = f
    while cur.prec >= 2:
        u = Series.one(cur.prec) - divide(Series.one(cur.prec), cur)
        rest = u.coeffs[1:]
        s = rest[0]
        if s.is_zero():
            if any(not c.is_zero() for c in rest):
                raise DegenerateCfrac(
                    "partial numerator vanished with a nonzero remainder"
                )
            break
        ss.append(s)
        cur = Series([c / s for c in rest])
    return SFraction(ss)


def contract_s_to_j(S: SFraction) -> JFraction:
    """Classical even contraction: b0 = s1, bn = s[2n] + s[2n+1],
    lam_n = s[2n-1] * s[2n]; absent entries count as zero."""
    m = len(S.s)

    def s(i: int) -> FieldElem:  # 1-based with zero padding
        return S.s[i - 1] if 1 <= i <= m else ZERO

    if m == 0:
        return JFraction([], [])
    bs = [s(1)]
    lams = []
    n = 1
    while 2 * n <= m:
        bs.append(s(2 * n) + s(2 * n + 1))
        lams.append(s(2 * n - 1) * s(2 * n))
        n += 1
    return JFraction(bs, lams)


# -- two-sequence (Deleham) triangle constructions ------------------------


def _bivariate_weights(rs: Sequence, ss: Sequence, depth: int) -> list:
    rs = [fe(v) for v in rs]
    ss = [fe(v) for v in ss]
    out = []
    for k in range(depth):
        rk = rs[k] if k < len(rs) else ZERO
        sk = ss[k] if k < len(ss) else ZERO
        out.append(rk + sk * R)  # the second variable rides on r
    return out


def deleham(rs: Sequence, ss: Sequence, rows: int):
    """Triangle whose bivariate gf is 1/(1 - w0 x/(1 - w1 x/(...))) with
    w_k = r_k + s_k y; row n lists the y^k coefficients of [x^n]."""
    from .triangles import triangle_from_gf

    w = _bivariate_weights(rs, ss, max(rows - 1, 0))
    gf = sfrac_to_series(SFraction(w), rows)
    return triangle_from_gf(gf, rows, "ogf")


def deleham_delta1(rs: Sequence, ss: Sequence, rows: int):
    """Variant with the first weight at the top level:
    1/(1 - w0 x - w1 x/(1 - w2 x/(1 - ...)))."""
    from .triangles import triangle_from_gf

    w = _bivariate_weights(rs, ss, rows + 1)
    prec = rows
    x = Series.x(prec)
    tail = Series.one(prec)
    for k in range(len(w) - 1, 1, -1):
        tail = divide(Series.one(prec), Series.one(prec) - x * w[k] * tail)
    level0 = Series.one(prec) - x * w[0]
    if len(w) > 1:
        level0 = level0 - x * w[1] * tail
    gf = divide(Series.one(prec), level0)
    return triangle_from_gf(gf, rows, "ogf")


# -- pairing of constant-tail and quadratic-weight fractions ---------------


def t_inverse(b0, c, mu, depth: int) -> JFraction:
    """The quadratic-weight partner of J(b0; c, c, ...; mu, mu, ...):
    diagonal b0 + n*c and weights n^2 * mu, to ``depth`` entries each."""
    b0, c, mu = fe(b0), fe(c), fe(mu)
    bs = [b0 + c * n for n in range(depth)]
    lams = [mu * (n * n) for n in range(1, depth + 1)]
    return JFraction(bs, lams)


def t_forward(J: JFraction) -> Tuple[FieldElem, FieldElem, FieldElem]:
    """Validate the affine/quadratic pattern and return (b0, c, mu)."""
    if len(J.b) < 2 or len(J.lam) < 1:
        raise PatternMismatch("need at least two diagonal terms and one weight")
    b0 = J.b[0]
    c = J.b[1] - b0
    mu = J.lam[0]
    for n, bn in enumerate(J.b):
        if bn != b0 + c * n:
            raise PatternMismatch(
                f"diagonal term {n} is {bn}, expected {b0 + c * n}"
            )
    for i, ln in enumerate(J.lam):
        n = i + 1
        if ln != mu * (n * n):
            raise PatternMismatch(
                f"weight {n} is {ln}, expected {mu * (n * n)}"
            )
    return b0, c, mu


def t_forward_image(J: JFraction) -> JFraction:
    """The constant-tail fraction J(b0; c, c, ...; mu, mu, ...) paired with J,
    at the same depth as the input."""
    b0, c, mu = t_forward(J)
    bs = [b0] + [c] * (len(J.b) - 1)
    lams = [mu] * len(J.lam)
    return JFraction(bs, lams)
