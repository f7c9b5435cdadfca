"""Sequence-level transforms built on the series kernel.

The central object is the transformation pipeline: starting from an
ordinary generating function g whose expansion begins 1, 0, ...

  1. reinterpret the coefficients as an exponential gf (inverse Sumudu),
  2. take the logarithmic derivative h,
  3. integrate 1 - h from 0 (prepending a zero coefficient),
  4. revert, and differentiate the reversion.

The result F is again an exponential gf with F(0) = 1.  The reverse
pipeline reconstructs the step-1 egf from F via
g_tilde = exp(x - Rev(integral of F)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PipelinePrecondition
from .ratfun import fe
from .series import Series


@dataclass(frozen=True)
class PipelineTrace:
    """All intermediate series of one pipeline run."""

    g_tilde: Series  # egf reinterpretation of the input
    h: Series        # logarithmic derivative of g_tilde
    q: Series        # integral of 1 - h, vanishing at 0
    u: Series        # compositional inverse of q
    F: Series        # derivative of u, the pipeline image


def inverse_sumudu(g: Series) -> Series:
    """Divide coefficient n by n!: same sequence, read as an egf."""
    out = []
    f = 1
    for n, c in enumerate(g.coeffs):
        if n:
            f *= n
        out.append(c / f if f != 1 else c)
    return Series(out)


def sumudu(f: Series) -> Series:
    """Multiply coefficient n by n!: same sequence, read as an ogf."""
    out = []
    k = 1
    for n, c in enumerate(f.coeffs):
        if n:
            k *= n
        out.append(c * k if k != 1 else c)
    return Series(out)


def invert_transform(g: Series, c) -> Series:
    """g / (1 - c*x*g).

    The classical INVERT(m) transform is ``invert_transform(g, -m)``: the
    parameter here is the coefficient that ends up in the denominator.
    """
    c = fe(c)
    den = Series([fe(1)] + [-(c * gk) for gk in g.coeffs[: g.prec - 1]])
    return g / den


def binomial_transform(g: Series, direction: str = "forward") -> Series:
    """Ogf binomial transform: (1/(1-x)) g(x/(1-x)); inverse uses 1+x."""
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    s = 1 if direction == "forward" else -1
    n = g.prec
    pre = Series([fe(s**k) for k in range(n)])          # 1/(1-sx)
    inner = Series([fe(0)] + [fe(s ** (k - 1)) for k in range(1, n)])
    return pre * g.compose(inner)


def partial_P(g: Series) -> Series:
    """Steps 1 and 2 only: logarithmic derivative of the egf form."""
    return inverse_sumudu(g).log_derivative()


def pipeline_P_trace(g: Series) -> PipelineTrace:
    if g.prec < 2 or not g.coeffs[0].is_one() or not g.coeffs[1].is_zero():
        raise PipelinePrecondition(
            "pipeline input must expand to a sequence beginning 1, 0"
        )
    g_tilde = inverse_sumudu(g)
    h = g_tilde.log_derivative()
    q = (Series.one(h.prec) - h).integrate()
    u = q.revert()
    F = u.derivative()
    return PipelineTrace(g_tilde=g_tilde, h=h, q=q, u=u, F=F)


def pipeline_P(g: Series) -> Series:
    """The full pipeline; output precision is one less than the input's."""
    return pipeline_P_trace(g).F


def reverse_P(F: Series) -> Series:
    """Recover the pipeline's step-1 egf: exp(x - Rev(integral of F))."""
    if not F.coeffs or not F.coeffs[0].is_one():
        raise PipelinePrecondition("reverse pipeline needs F(0) = 1")
    rev = F.integrate().revert()
    return (Series.x(rev.prec) - rev).exp()
