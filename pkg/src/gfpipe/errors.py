"""Exception types shared by the engine.

Math-domain failures derive from EngineError and map to exit code 1 in the
CLI.  Expression-level failures (parsing, arity, operand types) derive from
ExprError, carry a source span, and map to exit code 2.
"""


class EngineError(Exception):
    """A mathematically invalid operation on exact values."""


class NonUnitConstantTerm(EngineError):
    """Constant term must be a nonzero (or unit) field element."""


class CompositionNeedsZeroConstant(EngineError):
    """Inner series of a composition must vanish at 0."""


class NotReversible(EngineError):
    """Series has no compositional inverse (needs f(0)=0, f'(0) != 0)."""


class PipelinePrecondition(EngineError):
    """Pipeline input must expand to a sequence beginning 1, 0."""


class InsufficientDepth(EngineError):
    """Continued fraction does not provide enough levels for the precision."""


class DegenerateCfrac(EngineError):
    """A partial numerator vanished while later coefficients disagree."""


class PatternMismatch(EngineError):
    """Continued-fraction coefficients do not follow the required pattern."""


class NonPolynomialRow(EngineError):
    """Triangle entry is not polynomial in the parameter (or degree too big)."""


class SingularDiagonal(EngineError):
    """Triangle inverse needs all diagonal entries nonzero."""


class NotTridiagonal(EngineError):
    """Matrix is not tridiagonal with unit superdiagonal."""


class PrecisionExhausted(EngineError):
    """Moment functional applied beyond the known moments."""


class UnknownOracle(EngineError):
    """No closed-form oracle registered under that name."""


class IndexRange(EngineError):
    """Oracle index out of range."""


class EvaluationPole(EngineError):
    """Substituting a numeric value for r hit a vanishing denominator."""


class ExprError(Exception):
    """An error in an expression, carrying the offending source span."""

    def __init__(self, message: str, start: int = -1, end: int = -1):
        super().__init__(message)
        self.start = start
        self.end = end

    def __str__(self) -> str:
        base = super().__str__()
        if self.start >= 0:
            return f"{base} (at offset {self.start})"
        return base


class ParseError(ExprError):
    """Tokenizer/parser failure with position and expected-token set."""

    def __init__(self, message: str, position: int, expected: tuple = ()):
        super().__init__(message, position, position)
        self.position = position
        self.expected = tuple(expected)


class ArityError(ExprError):
    """Builtin called with the wrong number of arguments."""


class TypeErrorValue(ExprError):
    """Builtin called with an operand of the wrong kind."""
