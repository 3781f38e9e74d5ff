"""Exception types shared across the engine."""


class UGBError(Exception):
    """Base class for every error raised by this package."""


class RingMismatch(UGBError):
    pass


class NotAUnit(UGBError):
    pass


class OracleMismatch(UGBError):
    """Operands live in algebras with different oracles or alphabets."""


class BasisViolation(UGBError):
    """A word is not a basis word of the active multiplication oracle."""


class ZeroPolynomial(UGBError):
    pass


class EmptyWord(UGBError):
    pass


class NotUnital(UGBError):
    """A generating set has a leading coefficient that is not a unit."""


class BudgetExceeded(UGBError):
    """Division ran past its defensive step budget."""


class NotAGroebnerBasis(UGBError):
    """A strict-mode operation requires a verified Groebner basis."""


class PreconditionViolated(UGBError):
    pass


class CompletionFailure(UGBError):
    """Completion could not reach a Groebner basis."""


class NonUnitalRemainder(CompletionFailure):
    """A failing s-polynomial reduced to a remainder whose leading
    coefficient is not a unit; adjoining it is unsupported, so the
    condition is surfaced instead of silently inverted."""


class RoundsExceeded(CompletionFailure):
    pass


class InvalidLie(UGBError):
    """Structure constants fail antisymmetry bookkeeping or Jacobi."""


class BoundTooSmall(UGBError):
    pass


class UnsupportedRing(UGBError):
    pass


class ParseError(UGBError):
    """Problem-file or polynomial text could not be parsed."""

    def __init__(self, message, filename=None, line=None):
        self.filename = filename
        self.line = line
        prefix = ""
        if filename is not None:
            prefix = f"{filename}:"
        if line is not None:
            prefix += f"{line}:"
        if prefix:
            prefix += " "
        super().__init__(prefix + message)
