"""
Exception hierarchy for the hieroglyphs toolkit.

InputError subclasses describe malformed input (the command line exits
with status 2); ComputationError subclasses describe a violated
mathematical precondition (status 1).
"""


class HieroglyphError(Exception):
    """Root of every error raised by the toolkit."""


class InputError(HieroglyphError, ValueError):
    """Malformed or inconsistent input."""


class ComputationError(HieroglyphError, ValueError):
    """A precondition of an algorithm does not hold."""


class ZeroPolynomial(ComputationError):
    """The zero polynomial has no leading term."""


class NotMinimal(ComputationError):
    """Monomial generators are not an antichain under divisibility."""


class NothingToPolarize(ComputationError):
    """Partial polarization needs a variable appearing with exponent at least 2."""


class ContainsUnit(ComputationError):
    """The ideal is the whole ring."""


class NotSquarefree(ComputationError):
    """A squarefree monomial ideal was required."""


class TooManyGenerators(ComputationError):
    """The Taylor sum would be too large; use the splitting algorithm."""


class NotStandardGrading(ComputationError):
    """The operation is only defined for the standard grading."""


class NotHomogeneous(ComputationError):
    """A generator is not homogeneous for the grading in use."""


class UnequalTotalDegrees(ComputationError):
    """Variable weights do not share one total degree."""


class MissingGridMetadata(ComputationError):
    """A variable without grid coordinates was asked to be drawn."""


class TooLarge(ComputationError):
    """Input exceeds the desk-scale enumeration guard."""


class BadDimensions(InputError):
    """Matrix shape and minor size are inconsistent."""


class InvalidPermutation(InputError):
    """One-line notation does not describe a bijection of [n]."""


class UnknownFixture(InputError):
    """No built-in fixture is registered under the name."""


class DuplicateVariable(InputError):
    """A variable (base name and copy index) is declared twice."""


class UndeclaredVariable(InputError):
    """An identifier is used but never declared in the ring."""


class NonPositiveGrading(InputError):
    """A weight vector is zero, has a negative entry or the wrong length."""


class IncompleteOrder(InputError):
    """A reading order is not a permutation of the declared variables."""


class IdealFileSyntaxError(InputError):
    """
    The ideal file does not follow the grammar.

    Attributes:
        line: 1-based line of the offending token
        column: 1-based column of the offending token
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
