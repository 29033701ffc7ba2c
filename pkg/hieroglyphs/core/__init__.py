"""
Polynomial ring primitives: variables, gradings, monomials, polynomials
and term orders over the rationals.
"""

from .Errors import (
    HieroglyphError, InputError, ComputationError, ZeroPolynomial, NotMinimal,
    NothingToPolarize, ContainsUnit, NotSquarefree, TooManyGenerators,
    NotStandardGrading, NotHomogeneous, UnequalTotalDegrees, MissingGridMetadata,
    TooLarge, BadDimensions, InvalidPermutation, UnknownFixture, DuplicateVariable,
    UndeclaredVariable, NonPositiveGrading, IncompleteOrder, IdealFileSyntaxError,
)
from .Variable import GridCell, Variable
from .PolynomialRing import PolynomialRing
from .Grading import Grading
from .Monomial import Monomial, mono_mul, mono_lcm, mono_divides
from .TermOrder import TermOrder, OrderKind, Comparison, order_compare
from .Polynomial import Polynomial, ArithOp, leading_term, poly_arith

__all__ = [
    'HieroglyphError', 'InputError', 'ComputationError', 'ZeroPolynomial',
    'NotMinimal', 'NothingToPolarize', 'ContainsUnit', 'NotSquarefree',
    'TooManyGenerators', 'NotStandardGrading', 'NotHomogeneous',
    'UnequalTotalDegrees', 'MissingGridMetadata', 'TooLarge', 'BadDimensions',
    'InvalidPermutation', 'UnknownFixture', 'DuplicateVariable',
    'UndeclaredVariable', 'NonPositiveGrading', 'IncompleteOrder',
    'IdealFileSyntaxError',
    'GridCell', 'Variable', 'PolynomialRing', 'Grading',
    'Monomial', 'mono_mul', 'mono_lcm', 'mono_divides',
    'TermOrder', 'OrderKind', 'Comparison', 'order_compare',
    'Polynomial', 'ArithOp', 'leading_term', 'poly_arith',
]
