"""
K-polynomials, Hilbert series, multidegrees and degrees of monomial quotients.
"""

from .LaurentPoly import LaurentPoly
from .KPolynomial import (
    KAlgorithm, kpoly, kpoly_taylor, kpoly_split, kpoly_faces,
    hilbert_series_check, hilbert_series_coefficients,
)
from .Multidegree import multidegree, degree, codimension

__all__ = [
    'LaurentPoly', 'KAlgorithm', 'kpoly', 'kpoly_taylor', 'kpoly_split',
    'kpoly_faces', 'hilbert_series_check', 'hilbert_series_coefficients',
    'multidegree', 'degree', 'codimension',
]
