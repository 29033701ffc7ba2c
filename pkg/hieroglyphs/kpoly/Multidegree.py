"""
Multidegrees, degrees and codimension read off a K-polynomial.
"""
from typing import Optional

from ..core.Errors import NotStandardGrading
from ..core.Grading import Grading
from .LaurentPoly import LaurentPoly


def multidegree(K: LaurentPoly, grading: Optional[Grading] = None) -> LaurentPoly:
    """
    Lowest total degree part of K(1 - t).

    Args:
        K: K-polynomial of R/I
        grading: Grading K was computed for; only its dimension is checked
    """
    if grading is not None and grading.dim != K.dim:
        raise ValueError(f"K-polynomial has {K.dim} variables, grading has dimension {grading.dim}")
    return K.substitute_one_minus().lowest_degree_part()


def degree(K: LaurentPoly, grading: Optional[Grading] = None) -> int:
    """
    Degree of the variety: the coefficient of the lowest term of K(1 - t).

    Raises:
        NotStandardGrading: If K is multigraded or the grading is not standard
    """
    if K.dim != 1 or (grading is not None and not grading.is_standard):
        raise NotStandardGrading("Degree is read from a standard-graded K-polynomial")
    lowest = multidegree(K)
    if lowest.is_zero():
        return 0
    (coefficient,) = lowest.terms.values()
    return coefficient


def codimension(K: LaurentPoly) -> int:
    """Total degree of the multidegree, i.e. the codimension of the variety."""
    lowest = multidegree(K)
    if lowest.is_zero():
        raise ValueError("The unit ideal has no codimension")
    return lowest.min_total_degree()
