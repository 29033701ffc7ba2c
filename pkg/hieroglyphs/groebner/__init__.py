"""
Gröbner bases, normal forms and initial ideals.
"""

from .Ideal import Ideal
from .GroebnerBasis import GroebnerBasis, buchberger, normal_form, s_polynomial, initial_ideal
from .HilbertFunction import hilbert_function_oracle, monomials_of_degree

__all__ = [
    'Ideal', 'GroebnerBasis', 'buchberger', 'normal_form', 's_polynomial',
    'initial_ideal', 'hilbert_function_oracle', 'monomials_of_degree',
]
