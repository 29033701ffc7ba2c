"""
Monomial ideals, minimal generators and polarization.
"""

from .MonomialIdeal import MonomialIdeal, minimal_subset, minimalize, is_squarefree
from .Polarization import Polarization, polarize, partial_polarize

__all__ = [
    'MonomialIdeal', 'minimal_subset', 'minimalize', 'is_squarefree',
    'Polarization', 'polarize', 'partial_polarize',
]
