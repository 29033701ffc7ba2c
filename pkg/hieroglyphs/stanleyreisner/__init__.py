"""
Minimal primes of squarefree monomial ideals and their simplicial complexes.
"""

from .Transversals import minimal_transversals
from .SimplicialComplex import (
    PrimeComponent, SimplicialComplex, minimal_primes, sr_facets, ideal_from_facets, is_face,
)

__all__ = [
    'minimal_transversals', 'PrimeComponent', 'SimplicialComplex',
    'minimal_primes', 'sr_facets', 'ideal_from_facets', 'is_face',
]
