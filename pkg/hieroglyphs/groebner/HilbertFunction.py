"""
Hilbert function by direct monomial counting.

Used as an independent check of Hilbert series computed from K-polynomials
and of the fact that all initial ideals of an ideal share one Hilbert
function.
"""
from itertools import combinations_with_replacement
from typing import List, Optional, Union

from ..core.Errors import ContainsUnit
from ..core.Monomial import Monomial
from ..core.TermOrder import TermOrder
from ..monomial.MonomialIdeal import MonomialIdeal
from .GroebnerBasis import initial_ideal
from .Ideal import Ideal


def monomials_of_degree(nvars: int, degree: int):
    """Yield every monomial of the given total degree."""
    for choice in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for var_id in choice:
            exponents[var_id] += 1
        yield Monomial(exponents)


def hilbert_function_oracle(ideal: Union[Ideal, MonomialIdeal], bound: int,
                            order: Optional[TermOrder] = None) -> List[int]:
    """
    Standard-graded Hilbert function HF(0), ..., HF(bound) of R/I.

    Args:
        ideal: A monomial ideal, or a polynomial ideal whose initial ideal is
            taken first
        bound: Largest degree counted
        order: Order used for a polynomial ideal (grevlex in ring order when
            omitted)

    Returns:
        Number of standard monomials in each degree
    """
    if bound < 0:
        raise ValueError(f"Degree bound must be nonnegative, got {bound}")
    if isinstance(ideal, Ideal):
        if order is None:
            order = TermOrder.grevlex(range(ideal.ring.nvars))
        try:
            ideal = initial_ideal(order, ideal)
        except ContainsUnit:
            return [0] * (bound + 1)
    nvars = ideal.ring.nvars
    return [
        sum(1 for m in monomials_of_degree(nvars, degree) if not ideal.contains(m))
        for degree in range(bound + 1)
    ]
