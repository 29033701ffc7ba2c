"""
Polarization of monomial ideals.

Each power x^a in a minimal generator becomes the product of the first a
copies of x. Copy 1 is x itself; copies 2, 3, ... are new variables that
share x's base name, grid cell and weight.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..core.Errors import NothingToPolarize
from ..core.Grading import Grading
from ..core.Monomial import Monomial
from .MonomialIdeal import MonomialIdeal

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polarization:
    """
    Result of polarizing a monomial ideal.

    Attributes:
        ideal: Squarefree ideal in the enlarged ring
        grading: Grading of the enlarged ring; copies inherit weights
        copy_map: For every variable of the enlarged ring, the id of the
            original variable it copies (identity on original ids)
    """
    ideal: MonomialIdeal
    grading: Grading
    copy_map: Tuple[int, ...]

    @property
    def ring(self):
        return self.ideal.ring


def polarize(ideal: MonomialIdeal, grading: Optional[Grading] = None) -> Polarization:
    """
    Fully polarize a monomial ideal.

    Args:
        ideal: Ideal given by minimal generators
        grading: Grading of the ideal's ring (standard when omitted)

    Returns:
        The Polarization; a squarefree ideal is returned unchanged with the
        identity copy map
    """
    ring = ideal.ring
    if grading is None:
        grading = Grading.standard(ring.nvars)
    top = ideal.max_exponents()

    sources: List[int] = []
    copies_of = {}
    for var_id, power in enumerate(top):
        if power >= 2:
            copies_of[var_id] = list(range(ring.nvars + len(sources), ring.nvars + len(sources) + power - 1))
            sources.extend([var_id] * (power - 1))
    if not sources:
        return Polarization(ideal, grading, tuple(range(ring.nvars)))

    enlarged = ring.with_copies(sources)
    gens = []
    for monomial in ideal.gens:
        exponents = [min(e, 1) for e in monomial.exponents] + [0] * len(sources)
        for var_id, power in monomial.support().items():
            for copy_id in copies_of.get(var_id, [])[:power - 1]:
                exponents[copy_id] = 1
        gens.append(Monomial(exponents))

    copy_map = tuple(range(ring.nvars)) + tuple(sources)
    log.debug("polarized %d generators, %d new variables", len(gens), len(sources))
    return Polarization(MonomialIdeal(enlarged, gens), grading.lifted(copy_map), copy_map)


def partial_polarize(ideal: MonomialIdeal, var_id: int) -> MonomialIdeal:
    """
    Partially polarize with respect to one variable.

    Every generator g with x_i^a, a >= 2, is replaced by (g / x_i) * y for
    one new copy y of x_i.

    Args:
        ideal: Ideal given by minimal generators
        var_id: Id of x_i

    Returns:
        The ideal in the ring with y appended

    Raises:
        NothingToPolarize: If x_i appears with exponent at most 1
    """
    if ideal.max_exponents()[var_id] < 2:
        raise NothingToPolarize(
            f"Variable {ideal.ring.variable(var_id).name} never appears with exponent 2 or more")
    enlarged = ideal.ring.with_copies([var_id])
    y = enlarged.nvars - 1
    gens = []
    for monomial in ideal.gens:
        exponents = list(monomial.exponents) + [0]
        if exponents[var_id] >= 2:
            exponents[var_id] -= 1
            exponents[y] = 1
        gens.append(Monomial(exponents))
    return MonomialIdeal(enlarged, gens)
