"""
The tablet pipeline: initial ideal, polarization, decomposition and
selection of the minimum-size hieroglyphs.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..core.Errors import NotHomogeneous, UnequalTotalDegrees
from ..core.Grading import Grading
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import TermOrder
from ..groebner.GroebnerBasis import initial_ideal
from ..groebner.Ideal import Ideal
from ..kpoly.KPolynomial import kpoly_split
from ..kpoly.LaurentPoly import LaurentPoly
from ..kpoly.Multidegree import degree, multidegree
from ..monomial.MonomialIdeal import MonomialIdeal
from ..monomial.Polarization import polarize
from ..stanleyreisner.SimplicialComplex import minimal_primes
from .Hieroglyph import Hieroglyph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tablet:
    """
    Result of the pipeline on one ideal and term order.

    Attributes:
        ring: Polarized ring the hieroglyphs' marks refer to
        order: Term order of the original ring
        grading: Grading of the original ring
        hieroglyphs: Components of minimum size, sorted
        all_components: Every component, sorted the same way
        equidimensional: Whether every component has the same size
        degree: Degree read from the standard-graded K-polynomial
        multidegree: Multidegree read from the K-polynomial under the grading
        initial_ideal: Initial ideal in the original ring, when built here
    """
    ring: PolynomialRing
    order: TermOrder
    grading: Grading
    hieroglyphs: Tuple[Hieroglyph, ...]
    all_components: Tuple[Hieroglyph, ...]
    equidimensional: bool
    degree: int
    multidegree: LaurentPoly
    initial_ideal: Optional[MonomialIdeal] = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.hieroglyphs)

    @property
    def hieroglyph_size(self) -> int:
        return self.hieroglyphs[0].size if self.hieroglyphs else 0


def build_tablet(ideal: Ideal, order: TermOrder, grading: Optional[Grading] = None) -> Tablet:
    """
    Run the tablet pipeline.

    Args:
        ideal: Homogeneous proper ideal
        order: Term order on the ideal's ring
        grading: Positive grading (standard when omitted)

    Returns:
        The tablet with all components and the K-polynomial invariants

    Raises:
        NotHomogeneous: If a generator is not homogeneous for the grading
        ContainsUnit: If the ideal is the whole ring
    """
    ring = ideal.ring
    if grading is None:
        grading = Grading.standard(ring.nvars)
    for f in ideal.generators:
        if not f.is_homogeneous(grading):
            raise NotHomogeneous(f"Generator {f.to_string(ring)} is not homogeneous")

    J = initial_ideal(order, ideal)
    log.info("initial ideal has %d minimal generators", len(J))
    polarization = polarize(J, grading)
    primes = minimal_primes(polarization.ideal)
    log.info("polarized ring has %d variables, %d components", polarization.ring.nvars, len(primes))

    if primes:
        components = sorted((Hieroglyph.from_marks(p, polarization.ring) for p in primes),
                            key=Hieroglyph.sort_key)
    else:
        components = [Hieroglyph.from_marks((), polarization.ring)]
    smallest = min(h.size for h in components)
    tablet = tuple(h for h in components if h.size == smallest)
    equidimensional = all(h.size == smallest for h in components)

    deg = degree(kpoly_split(J))
    mdeg = multidegree(kpoly_split(J, grading), grading)
    if deg != len(tablet):
        log.warning("tablet has %d hieroglyphs but the K-polynomial gives degree %d", len(tablet), deg)
    return Tablet(polarization.ring, order, grading, tablet, tuple(components), equidimensional,
                  deg, mdeg, J)


def tablet_multidegree(tablet: Tablet, grading: Optional[Grading] = None) -> LaurentPoly:
    """
    Sum over the tablet of the product of the marks' weights.

    Args:
        tablet: A built tablet
        grading: Grading of the original or of the polarized ring (the
            tablet's own grading when omitted); copies inherit weights

    Raises:
        UnequalTotalDegrees: If variable weights differ in total degree
    """
    if grading is None:
        grading = tablet.grading
    if grading.nvars < tablet.ring.nvars:
        grading = grading.lifted(tablet.ring.base_ids())
    if not grading.has_equal_total_degrees():
        raise UnequalTotalDegrees(
            f"Variable weights have total degrees {sorted(set(grading.total_degrees()))}")
    total = LaurentPoly.zero(grading.dim)
    for hieroglyph in tablet.hieroglyphs:
        weight = grading.weight([1 if i in hieroglyph.marks else 0 for i in range(tablet.ring.nvars)])
        total = total + LaurentPoly.monomial(weight)
    return total
