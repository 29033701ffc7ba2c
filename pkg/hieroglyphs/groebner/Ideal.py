"""
Polynomial ideals given by generators.
"""
import logging
from typing import Iterable, Tuple

from ..core.Grading import Grading
from ..core.Polynomial import Polynomial
from ..core.PolynomialRing import PolynomialRing

log = logging.getLogger(__name__)


class Ideal:
    """
    An ideal of a polynomial ring, held by a list of generators.

    Zero generators are dropped on construction. The generator order carries
    no meaning: every operation gives the same answer for any permutation.
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial]):
        """
        Initialize an ideal.

        Args:
            ring: Ambient ring
            generators: Polynomials in the ring
        """
        gens = []
        for f in generators:
            if f.nvars != ring.nvars:
                raise ValueError(f"Generator has {f.nvars} variables, ring has {ring.nvars}")
            if f.is_zero():
                log.debug("dropping zero generator")
                continue
            gens.append(f)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self, grading: Grading) -> bool:
        """True iff every generator is homogeneous for the grading."""
        return all(f.is_homogeneous(grading) for f in self.generators)

    def to_string(self) -> str:
        return "<" + ", ".join(f.to_string(self.ring) for f in self.generators) + ">"

    def __repr__(self):
        return f"Ideal({self.to_string()})"
