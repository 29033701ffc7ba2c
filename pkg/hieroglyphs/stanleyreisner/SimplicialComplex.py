"""
Stanley-Reisner correspondence between squarefree monomial ideals and
simplicial complexes.
"""
import logging
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple

from ..core.Errors import NotSquarefree
from ..core.Monomial import Monomial
from ..core.PolynomialRing import PolynomialRing
from ..monomial.MonomialIdeal import MonomialIdeal
from .Transversals import minimal_transversals

log = logging.getLogger(__name__)


class PrimeComponent(frozenset):
    """
    The prime ideal generated by a set of variables, held as their ids.
    """

    def sorted_ids(self) -> List[int]:
        return sorted(self)

    def to_string(self, ring: PolynomialRing) -> str:
        """Variables listed from highest id to lowest, e.g. ``<x22, x21, x12, x11>``."""
        return "<" + ", ".join(ring.variable(i).name for i in sorted(self, reverse=True)) + ">"

    def __repr__(self):
        return f"PrimeComponent({self.sorted_ids()})"


class SimplicialComplex:
    """
    A simplicial complex on vertices 0..N-1 held by its facets.

    Faces are implicit: every subset of a facet. A facet contained in
    another is dropped on construction; the remaining facets keep the
    order they were given in.
    """

    def __init__(self, vertex_count: int, facets: Iterable[Iterable[int]]):
        """
        Initialize a complex.

        Args:
            vertex_count: Number N of vertices
            facets: Vertex sets; each must lie in 0..N-1
        """
        candidates = []
        for facet in facets:
            facet = frozenset(facet)
            if any(v < 0 or v >= vertex_count for v in facet):
                raise ValueError(f"Facet {sorted(facet)} has a vertex outside 0..{vertex_count - 1}")
            if facet not in candidates:
                candidates.append(facet)
        self.vertex_count = vertex_count
        self.facets: Tuple[frozenset, ...] = tuple(
            f for f in candidates if not any(f < other for other in candidates))

    @classmethod
    def simplex(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, [range(vertex_count)])

    @property
    def dimension(self) -> int:
        """Largest facet size minus one; -1 for the complex {∅}, None when void."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def is_face(self, sigma: Iterable[int]) -> bool:
        sigma = frozenset(sigma)
        return any(sigma <= facet for facet in self.facets)

    def faces(self) -> Iterator[frozenset]:
        """Every face once, by size then sorted vertex list."""
        seen = set()
        for facet in self.facets:
            for size in range(len(facet) + 1):
                for subset in combinations(sorted(facet), size):
                    seen.add(frozenset(subset))
        return iter(sorted(seen, key=lambda s: (len(s), sorted(s))))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash((self.vertex_count, frozenset(self.facets)))

    def __repr__(self):
        return f"SimplicialComplex({self.vertex_count}, {[sorted(f) for f in self.facets]})"


def _require_squarefree(ideal: MonomialIdeal):
    if not ideal.is_squarefree():
        raise NotSquarefree(f"{ideal.to_string()} is not squarefree; polarize it first")


def minimal_primes(ideal: MonomialIdeal) -> List[PrimeComponent]:
    """
    Minimal primes of a squarefree monomial ideal.

    Args:
        ideal: Squarefree monomial ideal

    Returns:
        Minimal vertex covers of the generator supports, sorted by size then
        by sorted id list; empty for the zero ideal

    Raises:
        NotSquarefree: If a generator has an exponent above 1
    """
    _require_squarefree(ideal)
    if ideal.is_zero():
        return []
    primes = [PrimeComponent(t) for t in minimal_transversals(ideal.supports())]
    log.debug("%d minimal primes for %d generators", len(primes), len(ideal))
    return primes


def sr_facets(ideal: MonomialIdeal) -> SimplicialComplex:
    """
    The Stanley-Reisner complex, facets listed in the same order as the
    minimal primes they complement.

    Raises:
        NotSquarefree: If a generator has an exponent above 1
    """
    _require_squarefree(ideal)
    n = ideal.ring.nvars
    if ideal.is_zero():
        return SimplicialComplex.simplex(n)
    everything = frozenset(range(n))
    return SimplicialComplex(n, (everything - prime for prime in minimal_primes(ideal)))


def ideal_from_facets(complex_: SimplicialComplex, ring: Optional[PolynomialRing] = None) -> MonomialIdeal:
    """
    The Stanley-Reisner ideal, generated by the minimal non-faces.

    Args:
        complex_: The complex
        ring: Ring with one variable per vertex (x1..xN when omitted)

    Returns:
        Squarefree monomial ideal; zero for a full simplex
    """
    n = complex_.vertex_count
    if ring is None:
        ring = PolynomialRing.from_names([f"x{i + 1}" for i in range(n)])
    if ring.nvars != n:
        raise ValueError(f"Ring has {ring.nvars} variables, complex has {n} vertices")
    everything = frozenset(range(n))
    complements = [everything - facet for facet in complex_.facets]
    if any(not c for c in complements):
        return MonomialIdeal.zero(ring)
    gens = [Monomial.from_support(n, {v: 1 for v in t}) for t in minimal_transversals(complements)]
    return MonomialIdeal(ring, gens)


def is_face(complex_: SimplicialComplex, sigma: Iterable[int]) -> bool:
    return complex_.is_face(sigma)
