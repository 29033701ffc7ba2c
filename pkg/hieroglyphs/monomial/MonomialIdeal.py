"""
Monomial ideals given by their minimal generators.
"""
from typing import Iterable, List, Sequence, Tuple

from ..core.Errors import ContainsUnit, NotMinimal
from ..core.Monomial import Monomial
from ..core.PolynomialRing import PolynomialRing


def _sort_key(monomial: Monomial):
    return (monomial.degree, tuple(-e for e in monomial.exponents))


def _is_antichain(gens: Sequence[Monomial]) -> bool:
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            if i != j and a.divides(b):
                return False
    return True


def minimal_subset(gens: Iterable[Monomial]) -> List[Monomial]:
    """
    Drop every generator divisible by another one.

    Generators are scanned by increasing degree, so a monomial can only be
    divided by one already kept. Duplicates collapse.
    """
    kept: List[Monomial] = []
    for monomial in sorted(set(gens), key=_sort_key):
        if not any(k.divides(monomial) for k in kept):
            kept.append(monomial)
    return sorted(kept, key=_sort_key)


class MonomialIdeal:
    """
    A proper monomial ideal held by its minimal generators.

    Generators form an antichain under divisibility and are kept in a
    deterministic order (degree, then exponent vectors lexicographically
    with low variable ids first). The zero ideal has no generators; the unit
    ideal is rejected.
    """

    def __init__(self, ring: PolynomialRing, gens: Iterable[Monomial]):
        """
        Initialize from minimal generators.

        Args:
            ring: Ambient ring
            gens: Minimal monomial generators

        Raises:
            NotMinimal: If one generator divides another
            ContainsUnit: If a generator is 1
        """
        gens = list(gens)
        for monomial in gens:
            if monomial.nvars != ring.nvars:
                raise ValueError(f"{monomial!r} does not live in {ring!r}")
            if monomial.is_one():
                raise ContainsUnit("A monomial ideal containing 1 is the whole ring")
        if not _is_antichain(gens):
            raise NotMinimal("Generators are not minimal: one divides another")
        self.ring = ring
        self.gens: Tuple[Monomial, ...] = tuple(sorted(gens, key=_sort_key))

    @classmethod
    def from_generators(cls, ring: PolynomialRing, gens: Iterable[Monomial]) -> "MonomialIdeal":
        """Ideal generated by arbitrary monomials, minimalized first."""
        return cls(ring, minimal_subset(gens))

    @classmethod
    def zero(cls, ring: PolynomialRing) -> "MonomialIdeal":
        return cls(ring, [])

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(m.is_squarefree() for m in self.gens)

    def contains(self, monomial: Monomial) -> bool:
        return any(g.divides(monomial) for g in self.gens)

    def supports(self) -> List[frozenset]:
        return [frozenset(m.variables()) for m in self.gens]

    def max_exponents(self) -> Tuple[int, ...]:
        top = [0] * self.ring.nvars
        for monomial in self.gens:
            for var_id, exponent in enumerate(monomial.exponents):
                top[var_id] = max(top[var_id], exponent)
        return tuple(top)

    def add(self, monomial: Monomial) -> "MonomialIdeal":
        return MonomialIdeal.from_generators(self.ring, self.gens + (monomial,))

    def colon(self, monomial: Monomial) -> "MonomialIdeal":
        """
        The colon ideal (J : m), generated by g / gcd(g, m).

        Raises:
            ContainsUnit: If m already lies in J
        """
        return MonomialIdeal.from_generators(self.ring, (g / g.gcd(monomial) for g in self.gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection; generated by pairwise lcms."""
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.ring)
        return MonomialIdeal.from_generators(self.ring, (a.lcm(b) for a in self.gens for b in other.gens))

    def extended(self, ring: PolynomialRing) -> "MonomialIdeal":
        """Same generators in a ring with more variables appended."""
        return MonomialIdeal(ring, (m.extended(ring.nvars) for m in self.gens))

    def to_string(self) -> str:
        return "<" + ", ".join(m.to_string(self.ring) for m in self.gens) + ">"

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.to_string()})"


def minimalize(ring: PolynomialRing, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Divisibility-minimal subset of the generators, sorted."""
    return MonomialIdeal.from_generators(ring, gens)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    """True iff every minimal generator has all exponents at most 1."""
    return ideal.is_squarefree()
