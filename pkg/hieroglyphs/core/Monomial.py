"""
Monomials as dense exponent vectors.
"""
from typing import Dict, Iterable, Tuple

from .PolynomialRing import PolynomialRing


class Monomial:
    """
    A monomial x^a stored as its exponent vector.

    The vector has one entry per ring variable; the sparse view required by
    callers that think in terms of variable ids is ``support()``.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        self.exponents: Tuple[int, ...] = tuple(exponents)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars: int, var_id: int, power: int = 1) -> "Monomial":
        exponents = [0] * nvars
        exponents[var_id] = power
        return cls(exponents)

    @classmethod
    def from_support(cls, nvars: int, support: Dict[int, int]) -> "Monomial":
        exponents = [0] * nvars
        for var_id, power in support.items():
            exponents[var_id] += power
        return cls(exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> Dict[int, int]:
        """Map from variable id to its positive exponent."""
        return {i: e for i, e in enumerate(self.exponents) if e}

    def variables(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self.exponents, other.exponents))

    def extended(self, nvars: int) -> "Monomial":
        """Same monomial in a ring with more variables appended."""
        return Monomial(self.exponents + (0,) * (nvars - self.nvars))

    def to_string(self, ring: PolynomialRing) -> str:
        if self.is_one():
            return "1"
        factors = []
        for var_id, power in self.support().items():
            name = ring.variable(var_id).name
            factors.append(name if power == 1 else f"{name}^{power}")
        return "*".join(factors)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({list(self.exponents)})"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials (exponentwise sum)."""
    return a * b


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple of two monomials (exponentwise max)."""
    return a.lcm(b)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)
