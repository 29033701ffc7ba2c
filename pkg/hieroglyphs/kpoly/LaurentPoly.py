"""
Laurent polynomials in t_1, ..., t_d with integer coefficients.
"""
from itertools import product
from math import comb
from typing import Dict, Iterable, Mapping, Tuple

Exponents = Tuple[int, ...]


class LaurentPoly:
    """
    A map from exponent vectors in Z^d to nonzero integers.

    Exponents may be negative; ``substitute_one_minus`` is the only
    operation that needs them nonnegative.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Exponents, int] = None):
        self.dim = dim
        self._terms: Dict[Exponents, int] = {}
        if terms:
            for exponents, coefficient in terms.items():
                exponents = tuple(exponents)
                if len(exponents) != dim:
                    raise ValueError(f"Exponent {exponents} does not have length {dim}")
                if coefficient:
                    self._terms[exponents] = int(coefficient)

    @classmethod
    def zero(cls, dim: int) -> "LaurentPoly":
        return cls(dim)

    @classmethod
    def one(cls, dim: int) -> "LaurentPoly":
        return cls(dim, {(0,) * dim: 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coefficient: int = 1) -> "LaurentPoly":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coefficient})

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            acc[exponents] = acc.get(exponents, 0) + coefficient
        return LaurentPoly(self.dim, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.dim, {e: c * other for e, c in self._terms.items()})
        acc: Dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exponents = tuple(a + b for a, b in zip(ea, eb))
                acc[exponents] = acc.get(exponents, 0) + ca * cb
        return LaurentPoly(self.dim, acc)

    __rmul__ = __mul__

    def shifted(self, exponents: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial t^a."""
        shift = tuple(exponents)
        return LaurentPoly(self.dim, {
            tuple(a + b for a, b in zip(e, shift)): c for e, c in self._terms.items()
        })

    def substitute_one_minus(self) -> "LaurentPoly":
        """
        Apply t_i -> 1 - t_i to every variable, expanded exactly.

        Raises:
            ValueError: If an exponent is negative
        """
        acc: Dict[Exponents, int] = {}
        for exponents, coefficient in self._terms.items():
            if any(a < 0 for a in exponents):
                raise ValueError(f"Cannot substitute 1 - t into t^{list(exponents)}")
            for picks in product(*(range(a + 1) for a in exponents)):
                value = coefficient
                for a, k in zip(exponents, picks):
                    value *= comb(a, k) * (-1) ** k
                acc[picks] = acc.get(picks, 0) + value
        return LaurentPoly(self.dim, acc)

    def lowest_degree_part(self) -> "LaurentPoly":
        """Terms whose total degree is minimal."""
        if not self._terms:
            return LaurentPoly.zero(self.dim)
        low = min(sum(e) for e in self._terms)
        return LaurentPoly(self.dim, {e: c for e, c in self._terms.items() if sum(e) == low})

    def min_total_degree(self) -> int:
        return min(sum(e) for e in self._terms)

    def to_string(self, variable: str = "t") -> str:
        """
        Render as e.g. ``1 - 2*t^2 + t^3`` (one variable) or
        ``t1*t2^2`` (several).
        """
        if not self._terms:
            return "0"
        ordered = sorted(self._terms, key=lambda e: (sum(e), tuple(-a for a in e)))
        text = ""
        for exponents in ordered:
            coefficient = self._terms[exponents]
            body = self._monomial_string(exponents, variable)
            magnitude = abs(coefficient)
            if not body:
                piece = str(magnitude)
            elif magnitude == 1:
                piece = body
            else:
                piece = f"{magnitude}*{body}"
            if not text:
                text = ("-" if coefficient < 0 else "") + piece
            else:
                text += (" - " if coefficient < 0 else " + ") + piece
        return text

    def _monomial_string(self, exponents: Exponents, variable: str) -> str:
        factors = []
        for index, a in enumerate(exponents):
            if not a:
                continue
            name = variable if self.dim == 1 else f"{variable}{index + 1}"
            factors.append(name if a == 1 else f"{name}^{a}")
        return "*".join(factors)

    def to_json(self) -> Dict[str, int]:
        """Keys are comma-joined exponent vectors, e.g. ``{"0": 1, "2": -1}``."""
        ordered = sorted(self._terms, key=lambda e: (sum(e), e))
        return {",".join(str(a) for a in e): self._terms[e] for e in ordered}

    @classmethod
    def from_json(cls, data: Mapping[str, int], dim: int) -> "LaurentPoly":
        return cls(dim, {tuple(int(a) for a in key.split(",")): value for key, value in data.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"
