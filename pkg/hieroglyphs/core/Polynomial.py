"""
Polynomials with exact rational coefficients.
"""
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .Errors import ZeroPolynomial
from .Grading import Grading
from .Monomial import Monomial
from .PolynomialRing import PolynomialRing
from .TermOrder import TermOrder

Coefficient = Union[int, Fraction]


class ArithOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


class Polynomial:
    """
    A polynomial as a map from exponent vectors to nonzero Fractions.

    The map itself is the canonical form: zero coefficients are never
    stored and each monomial appears once. Term lists sorted under a term
    order are produced on demand by ``sorted_terms``.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Tuple[int, ...], Coefficient]] = None):
        self.nvars = nvars
        self._terms: Dict[Tuple[int, ...], Fraction] = {}
        if terms:
            for exponents, coefficient in terms.items():
                if len(exponents) != nvars:
                    raise ValueError(f"Exponent vector {exponents} does not match {nvars} variables")
                if coefficient:
                    self._terms[tuple(exponents)] = Fraction(coefficient)

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, var_id: int) -> "Polynomial":
        return cls(nvars, {Monomial.variable(nvars, var_id).exponents: 1})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient: Coefficient = 1) -> "Polynomial":
        return cls(monomial.nvars, {monomial.exponents: coefficient})

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[Tuple[Coefficient, Monomial]]) -> "Polynomial":
        """Sum of (coefficient, monomial) pairs; repeated monomials are added."""
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for coefficient, monomial in terms:
            acc[monomial.exponents] = acc.get(monomial.exponents, Fraction(0)) + Fraction(coefficient)
        return cls(nvars, acc)

    @property
    def terms(self) -> Dict[Tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial.exponents, Fraction(0))

    def monomials(self) -> List[Monomial]:
        return [Monomial(e) for e in self._terms]

    def sorted_terms(self, order: TermOrder) -> List[Tuple[Fraction, Monomial]]:
        """Terms sorted descending under the order."""
        ordered = sorted(self._terms, key=order.key, reverse=True)
        return [(self._terms[e], Monomial(e)) for e in ordered]

    def leading_term(self, order: TermOrder) -> Tuple[Fraction, Monomial]:
        """
        The order-greatest term.

        Raises:
            ZeroPolynomial: If the polynomial is zero
        """
        if not self._terms:
            raise ZeroPolynomial("The zero polynomial has no leading term")
        exponents = max(self._terms, key=order.key)
        return self._terms[exponents], Monomial(exponents)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return self.leading_term(order)[1]

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def weights(self, grading: Grading) -> set:
        return {grading.weight(e) for e in self._terms}

    def is_homogeneous(self, grading: Grading) -> bool:
        return len(self.weights(grading)) <= 1

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Rational):
            return Polynomial.constant(self.nvars, other)
        if isinstance(other, Polynomial):
            return other
        return NotImplemented

    def __add__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            value = acc.get(exponents, 0) + coefficient
            if value:
                acc[exponents] = value
            else:
                acc.pop(exponents, None)
        return Polynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        if isinstance(other, Rational):
            return self.scale(other)
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exponents = tuple(a + b for a, b in zip(ea, eb))
                acc[exponents] = acc.get(exponents, 0) + ca * cb
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def scale(self, factor: Coefficient) -> "Polynomial":
        return Polynomial(self.nvars, {e: c * factor for e, c in self._terms.items()})

    def mul_term(self, coefficient: Coefficient, monomial: Monomial) -> "Polynomial":
        shift = monomial.exponents
        return Polynomial(self.nvars, {
            tuple(a + b for a, b in zip(e, shift)): c * coefficient for e, c in self._terms.items()
        })

    def monic(self, order: TermOrder) -> "Polynomial":
        coefficient, _ = self.leading_term(order)
        return self.scale(1 / coefficient)

    def extended(self, nvars: int) -> "Polynomial":
        pad = (0,) * (nvars - self.nvars)
        return Polynomial(nvars, {e + pad: c for e, c in self._terms.items()})

    def to_string(self, ring: PolynomialRing, order: Optional[TermOrder] = None) -> str:
        """
        Render in the ideal-file syntax, e.g. ``x11*x22 - 2/3*x12^2``.

        Args:
            ring: Ring providing variable names
            order: Order used to sort terms (ring order when omitted)
        """
        if not self._terms:
            return "0"
        if order is None:
            order = TermOrder.lex(range(self.nvars))
        pieces = []
        for coefficient, monomial in self.sorted_terms(order):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if monomial.is_one():
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = monomial.to_string(ring)
            else:
                body = f"{_format_rational(magnitude)}*{monomial.to_string(ring)}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self._terms})"


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def leading_term(order: TermOrder, f: Polynomial) -> Tuple[Fraction, Monomial]:
    """The order-greatest (coefficient, monomial) of f; raises ZeroPolynomial on 0."""
    return f.leading_term(order)


def poly_arith(op: ArithOp, f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact ring arithmetic dispatched on an ArithOp."""
    if op is ArithOp.ADD:
        return f + g
    if op is ArithOp.SUB:
        return f - g
    if op is ArithOp.MUL:
        return f * g
    raise ValueError(f"Unknown arithmetic operation: {op}")
