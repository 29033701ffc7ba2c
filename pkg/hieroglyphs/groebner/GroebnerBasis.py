"""
Buchberger's algorithm over the rationals.

The main loop works on primitive integer polynomials stored as dicts from
exponent vectors to ints. Reduction is fraction-free: before cancelling a
term the running polynomial is scaled so that no division is needed. The
final basis is minimalized, interreduced and made monic over Fractions.
"""
import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.Errors import ContainsUnit, IncompleteOrder
from ..core.Monomial import Monomial
from ..core.Polynomial import Polynomial
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import TermOrder
from ..monomial.MonomialIdeal import MonomialIdeal
from .Ideal import Ideal

log = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
IntPoly = Dict[Exponents, int]


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _leading(poly, key) -> Exponents:
    return max(poly, key=key)


def _primitive(poly: IntPoly, key) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    content = 0
    for c in poly.values():
        content = gcd(content, c)
    if poly[_leading(poly, key)] < 0:
        content = -content
    return {e: c // content for e, c in poly.items()}


def _to_int_poly(f: Polynomial, key) -> IntPoly:
    denominator = 1
    for c in f.terms.values():
        denominator = denominator * c.denominator // gcd(denominator, c.denominator)
    return _primitive({e: int(c * denominator) for e, c in f.items()}, key)


class _Element:
    """A basis polynomial with its cached leading data."""

    __slots__ = ("poly", "lead", "lead_coefficient")

    def __init__(self, poly: IntPoly, key):
        self.poly = poly
        self.lead = _leading(poly, key)
        self.lead_coefficient = poly[self.lead]


def _reduce(f: IntPoly, basis: Sequence[_Element], key) -> IntPoly:
    """
    Fully reduce f by the basis, fraction-free.

    The result is a nonzero integer multiple of the true normal form, made
    primitive; an empty dict means f reduces to zero.
    """
    work = dict(f)
    remainder: IntPoly = {}
    heap = [(tuple(-k for k in _flat_key(key, e)), e) for e in work]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = work.get(e)
        if c is None:
            continue
        divisor = next((g for g in basis if _divides(g.lead, e)), None)
        if divisor is None:
            remainder[e] = c
            del work[e]
            continue
        d = gcd(c, divisor.lead_coefficient)
        a = divisor.lead_coefficient // d
        b = c // d
        if a != 1:
            for k in work:
                work[k] *= a
            for k in remainder:
                remainder[k] *= a
        shift = tuple(x - y for x, y in zip(e, divisor.lead))
        for ge, gc in divisor.poly.items():
            ne = tuple(x + y for x, y in zip(shift, ge))
            value = work.get(ne, 0) - b * gc
            if value:
                if ne not in work:
                    heapq.heappush(heap, (tuple(-k for k in _flat_key(key, ne)), ne))
                work[ne] = value
            else:
                work.pop(ne, None)
    if not remainder:
        return remainder
    return _primitive(remainder, key)


def _flat_key(key, exponents: Exponents) -> Tuple[int, ...]:
    return tuple(key(exponents))


def _int_s_polynomial(f: _Element, g: _Element) -> IntPoly:
    lcm = _lcm(f.lead, g.lead)
    shift_f = tuple(x - y for x, y in zip(lcm, f.lead))
    shift_g = tuple(x - y for x, y in zip(lcm, g.lead))
    d = gcd(f.lead_coefficient, g.lead_coefficient)
    cf = g.lead_coefficient // d
    cg = f.lead_coefficient // d
    acc: IntPoly = {}
    for e, c in f.poly.items():
        ne = tuple(x + y for x, y in zip(e, shift_f))
        acc[ne] = acc.get(ne, 0) + cf * c
    for e, c in g.poly.items():
        ne = tuple(x + y for x, y in zip(e, shift_g))
        acc[ne] = acc.get(ne, 0) - cg * c
    return {e: c for e, c in acc.items() if c}


@dataclass(frozen=True)
class GroebnerBasis:
    """
    A reduced Gröbner basis.

    Attributes:
        order: Term order the basis is reduced for
        elements: Monic polynomials, sorted by leading monomial descending
        ring: Ambient ring
    """
    order: TermOrder
    elements: Tuple[Polynomial, ...]
    ring: PolynomialRing

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> List[Monomial]:
        return [f.leading_monomial(self.order) for f in self.elements]

    def contains(self, f: Polynomial) -> bool:
        """Ideal membership: f reduces to zero."""
        if not self.elements:
            return f.is_zero()
        return normal_form(self.order, f, self.elements).is_zero()

    def is_groebner(self) -> bool:
        """Check that every S-polynomial reduces to zero."""
        elements = list(self.elements)
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                s = s_polynomial(self.order, elements[i], elements[j])
                if not normal_form(self.order, s, elements).is_zero():
                    return False
        return True

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].leading_monomial(self.order).is_one()


def s_polynomial(order: TermOrder, f: Polynomial, g: Polynomial) -> Polynomial:
    """The S-polynomial of f and g, cancelling their leading terms."""
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = mf.lcm(mg)
    return f.mul_term(1 / cf, lcm / mf) - g.mul_term(1 / cg, lcm / mg)


def normal_form(order: TermOrder, f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """
    Remainder of f under full multivariate division by the basis.

    Divisors are tried in list order, so the result is deterministic for a
    given list; it is canonical when the list is a Gröbner basis.

    Args:
        order: Term order
        f: Polynomial to reduce
        basis: Nonzero divisors

    Returns:
        A polynomial none of whose terms is divisible by a leading monomial
        of the basis
    """
    leads = [g.leading_term(order) for g in basis]
    work = dict(f.items())
    remainder: Dict[Exponents, Fraction] = {}
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        for g, (lc, lm) in zip(basis, leads):
            if _divides(lm.exponents, e):
                factor = c / lc
                shift = tuple(x - y for x, y in zip(e, lm.exponents))
                for ge, gc in g.items():
                    ne = tuple(x + y for x, y in zip(shift, ge))
                    if ne == e:
                        continue
                    value = work.get(ne, 0) - factor * gc
                    if value:
                        work[ne] = value
                    else:
                        work.pop(ne, None)
                break
        else:
            remainder[e] = c
    return Polynomial(f.nvars, remainder)


def buchberger(order: TermOrder, ideal: Ideal) -> GroebnerBasis:
    """
    Compute the reduced Gröbner basis of an ideal.

    Pairs are processed smallest lcm first. Pairs with coprime leading
    monomials are skipped, as are pairs whose lcm is divisible by the
    leading monomial of a third element whose own pairs are already done.

    Args:
        order: Term order on the ideal's ring
        ideal: The ideal

    Returns:
        The reduced, monic basis sorted by leading monomial descending; an
        empty basis for the zero ideal and [1] for the unit ideal
    """
    ring = ideal.ring
    if order.nvars != ring.nvars:
        raise IncompleteOrder(f"Term order has {order.nvars} variables, ring has {ring.nvars}")
    key = order.key
    if ideal.is_zero():
        return GroebnerBasis(order, (), ring)

    basis: List[_Element] = []
    seen = set()
    for f in ideal.generators:
        poly = _to_int_poly(f, key)
        frozen = frozenset(poly.items())
        if frozen not in seen:
            seen.add(frozen)
            basis.append(_Element(poly, key))

    pending = set()
    heap = []

    def push_pairs(new: int):
        for old in range(new):
            lcm = _lcm(basis[old].lead, basis[new].lead)
            heapq.heappush(heap, (sum(lcm), tuple(key(lcm)), old, new))
            pending.add((old, new))

    for index in range(1, len(basis)):
        push_pairs(index)

    reductions = 0
    skipped = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = basis[i], basis[j]
        if not any(a and b for a, b in zip(fi.lead, fj.lead)):
            skipped += 1
            continue
        lcm = _lcm(fi.lead, fj.lead)
        if _chain_criterion(basis, pending, i, j, lcm):
            skipped += 1
            continue
        remainder = _reduce(_int_s_polynomial(fi, fj), basis, key)
        reductions += 1
        if remainder:
            basis.append(_Element(remainder, key))
            if not any(basis[-1].lead):
                log.debug("unit ideal detected after %d reductions", reductions)
                heap.clear()
                break
            push_pairs(len(basis) - 1)

    log.debug("buchberger: %d reductions, %d pairs skipped, %d elements before minimalization",
              reductions, skipped, len(basis))
    return GroebnerBasis(order, _reduced(basis, key, order), ring)


def _chain_criterion(basis, pending, i, j, lcm) -> bool:
    for k, g in enumerate(basis):
        if k in (i, j) or not _divides(g.lead, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduced(basis: List[_Element], key, order: TermOrder) -> Tuple[Polynomial, ...]:
    units = [g for g in basis if not any(g.lead)]
    if units:
        nvars = len(units[0].lead)
        return (Polynomial.constant(nvars, 1),)

    minimal: List[_Element] = []
    for index, g in enumerate(basis):
        dominated = False
        for other_index, h in enumerate(basis):
            if other_index == index or not _divides(h.lead, g.lead):
                continue
            if h.lead != g.lead or other_index < index:
                dominated = True
                break
        if not dominated:
            minimal.append(g)

    elements = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        poly = _reduce(g.poly, others, key)
        lead_coefficient = poly[g.lead]
        nvars = len(g.lead)
        elements.append(Polynomial(nvars, {e: Fraction(c, lead_coefficient) for e, c in poly.items()}))
    elements.sort(key=lambda f: key(f.leading_monomial(order).exponents), reverse=True)
    return tuple(elements)


def initial_ideal(order: TermOrder, ideal: Ideal, basis: Optional[GroebnerBasis] = None) -> MonomialIdeal:
    """
    The initial ideal, by its minimal generators.

    Args:
        order: Term order
        ideal: The ideal
        basis: A reduced basis already computed for this order, if any

    Returns:
        The leading monomials of the reduced Gröbner basis

    Raises:
        ContainsUnit: If the ideal is the whole ring
    """
    if basis is None:
        basis = buchberger(order, ideal)
    if basis.is_unit():
        raise ContainsUnit("The ideal is the unit ideal; its initial ideal contains 1")
    return MonomialIdeal(ideal.ring, basis.leading_monomials())
