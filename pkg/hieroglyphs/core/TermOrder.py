"""
Term orders on monomials.

An order is turned into a sort key on exponent vectors: a larger key is a
larger monomial, so ``max(monomials, key=order.key)`` is the leading one.
"""
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from operator import itemgetter
from typing import Callable, Iterable, List, Sequence, Tuple

from .Errors import IncompleteOrder
from .Monomial import Monomial


class OrderKind(Enum):
    LEX = "lex"
    GREVLEX = "grevlex"


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _picker(indices: Sequence[int]) -> Callable[[Tuple[int, ...]], Tuple[int, ...]]:
    if len(indices) == 1:
        only = indices[0]
        return lambda exponents: (exponents[only],)
    if not indices:
        return lambda exponents: ()
    return itemgetter(*indices)


@dataclass(frozen=True)
class TermOrder:
    """
    Lex or graded reverse lex with an explicit variable reading order.

    Attributes:
        kind: LEX or GREVLEX
        reading_order: Variable ids, greatest variable first
    """
    kind: OrderKind
    reading_order: Tuple[int, ...]
    _key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        reading = tuple(self.reading_order)
        object.__setattr__(self, "reading_order", reading)
        if sorted(reading) != list(range(len(reading))):
            raise IncompleteOrder(f"Reading order is not a permutation of the variables: {list(reading)}")
        if self.kind is OrderKind.LEX:
            pick = _picker(reading)
            key = pick
        else:
            pick = _picker(tuple(reversed(reading)))

            def key(exponents, pick=pick):
                return (sum(exponents),) + tuple(-e for e in pick(exponents))
        object.__setattr__(self, "_key", key)

    @classmethod
    def lex(cls, reading_order: Iterable[int]) -> "TermOrder":
        return cls(OrderKind.LEX, tuple(reading_order))

    @classmethod
    def grevlex(cls, reading_order: Iterable[int]) -> "TermOrder":
        return cls(OrderKind.GREVLEX, tuple(reading_order))

    @property
    def nvars(self) -> int:
        return len(self.reading_order)

    def key(self, exponents: Tuple[int, ...]) -> Tuple[int, ...]:
        """Sort key of an exponent vector; greater key means greater monomial."""
        return self._key(exponents)

    def compare(self, a: Monomial, b: Monomial) -> Comparison:
        ka, kb = self._key(a.exponents), self._key(b.exponents)
        if ka == kb:
            return Comparison.EQUAL
        return Comparison.GREATER if ka > kb else Comparison.LESS

    def descending(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        return sorted(monomials, key=lambda m: self._key(m.exponents), reverse=True)

    def with_kind(self, kind: OrderKind) -> "TermOrder":
        return TermOrder(kind, self.reading_order)


def order_compare(order: TermOrder, a: Monomial, b: Monomial) -> Comparison:
    """Compare two monomials under a term order."""
    return order.compare(a, b)
