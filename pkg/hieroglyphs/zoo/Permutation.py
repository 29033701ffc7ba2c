"""
Permutations in one-line notation.
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Tuple

from ..core.Errors import InvalidPermutation


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1, ..., n}, stored as (w(1), ..., w(n)).
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutation(f"Not a permutation of 1..{len(values)}: {list(values)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Parse ``2143`` (single digits) or ``2,1,4,3``.

        Raises:
            InvalidPermutation: If the text is not a bijection of 1..n
        """
        text = text.strip()
        try:
            if "," in text:
                values = tuple(int(part) for part in text.split(","))
            else:
                values = tuple(int(ch) for ch in text)
        except ValueError:
            raise InvalidPermutation(f"Cannot read a permutation from {text!r}") from None
        if not values:
            raise InvalidPermutation("Empty permutation")
        return cls(values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> Iterator["Permutation"]:
        """Every permutation of size n, in lexicographic order."""
        for values in permutations(range(1, n + 1)):
            yield cls(values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for i, value in enumerate(self.values, start=1):
            inverse[value - 1] = i
        return Permutation(tuple(inverse))

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n)
                   if self.values[a] > self.values[b])

    def is_identity(self) -> bool:
        return self.values == tuple(range(1, self.n + 1))

    def to_string(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __str__(self):
        return self.to_string()
