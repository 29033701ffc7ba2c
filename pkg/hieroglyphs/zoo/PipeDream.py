"""
Reduced pipe dreams (rc-graphs) and the Schubert polynomials they sum to.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Tuple

from .. import settings
from ..core.Errors import TooLarge
from ..kpoly.LaurentPoly import LaurentPoly
from .Permutation import Permutation

log = logging.getLogger(__name__)

Cell = Tuple[int, int]


def staircase(n: int) -> List[Cell]:
    """Cells (i, j) with i + j <= n, in reading order: rows down, each right to left."""
    return [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]


@dataclass(frozen=True)
class PipeDream:
    """
    Crossing tiles of a pipe dream for a permutation of size n.

    Attributes:
        n: Size of the permutation
        crosses: Cells (row, col) holding a cross, all with row + col <= n
    """
    n: int
    crosses: FrozenSet[Cell]

    def sorted_crosses(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.crosses))

    def word(self) -> Tuple[int, ...]:
        """Simple reflection indices i + j - 1 of the crosses in reading order."""
        return tuple(i + j - 1 for i, j in staircase(self.n) if (i, j) in self.crosses)

    def permutation(self) -> Permutation:
        """Product of the word's simple transpositions."""
        values = list(range(1, self.n + 1))
        for k in self.word():
            values[k - 1], values[k] = values[k], values[k - 1]
        return Permutation(tuple(values))

    def is_reduced_for(self, w: Permutation) -> bool:
        return len(self.crosses) == w.length() and self.permutation() == w

    def row_weight(self) -> Tuple[int, ...]:
        """Exponent vector of the product of t_row over the crosses."""
        weight = [0] * self.n
        for row, _ in self.crosses:
            weight[row - 1] += 1
        return tuple(weight)

    def to_string(self) -> str:
        lines = []
        for i in range(1, self.n + 1):
            lines.append("".join("+" if (i, j) in self.crosses else "." for j in range(1, self.n + 1 - i)))
        return "\n".join(line for line in lines if line)


def pipe_dreams(w: Permutation) -> List[PipeDream]:
    """
    Every reduced pipe dream of w.

    Brute force over the cross sets of size l(w) in the staircase.

    Args:
        w: Target permutation

    Returns:
        Pipe dreams sorted by their sorted cross cells

    Raises:
        TooLarge: If n exceeds settings.MAX_ENUMERATION_SIZE
    """
    if w.n > settings.MAX_ENUMERATION_SIZE:
        raise TooLarge(f"Pipe dream enumeration is limited to n <= {settings.MAX_ENUMERATION_SIZE}, got {w.n}")
    length = w.length()
    found = []
    for crosses in combinations(staircase(w.n), length):
        candidate = PipeDream(w.n, frozenset(crosses))
        if candidate.permutation() == w:
            found.append(candidate)
    found.sort(key=PipeDream.sorted_crosses)
    log.debug("%d pipe dreams for %s", len(found), w)
    return found


def schubert_polynomial(w: Permutation) -> LaurentPoly:
    """
    Sum over the pipe dreams of w of the product of t_row over the crosses.
    """
    total = LaurentPoly.zero(w.n)
    for dream in pipe_dreams(w):
        total = total + LaurentPoly.monomial(dream.row_weight())
    return total
