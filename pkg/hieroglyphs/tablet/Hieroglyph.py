"""
Hieroglyphs: one minimal prime drawn on the variables' grid.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from ..core.PolynomialRing import PolynomialRing
from ..core.Variable import GridCell


class Glyph(Enum):
    PLUS = "+"
    CIRCLED_PLUS = "⊕"


@dataclass(frozen=True)
class Hieroglyph:
    """
    The variable generators of one prime component of the polarized
    initial ideal.

    Attributes:
        marks: Variable ids of the generators, ascending
        glyphs: One glyph per mark; a polarization copy is circled
        support: Distinct grid cells of the marks after collapsing copies
            onto their base variable's cell, ascending
    """
    marks: Tuple[int, ...]
    glyphs: Tuple[Glyph, ...]
    support: Tuple[GridCell, ...]

    @classmethod
    def from_marks(cls, marks: Iterable[int], ring: PolynomialRing) -> "Hieroglyph":
        marks = tuple(sorted(marks))
        glyphs = tuple(
            Glyph.CIRCLED_PLUS if ring.variable(i).is_copy else Glyph.PLUS for i in marks)
        support = tuple(sorted({ring.variable(i).grid for i in marks if ring.variable(i).grid is not None}))
        return cls(marks, glyphs, support)

    @property
    def size(self) -> int:
        return len(self.marks)

    def sort_key(self):
        return (self.support, self.marks)

    def support_cells(self) -> Tuple[Tuple[int, int], ...]:
        """Support as (row, col) pairs, for single-pane rings."""
        return tuple((cell.row, cell.col) for cell in self.support)

    def to_string(self, ring: PolynomialRing) -> str:
        return "{" + ", ".join(ring.variable(i).name for i in reversed(self.marks)) + "}"
