"""
Lex orders that read the variables of a matrix ring off its grid.

Only pane 0 is read by rows; variables of other panes or without grid
cells follow in id order.
"""
from typing import Iterable, List, Sequence, Union

from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import TermOrder
from .Permutation import Permutation

RowOrder = Union[Permutation, str, Sequence[int]]


def _rows(rows: RowOrder) -> List[int]:
    if isinstance(rows, str):
        rows = Permutation.parse(rows)
    if isinstance(rows, Permutation):
        return list(rows.values)
    return list(rows)


def _remaining(ring: PolynomialRing, taken: Iterable[int]) -> List[int]:
    taken = set(taken)
    return [v.id for v in ring.variables if v.id not in taken]


def _matrix_rows(ring: PolynomialRing) -> List[int]:
    return sorted({v.grid.row for v in ring.variables if v.grid is not None and v.grid.pane == 0})


def row_reading_lex(ring: PolynomialRing, rows: RowOrder, right_to_left: bool = False) -> TermOrder:
    """
    Lex order reading whole rows of the matrix, in the given row order.

    Args:
        ring: Ring whose pane-0 variables carry grid cells
        rows: Row sequence, e.g. ``"1324"`` reads rows 1, 3, 2, 4
        right_to_left: Read each row from its last column

    Returns:
        The lex order, greatest variable first
    """
    reading: List[int] = []
    for row in _rows(rows):
        cells = [v for v in ring.variables
                 if v.grid is not None and v.grid.pane == 0 and v.grid.row == row]
        cells.sort(key=lambda v: (v.grid.col, v.copy_index), reverse=right_to_left)
        reading.extend(v.id for v in cells)
    reading.extend(_remaining(ring, reading))
    return TermOrder.lex(reading)


def lex_diagonal(ring: PolynomialRing) -> TermOrder:
    """Rows top to bottom, each left to right; leads every minor with its diagonal."""
    return row_reading_lex(ring, _matrix_rows(ring))


def antidiagonal_lex(ring: PolynomialRing) -> TermOrder:
    """Rows top to bottom, each right to left; leads every minor with its antidiagonal."""
    return row_reading_lex(ring, _matrix_rows(ring), right_to_left=True)


def se_nw_lex(ring: PolynomialRing) -> TermOrder:
    """Columns right to left, each read bottom to top."""
    gridded = [v for v in ring.variables if v.grid is not None and v.grid.pane == 0]
    gridded.sort(key=lambda v: (-v.grid.col, -v.grid.row, v.copy_index))
    reading = [v.id for v in gridded]
    return TermOrder.lex(reading + _remaining(ring, reading))

