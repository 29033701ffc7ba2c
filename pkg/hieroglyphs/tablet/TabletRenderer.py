"""
Text rendering of hieroglyphs and tablets.

Each pane of the grid is drawn as a block of one character per cell, rows
top to bottom by row index; panes sit side by side, one space apart.
"""
import os
from enum import Enum
from typing import Dict, List, Tuple

from ..core.Errors import MissingGridMetadata
from ..core.PolynomialRing import PolynomialRing
from ..core.Variable import GridCell
from .Hieroglyph import Hieroglyph
from .Tablet import Tablet


class RenderMode(Enum):
    ASCII = "ascii"
    UNICODE = "unicode"


SYMBOLS = {
    RenderMode.ASCII: {'plus': '+', 'copy': '@', 'empty': '.', 'hole': ' '},
    RenderMode.UNICODE: {'plus': '+', 'copy': '⊕', 'empty': '·', 'hole': ' '},
}


class TabletRenderer:
    """
    Draws hieroglyphs over the grid cells of a ring's variables.
    """

    def __init__(self, ring: PolynomialRing, mode: RenderMode = RenderMode.ASCII):
        """
        Initialize the renderer for a ring.

        Args:
            ring: Ring whose variables carry grid cells
            mode: ASCII or UNICODE symbols

        Raises:
            MissingGridMetadata: If no variable of the ring has a grid cell
        """
        self.ring = ring
        self.mode = mode
        self.symbols = SYMBOLS[mode]
        self.panes: Dict[int, Tuple[int, int, int, int]] = {}
        for variable in ring.variables:
            if variable.grid is None:
                continue
            cell = variable.grid
            low_row, high_row, low_col, high_col = self.panes.get(
                cell.pane, (cell.row, cell.row, cell.col, cell.col))
            self.panes[cell.pane] = (min(low_row, cell.row), max(high_row, cell.row),
                                     min(low_col, cell.col), max(high_col, cell.col))
        if not self.panes:
            raise MissingGridMetadata("No variable of the ring has grid coordinates")
        self.occupied = {v.grid for v in ring.variables if v.grid is not None}

    def _cell_symbols(self, hieroglyph: Hieroglyph):
        marked = {}
        for var_id in hieroglyph.marks:
            variable = self.ring.variable(var_id)
            if variable.grid is None:
                raise MissingGridMetadata(f"Variable {variable.name} has no grid coordinates")
            if not variable.is_copy:
                marked[variable.grid] = self.symbols['plus']
            else:
                marked.setdefault(variable.grid, self.symbols['copy'])
        return marked

    def render_hieroglyph(self, hieroglyph: Hieroglyph) -> str:
        """
        Draw one hieroglyph.

        A cell shows the empty symbol for an unmarked variable and a space
        where the grid has no variable. A marked cell shows '+' when its
        original variable is marked, whether or not copies are marked too;
        the copy symbol appears only when copies alone are marked.

        Raises:
            MissingGridMetadata: If a marked variable has no grid cell
        """
        marked = self._cell_symbols(hieroglyph)
        blocks: List[List[str]] = []
        for pane in sorted(self.panes):
            low_row, high_row, low_col, high_col = self.panes[pane]
            lines = []
            for row in range(low_row, high_row + 1):
                line = ""
                for col in range(low_col, high_col + 1):
                    cell = GridCell(pane, row, col)
                    if cell not in self.occupied:
                        line += self.symbols['hole']
                    else:
                        line += marked.get(cell, self.symbols['empty'])
                lines.append(line)
            blocks.append(lines)
        height = max(len(block) for block in blocks)
        rows = []
        for index in range(height):
            pieces = []
            for block in blocks:
                width = len(block[0])
                pieces.append(block[index] if index < len(block) else " " * width)
            rows.append(" ".join(pieces).rstrip())
        return "\n".join(rows)

    def render_tablet(self, tablet: Tablet) -> str:
        """All hieroglyphs of a tablet, separated by blank lines."""
        return "\n\n".join(self.render_hieroglyph(h) for h in tablet.hieroglyphs)

    def export_text(self, tablet: Tablet, filename: str) -> str:
        """
        Write the rendered tablet to a file.

        Args:
            tablet: Tablet to draw
            filename: Path of the output file

        Returns:
            Path to the saved file
        """
        os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
        with open(filename, "w", encoding="utf-8") as handle:
            handle.write(self.render_tablet(tablet) + "\n")
        return filename


def render_hieroglyph(hieroglyph: Hieroglyph, ring: PolynomialRing,
                      mode: RenderMode = RenderMode.ASCII) -> str:
    """Draw one hieroglyph over the ring's grid."""
    return TabletRenderer(ring, mode).render_hieroglyph(hieroglyph)
