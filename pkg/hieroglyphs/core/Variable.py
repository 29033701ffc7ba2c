"""
Ring variables and their drawing coordinates.
"""
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True, order=True)
class GridCell:
    """A cell of a hieroglyph: pane index, then 1-based row and column."""
    pane: int
    row: int
    col: int

    def as_list(self):
        return [self.pane, self.row, self.col]


@dataclass(frozen=True)
class Variable:
    """
    A polynomial ring variable.

    Copies created by polarization share the base name and grid cell of the
    variable they copy and carry a copy index of 2 or more.
    """
    id: int
    base_name: str
    copy_index: int = 1
    grid: Optional[GridCell] = None

    @property
    def name(self) -> str:
        """Printed name: the bare base name for copy 1, ``base~k`` otherwise."""
        if self.copy_index == 1:
            return self.base_name
        return f"{self.base_name}~{self.copy_index}"

    @property
    def is_copy(self) -> bool:
        return self.copy_index > 1

    def __repr__(self):
        return f"Variable({self.id}, {self.name!r})"


def split_name(name: str):
    """
    Split a printed variable name into base name and copy index.

    Args:
        name: A name such as ``x12`` or ``x12~2``

    Returns:
        Tuple of (base_name, copy_index)
    """
    base, sep, index = name.partition("~")
    if not sep:
        return name, 1
    return base, int(index)
