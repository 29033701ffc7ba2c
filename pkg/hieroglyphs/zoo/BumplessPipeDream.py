"""
Bumpless pipe dreams, generated from the Rothe diagram by droop moves.

Pipe j enters at the bottom of column j and leaves through the right edge
in row w^-1(j).
"""
import logging
from collections import deque
from enum import IntEnum
from typing import FrozenSet, Iterator, List, Tuple

import numpy as np

from .. import settings
from ..core.Errors import TooLarge
from .Permutation import Permutation

log = logging.getLogger(__name__)


class Tile(IntEnum):
    BLANK = 0
    CROSS = 1
    HORIZ = 2
    VERT = 3
    R_ELBOW = 4
    J_ELBOW = 5


TILE_CHARS = {
    Tile.BLANK: '.',
    Tile.CROSS: '+',
    Tile.HORIZ: '-',
    Tile.VERT: '|',
    Tile.R_ELBOW: 'r',
    Tile.J_ELBOW: 'j',
}

ELBOWS = (Tile.R_ELBOW, Tile.J_ELBOW)


class BumplessPipeDream:
    """
    An n x n grid of tiles; cell (row, col) is 1-based.
    """

    def __init__(self, tiles: np.ndarray):
        self.tiles = np.array(tiles, dtype=np.int8)
        self.tiles.setflags(write=False)

    @property
    def n(self) -> int:
        return self.tiles.shape[0]

    def tile(self, row: int, col: int) -> Tile:
        return Tile(int(self.tiles[row - 1, col - 1]))

    @property
    def blank_support(self) -> FrozenSet[Tuple[int, int]]:
        rows, cols = np.nonzero(self.tiles == Tile.BLANK)
        return frozenset((int(r) + 1, int(c) + 1) for r, c in zip(rows, cols))

    def sorted_blanks(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.blank_support))

    def key(self) -> bytes:
        return self.tiles.tobytes()

    def droops(self) -> Iterator["BumplessPipeDream"]:
        """Every diagram reached by one droop move."""
        n = self.n
        grid = self.tiles
        for a, b in zip(*np.nonzero(grid == Tile.R_ELBOW)):
            for c in range(a + 1, n):
                for d in range(b + 1, n):
                    if grid[c, d] != Tile.BLANK:
                        continue
                    box = grid[a:c + 1, b:d + 1]
                    if np.isin(box, ELBOWS).sum() != 1:
                        continue
                    if grid[c, b] != Tile.VERT or grid[a, d] != Tile.HORIZ:
                        continue
                    yield BumplessPipeDream(_droop(grid, int(a), int(b), c, d))

    def to_string(self) -> str:
        return "\n".join("".join(TILE_CHARS[Tile(int(t))] for t in row) for row in self.tiles)

    def __eq__(self, other):
        if not isinstance(other, BumplessPipeDream):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"BumplessPipeDream(blanks={list(self.sorted_blanks())})"


def _droop(grid: np.ndarray, a: int, b: int, c: int, d: int) -> np.ndarray:
    # 0-based corners: elbow at (a, b), blank at (c, d)
    new = grid.copy()
    new[a, b] = Tile.BLANK
    for row in range(a + 1, c):
        new[row, b] = Tile.BLANK if grid[row, b] == Tile.VERT else Tile.HORIZ
        new[row, d] = Tile.CROSS if grid[row, d] == Tile.HORIZ else Tile.VERT
    for col in range(b + 1, d):
        new[a, col] = Tile.BLANK if grid[a, col] == Tile.HORIZ else Tile.VERT
        new[c, col] = Tile.CROSS if grid[c, col] == Tile.VERT else Tile.HORIZ
    new[a, d] = Tile.R_ELBOW
    new[c, b] = Tile.R_ELBOW
    new[c, d] = Tile.J_ELBOW
    return new


def rothe_bpd(w: Permutation) -> BumplessPipeDream:
    """The diagram whose blanks form the Rothe diagram of w."""
    n = w.n
    inverse = w.inverse()
    grid = np.full((n, n), Tile.BLANK, dtype=np.int8)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j == w(i):
                tile = Tile.R_ELBOW
            elif j < w(i):
                tile = Tile.BLANK if i < inverse(j) else Tile.VERT
            else:
                tile = Tile.HORIZ if i < inverse(j) else Tile.CROSS
            grid[i - 1, j - 1] = tile
    return BumplessPipeDream(grid)


def bpds(w: Permutation) -> List[BumplessPipeDream]:
    """
    Every reduced bumpless pipe dream of w.

    Args:
        w: Target permutation

    Returns:
        The droop closure of the Rothe diagram, sorted by blank cells

    Raises:
        TooLarge: If n exceeds settings.MAX_ENUMERATION_SIZE
    """
    if w.n > settings.MAX_ENUMERATION_SIZE:
        raise TooLarge(f"BPD enumeration is limited to n <= {settings.MAX_ENUMERATION_SIZE}, got {w.n}")
    start = rothe_bpd(w)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt in current.droops():
            if nxt.key() not in seen:
                seen[nxt.key()] = nxt
                queue.append(nxt)
    found = sorted(seen.values(), key=lambda bpd: (bpd.sorted_blanks(), bpd.key()))
    log.debug("%d bumpless pipe dreams for %s", len(found), w)
    return found
