"""
Ideal builders for the determinantal, Schubert, commuting and
Kazhdan-Lusztig families.

Matrix variables are named ``x{i}{j}`` (``a``/``b`` for the commuting
pair) and carry the grid cell of their matrix entry.
"""
import logging
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..core.Errors import BadDimensions
from ..core.Monomial import Monomial
from ..core.Polynomial import Polynomial
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import TermOrder
from ..core.Variable import GridCell
from ..groebner.Ideal import Ideal
from .MatrixOrders import se_nw_lex
from .Permutation import Permutation

log = logging.getLogger(__name__)


def _entry_name(prefix: str, i: int, j: int, width: int) -> str:
    if width < 10:
        return f"{prefix}{i}{j}"
    return f"{prefix}{i}_{j}"


def matrix_ring(rows: int, cols: int, prefix: str = "x", symmetric: bool = False) -> PolynomialRing:
    """
    Ring of the entries of a generic (or generic symmetric) matrix.

    Variables are declared row by row; a symmetric matrix declares only
    the entries on or above the diagonal.
    """
    width = max(rows, cols)
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1) if not symmetric or i <= j]
    names = [_entry_name(prefix, i, j, width) for i, j in cells]
    return PolynomialRing.from_names(names, [GridCell(0, i, j) for i, j in cells])


def _sign(sigma: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(sigma)) for b in range(a + 1, len(sigma)) if sigma[a] > sigma[b])
    return -1 if inversions % 2 else 1


def determinant(ring: PolynomialRing, matrix: Sequence[Sequence[int]]) -> Polynomial:
    """
    Leibniz expansion of a square matrix of variable ids.

    Args:
        ring: Ring of the variables
        matrix: Square table of variable ids
    """
    k = len(matrix)
    terms = []
    for sigma in permutations(range(k)):
        support: Dict[int, int] = {}
        for row in range(k):
            var_id = matrix[row][sigma[row]]
            support[var_id] = support.get(var_id, 0) + 1
        terms.append((_sign(sigma), Monomial.from_support(ring.nvars, support)))
    return Polynomial.from_terms(ring.nvars, terms)


def _minor(ring: PolynomialRing, entry, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    return determinant(ring, [[entry(i, j) for j in cols] for i in rows])


def generic_minor_ideal(m: int, n: int, k: int, symmetric: bool = False) -> Ideal:
    """
    The k x k minors of a generic m x n matrix.

    Args:
        m: Rows
        n: Columns
        k: Minor size
        symmetric: Use a generic symmetric matrix (needs m == n)

    Returns:
        Ideal of the distinct minors, up to sign

    Raises:
        BadDimensions: If no k x k minor exists
    """
    if m < 1 or n < 1 or not 1 <= k <= min(m, n):
        raise BadDimensions(f"No {k}x{k} minors in a {m}x{n} matrix")
    if symmetric and m != n:
        raise BadDimensions(f"A symmetric matrix must be square, got {m}x{n}")
    ring = matrix_ring(m, n, symmetric=symmetric)
    width = max(m, n)

    def entry(i, j):
        if symmetric and i > j:
            i, j = j, i
        return ring.index(_entry_name("x", i, j, width))

    minors: List[Polynomial] = []
    seen = set()
    for rows in combinations(range(1, m + 1), k):
        for cols in combinations(range(1, n + 1), k):
            minor = _minor(ring, entry, rows, cols)
            if minor.is_zero() or minor in seen or -minor in seen:
                continue
            seen.add(minor)
            minors.append(minor)
    return Ideal(ring, minors)


def rank_matrix(w: Permutation) -> np.ndarray:
    """
    The rank table r[i-1, j-1] = #{a <= i : w(a) <= j}.
    """
    n = w.n
    permutation_matrix = np.zeros((n, n), dtype=int)
    for i in range(1, n + 1):
        permutation_matrix[i - 1, w(i) - 1] = 1
    return permutation_matrix.cumsum(axis=0).cumsum(axis=1)


def schubert_ideal(w: Permutation) -> Ideal:
    """
    Fulton's ideal of the matrix Schubert variety of w.

    Every northwest i x j submatrix contributes its (r_ij + 1)-minors;
    conditions with r_ij + 1 > min(i, j) are vacuous and skipped, and a
    minor reached from several (i, j) is emitted once.
    """
    n = w.n
    ring = matrix_ring(n, n)
    ranks = rank_matrix(w)

    def entry(i, j):
        return ring.index(_entry_name("x", i, j, n))

    seen = set()
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            size = int(ranks[i - 1, j - 1]) + 1
            if size > min(i, j):
                continue
            for rows in combinations(range(1, i + 1), size):
                for cols in combinations(range(1, j + 1), size):
                    if (rows, cols) in seen:
                        continue
                    seen.add((rows, cols))
                    gens.append(_minor(ring, entry, rows, cols))
    log.debug("schubert ideal of %s: %d minors", w, len(gens))
    return Ideal(ring, gens)


def commuting_ring(n: int) -> PolynomialRing:
    """Entries of A (pane 0) then of B (pane 1), each row by row."""
    names, grids = [], []
    for pane, prefix in enumerate(("a", "b")):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                names.append(_entry_name(prefix, i, j, n))
                grids.append(GridCell(pane, i, j))
    return PolynomialRing.from_names(names, grids)


def commuting_order(ring: PolynomialRing) -> TermOrder:
    """Grevlex with every entry of A before every entry of B, each row by row."""
    return TermOrder.grevlex(range(ring.nvars))


def commuting_ideal(n: int) -> Ideal:
    """
    Entries of AB - BA for generic n x n matrices A and B.

    Zero entries are dropped, so n = 1 gives the zero ideal.
    """
    if n < 1:
        raise BadDimensions(f"Matrix size must be positive, got {n}")
    ring = commuting_ring(n)

    def var(prefix, i, j):
        return Polynomial.variable(ring.nvars, ring.index(_entry_name(prefix, i, j, n)))

    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entry = Polynomial.zero(ring.nvars)
            for k in range(1, n + 1):
                entry = entry + var("a", i, k) * var("b", k, j) - var("b", i, k) * var("a", k, j)
            if not entry.is_zero():
                gens.append(entry)
    return Ideal(ring, gens)


KL_GENERATORS: Tuple[Tuple[Tuple[int, Tuple[str, ...]], ...], ...] = (
    ((1, ("x21",)),),
    ((1, ("x11",)),),
    ((1, ("x13", "x22")), (-1, ("x23", "x12"))),
    ((1, ("x14", "x31")), (1, ("x13", "x41")), (1, ("x12", "x51"))),
)


def kl_ring() -> PolynomialRing:
    """
    The fifteen coordinates x_ij, i + j <= 6, of the tangent-cone fixture.

    Row i of the matrix is drawn on grid row 7 - i, so the first matrix row
    is at the bottom.
    """
    cells = [(i, j) for i in range(1, 6) for j in range(1, 6) if i + j <= 6]
    return PolynomialRing.from_names([f"x{i}{j}" for i, j in cells],
                                     [GridCell(0, 7 - i, j) for i, j in cells])


def kl_fixture() -> Tuple[Ideal, TermOrder]:
    """
    Tangent cone of the Kazhdan-Lusztig variety for w = 463512 at the
    identity, with its southeast-to-northwest lex order.
    """
    ring = kl_ring()
    gens = []
    for terms in KL_GENERATORS:
        gens.append(Polynomial.from_terms(ring.nvars, [
            (c, Monomial.from_support(ring.nvars, {ring.index(name): 1 for name in names}))
            for c, names in terms
        ]))
    return Ideal(ring, gens), se_nw_lex(ring)
