"""
Example families: matrix Schubert, commuting and Kazhdan-Lusztig ideals,
pipe dreams, bumpless pipe dreams and the harnesses comparing them with
tablets.
"""

from .Permutation import Permutation
from .MatrixOrders import antidiagonal_lex, lex_diagonal, row_reading_lex, se_nw_lex
from .MatrixIdeals import (
    commuting_ideal, commuting_order, commuting_ring, determinant, generic_minor_ideal, kl_fixture, kl_ring,
    matrix_ring, rank_matrix, schubert_ideal,
)
from .PipeDream import PipeDream, pipe_dreams, schubert_polynomial, staircase
from .BumplessPipeDream import BumplessPipeDream, Tile, bpds, rothe_bpd
from .Harness import (
    CHECKS, COMMUTING3_INITIAL, HarnessReport, check_bpd_conjecture, check_commuting, check_equidim,
    check_km, compare_initial_ideal, multiplicity, order_sweep, parse_monomial, row_grading,
    schubert_tablet, sweep,
)
from .FixtureRegistry import Fixture, FixtureRegistry

__all__ = [
    'Permutation',
    'antidiagonal_lex', 'lex_diagonal', 'row_reading_lex', 'se_nw_lex',
    'commuting_ideal', 'commuting_order', 'commuting_ring', 'determinant', 'generic_minor_ideal', 'kl_fixture',
    'kl_ring', 'matrix_ring', 'rank_matrix', 'schubert_ideal',
    'PipeDream', 'pipe_dreams', 'schubert_polynomial', 'staircase',
    'BumplessPipeDream', 'Tile', 'bpds', 'rothe_bpd',
    'CHECKS', 'COMMUTING3_INITIAL', 'HarnessReport', 'check_bpd_conjecture', 'check_commuting',
    'check_equidim', 'check_km', 'compare_initial_ideal', 'multiplicity', 'order_sweep',
    'parse_monomial', 'row_grading', 'schubert_tablet', 'sweep',
    'Fixture', 'FixtureRegistry',
]
