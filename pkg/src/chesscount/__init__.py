"""Exact enumeration of nonattacking bishop and anassa placements.

The bishop rides along both diagonal directions; the anassa along one
vertical and one diagonal direction ({(0,1), (1,1)}).  This package counts
their nonattacking placements on m x m boards exactly: closed forms,
recurrences, a brute-force oracle for small boards, and the quasipolynomial
coefficient vectors in the board size.
"""

from .board import (
    ANASSA_MOVES,
    BISHOP_MOVES,
    PIECES,
    Board,
    MoveSet,
    Placement,
    attacks,
    bishop_color_board,
    count_nonattacking,
    count_nonattacking_below_diag,
    inductive_subset,
    is_nonattacking,
    placement_counts,
    square_board,
    verify_collapse,
)
from .formulas import (
    CountTable,
    anassas,
    anassas_by_split_sum,
    anassas_diagonal,
    anassas_split,
    anassas_split_rec,
    bishops,
    bishops_by_convolution,
    bishops_classic,
    count,
    count_table,
    max_pieces,
    black_rooks,
    black_rooks_rec,
    white_rooks,
    white_rooks_alt,
    white_rooks_rec,
)
from .kernel import (
    assoc_stirling2,
    binomial,
    falling_factorial,
    parity,
    stirling1_unsigned,
    stirling2,
)
from .quasipoly import (
    QuasiPolynomial,
    anassa_coeffs,
    anassa_quasipolynomial,
    basis_change_coeff,
    binomial_basis_to_monomials,
    bishop_coeffs,
    bishop_quasipolynomial,
    black_rook_coeffs,
    divide_by_falling_factorial,
    effective_period,
    white_rook_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "ANASSA_MOVES",
    "BISHOP_MOVES",
    "PIECES",
    "Board",
    "CountTable",
    "MoveSet",
    "Placement",
    "QuasiPolynomial",
    "anassa_coeffs",
    "anassa_quasipolynomial",
    "anassas",
    "anassas_by_split_sum",
    "anassas_diagonal",
    "anassas_split",
    "anassas_split_rec",
    "assoc_stirling2",
    "attacks",
    "basis_change_coeff",
    "binomial",
    "binomial_basis_to_monomials",
    "bishop_color_board",
    "bishop_coeffs",
    "bishop_quasipolynomial",
    "bishops",
    "bishops_by_convolution",
    "bishops_classic",
    "black_rook_coeffs",
    "black_rooks",
    "black_rooks_rec",
    "count",
    "count_nonattacking",
    "count_nonattacking_below_diag",
    "count_table",
    "divide_by_falling_factorial",
    "effective_period",
    "falling_factorial",
    "inductive_subset",
    "is_nonattacking",
    "max_pieces",
    "parity",
    "placement_counts",
    "square_board",
    "stirling1_unsigned",
    "stirling2",
    "verify_collapse",
    "white_rook_coeffs",
    "white_rooks",
    "white_rooks_alt",
    "white_rooks_rec",
]
