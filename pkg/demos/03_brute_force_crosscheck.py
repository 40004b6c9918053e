"""
Brute-force oracle and the inductive board collapse
===================================================

A depth-first enumerator counts nonattacking placements on any explicit
set of squares, for any move family.  Small boards cross-check the closed
forms, and a carefully chosen subset of S_m collapses onto S_{m-1}.
"""

from chesscount import (
    ANASSA_MOVES,
    BISHOP_MOVES,
    anassas,
    attacks,
    bishop_color_board,
    bishops,
    count_nonattacking,
    inductive_subset,
    max_pieces,
    placement_counts,
    square_board,
    verify_collapse,
    white_rooks,
)

# Two squares attack each other when their difference is parallel to a
# move direction.  Pieces here are riders: range is unlimited.
print("(1,1) vs (4,4), bishop:", attacks((1, 1), (4, 4), BISHOP_MOVES))
print("(1,1) vs (1,5), bishop:", attacks((1, 1), (1, 5), BISHOP_MOVES))
print("(1,1) vs (1,5), anassa:", attacks((1, 1), (1, 5), ANASSA_MOVES))

# The enumerator works square by square, tracking which attack lines are
# taken.  placement_counts returns the whole profile (k = 0, 1, ...).
board = square_board(4)
print("\nbishop profile on S_4:", placement_counts(board, BISHOP_MOVES))
print("anassa profile on S_4:", placement_counts(board, ANASSA_MOVES))

# Every formula value at small sizes agrees with the oracle.
for m in range(6):
    b = square_board(m)
    for k in range(max_pieces("bishop", m) + 1):
        assert count_nonattacking(b, BISHOP_MOVES, k) == bishops(m, k)
    for k in range(max_pieces("anassa", m) + 1):
        assert count_nonattacking(b, ANASSA_MOVES, k) == anassas(m, k)
print("\nclosed forms match brute force for m <= 5")

# Bishops never leave their square color, so the count factors through
# the two color classes independently.
white = bishop_color_board(5, "white")
print("white squares on S_5:", len(white.squares))
assert count_nonattacking(white, BISHOP_MOVES, 2) == white_rooks(5, 2)

# Removing the inductive subset (2m-1 squares: the main diagonal plus one
# extra line) from S_m leaves a board that counts exactly like S_{m-1}.
sub = inductive_subset(4, "anassa")
print("\nanassa subset removed from S_4 has", len(sub.squares), "squares")
for m in range(1, 6):
    assert verify_collapse(m, "bishop", max_pieces("bishop", m - 1))
    assert verify_collapse(m, "anassa", max_pieces("anassa", m - 1))
print("collapse onto S_{m-1} verified for m <= 5, both pieces")
