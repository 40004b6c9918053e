"""Boards, ride-style pieces, and a brute-force placement counter.

Squares are (column, row) pairs, both 1-based, row 1 at the bottom.  A piece
is a set of move directions; it attacks along the full line spanned by each
direction, with no blocking (placements are counted, so every other piece on
a shared line is itself a mutual attacker).  The exhaustive counter here is
deliberately simple: it exists to cross-check the closed-form counts on
small boards, not to be fast on large ones.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cache
from typing import Iterable

Square = tuple[int, int]
Move = tuple[int, int]


@dataclass(frozen=True)
class MoveSet:
    """Directions a piece rides along.

    Each direction must be nonzero with coprime coordinates (a primitive
    vector), and no two directions may be parallel.
    """

    moves: tuple[Move, ...]

    def __post_init__(self) -> None:
        if not self.moves:
            raise ValueError("a piece needs at least one move direction")
        for dc, dr in self.moves:
            if (dc, dr) == (0, 0):
                raise ValueError("move directions must be nonzero")
            if math.gcd(dc, dr) != 1:
                raise ValueError(f"move direction {(dc, dr)} is not primitive")
        for i, (ac, ar) in enumerate(self.moves):
            for bc, br in self.moves[i + 1:]:
                if ac * br - ar * bc == 0:
                    raise ValueError(f"parallel move directions {(ac, ar)} and {(bc, br)}")

    def line_keys(self, square: Square) -> tuple[int, ...]:
        """One id per direction; squares share an id iff they share that line."""
        c, r = square
        return tuple(dr * c - dc * r for dc, dr in self.moves)


BISHOP_MOVES = MoveSet(((1, 1), (-1, 1)))
ANASSA_MOVES = MoveSet(((0, 1), (1, 1)))

PIECES: dict[str, MoveSet] = {"bishop": BISHOP_MOVES, "anassa": ANASSA_MOVES}


@dataclass(frozen=True)
class Board:
    """A finite set of squares inside the size x size grid."""

    size: int
    squares: frozenset[Square]

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"board size must be >= 0, got {self.size}")
        for c, r in self.squares:
            if not (1 <= c <= self.size and 1 <= r <= self.size):
                raise ValueError(f"square {(c, r)} outside the {self.size}x{self.size} grid")


def square_board(m: int) -> Board:
    """The full m x m board."""
    if m < 0:
        raise ValueError(f"board size must be >= 0, got {m}")
    return Board(m, frozenset((c, r) for c in range(1, m + 1) for r in range(1, m + 1)))


def attacks(a: Square, b: Square, moves: MoveSet) -> bool:
    """Whether pieces on distinct squares a and b attack each other."""
    if a == b:
        raise ValueError("attack test needs two distinct squares")
    dc, dr = b[0] - a[0], b[1] - a[1]
    return any(dc * mr - dr * mc == 0 for mc, mr in moves.moves)


def is_nonattacking(squares: Iterable[Square], moves: MoveSet) -> bool:
    """Whether no two of the given squares attack each other."""
    per_line: list[set[int]] = [set() for _ in moves.moves]
    for sq in squares:
        for used, key in zip(per_line, moves.line_keys(sq)):
            if key in used:
                return False
            used.add(key)
    return True


@dataclass(frozen=True)
class Placement:
    """A pairwise nonattacking set of occupied squares on a board."""

    board: Board
    moves: MoveSet
    occupied: frozenset[Square]

    def __post_init__(self) -> None:
        if not self.occupied <= self.board.squares:
            raise ValueError("occupied squares must all lie on the board")
        if not is_nonattacking(self.occupied, self.moves):
            raise ValueError("occupied squares attack each other")


@cache
def placement_counts(board: Board, moves: MoveSet) -> tuple[int, ...]:
    """Counts of nonattacking placements on ``board`` by size.

    Entry j is the number of j-piece placements; the tuple stops at the
    largest feasible size.  Depth-first search over squares in a fixed order,
    pruning any square whose line (for any move direction) is already taken.
    """
    squares = sorted(board.squares)
    keys = [moves.line_keys(sq) for sq in squares]
    counts = [1] + [0] * len(squares)
    used: list[set[int]] = [set() for _ in moves.moves]

    def extend(start: int, size: int) -> None:
        for i in range(start, len(squares)):
            ks = keys[i]
            if any(k in u for k, u in zip(ks, used)):
                continue
            counts[size + 1] += 1
            for k, u in zip(ks, used):
                u.add(k)
            extend(i + 1, size + 1)
            for k, u in zip(ks, used):
                u.discard(k)

    extend(0, 0)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def count_nonattacking(board: Board, moves: MoveSet, k: int) -> int:
    """Number of nonattacking k-piece placements on ``board``, by brute force."""
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    profile = placement_counts(board, moves)
    return profile[k] if k < len(profile) else 0


@cache
def _below_diagonal_profile(m: int) -> dict[tuple[int, int], int]:
    """Anassa placement counts on the m x m board, keyed by (size, below).

    ``below`` is the number of occupied squares strictly below the main
    diagonal (row < column).
    """
    board = square_board(m)
    moves = ANASSA_MOVES
    squares = sorted(board.squares)
    keys = [moves.line_keys(sq) for sq in squares]
    below_flag = [1 if r < c else 0 for c, r in squares]
    counts: dict[tuple[int, int], int] = defaultdict(int)
    counts[0, 0] = 1
    used: list[set[int]] = [set() for _ in moves.moves]

    def extend(start: int, size: int, below: int) -> None:
        for i in range(start, len(squares)):
            ks = keys[i]
            if any(k in u for k, u in zip(ks, used)):
                continue
            counts[size + 1, below + below_flag[i]] += 1
            for k, u in zip(ks, used):
                u.add(k)
            extend(i + 1, size + 1, below + below_flag[i])
            for k, u in zip(ks, used):
                u.discard(k)

    extend(0, 0, 0)
    return dict(counts)


def count_nonattacking_below_diag(m: int, k: int, p: int) -> int:
    """Anassa placements on the m x m board: k pieces, exactly p below the diagonal."""
    if m < 0:
        raise ValueError(f"board size must be >= 0, got {m}")
    if k < 0 or p < 0:
        raise ValueError("piece counts must be >= 0")
    return _below_diagonal_profile(m).get((k, p), 0)


def bishop_color_board(m: int, color: str) -> Board:
    """Squares of the m x m board on one bishop color.

    White is the color of (1, 1): squares with column + row even.  Bishops
    never leave their color, so bishop placements factor over the two boards.
    """
    if color not in ("white", "black"):
        raise ValueError(f"color must be 'white' or 'black', got {color!r}")
    want = 0 if color == "white" else 1
    full = square_board(m)
    return Board(m, frozenset(sq for sq in full.squares if (sq[0] + sq[1]) % 2 == want))


def inductive_subset(m: int, piece: str) -> Board:
    """A 2m-1 square subset whose removal collapses the board one size down.

    For the bishop: the main diagonal plus the squares directly above it.
    For the anassa: the main diagonal plus the rest of the rightmost file.
    Removing the subset from the m x m board leaves a board whose placement
    counts equal those of the (m-1) x (m-1) board, for every piece count.
    """
    if m < 1:
        raise ValueError(f"inductive subset needs board size >= 1, got {m}")
    if piece == "bishop":
        squares = {(i, i) for i in range(1, m + 1)} | {(i, i + 1) for i in range(1, m)}
    elif piece == "anassa":
        squares = {(i, i) for i in range(1, m + 1)} | {(m, r) for r in range(1, m)}
    else:
        raise ValueError(f"unknown piece {piece!r}")
    return Board(m, frozenset(squares))


def verify_collapse(m: int, piece: str, k_max: int) -> bool:
    """Check the one-size-down collapse for 0 <= k <= k_max."""
    moves = PIECES[piece]
    remainder = square_board(m).squares - inductive_subset(m, piece).squares
    reduced = Board(m, remainder)
    smaller = square_board(m - 1)
    return all(
        count_nonattacking(reduced, moves, k) == count_nonattacking(smaller, moves, k)
        for k in range(k_max + 1)
    )
