"""Closed forms and recurrences for nonattacking placement counts.

Counts k nonattacking bishops or anassas (moves {(0,1), (1,1)}) on the
m x m board.  Bishop counts factor through rook counts on the two
one-color boards; anassa counts additionally split by how many pieces sit
strictly below the main diagonal.  Independent routes to the same number
are kept separate on purpose so that they can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .kernel import binomial, falling_factorial, parity, stirling2


def white_rooks(m: int, k: int) -> int:
    """Nonattacking k-rook placements on the white-square board, closed form.

    The white squares of the m x m board (color of (1,1)) form a rook board
    once each diagonal is straightened into a row.  Sum over j of
    C(ceil(m/2), j) * S(m-j, m-k).  Defined for every integer m; negative m
    evaluates the same expression through the extended Stirling table.
    """
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    half = (m + 1) // 2
    return sum(binomial(half, j) * stirling2(m - j, m - k) for j in range(k + 1))


def black_rooks(m: int, k: int) -> int:
    """Companion to :func:`white_rooks` for the black-square board."""
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    half = m // 2
    return sum(binomial(half, j) * stirling2(m - j, m - k) for j in range(k + 1))


@cache
def white_rooks_rec(m: int, k: int) -> int:
    """White-square rook counts by recurrence on the board size.

    R(m, k) = R(m-1, k) + (m - k + parity(m)) * R(m-1, k-1), R(m, 0) = 1,
    R(0, k) = 0 for k >= 1: the new longest diagonal of the odd step (or the
    second-longest of the even step) offers m - k + parity(m) free squares.
    """
    if m < 0 or k < 0:
        raise ValueError("white_rooks_rec needs m, k >= 0")
    if k == 0:
        return 1
    if m == 0:
        return 0
    return white_rooks_rec(m - 1, k) + (m - k + parity(m)) * white_rooks_rec(m - 1, k - 1)


@cache
def black_rooks_rec(m: int, k: int) -> int:
    """Black-square rook counts by recurrence on the board size."""
    if m < 0 or k < 0:
        raise ValueError("black_rooks_rec needs m, k >= 0")
    if k == 0:
        return 1
    if m == 0:
        return 0
    return black_rooks_rec(m - 1, k) + (m - k + 1 - parity(m)) * black_rooks_rec(m - 1, k - 1)


def white_rooks_alt(m: int, k: int) -> int:
    """White-square rook counts via the classical alternating sum.

    With t = m - k:  (1/t!) * sum over j of C(t, j) * (-1)^(t-j)
    * (j+1)^((m+parity(m))/2) * j^((m-parity(m))/2); zero when k > m.
    The division is exact; a nonzero remainder would mean a bug.
    """
    if m < 0 or k < 0:
        raise ValueError("white_rooks_alt needs m, k >= 0")
    t = m - k
    if t < 0:
        return 0
    e_hi = (m + parity(m)) // 2
    e_lo = (m - parity(m)) // 2
    total = sum(
        binomial(t, j) * (-1) ** ((t - j) & 1) * (j + 1) ** e_hi * j**e_lo
        for j in range(t + 1)
    )
    q, r = divmod(total, math.factorial(t))
    if r:
        raise ArithmeticError(f"alternating sum for m={m}, k={k} not divisible by {t}!")
    return q


def bishops(m: int, k: int) -> int:
    """Nonattacking k-bishop placements on the m x m board, closed form.

    Triple sum pairing every split of the k bishops between the two colors;
    defined for every integer m (negative m evaluates the same expression,
    e.g. m = -1 gives k!).
    """
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    half_lo, half_hi = m // 2, (m + 1) // 2
    total = 0
    for j in range(k + 1):
        left = sum(binomial(half_lo, i) * stirling2(m - i, m - j) for i in range(j + 1))
        if not left:
            continue
        right = sum(
            binomial(half_hi, l) * stirling2(m - l, m - k + j) for l in range(k - j + 1)
        )
        total += left * right
    return total


def bishops_by_convolution(m: int, k: int) -> int:
    """Bishop counts as the convolution of the two one-color rook counts."""
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    return sum(black_rooks(m, j) * white_rooks(m, k - j) for j in range(k + 1))


def bishops_classic(m: int, k: int) -> int:
    """Bishop counts via the classical parity-split double sum.

    Outer index runs over the board size rather than the piece count, so
    this route needs m >= 0; it exists purely as a third cross-check.
    """
    if m < 0 or k < 0:
        raise ValueError("bishops_classic needs m, k >= 0")
    half_lo, half_hi = m // 2, (m + 1) // 2
    total = 0
    for j in range(m + 1):
        left = sum(
            binomial(half_hi, i) * stirling2(i + half_lo, m - j) for i in range(half_hi + 1)
        )
        if not left:
            continue
        right = sum(
            binomial(half_lo, l) * stirling2(l + half_hi, m - k + j)
            for l in range(half_lo + 1)
        )
        total += left * right
    return total


def anassas_split(m: int, k: int, p: int) -> int:
    """Anassa placements with exactly p pieces strictly below the diagonal.

    Closed form: sum over j <= p of (m-k+j)_j * C(k-p-1, j) * C(k-j, k-p)
    * S(m+1, m-k+j+1).  At p = k the sum telescopes to S(m, m-k); p > k
    gives 0.  Defined for every integer m.
    """
    if k < 0 or p < 0:
        raise ValueError("anassas_split needs k, p >= 0")
    return sum(
        falling_factorial(m - k + j, j)
        * binomial(k - p - 1, j)
        * binomial(k - j, k - p)
        * stirling2(m + 1, m - k + j + 1)
        for j in range(p + 1)
    )


@cache
def anassas_split_rec(m: int, k: int, p: int) -> int:
    """Diagonal-split anassa counts by recurrence on the board size.

    A(m,k,p) = A(m-1,k,p) + (m-k+1) A(m-1,k-1,p) + (m-p) A(m-1,k-1,p-1)
    + (m-p)(m-k+1) A(m-1,k-2,p-1): the two new-square choices are the new
    corner column below the diagonal and the new top row on or above it.
    """
    if m < 0:
        raise ValueError(f"anassas_split_rec needs m >= 0, got {m}")
    if k < 0 or p < 0:
        return 0
    if m == 0:
        return 1 if k == 0 and p == 0 else 0
    if k == 0:
        return 1 if p == 0 else 0
    if k == 1:
        if p == 0:
            return stirling2(m + 1, m)
        if p == 1:
            return stirling2(m, m - 1)
        return 0
    if p == 0:
        return stirling2(m + 1, m - k + 1)
    return (
        anassas_split_rec(m - 1, k, p)
        + (m - k + 1) * anassas_split_rec(m - 1, k - 1, p)
        + (m - p) * anassas_split_rec(m - 1, k - 1, p - 1)
        + (m - p) * (m - k + 1) * anassas_split_rec(m - 1, k - 2, p - 1)
    )


def anassas(m: int, k: int) -> int:
    """Nonattacking k-anassa placements on the m x m board, closed form.

    Sum over j <= ceil(k/2) of (m-k+j)_j * S(m, m-k+j) * 2^(k-2j)
    * (C(k-j, j-1) + C(k-j+1, j)).  For odd k the top summand carries
    2^(-1) against an even cofactor, so the sum runs over exact rationals
    with an integrality check at the end.  Defined for every integer m.
    """
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    total = Fraction(0)
    for j in range((k + 1) // 2 + 1):
        weight = binomial(k - j, j - 1) + binomial(k - j + 1, j)
        if not weight:
            continue
        body = falling_factorial(m - k + j, j) * stirling2(m, m - k + j) * weight
        total += body * Fraction(2) ** (k - 2 * j)
    if total.denominator != 1:
        raise ArithmeticError(f"anassa count for m={m}, k={k} came out non-integral: {total}")
    return int(total)


def anassas_by_split_sum(m: int, k: int) -> int:
    """Anassa counts as the sum of the diagonal-split counts over p."""
    if m < 0 or k < 0:
        raise ValueError("anassas_by_split_sum needs m, k >= 0")
    return sum(anassas_split(m, k, p) for p in range(k + 1))


def anassas_diagonal(m: int) -> tuple[int, int]:
    """The saturated count (k = m anassas) computed two independent ways.

    Returns (sum over j of C(m+1,j) * S(m,j) * j! / 2^j,
             sum over j of C(m+1,j) * j^m, divided by 2^(m+1)).
    Both are exact; the pair is returned unmerged so callers can assert
    they agree.
    """
    if m < 0:
        raise ValueError(f"board size must be >= 0, got {m}")
    first = sum(
        Fraction(binomial(m + 1, j) * stirling2(m, j) * math.factorial(j), 2**j)
        for j in range(m + 1)
    )
    second = Fraction(
        sum(binomial(m + 1, j) * j**m for j in range(m + 2)), 2 ** (m + 1)
    )
    if first.denominator != 1 or second.denominator != 1:
        raise ArithmeticError(f"saturated anassa count for m={m} came out non-integral")
    return int(first), int(second)


def max_pieces(piece: str, m: int) -> int:
    """Largest k with a nonzero count on the m x m board."""
    if m < 0:
        raise ValueError(f"board size must be >= 0, got {m}")
    if piece == "bishop":
        return m if m <= 1 else 2 * m - 2
    if piece == "anassa":
        return m
    raise ValueError(f"unknown piece {piece!r}")


def count(piece: str, m: int, k: int) -> int:
    """Closed-form count for the named piece."""
    if piece == "bishop":
        return bishops(m, k)
    if piece == "anassa":
        return anassas(m, k)
    raise ValueError(f"unknown piece {piece!r}")


@dataclass(frozen=True)
class CountTable:
    """Feasibility-truncated triangle of placement counts.

    ``rows[m]`` holds the counts for k = 0 .. max_pieces(piece, m) on the
    m x m board (padded with zeros up to a common width when rectangular
    output was requested).
    """

    piece: str
    m_max: int
    rows: tuple[tuple[int, ...], ...] = field(repr=False)

    def flatten(self) -> list[int]:
        """Row-major linearization (m ascending, k ascending)."""
        return [value for row in self.rows for value in row]


def count_table(piece: str, m_max: int, rect: bool = False) -> CountTable:
    """Build the count triangle for board sizes 0 .. m_max."""
    if piece not in ("bishop", "anassa"):
        raise ValueError(f"unknown piece {piece!r}")
    if m_max < 0:
        raise ValueError(f"table needs m_max >= 0, got {m_max}")
    width = max_pieces(piece, m_max) + 1
    rows = []
    for m in range(m_max + 1):
        upto = width if rect else max_pieces(piece, m) + 1
        rows.append(tuple(count(piece, m, k) for k in range(upto)))
    return CountTable(piece, m_max, tuple(rows))
