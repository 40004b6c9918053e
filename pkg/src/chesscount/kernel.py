"""Exact combinatorial primitives on plain Python integers.

Binomial coefficients and Stirling-family numbers, extended to negative
arguments where a consistent extension exists.  Everything here is exact:
no floats, no overflow, results are ordinary ``int`` objects.
"""

from __future__ import annotations

import math
import threading
from typing import Callable


def parity(m: int) -> int:
    """Return m mod 2, always 0 or 1 (also for negative m)."""
    return m % 2


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) extended to all integer pairs.

    For n >= 0 this is the standard coefficient (0 outside 0 <= k <= n).
    For n < 0 it takes the extension determined by upper negation:

      * k >= 0:      (-1)^k * C(-n+k-1, k)
      * k <= n:      (-1)^(n-k) * C(-k-1, n-k)
      * n < k < 0:   0

    With this choice the Pascal recurrence C(n,k) = C(n-1,k) + C(n-1,k-1)
    holds at every (n, k) except (0, 0), and C(n, k) = C(n, n-k) everywhere.
    """
    if n >= 0:
        return math.comb(n, k) if 0 <= k <= n else 0
    if k >= 0:
        return (-1) ** (k & 1) * math.comb(-n + k - 1, k)
    if k <= n:
        return (-1) ** ((n - k) & 1) * math.comb(-k - 1, n - k)
    return 0


def falling_factorial(x: int, k: int) -> int:
    """Falling factorial x(x-1)...(x-k+1) for integer x and k >= 0."""
    if k < 0:
        raise ValueError(f"falling factorial needs k >= 0, got {k}")
    out = 1
    for i in range(k):
        out *= x - i
    return out


class _RowCache:
    """Grow-on-demand triangle of integer rows.

    ``grow(rows)`` must return the next row given all earlier ones.  Rows are
    never mutated after being appended, and growth happens under a lock, so
    concurrent readers always observe fully built rows.
    """

    def __init__(self, first_row: list[int], grow: Callable[[list[list[int]]], list[int]]):
        self._rows: list[list[int]] = [first_row]
        self._grow = grow
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(self._grow(self._rows))
        return self._rows[n]


def _grow_stirling2(rows: list[list[int]]) -> list[int]:
    n = len(rows)
    prev = rows[-1]
    row = [0] * (n + 1)
    for k in range(1, n):
        row[k] = k * prev[k] + prev[k - 1]
    row[n] = 1
    return row


def _grow_stirling1(rows: list[list[int]]) -> list[int]:
    n = len(rows)
    prev = rows[-1]
    row = [0] * (n + 1)
    for k in range(1, n):
        row[k] = (n - 1) * prev[k] + prev[k - 1]
    row[n] = 1
    return row


def _grow_assoc(rows: list[list[int]]) -> list[int]:
    # Blocks have size >= 2, so row m only reaches k = m // 2.
    m = len(rows)
    prev = rows[-1]
    prev2 = rows[-2] if m >= 2 else []
    row = [0] * (m // 2 + 1)
    for k in range(1, len(row)):
        a = k * prev[k] if k < len(prev) else 0
        b = (m - 1) * prev2[k - 1] if k - 1 < len(prev2) else 0
        row[k] = a + b
    return row


_STIRLING2 = _RowCache([1], _grow_stirling2)
_STIRLING1 = _RowCache([1], _grow_stirling1)
_ASSOC = _RowCache([1], _grow_assoc)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, extended to negative arguments.

    For n, k >= 0 this counts partitions of an n-set into k nonempty blocks
    (recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1)).  For n < 0 and k < 0 the
    table continues as unsigned first-kind numbers, S(n,k) = c(-k, -n); mixed
    signs give 0.
    """
    if n >= 0:
        if k < 0 or k > n:
            return 0
        return _STIRLING2.row(n)[k]
    if k < 0:
        return stirling1_unsigned(-k, -n)
    return 0


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k), n >= 0 only.

    Counts permutations of n elements with exactly k cycles; recurrence
    c(n,k) = (n-1)*c(n-1,k) + c(n-1,k-1).  There is no negative-argument
    extension here, so n < 0 is an error rather than a silent 0.
    """
    if n < 0:
        raise ValueError(f"first-kind Stirling numbers need n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _STIRLING1.row(n)[k]


def assoc_stirling2(m: int, k: int) -> int:
    """Associated Stirling number of the second kind (Ward-style).

    Counts partitions of an m-set into k blocks, every block of size >= 2.
    Recurrence A(m,k) = k*A(m-1,k) + (m-1)*A(m-2,k-1) with A(0,0) = 1,
    A(1,k) = 0 and A(m,0) = 0 for m >= 1.  Zero for k < 0 or 2k > m.
    """
    if m < 0:
        raise ValueError(f"associated Stirling numbers need m >= 0, got {m}")
    row = _ASSOC.row(m)
    return row[k] if 0 <= k < len(row) else 0
